#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "topicgraph/corpus_index.hpp"
#include "topicgraph/graph_layout.hpp"
#include "topicgraph/topic_extraction.hpp"

namespace topicgraph {

/// Bumped whenever a response document changes shape.
inline constexpr int kPayloadSchemaVersion = 1;

enum class SelectionMode { classed, plain };

std::string_view to_string(SelectionMode mode);

struct GraphRequest {
  std::string query;
  ClassConfig classes;
  LayoutConfig layout;
  SelectionMode mode = SelectionMode::classed;
};

struct GraphNode {
  std::string word;
  std::uint32_t df = 0;
  std::uint32_t global_df = 0;
  double rel_freq = 0.0;
  int class_idx = 0;
  double x = 0.0;
  double y = 0.0;
};

struct GraphEdge {
  std::string child;
  std::string parent;
  double strength = 0.0;
};

/// Horizontal guide line at a class threshold (df = M r^k).
struct ClassBoundary {
  double df_threshold = 0.0;
  double y = 0.0;
};

struct GraphPayload {
  std::string query;
  std::vector<std::string> terms;
  std::size_t result_count = 0;
  std::vector<GraphNode> nodes;
  std::vector<GraphEdge> edges;
  std::vector<ClassBoundary> class_boundaries;
  GraphRequest params;
  double middle_df = 0.0;
  double effective_spacing = 0.0;
  std::vector<std::string> warnings;
};

struct SearchHit {
  std::int64_t doc_id = 0;
  std::string title;
};

struct SearchResult {
  std::string query;
  std::vector<std::string> terms;
  std::size_t result_count = 0;
  std::vector<SearchHit> hits;
};

/// Throws StaleIndexError when the index was built with other token rules.
void check_tokenizer(const CorpusIndex& index, const Tokenizer& tokenizer);

/// Retrieval, topic-word selection, linking and layout for one request.
GraphPayload build_graph(const CorpusIndex& index, const Tokenizer& tokenizer,
                         const GraphRequest& request);

SearchResult search(const CorpusIndex& index, const Tokenizer& tokenizer, std::string_view query,
                    std::size_t page_size);

/// Defaults applied to parameters a request leaves out.
struct GraphDefaults {
  ClassConfig classes;
  LayoutConfig layout;
  SelectionMode mode = SelectionMode::classed;
};

/// Builds a GraphRequest from string parameters (q, n, c, l, b, mode, width,
/// height, c1, c2, min_dx, text_height). Shared by the HTTP endpoint and the
/// CLI so both validate identically. Throws ParameterError naming the
/// offending parameter.
GraphRequest parse_graph_request(const std::map<std::string, std::string>& params,
                                 const GraphDefaults& defaults = {});

nlohmann::ordered_json to_json(const GraphPayload& payload);
nlohmann::ordered_json to_json(const SearchResult& result);
nlohmann::ordered_json error_json(const std::string& parameter, const std::string& message);

/// Canonical serialization: fixed field order, compact, trailing newline.
std::string serialize(const nlohmann::ordered_json& doc);

/// Directed edges child -> parent, node label "word (df)".
std::string to_dot(const GraphPayload& payload);
/// Human-readable listing of nodes grouped by class.
std::string to_text(const GraphPayload& payload);

}  // namespace topicgraph
