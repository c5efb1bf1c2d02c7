#include "topicgraph/guidance.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "topicgraph/errors.hpp"
#include "topicgraph/link_builder.hpp"
#include "topicgraph/retrieval.hpp"

namespace topicgraph {
namespace {

std::string format_fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

double parse_real(const std::string& name, std::string_view text) {
  auto parse_one = [&](std::string_view part) {
    double v = 0.0;
    const auto* end = part.data() + part.size();
    auto [ptr, ec] = std::from_chars(part.data(), end, v);
    if (ec != std::errc{} || ptr != end || !std::isfinite(v)) {
      throw ParameterError(name, name + " must be a number (got '" + std::string(text) + "')");
    }
    return v;
  };
  // "1/32" is accepted alongside "0.03125".
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const double den = parse_one(text.substr(slash + 1));
    if (den == 0.0) throw ParameterError(name, name + " has a zero denominator");
    return parse_one(text.substr(0, slash)) / den;
  }
  return parse_one(text);
}

std::uint32_t parse_count(const std::string& name, std::string_view text) {
  std::uint32_t v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    throw ParameterError(name,
                         name + " must be a non-negative integer (got '" + std::string(text) + "')");
  }
  return v;
}

}  // namespace

std::string_view to_string(SelectionMode mode) {
  return mode == SelectionMode::classed ? "classed" : "plain";
}

void check_tokenizer(const CorpusIndex& index, const Tokenizer& tokenizer) {
  if (index.metadata().tokenizer != tokenizer.fingerprint()) {
    throw StaleIndexError(
        "index was built with a different tokenizer version or stopword list; rebuild it");
  }
}

GraphPayload build_graph(const CorpusIndex& index, const Tokenizer& tokenizer,
                         const GraphRequest& request) {
  request.classes.validate();
  request.layout.validate();
  check_tokenizer(index, tokenizer);

  GraphPayload payload;
  payload.params = request;
  payload.query = request.query;
  const auto query = Query::parse(request.query, tokenizer);
  payload.terms = query.terms;

  const auto rs = execute_query(index, query);
  payload.result_count = rs.size();
  payload.effective_spacing = request.layout.min_dx;
  if (rs.empty()) {
    payload.warnings.push_back("no documents matched");
    return payload;
  }

  auto selection = request.mode == SelectionMode::classed
                       ? select_topic_words_classed(rs, index, request.classes)
                       : select_topic_words_plain(rs, index, request.classes.topic_count);
  if (!selection.diagnostic.empty()) payload.warnings.push_back(selection.diagnostic);
  const auto& words = selection.words;
  if (words.empty()) return payload;

  const auto links = build_links(words, rs, index);
  const auto layout = layout_graph(words, links, request.layout);
  payload.middle_df = layout.middle_df;
  payload.effective_spacing = layout.effective_spacing;
  payload.warnings.insert(payload.warnings.end(), layout.warnings.begin(), layout.warnings.end());

  for (std::size_t i = 0; i < words.size(); ++i) {
    payload.nodes.push_back({words[i].word, words[i].df, words[i].global_df, words[i].rel_freq,
                             words[i].class_idx, layout.nodes[i].x, layout.nodes[i].y});
  }
  for (const auto& w : words) {
    if (auto link = links.parent_of(w.word)) {
      payload.edges.push_back({w.word, link->parent, link->strength});
    }
  }

  if (auto partition = class_partition(rs.max_df(), request.classes)) {
    double last = static_cast<double>(partition->max_df);
    for (const auto& band : partition->bands) {
      if (!(band.low < last)) continue;
      payload.class_boundaries.push_back(
          {band.low,
           canvas_y(layout_y(band.low, layout.middle_df, request.layout), request.layout)});
      last = band.low;
    }
  }
  return payload;
}

SearchResult search(const CorpusIndex& index, const Tokenizer& tokenizer, std::string_view query,
                    std::size_t page_size) {
  check_tokenizer(index, tokenizer);
  const auto q = Query::parse(query, tokenizer);
  const auto rs = execute_query(index, q);
  SearchResult result;
  result.query = std::string(query);
  result.terms = q.terms;
  result.result_count = rs.size();
  for (auto d : rs.doc_ids()) {
    if (result.hits.size() >= page_size) break;
    const auto& rec = index.document(d);
    result.hits.push_back({rec.doc_id, rec.title});
  }
  return result;
}

GraphRequest parse_graph_request(const std::map<std::string, std::string>& params,
                                 const GraphDefaults& defaults) {
  GraphRequest req;
  req.classes = defaults.classes;
  req.layout = defaults.layout;
  req.mode = defaults.mode;

  auto q = params.find("q");
  if (q == params.end()) throw ParameterError("q", "missing query parameter 'q'");
  req.query = q->second;

  auto get = [&](const char* name) -> const std::string* {
    auto it = params.find(name);
    return it == params.end() ? nullptr : &it->second;
  };
  if (auto* v = get("n")) req.classes.topic_count = parse_count("n", *v);
  if (auto* v = get("c")) req.classes.class_count = parse_count("c", *v);
  if (auto* v = get("l")) req.classes.lower_bound = parse_real("l", *v);
  if (auto* v = get("b")) req.classes.balance = parse_real("b", *v);
  if (auto* v = get("mode")) {
    if (*v == "classed") {
      req.mode = SelectionMode::classed;
    } else if (*v == "plain") {
      req.mode = SelectionMode::plain;
    } else {
      throw ParameterError("mode", "mode must be 'classed' or 'plain' (got '" + *v + "')");
    }
  }
  if (auto* v = get("c1")) req.layout.c1 = parse_real("c1", *v);
  if (auto* v = get("c2")) req.layout.c2 = parse_real("c2", *v);
  if (auto* v = get("width")) req.layout.width = parse_real("width", *v);
  if (auto* v = get("height")) req.layout.height = parse_real("height", *v);
  if (auto* v = get("min_dx")) req.layout.min_dx = parse_real("min_dx", *v);
  if (auto* v = get("text_height")) req.layout.text_height = parse_real("text_height", *v);

  req.classes.validate();
  req.layout.validate();
  return req;
}

nlohmann::ordered_json to_json(const GraphPayload& p) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["schema_version"] = kPayloadSchemaVersion;
  doc["query"] = p.query;
  doc["terms"] = p.terms;
  doc["result_count"] = p.result_count;
  doc["nodes"] = ordered_json::array();
  for (const auto& n : p.nodes) {
    ordered_json node;
    node["word"] = n.word;
    node["df"] = n.df;
    node["DF"] = n.global_df;
    node["rel_freq"] = n.rel_freq;
    node["class_idx"] = n.class_idx;
    node["x"] = n.x;
    node["y"] = n.y;
    doc["nodes"].push_back(std::move(node));
  }
  doc["edges"] = ordered_json::array();
  for (const auto& e : p.edges) {
    ordered_json edge;
    edge["child"] = e.child;
    edge["parent"] = e.parent;
    edge["strength"] = e.strength;
    doc["edges"].push_back(std::move(edge));
  }
  doc["class_boundaries"] = ordered_json::array();
  for (const auto& b : p.class_boundaries) {
    ordered_json line;
    line["df_threshold"] = b.df_threshold;
    line["y"] = b.y;
    doc["class_boundaries"].push_back(std::move(line));
  }
  const auto& req = p.params;
  ordered_json params;
  params["n"] = req.classes.topic_count;
  params["c"] = req.classes.class_count;
  params["l"] = req.classes.lower_bound;
  params["b"] = req.classes.balance;
  params["mode"] = to_string(req.mode);
  params["c1"] = req.layout.vertical_scale();
  params["c2"] = req.layout.c2;
  params["width"] = req.layout.width;
  params["height"] = req.layout.height;
  params["min_dx"] = req.layout.min_dx;
  params["text_height"] = req.layout.text_height;
  doc["params"] = std::move(params);
  ordered_json layout;
  layout["middle_df"] = p.middle_df;
  layout["effective_spacing"] = p.effective_spacing;
  doc["layout"] = std::move(layout);
  doc["warnings"] = p.warnings;
  return doc;
}

nlohmann::ordered_json to_json(const SearchResult& r) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = kPayloadSchemaVersion;
  doc["query"] = r.query;
  doc["terms"] = r.terms;
  doc["result_count"] = r.result_count;
  doc["documents"] = nlohmann::ordered_json::array();
  for (const auto& h : r.hits) {
    nlohmann::ordered_json hit;
    hit["doc_id"] = h.doc_id;
    hit["title"] = h.title;
    doc["documents"].push_back(std::move(hit));
  }
  return doc;
}

nlohmann::ordered_json error_json(const std::string& parameter, const std::string& message) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = kPayloadSchemaVersion;
  nlohmann::ordered_json err;
  if (!parameter.empty()) err["parameter"] = parameter;
  err["message"] = message;
  doc["error"] = std::move(err);
  return doc;
}

std::string serialize(const nlohmann::ordered_json& doc) {
  return doc.dump(-1, ' ', false, nlohmann::ordered_json::error_handler_t::replace) + "\n";
}

std::string to_dot(const GraphPayload& p) {
  std::ostringstream out;
  out << "digraph topicgraph {\n";
  out << "  // query: " << p.query << " (" << p.result_count << " documents)\n";
  for (const auto& n : p.nodes) {
    out << "  " << dot_quote(n.word) << " [label="
        << dot_quote(n.word + " (" + std::to_string(n.df) + ")") << ", pos=\""
        << format_fixed(n.x, 2) << "," << format_fixed(n.y, 2) << "!\"];\n";
  }
  for (const auto& e : p.edges) {
    out << "  " << dot_quote(e.child) << " -> " << dot_quote(e.parent) << " [label=\""
        << format_fixed(e.strength, 2) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_text(const GraphPayload& p) {
  std::ostringstream out;
  out << "query: " << p.query << "\n";
  out << "documents: " << p.result_count << "\n";
  if (p.nodes.empty()) {
    out << "no topic words\n";
    return out.str();
  }
  std::map<std::string_view, const GraphEdge*> parent;
  for (const auto& e : p.edges) parent.emplace(e.child, &e);
  int current_class = -1;
  for (const auto& n : p.nodes) {
    if (n.class_idx != current_class) {
      current_class = n.class_idx;
      out << (current_class == 0 ? std::string("topic words")
                                 : "class " + std::to_string(current_class))
          << "\n";
    }
    char line[256];
    std::snprintf(line, sizeof line, "  %-20s df=%-6u DF=%-7u rel=%.3f", n.word.c_str(), n.df,
                  n.global_df, n.rel_freq);
    out << line;
    if (auto it = parent.find(n.word); it != parent.end()) {
      out << "  -> " << it->second->parent << " (" << format_fixed(it->second->strength, 2)
          << ")";
    }
    out << "\n";
  }
  for (const auto& b : p.class_boundaries) {
    out << "boundary df=" << format_fixed(b.df_threshold, 2) << " y=" << format_fixed(b.y, 1)
        << "\n";
  }
  for (const auto& w : p.warnings) out << "warning: " << w << "\n";
  return out.str();
}

}  // namespace topicgraph
