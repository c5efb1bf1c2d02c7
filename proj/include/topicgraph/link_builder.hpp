#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "topicgraph/retrieval.hpp"
#include "topicgraph/topic_extraction.hpp"

namespace topicgraph {

struct ParentLink {
  std::string parent;
  /// f_xy / df(parent).
  double strength = 0.0;
  std::uint32_t cooccurrence = 0;
};

/// Child word -> parent. Words without an entry are roots.
struct LinkTable {
  std::map<std::string, ParentLink, std::less<>> links;

  std::optional<ParentLink> parent_of(std::string_view child) const;
  std::size_t size() const noexcept { return links.size(); }
};

/// Total order on topic words that defines "higher frequency" for linking:
/// df descending, then word ascending.
bool precedes(const TopicWord& a, const TopicWord& b);

/// f_xy / f_y. Throws ContractViolation unless f_y >= 1 and f_xy <= f_y.
double cooccur_strength(std::uint32_t f_xy, std::uint32_t f_y);

struct ParentCandidate {
  TopicWord word;
  /// Retrieved documents containing both the child and this candidate.
  std::uint32_t cooccurrence = 0;
};

/// Index of the candidate with the highest strength; ties go to the larger df,
/// then to the lexicographically smaller word. std::nullopt when there are no
/// candidates or all strengths are zero. Throws ContractViolation if a
/// candidate does not precede `child`.
std::optional<std::size_t> choose_parent(const TopicWord& child,
                                         std::span<const ParentCandidate> candidates);

LinkTable build_links(std::span<const TopicWord> topic_words, const RetrievedSet& rs,
                      const CorpusIndex& index);

}  // namespace topicgraph
