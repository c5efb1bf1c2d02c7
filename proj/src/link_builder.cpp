#include "topicgraph/link_builder.hpp"

#include "topicgraph/errors.hpp"

namespace topicgraph {

std::optional<ParentLink> LinkTable::parent_of(std::string_view child) const {
  auto it = links.find(child);
  if (it == links.end()) return std::nullopt;
  return it->second;
}

bool precedes(const TopicWord& a, const TopicWord& b) {
  if (a.df != b.df) return a.df > b.df;
  return a.word < b.word;
}

double cooccur_strength(std::uint32_t f_xy, std::uint32_t f_y) {
  if (f_y == 0 || f_xy > f_y) {
    throw ContractViolation("co-occurrence strength needs 0 <= f_xy <= f_y and f_y >= 1");
  }
  return static_cast<double>(f_xy) / static_cast<double>(f_y);
}

std::optional<std::size_t> choose_parent(const TopicWord& child,
                                         std::span<const ParentCandidate> candidates) {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto& c = candidates[i];
    if (!precedes(c.word, child)) {
      throw ContractViolation("candidate '" + c.word.word + "' is not more frequent than '" +
                              child.word + "'");
    }
    if (c.cooccurrence > c.word.df) {
      throw ContractViolation("co-occurrence exceeds df of '" + c.word.word + "'");
    }
    if (c.cooccurrence == 0) continue;
    if (!best) {
      best = i;
      continue;
    }
    const auto& b = candidates[*best];
    // c.cooccurrence / c.df vs b.cooccurrence / b.df, exactly.
    const auto lhs = static_cast<std::uint64_t>(c.cooccurrence) * b.word.df;
    const auto rhs = static_cast<std::uint64_t>(b.cooccurrence) * c.word.df;
    if (lhs > rhs || (lhs == rhs && precedes(c.word, b.word))) best = i;
  }
  return best;
}

LinkTable build_links(std::span<const TopicWord> topic_words, const RetrievedSet& rs,
                      const CorpusIndex& index) {
  std::vector<std::vector<DocOrdinal>> docs;
  docs.reserve(topic_words.size());
  for (const auto& w : topic_words) docs.push_back(restricted_postings(rs, index, w.term));

  LinkTable table;
  std::vector<ParentCandidate> candidates;
  for (std::size_t x = 0; x < topic_words.size(); ++x) {
    candidates.clear();
    for (std::size_t y = 0; y < topic_words.size(); ++y) {
      if (y == x || !precedes(topic_words[y], topic_words[x])) continue;
      const auto f = static_cast<std::uint32_t>(intersection_size(docs[x], docs[y]));
      candidates.push_back({topic_words[y], f});
    }
    if (auto pick = choose_parent(topic_words[x], candidates)) {
      const auto& c = candidates[*pick];
      table.links.emplace(topic_words[x].word,
                          ParentLink{c.word.word, cooccur_strength(c.cooccurrence, c.word.df),
                                     c.cooccurrence});
    }
  }
  return table;
}

}  // namespace topicgraph
