#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "topicgraph/corpus_index.hpp"

namespace topicgraph {

struct Query {
  std::string text;
  std::vector<std::string> terms;

  /// Tokenizes `text`; throws ParameterError("q") when no term survives.
  static Query parse(std::string_view text,
                     const Tokenizer& tokenizer = Tokenizer::default_instance());
};

struct TermCount {
  TermId term;
  std::uint32_t count;

  friend bool operator==(const TermCount&, const TermCount&) = default;
};

/// Documents matching a query together with their per-word statistics.
///
/// An empty set is the "no documents" outcome; it still carries the query.
class RetrievedSet {
 public:
  RetrievedSet(Query query, std::vector<DocOrdinal> docs, std::vector<TermCount> df);

  const Query& query() const noexcept { return query_; }
  std::span<const DocOrdinal> doc_ids() const noexcept { return docs_; }
  std::size_t size() const noexcept { return docs_.size(); }
  bool empty() const noexcept { return docs_.empty(); }

  /// M: the largest df over all words of the retrieved documents (0 if empty).
  std::uint32_t max_df() const noexcept { return max_df_; }

  /// df: number of retrieved documents containing the term (0 if none).
  std::uint32_t df(TermId term) const;
  std::uint32_t df(const CorpusIndex& index, std::string_view word) const;

  /// Every word occurring in at least one retrieved document, by term id.
  std::span<const TermCount> df_entries() const noexcept { return df_; }

  friend bool operator==(const RetrievedSet& a, const RetrievedSet& b) {
    return a.query_.terms == b.query_.terms && a.docs_ == b.docs_ && a.df_ == b.df_;
  }

 private:
  Query query_;
  std::vector<DocOrdinal> docs_;
  std::vector<TermCount> df_;
  std::uint32_t max_df_ = 0;
};

/// Conjunctive match: documents containing every query term.
/// Throws ContractViolation on an empty index.
RetrievedSet execute_query(const CorpusIndex& index, const Query& query);

/// Sorted intersection of two ascending ordinal lists.
std::vector<DocOrdinal> intersect(std::span<const DocOrdinal> a, std::span<const DocOrdinal> b);
std::size_t intersection_size(std::span<const DocOrdinal> a, std::span<const DocOrdinal> b);

/// Postings of `term` restricted to the retrieved documents.
std::vector<DocOrdinal> restricted_postings(const RetrievedSet& rs, const CorpusIndex& index,
                                            TermId term);

/// f_xy: retrieved documents containing both words. Symmetric; 0 when either
/// word is absent. Throws ContractViolation when x == y.
std::uint32_t cooccurrence_freq(const RetrievedSet& rs, const CorpusIndex& index,
                                std::string_view x, std::string_view y);

}  // namespace topicgraph
