#include "topicgraph/retrieval.hpp"

#include <algorithm>

#include "topicgraph/errors.hpp"

namespace topicgraph {

Query Query::parse(std::string_view text, const Tokenizer& tokenizer) {
  Query q;
  q.text = std::string(text);
  q.terms = tokenizer.tokenize(text);
  if (q.terms.empty()) {
    throw ParameterError("q", "query '" + q.text + "' has no searchable terms");
  }
  return q;
}

RetrievedSet::RetrievedSet(Query query, std::vector<DocOrdinal> docs, std::vector<TermCount> df)
    : query_(std::move(query)), docs_(std::move(docs)), df_(std::move(df)) {
  for (const auto& e : df_) max_df_ = std::max(max_df_, e.count);
}

std::uint32_t RetrievedSet::df(TermId term) const {
  auto it = std::lower_bound(df_.begin(), df_.end(), term,
                             [](const TermCount& e, TermId t) { return e.term < t; });
  return (it != df_.end() && it->term == term) ? it->count : 0;
}

std::uint32_t RetrievedSet::df(const CorpusIndex& index, std::string_view word) const {
  if (auto t = index.term_id(word)) return df(*t);
  return 0;
}

std::vector<DocOrdinal> intersect(std::span<const DocOrdinal> a, std::span<const DocOrdinal> b) {
  if (a.size() > b.size()) std::swap(a, b);
  std::vector<DocOrdinal> out;
  out.reserve(a.size());
  // Skewed lists: probe the longer one with a moving lower bound.
  if (a.size() * 16 < b.size()) {
    auto from = b.begin();
    for (auto d : a) {
      from = std::lower_bound(from, b.end(), d);
      if (from == b.end()) break;
      if (*from == d) out.push_back(d);
    }
    return out;
  }
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::size_t intersection_size(std::span<const DocOrdinal> a, std::span<const DocOrdinal> b) {
  std::size_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

RetrievedSet execute_query(const CorpusIndex& index, const Query& query) {
  if (index.empty()) throw ContractViolation("cannot query an empty index");

  std::vector<std::span<const DocOrdinal>> lists;
  for (const auto& term : query.terms) {
    auto t = index.term_id(term);
    if (!t) return RetrievedSet(query, {}, {});
    lists.push_back(index.postings(*t));
  }
  std::sort(lists.begin(), lists.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<DocOrdinal> docs(lists.front().begin(), lists.front().end());
  for (std::size_t i = 1; i < lists.size() && !docs.empty(); ++i) docs = intersect(docs, lists[i]);
  if (docs.empty()) return RetrievedSet(query, {}, {});

  std::vector<std::uint32_t> counts(index.vocabulary_size(), 0);
  std::vector<TermId> touched;
  for (auto d : docs) {
    for (auto t : index.doc_terms(d)) {
      if (counts[t]++ == 0) touched.push_back(t);
    }
  }
  std::sort(touched.begin(), touched.end());
  std::vector<TermCount> df;
  df.reserve(touched.size());
  for (auto t : touched) df.push_back({t, counts[t]});
  return RetrievedSet(query, std::move(docs), std::move(df));
}

std::vector<DocOrdinal> restricted_postings(const RetrievedSet& rs, const CorpusIndex& index,
                                            TermId term) {
  return intersect(index.postings(term), rs.doc_ids());
}

std::uint32_t cooccurrence_freq(const RetrievedSet& rs, const CorpusIndex& index,
                                std::string_view x, std::string_view y) {
  if (x == y) throw ContractViolation("co-occurrence needs two distinct words");
  auto tx = index.term_id(x);
  auto ty = index.term_id(y);
  if (!tx || !ty) return 0;
  const auto px = restricted_postings(rs, index, *tx);
  return static_cast<std::uint32_t>(intersection_size(px, index.postings(*ty)));
}

}  // namespace topicgraph
