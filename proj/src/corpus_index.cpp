#include "topicgraph/corpus_index.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "topicgraph/errors.hpp"

namespace topicgraph {

CorpusIndex CorpusIndex::from_parts(std::vector<DocumentRecord> documents,
                                    std::vector<std::string> vocabulary,
                                    std::vector<std::vector<DocOrdinal>> postings,
                                    IndexMetadata metadata) {
  if (vocabulary.size() != postings.size()) {
    throw CorruptIndexError("vocabulary and postings differ in length");
  }
  for (std::size_t i = 1; i < vocabulary.size(); ++i) {
    if (!(vocabulary[i - 1] < vocabulary[i])) {
      throw CorruptIndexError("vocabulary is not strictly ascending at entry " + std::to_string(i));
    }
  }
  std::unordered_set<std::int64_t> ids;
  for (const auto& d : documents) {
    if (!ids.insert(d.doc_id).second) {
      throw CorruptIndexError("duplicate doc_id " + std::to_string(d.doc_id));
    }
  }

  CorpusIndex index;
  index.forward_.resize(documents.size());
  for (std::size_t t = 0; t < postings.size(); ++t) {
    const auto& list = postings[t];
    if (list.empty()) throw CorruptIndexError("empty posting list for '" + vocabulary[t] + "'");
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (list[i] >= documents.size() || (i > 0 && list[i - 1] >= list[i])) {
        throw CorruptIndexError("posting list for '" + vocabulary[t] +
                                "' is unsorted or out of range");
      }
      index.forward_[list[i]].push_back(static_cast<TermId>(t));
    }
  }
  index.documents_ = std::move(documents);
  index.vocabulary_ = std::move(vocabulary);
  index.postings_ = std::move(postings);
  index.metadata_ = metadata;
  return index;
}

std::optional<TermId> CorpusIndex::term_id(std::string_view word) const {
  auto it = std::lower_bound(vocabulary_.begin(), vocabulary_.end(), word,
                             [](const std::string& a, std::string_view b) { return a < b; });
  if (it == vocabulary_.end() || *it != word) return std::nullopt;
  return static_cast<TermId>(it - vocabulary_.begin());
}

std::span<const DocOrdinal> CorpusIndex::postings(std::string_view word) const {
  if (auto t = term_id(word)) return postings_[*t];
  return {};
}

std::uint32_t CorpusIndex::df_global(std::string_view word) const {
  if (auto t = term_id(word)) return df_global(*t);
  return 0;
}

CorpusIndex build_index(std::span<const Document> docs, const Tokenizer& tokenizer) {
  std::unordered_set<std::int64_t> seen;
  std::vector<DocumentRecord> records;
  records.reserve(docs.size());
  // std::map keeps the vocabulary sorted; ordinals are appended in increasing
  // order so each posting list comes out sorted without a second pass.
  std::map<std::string, std::vector<DocOrdinal>, std::less<>> lists;

  for (std::size_t i = 0; i < docs.size(); ++i) {
    const auto& doc = docs[i];
    if (!seen.insert(doc.doc_id).second) {
      throw DataError("duplicate doc_id " + std::to_string(doc.doc_id));
    }
    if (doc.title.empty()) {
      throw DataError("document " + std::to_string(doc.doc_id) + " has an empty title");
    }
    records.push_back({doc.doc_id, doc.title});

    auto words = tokenizer.tokenize(doc.title);
    auto body = tokenizer.tokenize(doc.body);
    words.insert(words.end(), std::make_move_iterator(body.begin()),
                 std::make_move_iterator(body.end()));
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());

    const auto ord = static_cast<DocOrdinal>(i);
    for (auto& w : words) {
      auto it = lists.find(w);
      if (it == lists.end()) it = lists.emplace(std::move(w), std::vector<DocOrdinal>{}).first;
      it->second.push_back(ord);
    }
  }

  std::vector<std::string> vocabulary;
  std::vector<std::vector<DocOrdinal>> postings;
  vocabulary.reserve(lists.size());
  postings.reserve(lists.size());
  for (auto& [word, list] : lists) {
    vocabulary.push_back(word);
    postings.push_back(std::move(list));
  }
  return CorpusIndex::from_parts(std::move(records), std::move(vocabulary), std::move(postings),
                                 IndexMetadata{tokenizer.fingerprint()});
}

}  // namespace topicgraph
