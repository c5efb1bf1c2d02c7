#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "topicgraph/tokenizer.hpp"

namespace topicgraph {

/// Dense position of a document inside a CorpusIndex (0 .. doc_count-1).
using DocOrdinal = std::uint32_t;
/// Position of a word in the sorted vocabulary of a CorpusIndex.
using TermId = std::uint32_t;

struct Document {
  std::int64_t doc_id = 0;
  std::string title;
  std::string body;
};

struct DocumentRecord {
  std::int64_t doc_id = 0;
  std::string title;

  friend bool operator==(const DocumentRecord&, const DocumentRecord&) = default;
};

struct IndexMetadata {
  TokenizerFingerprint tokenizer;

  friend bool operator==(const IndexMetadata&, const IndexMetadata&) = default;
};

/// Immutable inverted index over a whole document collection.
///
/// Postings hold DocOrdinals, sorted ascending and duplicate-free. The global
/// document frequency of a word is the length of its posting list. A forward
/// index (document -> distinct term ids) is derived from the postings and is
/// what per-query statistics are computed from.
class CorpusIndex {
 public:
  CorpusIndex() = default;

  /// Assembles an index from its persisted parts, validating every invariant.
  /// Throws CorruptIndexError when the parts are inconsistent.
  static CorpusIndex from_parts(std::vector<DocumentRecord> documents,
                                std::vector<std::string> vocabulary,
                                std::vector<std::vector<DocOrdinal>> postings,
                                IndexMetadata metadata);

  std::size_t doc_count() const noexcept { return documents_.size(); }
  std::size_t vocabulary_size() const noexcept { return vocabulary_.size(); }
  bool empty() const noexcept { return documents_.empty(); }

  const std::vector<DocumentRecord>& documents() const noexcept { return documents_; }
  const DocumentRecord& document(DocOrdinal ord) const { return documents_.at(ord); }
  const std::vector<std::string>& vocabulary() const noexcept { return vocabulary_; }
  const IndexMetadata& metadata() const noexcept { return metadata_; }

  std::optional<TermId> term_id(std::string_view word) const;
  const std::string& word(TermId term) const { return vocabulary_.at(term); }

  std::span<const DocOrdinal> postings(TermId term) const { return postings_.at(term); }
  /// Empty span when the word is not indexed.
  std::span<const DocOrdinal> postings(std::string_view word) const;

  /// DF: number of documents in the whole collection containing the word.
  std::uint32_t df_global(TermId term) const {
    return static_cast<std::uint32_t>(postings_.at(term).size());
  }
  /// 0 when the word is not indexed.
  std::uint32_t df_global(std::string_view word) const;

  /// Distinct term ids of one document, ascending.
  std::span<const TermId> doc_terms(DocOrdinal ord) const { return forward_.at(ord); }

  friend bool operator==(const CorpusIndex& a, const CorpusIndex& b) {
    return a.documents_ == b.documents_ && a.vocabulary_ == b.vocabulary_ &&
           a.postings_ == b.postings_ && a.metadata_ == b.metadata_;
  }

 private:
  std::vector<DocumentRecord> documents_;
  std::vector<std::string> vocabulary_;
  std::vector<std::vector<DocOrdinal>> postings_;
  std::vector<std::vector<TermId>> forward_;
  IndexMetadata metadata_;
};

/// Tokenizes title and body of every document and builds the index.
/// Throws DataError on a duplicate doc_id or an empty title.
CorpusIndex build_index(std::span<const Document> docs,
                        const Tokenizer& tokenizer = Tokenizer::default_instance());

/// Index file: magic header, format version, body, trailing checksum.
/// Layout is described in docs/index-format.md.
inline constexpr std::uint32_t kIndexFormatVersion = 1;

void save_index(const CorpusIndex& index, const std::filesystem::path& destination);
CorpusIndex load_index(const std::filesystem::path& source);

std::string serialize_index(const CorpusIndex& index);
/// Throws IndexFormatError (bad magic), IndexVersionError or CorruptIndexError.
CorpusIndex deserialize_index(std::string_view bytes);

}  // namespace topicgraph
