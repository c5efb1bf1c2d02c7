#pragma once

#include <filesystem>
#include <string_view>
#include <vector>

#include "topicgraph/corpus_index.hpp"

namespace topicgraph {

/// One document per regular file, files taken in filename order; the first
/// line is the title and the rest is the body. doc_id is the file's position
/// in that order. Hidden files are skipped; a blank first line falls back to
/// the filename stem as title.
std::vector<Document> read_corpus_directory(const std::filesystem::path& dir);

/// Line-delimited JSON: one object per line with "title", "body" and an
/// optional integer "id" (defaults to the line's ordinal among documents).
std::vector<Document> parse_corpus_jsonl(std::string_view text);
std::vector<Document> read_corpus_jsonl(const std::filesystem::path& file);

/// Directory -> read_corpus_directory, anything else -> read_corpus_jsonl.
/// Throws DataError when the source yields no documents.
std::vector<Document> read_corpus(const std::filesystem::path& source);

}  // namespace topicgraph
