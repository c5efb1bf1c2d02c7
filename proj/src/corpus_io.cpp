#include "topicgraph/corpus_io.hpp"

#include <algorithm>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "topicgraph/errors.hpp"

namespace topicgraph {
namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

std::vector<Document> read_corpus_directory(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw DataError(dir.string() + " is not a directory");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    if (entry.path().filename().string().starts_with(".")) continue;
    files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<Document> docs;
  docs.reserve(files.size());
  for (std::size_t i = 0; i < files.size(); ++i) {
    const auto text = read_file(files[i]);
    const auto newline = text.find('\n');
    Document doc;
    doc.doc_id = static_cast<std::int64_t>(i);
    doc.title = trim(std::string_view(text).substr(0, newline));
    if (doc.title.empty()) doc.title = files[i].stem().string();
    if (newline != std::string::npos) doc.body = text.substr(newline + 1);
    docs.push_back(std::move(doc));
  }
  return docs;
}

std::vector<Document> parse_corpus_jsonl(std::string_view text) {
  std::vector<Document> docs;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw DataError("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!obj.is_object() || !obj.contains("title") || !obj["title"].is_string()) {
      throw DataError("line " + std::to_string(line_no) + ": expected an object with a string title");
    }
    Document doc;
    doc.doc_id = static_cast<std::int64_t>(docs.size());
    if (auto it = obj.find("id"); it != obj.end()) {
      if (!it->is_number_integer()) {
        throw DataError("line " + std::to_string(line_no) + ": id must be an integer");
      }
      doc.doc_id = it->get<std::int64_t>();
    }
    doc.title = obj["title"].get<std::string>();
    if (auto it = obj.find("body"); it != obj.end() && it->is_string()) {
      doc.body = it->get<std::string>();
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

std::vector<Document> read_corpus_jsonl(const std::filesystem::path& file) {
  return parse_corpus_jsonl(read_file(file));
}

std::vector<Document> read_corpus(const std::filesystem::path& source) {
  if (!std::filesystem::exists(source)) throw DataError(source.string() + " does not exist");
  auto docs = std::filesystem::is_directory(source) ? read_corpus_directory(source)
                                                     : read_corpus_jsonl(source);
  if (docs.empty()) throw DataError("no documents found in " + source.string());
  return docs;
}

}  // namespace topicgraph
