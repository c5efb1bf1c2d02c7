#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace topicgraph {

/// Bumped whenever the token rules change; persisted in index metadata.
inline constexpr std::uint32_t kTokenizerVersion = 1;

/// Identifies the exact token rules an index was built with.
struct TokenizerFingerprint {
  std::uint32_t version = kTokenizerVersion;
  std::uint64_t stopword_hash = 0;

  friend bool operator==(const TokenizerFingerprint&, const TokenizerFingerprint&) = default;
};

/// Splits text into lowercase alphanumeric words.
///
/// UTF-8 input is decoded; letters and digits of any script are word
/// characters, everything else (ASCII punctuation, whitespace, general
/// punctuation and symbol blocks) separates words. Latin-1, Latin
/// Extended-A, Greek and Cyrillic capitals are folded to lowercase. Tokens
/// shorter than two code points and stopwords are dropped. No stemming.
class Tokenizer {
 public:
  /// Uses the built-in English stopword list.
  Tokenizer();
  explicit Tokenizer(std::vector<std::string> stopwords);

  static Tokenizer from_stopword_file(const std::filesystem::path& path);
  static const Tokenizer& default_instance();

  std::vector<std::string> tokenize(std::string_view text) const;

  bool is_stopword(std::string_view word) const;
  const std::vector<std::string>& stopwords() const noexcept { return sorted_stopwords_; }
  TokenizerFingerprint fingerprint() const noexcept { return fingerprint_; }

 private:
  std::vector<std::string> sorted_stopwords_;
  std::unordered_set<std::string> stopword_set_;
  TokenizerFingerprint fingerprint_;
};

/// Parses a stopword list: one word per line, '#' comments, blank lines ignored.
std::vector<std::string> parse_stopword_list(std::string_view text);

/// The stopword list compiled into the library (data/stopwords_en.txt).
std::string_view builtin_stopword_text();

/// Convenience wrapper over Tokenizer::default_instance().
std::vector<std::string> tokenize(std::string_view text);

}  // namespace topicgraph
