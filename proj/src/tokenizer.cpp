#include "topicgraph/tokenizer.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "topicgraph/errors.hpp"

namespace topicgraph {
namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

std::uint64_t hash_stopwords(const std::vector<std::string>& sorted) {
  std::uint64_t h = kFnvOffset;
  for (const auto& w : sorted) {
    for (unsigned char c : w) {
      h ^= c;
      h *= kFnvPrime;
    }
    h ^= static_cast<unsigned char>('\n');
    h *= kFnvPrime;
  }
  return h;
}

// Decodes one code point starting at text[pos]; advances pos. Malformed
// sequences yield U+FFFD and consume a single byte.
char32_t next_code_point(std::string_view text, std::size_t& pos) {
  constexpr char32_t kReplacement = 0xFFFD;
  const auto lead = static_cast<unsigned char>(text[pos]);
  if (lead < 0x80) {
    ++pos;
    return lead;
  }
  int extra = 0;
  char32_t cp = 0;
  if ((lead & 0xE0) == 0xC0) {
    extra = 1;
    cp = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    extra = 2;
    cp = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    extra = 3;
    cp = lead & 0x07;
  } else {
    ++pos;
    return kReplacement;
  }
  if (pos + extra >= text.size()) {
    ++pos;
    return kReplacement;
  }
  for (int i = 1; i <= extra; ++i) {
    const auto c = static_cast<unsigned char>(text[pos + i]);
    if ((c & 0xC0) != 0x80) {
      ++pos;
      return kReplacement;
    }
    cp = (cp << 6) | (c & 0x3F);
  }
  pos += extra + 1;
  return cp;
}

bool in_range(char32_t cp, char32_t lo, char32_t hi) { return cp >= lo && cp <= hi; }

bool is_word_char(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= '0' && cp <= '9') || (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z');
  }
  // Punctuation, symbol, control and private-use blocks separate words.
  if (in_range(cp, 0x80, 0xBF) || cp == 0xD7 || cp == 0xF7) return false;
  if (in_range(cp, 0x2000, 0x2BFF)) return false;
  if (in_range(cp, 0x3000, 0x303F)) return false;
  if (in_range(cp, 0xE000, 0xF8FF)) return false;
  if (in_range(cp, 0xFE30, 0xFE4F)) return false;
  if (in_range(cp, 0xFF00, 0xFF0F) || in_range(cp, 0xFF1A, 0xFF20) ||
      in_range(cp, 0xFF3B, 0xFF40) || in_range(cp, 0xFF5B, 0xFF65)) {
    return false;
  }
  if (in_range(cp, 0xFFF0, 0xFFFF)) return false;
  if (in_range(cp, 0x1F000, 0x1FAFF)) return false;
  return true;
}

char32_t to_lower(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
  if (cp < 0x80) return cp;
  if (in_range(cp, 0xC0, 0xDE) && cp != 0xD7) return cp + 0x20;
  if (in_range(cp, 0x100, 0x137) || in_range(cp, 0x14A, 0x177)) {
    return (cp % 2 == 0) ? cp + 1 : cp;
  }
  if (in_range(cp, 0x139, 0x148) || in_range(cp, 0x179, 0x17E)) {
    return (cp % 2 == 1) ? cp + 1 : cp;
  }
  if (cp == 0x178) return 0xFF;
  if (in_range(cp, 0x391, 0x3A9) && cp != 0x3A2) return cp + 0x20;
  if (in_range(cp, 0x410, 0x42F)) return cp + 0x20;
  if (in_range(cp, 0x400, 0x40F)) return cp + 0x50;
  return cp;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

}  // namespace

std::vector<std::string> parse_stopword_list(std::string_view text) {
  std::vector<std::string> words;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t\r");
    words.push_back(line.substr(first, last - first + 1));
  }
  return words;
}

Tokenizer::Tokenizer() : Tokenizer(parse_stopword_list(builtin_stopword_text())) {}

Tokenizer::Tokenizer(std::vector<std::string> stopwords) : sorted_stopwords_(std::move(stopwords)) {
  std::sort(sorted_stopwords_.begin(), sorted_stopwords_.end());
  sorted_stopwords_.erase(std::unique(sorted_stopwords_.begin(), sorted_stopwords_.end()),
                          sorted_stopwords_.end());
  stopword_set_.insert(sorted_stopwords_.begin(), sorted_stopwords_.end());
  fingerprint_.stopword_hash = hash_stopwords(sorted_stopwords_);
}

Tokenizer Tokenizer::from_stopword_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read stopword file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return Tokenizer(parse_stopword_list(buf.str()));
}

const Tokenizer& Tokenizer::default_instance() {
  static const Tokenizer instance;
  return instance;
}

bool Tokenizer::is_stopword(std::string_view word) const {
  return stopword_set_.count(std::string(word)) != 0;
}

std::vector<std::string> Tokenizer::tokenize(std::string_view text) const {
  std::vector<std::string> tokens;
  std::string current;
  std::size_t current_len = 0;
  auto flush = [&] {
    if (current_len >= 2 && stopword_set_.count(current) == 0) tokens.push_back(current);
    current.clear();
    current_len = 0;
  };
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char32_t cp = next_code_point(text, pos);
    if (cp != 0xFFFD && is_word_char(cp)) {
      append_utf8(current, to_lower(cp));
      ++current_len;
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

std::vector<std::string> tokenize(std::string_view text) {
  return Tokenizer::default_instance().tokenize(text);
}

}  // namespace topicgraph
