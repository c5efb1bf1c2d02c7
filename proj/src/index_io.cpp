#include <fstream>
#include <sstream>

#include "topicgraph/corpus_index.hpp"
#include "topicgraph/errors.hpp"

namespace topicgraph {
namespace {

constexpr std::string_view kMagic{"TGIDX\r\n\x1a", 8};

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

class Writer {
 public:
  void u32(std::uint32_t v) { fixed(v, 4); }
  void u64(std::uint64_t v) { fixed(v, 8); }
  void varint(std::uint64_t v) {
    while (v >= 0x80) {
      out_.push_back(static_cast<char>((v & 0x7F) | 0x80));
      v >>= 7;
    }
    out_.push_back(static_cast<char>(v));
  }
  void bytes(std::string_view s) {
    varint(s.size());
    out_.append(s);
  }
  void raw(std::string_view s) { out_.append(s); }
  std::string& buffer() { return out_; }

 private:
  void fixed(std::uint64_t v, int width) {
    for (int i = 0; i < width; ++i) out_.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
  }
  std::string out_;
};

class Reader {
 public:
  explicit Reader(std::string_view in) : in_(in) {}

  std::uint32_t u32() { return static_cast<std::uint32_t>(fixed(4)); }
  std::uint64_t u64() { return fixed(8); }
  std::uint64_t varint() {
    std::uint64_t v = 0;
    for (int shift = 0; shift < 64; shift += 7) {
      need(1);
      const auto c = static_cast<unsigned char>(in_[pos_++]);
      v |= static_cast<std::uint64_t>(c & 0x7F) << shift;
      if ((c & 0x80) == 0) return v;
    }
    throw CorruptIndexError("varint overflow at offset " + std::to_string(pos_));
  }
  std::string bytes() {
    const auto n = varint();
    need(n);
    std::string s(in_.substr(pos_, n));
    pos_ += n;
    return s;
  }
  bool done() const { return pos_ == in_.size(); }
  /// Upper bound on how many more items of at least `width` bytes can follow.
  void check_count(std::uint64_t count, std::uint64_t width) const {
    if (count > (in_.size() - pos_) / width) {
      throw CorruptIndexError("declared count " + std::to_string(count) + " exceeds payload");
    }
  }

 private:
  void need(std::uint64_t n) const {
    if (n > in_.size() - pos_) throw CorruptIndexError("payload truncated");
  }
  std::uint64_t fixed(int width) {
    need(width);
    std::uint64_t v = 0;
    for (int i = 0; i < width; ++i) {
      v |= static_cast<std::uint64_t>(static_cast<unsigned char>(in_[pos_ + i])) << (8 * i);
    }
    pos_ += width;
    return v;
  }
  std::string_view in_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string serialize_index(const CorpusIndex& index) {
  Writer w;
  w.raw(kMagic);
  w.u32(kIndexFormatVersion);
  w.u32(index.metadata().tokenizer.version);
  w.u64(index.metadata().tokenizer.stopword_hash);
  w.varint(index.doc_count());
  for (const auto& d : index.documents()) {
    w.u64(static_cast<std::uint64_t>(d.doc_id));
    w.bytes(d.title);
  }
  w.varint(index.vocabulary_size());
  for (TermId t = 0; t < index.vocabulary_size(); ++t) {
    w.bytes(index.word(t));
    const auto list = index.postings(t);
    w.varint(list.size());
    DocOrdinal prev = 0;
    for (std::size_t i = 0; i < list.size(); ++i) {
      w.varint(i == 0 ? list[i] : list[i] - prev);
      prev = list[i];
    }
  }
  const auto checksum = fnv1a(w.buffer());
  w.u64(checksum);
  return std::move(w.buffer());
}

CorpusIndex deserialize_index(std::string_view bytes) {
  if (bytes.size() < kMagic.size()) {
    if (bytes == kMagic.substr(0, bytes.size())) throw CorruptIndexError("payload truncated");
    throw IndexFormatError("not a topicgraph index (bad magic header)");
  }
  if (bytes.substr(0, kMagic.size()) != kMagic) {
    throw IndexFormatError("not a topicgraph index (bad magic header)");
  }
  if (bytes.size() < kMagic.size() + 4) throw CorruptIndexError("payload truncated");
  Reader header(bytes.substr(kMagic.size(), 4));
  const auto version = header.u32();
  if (version != kIndexFormatVersion) {
    throw IndexVersionError("index format version " + std::to_string(version) +
                            " is not supported (expected " +
                            std::to_string(kIndexFormatVersion) + ")");
  }
  if (bytes.size() < kMagic.size() + 4 + 8) throw CorruptIndexError("payload truncated");
  const auto body = bytes.substr(0, bytes.size() - 8);
  Reader trailer(bytes.substr(bytes.size() - 8));
  if (trailer.u64() != fnv1a(body)) throw CorruptIndexError("checksum mismatch");

  Reader r(body.substr(kMagic.size() + 4));
  IndexMetadata meta;
  meta.tokenizer.version = r.u32();
  meta.tokenizer.stopword_hash = r.u64();

  const auto doc_count = r.varint();
  r.check_count(doc_count, 9);
  std::vector<DocumentRecord> docs;
  docs.reserve(doc_count);
  for (std::uint64_t i = 0; i < doc_count; ++i) {
    DocumentRecord d;
    d.doc_id = static_cast<std::int64_t>(r.u64());
    d.title = r.bytes();
    docs.push_back(std::move(d));
  }

  const auto vocab_size = r.varint();
  r.check_count(vocab_size, 2);
  std::vector<std::string> vocabulary;
  std::vector<std::vector<DocOrdinal>> postings;
  vocabulary.reserve(vocab_size);
  postings.reserve(vocab_size);
  for (std::uint64_t t = 0; t < vocab_size; ++t) {
    vocabulary.push_back(r.bytes());
    const auto n = r.varint();
    r.check_count(n, 1);
    std::vector<DocOrdinal> list;
    list.reserve(n);
    std::uint64_t prev = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
      const auto gap = r.varint();
      const auto value = i == 0 ? gap : prev + gap;
      if (value > UINT32_MAX) throw CorruptIndexError("posting out of range");
      list.push_back(static_cast<DocOrdinal>(value));
      prev = value;
    }
    postings.push_back(std::move(list));
  }
  if (!r.done()) throw CorruptIndexError("trailing bytes after postings");
  return CorpusIndex::from_parts(std::move(docs), std::move(vocabulary), std::move(postings), meta);
}

void save_index(const CorpusIndex& index, const std::filesystem::path& destination) {
  const auto bytes = serialize_index(index);
  auto tmp = destination;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write index to " + destination.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw DataError("write failed for " + destination.string());
  }
  std::filesystem::rename(tmp, destination);
}

CorpusIndex load_index(const std::filesystem::path& source) {
  std::ifstream in(source, std::ios::binary);
  if (!in) throw DataError("cannot open index " + source.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return deserialize_index(buf.str());
}

}  // namespace topicgraph
