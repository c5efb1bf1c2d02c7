#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "topicgraph/corpus_index.hpp"

namespace topicgraph::fixtures {

/// Builds documents by listing, for every word, the documents it occurs in.
class CorpusBuilder {
 public:
  explicit CorpusBuilder(std::size_t doc_count) : bodies_(doc_count), titles_(doc_count) {}

  CorpusBuilder& place(const std::string& word, std::size_t first, std::size_t last) {
    for (std::size_t d = first; d <= last; ++d) add(word, d);
    return *this;
  }
  CorpusBuilder& add(const std::string& word, std::size_t doc) {
    bodies_.at(doc) += word + " ";
    return *this;
  }
  CorpusBuilder& title(std::size_t first, std::size_t last, const std::string& text) {
    for (std::size_t d = first; d <= last; ++d) titles_.at(d) = text;
    return *this;
  }
  std::vector<Document> build() const {
    std::vector<Document> docs;
    for (std::size_t i = 0; i < bodies_.size(); ++i) {
      docs.push_back({static_cast<std::int64_t>(i), titles_[i], bodies_[i]});
    }
    return docs;
  }

 private:
  std::vector<std::string> bodies_;
  std::vector<std::string> titles_;
};

/// Engineered figures of the ozone/dioxide fixture.
struct OzoneFacts {
  static constexpr std::uint32_t kRetrieved = 40;
  static constexpr std::uint32_t kOzoneDf = 10;
  static constexpr std::uint32_t kDioxideDf = 24;
  static constexpr std::uint32_t kCooccurrence = 8;
};

/// 60 documents. Documents 0..39 mention "climate" (the query); 40..59 are
/// background. Eleven class-1 words occur only in the retrieved documents,
/// "ozone" (df 10) shares 8 documents with "dioxide" (df 24) and fewer, in
/// proportion, with every other frequent word.
inline std::vector<Document> ozone_corpus() {
  CorpusBuilder b(60);
  b.title(0, 39, "Climate dispatch").title(40, 59, "Market dispatch");
  b.place("climate", 0, 39);
  // Frequent, exclusive to the retrieved documents.
  b.place("dioxide", 0, 23)
      .place("warming", 10, 39)
      .place("emissions", 12, 33)
      .place("carbon", 8, 27)
      .place("greenhouse", 20, 39)
      .place("temperature", 18, 35)
      .place("policy", 5, 19)
      .place("sea", 20, 34)
      .place("ice", 25, 39)
      .place("glacier", 26, 39);
  b.place("ozone", 0, 7).add("ozone", 24).add("ozone", 25);
  // Middle frequency, also common outside.
  b.place("arctic", 30, 37).place("arctic", 40, 47);
  b.place("layer", 0, 5).place("layer", 40, 45);
  b.place("methane", 14, 20).place("methane", 40, 42);
  b.place("satellite", 33, 37).place("satellite", 40, 49);
  b.place("antarctic", 28, 36).place("antarctic", 40, 50);
  b.place("ultraviolet", 1, 4).place("ultraviolet", 40, 44);
  // Rare in the retrieved documents.
  b.place("shoemaker", 2, 4).place("shoemaker", 50, 55);
  b.place("comet", 9, 10).place("comet", 50, 53);
  b.place("treaty", 30, 32).place("treaty", 45, 53);
  b.place("montreal", 11, 12).place("montreal", 56, 58);
  b.place("kyoto", 36, 38).place("kyoto", 52, 55);
  b.place("hurricane", 21, 22).place("hurricane", 52, 57);
  b.add("noise", 39);
  b.place("market", 40, 59).place("stocks", 44, 59);
  return b.build();
}

/// Query "harbor" retrieves documents 0..63 (M = 64). With C = 3 and L = 1/32
/// the classes are [20.2, 64], [6.35, 20.2) and [2, 6.35); each holds at least
/// ten candidate words, placed at random inside the retrieved documents.
inline std::vector<Document> stratified_corpus(std::uint64_t seed = 7) {
  constexpr std::size_t kRetrieved = 64;
  CorpusBuilder b(kRetrieved * 2);
  b.title(0, kRetrieved - 1, "Harbor bulletin").title(kRetrieved, 2 * kRetrieved - 1, "Bulletin");
  b.place("harbor", 0, kRetrieved - 1);
  std::mt19937_64 rng(seed);
  auto scatter = [&](const std::string& word, std::size_t df, std::size_t outside) {
    std::vector<std::size_t> docs(kRetrieved);
    for (std::size_t i = 0; i < kRetrieved; ++i) docs[i] = i;
    std::shuffle(docs.begin(), docs.end(), rng);
    for (std::size_t i = 0; i < df; ++i) b.add(word, docs[i]);
    for (std::size_t i = 0; i < outside; ++i) b.add(word, kRetrieved + i);
  };
  std::uniform_int_distribution<std::size_t> extra(0, 40);
  const char* common[] = {"cargo", "vessel",  "berth",  "crane", "tugboat",
                          "pilot", "channel", "tariff", "quay",  "container"};
  const char* middle[] = {"dredging", "mooring", "bollard", "lighter", "ballast",
                          "hawser",   "wharfage", "demurrage", "stevedore", "bunker"};
  const char* rare[] = {"gantry", "reefer", "drayage", "lashing",  "dunnage",
                        "tally",  "manifest", "sounding", "pilotage", "breakwater"};
  for (int i = 0; i < 10; ++i) scatter(common[i], 21 + 4 * i, extra(rng));
  for (int i = 0; i < 10; ++i) scatter(middle[i], 7 + i, extra(rng));
  for (int i = 0; i < 10; ++i) scatter(rare[i], 2 + i % 5, extra(rng));
  return b.build();
}

/// Random corpus of lowercase pseudo-words ("qz" + letters, never a
/// stopword). Word frequencies are skewed so df spans several classes.
struct RandomCorpusSpec {
  std::size_t min_docs = 20;
  std::size_t max_docs = 200;
  std::size_t max_vocab = 500;
  std::size_t min_words = 3;
  std::size_t max_words = 40;
};

inline std::string pseudo_word(std::size_t i) {
  std::string w = "qz";
  do {
    w.push_back(static_cast<char>('a' + i % 26));
    i /= 26;
  } while (i > 0);
  return w;
}

inline std::vector<Document> random_corpus(std::mt19937_64& rng, const RandomCorpusSpec& spec = {}) {
  std::uniform_int_distribution<std::size_t> doc_n(spec.min_docs, spec.max_docs);
  std::uniform_int_distribution<std::size_t> vocab_n(10, spec.max_vocab);
  std::uniform_int_distribution<std::size_t> len_n(spec.min_words, spec.max_words);
  const auto docs = doc_n(rng);
  const auto vocab = vocab_n(rng);
  // Zipf-like weights.
  std::vector<double> weights(vocab);
  for (std::size_t i = 0; i < vocab; ++i) weights[i] = 1.0 / static_cast<double>(i + 1);
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());

  std::vector<Document> out;
  for (std::size_t d = 0; d < docs; ++d) {
    Document doc;
    doc.doc_id = static_cast<std::int64_t>(d) * 3 + 1;
    doc.title = pseudo_word(pick(rng));
    const auto n = len_n(rng);
    for (std::size_t k = 0; k < n; ++k) doc.body += pseudo_word(pick(rng)) + " ";
    out.push_back(std::move(doc));
  }
  return out;
}

}  // namespace topicgraph::fixtures
