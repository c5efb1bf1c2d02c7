// Latency benchmark: builds a synthetic corpus and times graph requests.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "topicgraph/guidance.hpp"

using namespace topicgraph;

namespace {

std::string synthetic_word(std::size_t i) {
  std::string w = "w";
  do {
    w.push_back(static_cast<char>('a' + i % 26));
    i /= 26;
  } while (i > 0);
  return w;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"topicgraph latency benchmark"};
  std::size_t docs = 100000, vocab = 50000, words = 80, queries = 60;
  std::uint64_t seed = 42;
  double budget_ms = 200.0;
  app.add_option("--docs", docs, "documents to generate");
  app.add_option("--vocab", vocab, "vocabulary size");
  app.add_option("--words", words, "words per document");
  app.add_option("--queries", queries, "graph requests to time");
  app.add_option("--seed", seed, "random seed");
  app.add_option("--budget-ms", budget_ms, "p95 target in milliseconds");
  CLI11_PARSE(app, argc, argv);

  std::mt19937_64 rng(seed);
  std::vector<double> weights(vocab);
  for (std::size_t i = 0; i < vocab; ++i) weights[i] = 1.0 / static_cast<double>(i + 1);
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());

  std::vector<Document> corpus;
  corpus.reserve(docs);
  for (std::size_t d = 0; d < docs; ++d) {
    Document doc;
    doc.doc_id = static_cast<std::int64_t>(d);
    doc.title = synthetic_word(pick(rng));
    for (std::size_t k = 0; k < words; ++k) doc.body += synthetic_word(pick(rng)) + ' ';
    corpus.push_back(std::move(doc));
  }

  const Tokenizer tokenizer;
  auto t0 = std::chrono::steady_clock::now();
  const auto index = build_index(corpus, tokenizer);
  const double build_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("index: %zu docs, %zu words, built in %.2f s\n", index.doc_count(),
              index.vocabulary_size(), build_s);

  // Queries drawn from ranks 10..1000: result sets from a few hundred to ~10% of the corpus.
  std::uniform_int_distribution<std::size_t> rank(10, std::min<std::size_t>(1000, vocab - 1));
  std::vector<double> ms;
  std::size_t total_hits = 0;
  for (std::size_t q = 0; q < queries; ++q) {
    GraphRequest req;
    req.query = synthetic_word(rank(rng));
    t0 = std::chrono::steady_clock::now();
    const auto payload = build_graph(index, tokenizer, req);
    ms.push_back(
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
    total_hits += payload.result_count;
  }
  std::sort(ms.begin(), ms.end());
  auto pct = [&](double p) {
    return ms[std::min(ms.size() - 1, static_cast<std::size_t>(p * (ms.size() - 1) + 0.5))];
  };
  std::printf("graph requests: %zu, mean result size %.0f\n", ms.size(),
              static_cast<double>(total_hits) / static_cast<double>(ms.size()));
  std::printf("latency p50 %.2f ms, p95 %.2f ms, max %.2f ms (target p95 < %.0f ms: %s)\n",
              pct(0.5), pct(0.95), ms.back(), budget_ms, pct(0.95) < budget_ms ? "met" : "missed");
  return 0;
}
