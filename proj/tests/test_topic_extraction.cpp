#include <doctest.h>

#include <cmath>
#include <random>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "topicgraph/errors.hpp"
#include "topicgraph/topic_extraction.hpp"

using namespace topicgraph;
using Counts = std::vector<std::uint32_t>;

namespace {

Counts per_class(const TopicSelection& sel, std::uint32_t classes) {
  Counts counts(classes, 0);
  for (const auto& w : sel.words) {
    REQUIRE(w.class_idx >= 1);
    ++counts[w.class_idx - 1];
  }
  return counts;
}

ClassConfig cfg(std::uint32_t n, std::uint32_t c, double l, double b) { return {n, c, l, b}; }

}  // namespace

TEST_SUITE("topic_extraction") {
  TEST_CASE("relative frequency") {
    CHECK(std::abs(relative_frequency(62, 268) - 0.23134328358208955) < 1e-12);
    CHECK(std::round(relative_frequency(62, 268) * 100) / 100 == doctest::Approx(0.23));
    CHECK(relative_frequency(7, 7) == 1.0);
    CHECK(std::abs(relative_frequency(19, 48) - 0.3958333333333333) < 1e-12);
    CHECK_THROWS_AS(relative_frequency(0, 5), ContractViolation);
    CHECK_THROWS_AS(relative_frequency(6, 5), ContractViolation);
  }

  TEST_CASE("config validation names the parameter") {
    auto param_of = [](const ClassConfig& c) {
      try {
        c.validate();
      } catch (const ParameterError& e) {
        return e.parameter();
      }
      return std::string();
    };
    CHECK(param_of(cfg(0, 3, 0.5, 0)) == "n");
    CHECK(param_of(cfg(15, 0, 0.5, 0)) == "c");
    CHECK(param_of(cfg(15, 3, 0.0, 0)) == "l");
    CHECK(param_of(cfg(15, 3, 1.5, 0)) == "l");
    CHECK(param_of(cfg(15, 3, 0.5, 2.0)) == "b");
    CHECK(param_of(cfg(15, 3, 0.5, -1.01)) == "b");
    CHECK(param_of(cfg(15, 3, 1.0, -1.0)).empty());
  }

  TEST_CASE("partition M=8 C=3 L=1/32") {
    const auto p = class_partition(8, cfg(15, 3, 1.0 / 32, 0)).value();
    CHECK(p.ratio == doctest::Approx(0.5).epsilon(1e-12));
    REQUIRE(p.bands.size() == 3);
    CHECK(p.bands[0].low == doctest::Approx(4.0));
    CHECK(p.bands[0].high == 8.0);
    CHECK(p.bands[1].low == doctest::Approx(2.0));
    CHECK(p.bands[2].low == 1.0);
    CHECK(p.exclusion_threshold() == 1.0);
    const int expected[] = {0, 3, 2, 2, 1, 1, 1, 1, 1};
    for (std::uint32_t df = 1; df <= 8; ++df) {
      CAPTURE(df);
      CHECK(classify(df, p).value() == expected[df]);
    }
  }

  TEST_CASE("partition M=100 C=2 L=0.25") {
    const auto p = class_partition(100, cfg(15, 2, 0.25, 0)).value();
    CHECK(p.ratio == doctest::Approx(0.5));
    CHECK(p.bands[0].low == doctest::Approx(50.0));
    CHECK(p.bands[1].low == 25.0);
    CHECK(classify(50, p) == 1);
    CHECK(classify(49, p) == 2);
    CHECK(classify(25, p) == 2);
    CHECK_FALSE(classify(24, p).has_value());
  }

  TEST_CASE("degenerate partitions") {
    CHECK_FALSE(class_partition(0, {}).has_value());
    const auto one = class_partition(1, {}).value();
    CHECK(one.ratio == 1.0);
    CHECK(classify(1, one) == 1);
    const auto flat = class_partition(10, cfg(15, 3, 1.0, 0)).value();
    CHECK(classify(10, flat) == 1);
    CHECK_FALSE(classify(9, flat).has_value());
  }

  TEST_CASE("classification agrees with exact interval scan") {
    for (std::uint32_t m : {8u, 19u, 64u, 100u, 255u}) {
      for (std::uint32_t c = 1; c <= 6; ++c) {
        for (auto [p, q] : {std::pair{1u, 1u}, {1u, 2u}, {1u, 8u}, {1u, 32u}}) {
          const auto part = class_partition(m, cfg(15, c, static_cast<double>(p) / q, 0)).value();
          for (std::uint32_t df = 1; df <= m; ++df) {
            const int want = oracle::exact_class(df, m, static_cast<int>(c), p, q);
            CHECK(classify(df, part).value_or(0) == want);
          }
        }
      }
    }
  }

  TEST_CASE("allotment golden values") {
    CHECK(allotment_caps(cfg(15, 3, 1.0 / 32, -1.0)) == Counts{8, 13, 15});
    CHECK(class_quotas(cfg(15, 3, 1.0 / 32, -1.0)) == Counts{8, 5, 2});
    CHECK(allotment_caps(cfg(15, 3, 1.0 / 32, 0.0)) == Counts{5, 10, 15});
    CHECK(class_quotas(cfg(15, 3, 1.0 / 32, 0.0)) == Counts{5, 5, 5});
    CHECK(allotment_caps(cfg(15, 3, 1.0 / 32, 1.0)) == Counts{1, 6, 15});
    CHECK(class_quotas(cfg(15, 3, 1.0 / 32, 1.0)) == Counts{1, 5, 9});
    CHECK(allotment_caps(cfg(15, 2, 1.0 / 32, 0.0)) == Counts{7, 15});
    CHECK(class_quotas(cfg(15, 2, 1.0 / 32, 0.0)) == Counts{7, 8});
  }

  TEST_CASE("cap properties over random configurations") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::uint32_t> n_dist(1, 200), c_dist(1, 12);
    std::uniform_real_distribution<double> b_dist(-1.0, 1.0);
    for (int i = 0; i < 2000; ++i) {
      const auto n = n_dist(rng);
      const auto c = c_dist(rng);
      const double b = i % 10 == 0 ? 0.0 : b_dist(rng);
      const auto caps = allotment_caps(cfg(n, c, 0.5, b));
      CHECK(caps.back() == n);
      for (std::size_t k = 1; k < caps.size(); ++k) CHECK(caps[k - 1] <= caps[k]);
      if (b == 0.0) {
        for (std::uint32_t k = 1; k <= c; ++k) CHECK(caps[k - 1] == n * k / c);
      }
    }
  }

  TEST_CASE("raising b never raises the class-1 quota nor lowers the class-C quota") {
    for (std::uint32_t n : {5u, 15u, 40u, 97u}) {
      for (std::uint32_t c : {2u, 3u, 5u}) {
        Counts prev;
        for (int step = 0; step <= 40; ++step) {
          const double b = -1.0 + step * 0.05;
          const auto q = class_quotas(cfg(n, c, 0.5, b));
          if (!prev.empty()) {
            CHECK(q.front() <= prev.front());
            CHECK(q.back() >= prev.back());
          }
          prev = q;
        }
      }
    }
  }

  TEST_CASE("classed selection on a corpus with surplus in every class") {
    const auto index = build_index(fixtures::stratified_corpus());
    const auto rs = execute_query(index, Query::parse("harbor"));
    REQUIRE(rs.max_df() == 64);
    CHECK(per_class(select_topic_words_classed(rs, index, cfg(15, 3, 1.0 / 32, -1.0)), 3) ==
          Counts{8, 5, 2});
    CHECK(per_class(select_topic_words_classed(rs, index, cfg(15, 3, 1.0 / 32, 0.0)), 3) ==
          Counts{5, 5, 5});
    CHECK(per_class(select_topic_words_classed(rs, index, cfg(15, 3, 1.0 / 32, 1.0)), 3) ==
          Counts{1, 5, 9});
    CHECK(per_class(select_topic_words_classed(rs, index, cfg(15, 2, 1.0 / 32, 0.0)), 2) ==
          Counts{7, 8});
  }

  TEST_CASE("a short class rolls its deficit into the next class") {
    fixtures::CorpusBuilder b(80);
    b.title(0, 63, "qa").title(64, 79, "zz");
    b.place("topic", 0, 39);
    for (int i = 0; i < 10; ++i) b.place("mid" + std::string(1, 'a' + i), 0, 6 + i);
    for (int i = 0; i < 10; ++i) b.place("low" + std::string(1, 'a' + i), 10, 11 + i % 5);
    const auto index = build_index(b.build());
    const auto rs = execute_query(index, Query::parse("qa"));
    const auto sel = select_topic_words_classed(rs, index, cfg(15, 3, 1.0 / 32, 0.0));
    CHECK(per_class(sel, 3) == Counts{2, 8, 5});
    CHECK(sel.diagnostic.empty());
  }

  TEST_CASE("single class takes everything from class C") {
    const auto index = build_index(fixtures::stratified_corpus());
    const auto rs = execute_query(index, Query::parse("harbor"));
    const auto sel = select_topic_words_classed(rs, index, cfg(15, 1, 1.0 / 32, 0.0));
    CHECK(sel.words.size() == 15);
    for (const auto& w : sel.words) CHECK(w.class_idx == 1);
  }

  TEST_CASE("too few candidates: everything available, with a diagnostic") {
    std::vector<Document> docs{{1, "qa", "alpha beta"}, {2, "qa", "alpha"}, {3, "zz", "gamma"}};
    const auto index = build_index(docs);
    const auto rs = execute_query(index, Query::parse("qa"));
    const auto sel = select_topic_words_classed(rs, index, cfg(15, 3, 1.0 / 32, 0.0));
    CHECK(sel.words.size() == 3);
    CHECK_FALSE(sel.diagnostic.empty());
  }

  TEST_CASE("empty retrieval yields an empty selection with a diagnostic") {
    const auto index = build_index(fixtures::ozone_corpus());
    const auto rs = execute_query(index, Query::parse("nothingmatches"));
    const auto classed = select_topic_words_classed(rs, index, {});
    CHECK(classed.words.empty());
    CHECK_FALSE(classed.partition.has_value());
    CHECK_FALSE(classed.diagnostic.empty());
    CHECK(select_topic_words_plain(rs, index, 15).words.empty());
  }

  TEST_CASE("plain selection") {
    const auto index = build_index(fixtures::ozone_corpus());
    const auto rs = execute_query(index, Query::parse("climate"));
    const auto sel = select_topic_words_plain(rs, index, 15);
    REQUIRE(sel.words.size() == 15);
    CHECK(sel.words.front().rel_freq == 1.0);
    CHECK(sel.words.front().word == "climate");
    for (const auto& w : sel.words) CHECK(w.class_idx == 0);
    CHECK(select_topic_words_plain(rs, index, 10000).words.size() == rs.df_entries().size());
  }

  TEST_CASE("plain selection matches a full-sort oracle") {
    std::mt19937_64 rng(40);
    for (int trial = 0; trial < 40; ++trial) {
      const auto docs = fixtures::random_corpus(rng, {.min_docs = 40, .max_docs = 40});
      const auto index = build_index(docs);
      const auto sets = oracle::word_sets(docs);
      Query q{"", {*sets[trial % docs.size()].begin()}};
      const auto rs = execute_query(index, q);
      const auto retrieved = oracle::matching(sets, q.terms);
      const auto ranking =
          oracle::plain_ranking(oracle::document_frequencies(sets, retrieved),
                                oracle::document_frequencies(sets, oracle::all_docs(sets)));
      const auto sel = select_topic_words_plain(rs, index, 10);
      REQUIRE(sel.words.size() == std::min<std::size_t>(10, ranking.size()));
      for (std::size_t i = 0; i < sel.words.size(); ++i) {
        CHECK(sel.words[i].word == ranking[i].word);
        CHECK(sel.words[i].df == ranking[i].df);
        CHECK(sel.words[i].global_df == ranking[i].global_df);
      }
    }
  }

  TEST_CASE("one class with no exclusion reproduces plain selection") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
      const auto docs = fixtures::random_corpus(rng);
      const auto index = build_index(docs);
      const auto rs = execute_query(index, Query{"", {index.word(0)}});
      const auto plain = select_topic_words_plain(rs, index, 12);
      const auto classed = select_topic_words_classed(rs, index, cfg(12, 1, 1e-9, 0.0));
      REQUIRE(plain.words.size() == classed.words.size());
      for (std::size_t i = 0; i < plain.words.size(); ++i) {
        CHECK(plain.words[i].word == classed.words[i].word);
      }
    }
  }
}
