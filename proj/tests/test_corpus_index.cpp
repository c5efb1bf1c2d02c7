#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "topicgraph/corpus_index.hpp"
#include "topicgraph/corpus_io.hpp"
#include "topicgraph/errors.hpp"

using namespace topicgraph;

namespace {

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("topicgraph_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

void check_invariants(const CorpusIndex& index) {
  for (TermId t = 0; t < index.vocabulary_size(); ++t) {
    const auto list = index.postings(t);
    REQUIRE(!list.empty());
    CHECK(index.df_global(t) == list.size());
    CHECK(index.df_global(t) <= index.doc_count());
    for (std::size_t i = 0; i < list.size(); ++i) {
      CHECK(list[i] < index.doc_count());
      if (i > 0) CHECK(list[i - 1] < list[i]);
    }
  }
}

}  // namespace

TEST_SUITE("corpus_index") {
  TEST_CASE("empty corpus") {
    const auto index = build_index(std::vector<Document>{});
    CHECK(index.doc_count() == 0);
    CHECK(index.vocabulary_size() == 0);
    CHECK(index.empty());
  }

  TEST_CASE("document frequency, not term frequency") {
    std::vector<Document> docs{{1, "First", "ozone ozone ozone ozone ozone"},
                               {2, "Second", "the ozone layer"}};
    const auto index = build_index(docs);
    CHECK(index.df_global("ozone") == 2);
    CHECK(index.df_global("layer") == 1);
    CHECK(index.df_global("the") == 0);
    CHECK(index.df_global("first") == 1);  // titles are indexed
    check_invariants(index);
  }

  TEST_CASE("duplicate doc_id is rejected with the id") {
    std::vector<Document> docs{{5, "A", "x"}, {5, "B", "y"}};
    CHECK_THROWS_WITH_AS(build_index(docs), doctest::Contains("duplicate doc_id 5"), DataError);
  }

  TEST_CASE("empty title is rejected") {
    std::vector<Document> docs{{1, "", "body"}};
    CHECK_THROWS_AS(build_index(docs), DataError);
  }

  TEST_CASE("df_global matches a brute-force scan on random corpora") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 20; ++trial) {
      const auto docs = fixtures::random_corpus(rng, {.min_docs = 100, .max_docs = 100});
      const auto index = build_index(docs);
      const auto sets = oracle::word_sets(docs);
      const auto expected = oracle::document_frequencies(sets, oracle::all_docs(sets));
      REQUIRE(index.vocabulary_size() == expected.size());
      for (const auto& [w, df] : expected) CHECK(index.df_global(w) == df);
      check_invariants(index);
    }
  }

  TEST_CASE("build is deterministic") {
    std::mt19937_64 rng(5);
    const auto docs = fixtures::random_corpus(rng);
    CHECK(build_index(docs) == build_index(docs));
  }

  TEST_CASE("metadata records the tokenizer fingerprint") {
    Tokenizer custom({"climate"});
    const auto docs = fixtures::ozone_corpus();
    const auto index = build_index(docs, custom);
    CHECK(index.metadata().tokenizer == custom.fingerprint());
    CHECK(index.df_global("climate") == 0);
  }
}

TEST_SUITE("index_persistence") {
  TEST_CASE("round-trip of an empty index") {
    const auto index = build_index(std::vector<Document>{});
    CHECK(deserialize_index(serialize_index(index)) == index);
  }

  TEST_CASE("round-trip of a 100-document index through a file") {
    std::mt19937_64 rng(9);
    const auto index = build_index(fixtures::random_corpus(rng, {.min_docs = 100, .max_docs = 100}));
    const auto path = scratch_dir("roundtrip") / "corpus.tgi";
    save_index(index, path);
    const auto loaded = load_index(path);
    CHECK(loaded == index);
    CHECK(serialize_index(loaded) == serialize_index(index));
    for (DocOrdinal d = 0; d < index.doc_count(); ++d) {
      CHECK(std::equal(loaded.doc_terms(d).begin(), loaded.doc_terms(d).end(),
                       index.doc_terms(d).begin(), index.doc_terms(d).end()));
    }
  }

  TEST_CASE("every truncation is reported as corrupt, never a partial index") {
    const auto bytes = serialize_index(build_index(fixtures::ozone_corpus()));
    for (std::size_t len = 0; len < bytes.size(); len += 7) {
      CAPTURE(len);
      CHECK_THROWS_AS(deserialize_index(std::string_view(bytes).substr(0, len)), CorruptIndexError);
    }
  }

  TEST_CASE("truncated file on disk") {
    const auto path = scratch_dir("truncated") / "corpus.tgi";
    save_index(build_index(fixtures::ozone_corpus()), path);
    std::filesystem::resize_file(path, std::filesystem::file_size(path) / 2);
    CHECK_THROWS_AS(load_index(path), CorruptIndexError);
  }

  TEST_CASE("flipped byte fails the checksum") {
    auto bytes = serialize_index(build_index(fixtures::ozone_corpus()));
    bytes[bytes.size() / 2] ^= 0x40;
    CHECK_THROWS_AS(deserialize_index(bytes), CorruptIndexError);
  }

  TEST_CASE("version mismatch") {
    auto bytes = serialize_index(build_index(fixtures::ozone_corpus()));
    bytes[8] = static_cast<char>(kIndexFormatVersion + 1);
    CHECK_THROWS_AS(deserialize_index(bytes), IndexVersionError);
  }

  TEST_CASE("foreign file") {
    CHECK_THROWS_AS(deserialize_index("PK\x03\x04 definitely not an index"), IndexFormatError);
  }
}

TEST_SUITE("corpus_io") {
  TEST_CASE("directory: first line is the title, files in name order") {
    const auto dir = scratch_dir("dir_corpus");
    std::ofstream(dir / "b.txt") << "Second title\nozone layer\nmore body";
    std::ofstream(dir / "a.txt") << "First title\ndioxide";
    std::ofstream(dir / "c.txt") << "\nuntitled body";
    std::ofstream(dir / ".hidden") << "Ignored\n";
    const auto docs = read_corpus(dir);
    REQUIRE(docs.size() == 3);
    CHECK(docs[0].title == "First title");
    CHECK(docs[0].body == "dioxide");
    CHECK(docs[1].title == "Second title");
    CHECK(docs[1].body == "ozone layer\nmore body");
    CHECK(docs[2].title == "c");
    CHECK(docs[2].doc_id == 2);
  }

  TEST_CASE("empty directory is a data error") {
    CHECK_THROWS_AS(read_corpus(scratch_dir("empty_corpus")), DataError);
  }

  TEST_CASE("jsonl with and without ids") {
    const auto docs = parse_corpus_jsonl(
        "{\"id\": 10, \"title\": \"One\", \"body\": \"alpha beta\"}\n"
        "\n"
        "{\"title\": \"Two\"}\n");
    REQUIRE(docs.size() == 2);
    CHECK(docs[0].doc_id == 10);
    CHECK(docs[1].doc_id == 1);
    CHECK(docs[1].body.empty());
  }

  TEST_CASE("jsonl errors name the line") {
    CHECK_THROWS_WITH_AS(parse_corpus_jsonl("{\"title\": \"ok\"}\n{not json}\n"),
                         doctest::Contains("line 2"), DataError);
    CHECK_THROWS_AS(parse_corpus_jsonl("{\"body\": \"no title\"}\n"), DataError);
    CHECK_THROWS_AS(parse_corpus_jsonl("{\"id\": \"x\", \"title\": \"t\"}\n"), DataError);
  }
}
