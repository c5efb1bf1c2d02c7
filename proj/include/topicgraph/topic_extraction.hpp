#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "topicgraph/corpus_index.hpp"
#include "topicgraph/retrieval.hpp"

namespace topicgraph {

/// Parameters of the frequency-class method.
struct ClassConfig {
  /// N: total number of topic words to extract.
  std::uint32_t topic_count = 15;
  /// C: number of frequency classes.
  std::uint32_t class_count = 3;
  /// L: lower frequency boundary in (0, 1]. Words with df < L*M are dropped.
  double lower_bound = 1.0 / 32.0;
  /// b: balance in [-1, 1]. Negative favours common words, positive specific ones.
  double balance = 0.0;

  /// Throws ParameterError naming "n", "c", "l" or "b".
  void validate() const;
};

/// [low, high) document-frequency interval of one class.
struct FrequencyBand {
  double low;
  double high;
};

/// Geometric partition of the df range below M into C classes.
struct ClassPartition {
  std::uint32_t max_df = 0;       // M
  std::uint32_t class_count = 0;  // C
  double base = 1.0;              // max(L, 1/M)
  double ratio = 1.0;             // r = base^(1/C)
  std::vector<FrequencyBand> bands;  // bands[k-1] is class k

  /// max(L*M, 1): candidates below this df are excluded.
  double exclusion_threshold() const { return bands.back().low; }
};

struct TopicWord {
  std::string word;
  TermId term = 0;
  std::uint32_t df = 0;         // in the retrieved set
  std::uint32_t global_df = 0;  // DF in the whole collection
  double rel_freq = 0.0;
  /// 1..C, or 0 for plain selection.
  int class_idx = 0;
};

struct TopicSelection {
  std::vector<TopicWord> words;
  std::optional<ClassPartition> partition;
  /// Non-empty when the selection is degenerate (e.g. nothing retrieved).
  std::string diagnostic;
};

/// df / DF. Throws ContractViolation unless 1 <= df <= DF.
double relative_frequency(std::uint32_t df, std::uint32_t global_df);

/// std::nullopt when M == 0 (nothing retrieved).
std::optional<ClassPartition> class_partition(std::uint32_t max_df, const ClassConfig& cfg);

/// Class index in 1..C, or std::nullopt when df falls below every band.
/// df == M is always class 1.
std::optional<int> classify(std::uint32_t df, const ClassPartition& partition);

/// Cumulative caps N_b(1..C): floor(N * (b (k/C)^2 + (1-b) k/C)); the last is N.
std::vector<std::uint32_t> allotment_caps(const ClassConfig& cfg);

/// Per-class quotas, i.e. successive differences of the cumulative caps.
std::vector<std::uint32_t> class_quotas(const ClassConfig& cfg);

/// Ranking used inside a class and for plain selection: relative frequency
/// descending, then df descending, then word ascending.
bool ranks_before(const TopicWord& a, const TopicWord& b);

/// All words of the retrieved set as unclassified topic-word candidates.
std::vector<TopicWord> candidate_words(const RetrievedSet& rs, const CorpusIndex& index);

TopicSelection select_topic_words_classed(const RetrievedSet& rs, const CorpusIndex& index,
                                          const ClassConfig& cfg);

TopicSelection select_topic_words_plain(const RetrievedSet& rs, const CorpusIndex& index,
                                        std::uint32_t topic_count);

}  // namespace topicgraph
