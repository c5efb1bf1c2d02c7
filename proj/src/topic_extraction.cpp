#include "topicgraph/topic_extraction.hpp"

#include <algorithm>
#include <cmath>

#include "topicgraph/errors.hpp"

namespace topicgraph {
namespace {

// Slack for floating-point evaluation of quantities whose exact value is an
// integer (caps) or a class boundary.
constexpr double kEps = 1e-9;

}  // namespace

void ClassConfig::validate() const {
  if (topic_count < 1) throw ParameterError("n", "n must be at least 1");
  if (class_count < 1) throw ParameterError("c", "c must be at least 1");
  if (!(lower_bound > 0.0 && lower_bound <= 1.0)) {
    throw ParameterError("l", "l must lie in (0, 1]");
  }
  if (!(balance >= -1.0 && balance <= 1.0)) throw ParameterError("b", "b must lie in [-1, 1]");
}

double relative_frequency(std::uint32_t df, std::uint32_t global_df) {
  if (df == 0 || df > global_df) {
    throw ContractViolation("relative frequency needs 1 <= df <= DF (got df=" +
                            std::to_string(df) + ", DF=" + std::to_string(global_df) + ")");
  }
  return static_cast<double>(df) / static_cast<double>(global_df);
}

std::optional<ClassPartition> class_partition(std::uint32_t max_df, const ClassConfig& cfg) {
  cfg.validate();
  if (max_df == 0) return std::nullopt;
  ClassPartition p;
  p.max_df = max_df;
  p.class_count = cfg.class_count;
  const double m = max_df;
  p.base = std::max(cfg.lower_bound, 1.0 / m);
  p.ratio = std::pow(p.base, 1.0 / cfg.class_count);
  p.bands.reserve(cfg.class_count);
  double high = m;
  for (std::uint32_t k = 1; k <= cfg.class_count; ++k) {
    const double low = k == cfg.class_count
                           ? std::max(cfg.lower_bound * m, 1.0)
                           : m * std::pow(p.base, static_cast<double>(k) / cfg.class_count);
    p.bands.push_back({low, high});
    high = low;
  }
  return p;
}

std::optional<int> classify(std::uint32_t df, const ClassPartition& p) {
  if (df == 0) throw ContractViolation("classify needs df >= 1");
  if (df >= p.max_df) return 1;
  if (p.base >= 1.0) return std::nullopt;
  // df lies in class k iff M base^(k/C) <= df < M base^((k-1)/C), i.e.
  // k - 1 < C ln(M/df) / ln(1/base) <= k.
  const double t = p.class_count * std::log(static_cast<double>(p.max_df) / df) /
                   std::log(1.0 / p.base);
  const auto k = static_cast<long>(std::ceil(t - kEps));
  if (k > static_cast<long>(p.class_count)) return std::nullopt;
  return static_cast<int>(std::max(k, 1L));
}

std::vector<std::uint32_t> allotment_caps(const ClassConfig& cfg) {
  cfg.validate();
  const double n = cfg.topic_count;
  const double c = cfg.class_count;
  const double b = cfg.balance;
  std::vector<std::uint32_t> caps(cfg.class_count);
  std::uint32_t prev = 0;
  for (std::uint32_t k = 1; k <= cfg.class_count; ++k) {
    std::uint32_t cap = cfg.topic_count;
    if (k < cfg.class_count) {
      // N (b k^2 + (1-b) k C) / C^2, floored with slack so exact integers stay put.
      const double kk = k;
      const double value = n * (b * kk * kk + (1.0 - b) * kk * c) / (c * c);
      const double floored = std::floor(value + kEps);
      cap = static_cast<std::uint32_t>(std::clamp(floored, 0.0, n));
    }
    cap = std::max(cap, prev);
    caps[k - 1] = cap;
    prev = cap;
  }
  return caps;
}

std::vector<std::uint32_t> class_quotas(const ClassConfig& cfg) {
  auto caps = allotment_caps(cfg);
  for (std::size_t k = caps.size(); k-- > 1;) caps[k] -= caps[k - 1];
  return caps;
}

bool ranks_before(const TopicWord& a, const TopicWord& b) {
  // a.df/a.DF > b.df/b.DF, compared exactly.
  const auto lhs = static_cast<std::uint64_t>(a.df) * b.global_df;
  const auto rhs = static_cast<std::uint64_t>(b.df) * a.global_df;
  if (lhs != rhs) return lhs > rhs;
  if (a.df != b.df) return a.df > b.df;
  return a.word < b.word;
}

std::vector<TopicWord> candidate_words(const RetrievedSet& rs, const CorpusIndex& index) {
  std::vector<TopicWord> out;
  out.reserve(rs.df_entries().size());
  for (const auto& e : rs.df_entries()) {
    TopicWord w;
    w.term = e.term;
    w.word = index.word(e.term);
    w.df = e.count;
    w.global_df = index.df_global(e.term);
    w.rel_freq = relative_frequency(w.df, w.global_df);
    out.push_back(std::move(w));
  }
  return out;
}

TopicSelection select_topic_words_classed(const RetrievedSet& rs, const CorpusIndex& index,
                                          const ClassConfig& cfg) {
  cfg.validate();
  TopicSelection sel;
  sel.partition = class_partition(rs.max_df(), cfg);
  if (rs.empty() || !sel.partition) {
    sel.diagnostic = "no documents retrieved for '" + rs.query().text + "'";
    return sel;
  }

  std::vector<std::vector<TopicWord>> by_class(cfg.class_count);
  for (auto& w : candidate_words(rs, index)) {
    if (auto k = classify(w.df, *sel.partition)) {
      w.class_idx = *k;
      by_class[*k - 1].push_back(std::move(w));
    }
  }

  const auto caps = allotment_caps(cfg);
  std::size_t taken = 0;
  for (std::uint32_t k = 0; k < cfg.class_count; ++k) {
    auto& pool = by_class[k];
    const std::size_t want = caps[k] > taken ? caps[k] - taken : 0;
    const std::size_t take = std::min(want, pool.size());
    std::partial_sort(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(take), pool.end(),
                      ranks_before);
    for (std::size_t i = 0; i < take; ++i) sel.words.push_back(std::move(pool[i]));
    taken += take;
  }
  if (sel.words.size() < cfg.topic_count) {
    sel.diagnostic = "only " + std::to_string(sel.words.size()) + " of " +
                     std::to_string(cfg.topic_count) + " topic words available";
  }
  return sel;
}

TopicSelection select_topic_words_plain(const RetrievedSet& rs, const CorpusIndex& index,
                                        std::uint32_t topic_count) {
  if (topic_count < 1) throw ParameterError("n", "n must be at least 1");
  TopicSelection sel;
  if (rs.empty()) {
    sel.diagnostic = "no documents retrieved for '" + rs.query().text + "'";
    return sel;
  }
  auto pool = candidate_words(rs, index);
  const std::size_t take = std::min<std::size_t>(topic_count, pool.size());
  std::partial_sort(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(take), pool.end(),
                    ranks_before);
  pool.resize(take);
  sel.words = std::move(pool);
  return sel;
}

}  // namespace topicgraph
