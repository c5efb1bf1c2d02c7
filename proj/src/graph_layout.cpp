#include "topicgraph/graph_layout.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "topicgraph/errors.hpp"

namespace topicgraph {

void LayoutConfig::validate() const {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (c1 && !positive(*c1)) throw ParameterError("c1", "c1 must be positive");
  if (!positive(c2)) throw ParameterError("c2", "c2 must be positive");
  if (!positive(width)) throw ParameterError("width", "width must be positive");
  if (!positive(height)) throw ParameterError("height", "height must be positive");
  if (!positive(min_dx)) throw ParameterError("min_dx", "min_dx must be positive");
  if (!positive(text_height)) throw ParameterError("text_height", "text_height must be positive");
}

double middle_frequency(std::span<const TopicWord> topic_words) {
  if (topic_words.empty()) throw ContractViolation("middle frequency of an empty word set");
  std::vector<double> dfs;
  dfs.reserve(topic_words.size());
  for (const auto& w : topic_words) dfs.push_back(w.df);
  std::sort(dfs.begin(), dfs.end());
  const auto n = dfs.size();
  if (n % 2 == 1) return dfs[n / 2];
  return std::sqrt(dfs[n / 2 - 1] * dfs[n / 2]);
}

double layout_y(double df, double middle_df, const LayoutConfig& cfg) {
  if (!(df > 0.0) || !(middle_df > 0.0)) {
    throw ContractViolation("layout_y needs positive df and df_m");
  }
  return cfg.vertical_scale() * std::atan(cfg.c2 * std::log(df / middle_df));
}

double canvas_y(double raw_y, const LayoutConfig& cfg) {
  const double half = cfg.vertical_scale() * std::numbers::pi / 2.0;
  return std::clamp((raw_y + half) / (2.0 * half) * cfg.height, 0.0, cfg.height);
}

bool separation_holds(std::span<const PlacedNode> nodes, double text_height, double spacing) {
  const double slack = 1e-9 * std::max(1.0, spacing);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (std::abs(nodes[i].y - nodes[j].y) >= text_height) continue;
      if (std::abs(nodes[i].x - nodes[j].x) < spacing - slack) return false;
    }
  }
  return true;
}

Layout layout_graph(std::span<const TopicWord> topic_words, const LinkTable& links,
                    const LayoutConfig& cfg) {
  cfg.validate();
  Layout out;
  out.effective_spacing = cfg.min_dx;
  const auto n = topic_words.size();
  if (n == 0) return out;

  out.middle_df = middle_frequency(topic_words);
  out.nodes.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto& node = out.nodes[i];
    node.word = topic_words[i].word;
    node.df = topic_words[i].df;
    node.raw_y = layout_y(node.df, out.middle_df, cfg);
    node.y = canvas_y(node.raw_y, cfg);
  }

  // Frequency order drives both root placement and the recursion.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return precedes(topic_words[a], topic_words[b]); });
  std::vector<std::size_t> rank(n);
  for (std::size_t r = 0; r < n; ++r) rank[order[r]] = r;

  std::unordered_map<std::string_view, std::size_t> position;
  for (std::size_t i = 0; i < n; ++i) position.emplace(topic_words[i].word, i);

  std::vector<std::vector<std::size_t>> children(n);
  std::vector<std::size_t> roots;
  for (auto i : order) {
    const auto link = links.parent_of(topic_words[i].word);
    auto parent = link ? position.find(link->parent) : position.end();
    if (parent == position.end()) {
      roots.push_back(i);
    } else {
      children[parent->second].push_back(i);
    }
  }

  std::vector<bool> placed(n, false);
  std::deque<std::size_t> queue;
  for (std::size_t r = 0; r < roots.size(); ++r) {
    out.nodes[roots[r]].x = cfg.width * static_cast<double>(r + 1) / (roots.size() + 1);
    placed[roots[r]] = true;
    queue.push_back(roots[r]);
  }
  while (!queue.empty()) {
    const auto p = queue.front();
    queue.pop_front();
    const auto& kids = children[p];
    const double centre = (static_cast<double>(kids.size()) - 1.0) / 2.0;
    for (std::size_t i = 0; i < kids.size(); ++i) {
      const auto c = kids[i];
      if (placed[c]) throw ContractViolation("links do not form a forest");
      out.nodes[c].x = std::clamp(out.nodes[p].x + (static_cast<double>(i) - centre) * cfg.min_dx,
                                  0.0, cfg.width);
      placed[c] = true;
      queue.push_back(c);
    }
  }
  if (std::find(placed.begin(), placed.end(), false) != placed.end()) {
    throw ContractViolation("links contain a cycle");
  }

  // Separation sweep, left to right; y never moves.
  std::vector<std::size_t> sweep = order;
  std::stable_sort(sweep.begin(), sweep.end(), [&](std::size_t a, std::size_t b) {
    if (out.nodes[a].x != out.nodes[b].x) return out.nodes[a].x < out.nodes[b].x;
    return rank[a] < rank[b];
  });
  for (std::size_t i = 0; i < sweep.size(); ++i) {
    auto& node = out.nodes[sweep[i]];
    for (std::size_t j = 0; j < i; ++j) {
      const auto& prev = out.nodes[sweep[j]];
      if (std::abs(prev.y - node.y) < cfg.text_height) {
        node.x = std::max(node.x, prev.x + cfg.min_dx);
      }
    }
  }

  auto [lo, hi] = std::minmax_element(out.nodes.begin(), out.nodes.end(),
                                      [](const auto& a, const auto& b) { return a.x < b.x; });
  double min_x = lo->x;
  double max_x = hi->x;
  if (max_x > cfg.width) {
    const double shift = std::min(max_x - cfg.width, min_x);
    for (auto& node : out.nodes) node.x -= shift;
    min_x -= shift;
    max_x -= shift;
  }
  if (max_x > cfg.width) {
    const double factor = cfg.width / (max_x - min_x);
    for (auto& node : out.nodes) node.x = std::clamp((node.x - min_x) * factor, 0.0, cfg.width);
    out.effective_spacing = cfg.min_dx * factor;
    out.relaxed = true;
    out.warnings.push_back("nodes do not fit at min_dx=" + std::to_string(cfg.min_dx) +
                           "; spacing relaxed to " + std::to_string(out.effective_spacing));
  }
  return out;
}

}  // namespace topicgraph
