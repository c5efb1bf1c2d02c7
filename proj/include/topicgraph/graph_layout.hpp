#pragma once

#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "topicgraph/link_builder.hpp"
#include "topicgraph/topic_extraction.hpp"

namespace topicgraph {

/// Canvas geometry and the constants of the vertical frequency axis.
/// The y axis grows with frequency: the most frequent words sit near `height`.
struct LayoutConfig {
  /// C1. Unset means height / pi, which maps the full arctan range onto the canvas.
  std::optional<double> c1;
  /// C2, applied to the natural logarithm.
  double c2 = 1.0;
  double width = 800.0;
  double height = 600.0;
  /// Minimum horizontal distance between nodes that share a text band.
  double min_dx = 60.0;
  /// Nodes whose y differ by less than this share a text band.
  double text_height = 18.0;

  double vertical_scale() const { return c1.value_or(height / std::numbers::pi); }
  /// Throws ParameterError when any extent or constant is not positive.
  void validate() const;
};

struct PlacedNode {
  std::string word;
  std::uint32_t df = 0;
  double x = 0.0;
  double y = 0.0;
  /// C1 atan(C2 ln(df/df_m)) before it is mapped onto the canvas.
  double raw_y = 0.0;
};

struct Layout {
  /// Same order as the input topic words.
  std::vector<PlacedNode> nodes;
  double middle_df = 0.0;
  /// Horizontal separation guaranteed between nodes of one band.
  double effective_spacing = 0.0;
  /// True when a band did not fit at min_dx and spacing was shrunk.
  bool relaxed = false;
  std::vector<std::string> warnings;
};

/// df_m: median of the df values; the geometric mean of the two central values
/// for an even count. Throws ContractViolation on empty input.
double middle_frequency(std::span<const TopicWord> topic_words);

/// C1 atan(C2 ln(df/df_m)). Accepts fractional df so class thresholds can be mapped.
double layout_y(double df, double middle_df, const LayoutConfig& cfg);

/// Affine map of [-C1 pi/2, C1 pi/2] onto [0, height].
double canvas_y(double raw_y, const LayoutConfig& cfg);

/// Places a forest of topic words on the canvas.
///
/// Roots divide [0, width] evenly in frequency order. Children are spread
/// symmetrically around their parent's x, recursing from the most frequent
/// node downwards. A left-to-right sweep then pushes apart nodes that share a
/// text band until they are at least min_dx apart; if the result is wider than
/// the canvas it is scaled back uniformly and a warning is recorded.
Layout layout_graph(std::span<const TopicWord> topic_words, const LinkTable& links,
                    const LayoutConfig& cfg);

/// True when every pair of nodes closer than text_height vertically is at
/// least `spacing` apart horizontally (with a small floating-point slack).
bool separation_holds(std::span<const PlacedNode> nodes, double text_height, double spacing);

}  // namespace topicgraph
