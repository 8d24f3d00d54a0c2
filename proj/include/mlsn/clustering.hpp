#pragma once

#include <span>
#include <string_view>

#include "mlsn/neighbourhoods.hpp"

namespace mlsn {

struct ClccResult {
  NodeId node;
  int alpha = 1;
  double value = 0.0;
  std::size_t neighbourhood_size = 0;
};

/// in(y, S, l): sum of w(z, y, l) over z in S.
Weight weighted_in_within(const MultiLayerNetwork& net, NodeIndex y,
                          std::span<const NodeIndex> members, LayerIndex l);
/// out(y, S, l): sum of w(y, z, l) over z in S.
Weight weighted_out_within(const MultiLayerNetwork& net, NodeIndex y,
                           std::span<const NodeIndex> members, LayerIndex l);

Weight weighted_in_within(const MultiLayerNetwork& net, std::string_view y,
                          const NodeSet& members, std::string_view layer);
Weight weighted_out_within(const MultiLayerNetwork& net, std::string_view y,
                           const NodeSet& members, std::string_view layer);

/// Cross-layer clustering coefficient over S = MN_variant(x, alpha):
///
///   sum_l sum_{y in S} (in(y,S,l) + out(y,S,l)) / (2 |S| |L|)
///
/// and zero for an empty S. Bounded by [0, 1] when weights are out-normalized.
ClccResult clcc(const MultiLayerNetwork& net, std::string_view x, int alpha,
                Variant variant = Variant::any);
double clcc(const MultiLayerNetwork& net, NodeIndex x, int alpha, Variant variant = Variant::any);

/// Multi-layered clustering coefficient in extended neighbourhood: CLCC(x, 1).
inline double mccen(const MultiLayerNetwork& net, NodeIndex x) { return clcc(net, x, 1); }
/// ... and in reduced neighbourhood: CLCC(x, |L|).
inline double mccrn(const MultiLayerNetwork& net, NodeIndex x) {
  return clcc(net, x, static_cast<int>(net.layer_count() == 0 ? 1 : net.layer_count()));
}

/// CLCC(x, alpha) for alpha = 1..max_alpha in one pass over x's neighbourhood
/// (Any variant). Entry a-1 holds alpha = a.
std::vector<double> clcc_alpha_profile(const MultiLayerNetwork& net, NodeIndex x, int max_alpha);

}  // namespace mlsn
