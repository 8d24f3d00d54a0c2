#pragma once

#include <optional>
#include <string_view>

#include "mlsn/neighbourhoods.hpp"

namespace mlsn {

enum class Direction { both, in, out };

enum class MdcVersion { v1 = 1, v2 = 2, v3 = 3 };

/// Regular degree centrality DC/IDC/ODC on a single-layer network: distinct
/// neighbours (or, with `weighted`, summed edge weights) over m - 1.
double degree_centrality(const MultiLayerNetwork& net_layer, NodeIndex x, Direction direction,
                         bool weighted = false);
double degree_centrality(const MultiLayerNetwork& net_layer, std::string_view x,
                         Direction direction, bool weighted = false);

/// Cross-layer degree centrality: weight between x and MN(x, alpha), summed
/// over every layer, over (m - 1) |L|.
double cdc(const MultiLayerNetwork& net, NodeIndex x, int alpha, Direction direction,
           Variant variant = Variant::any);
double cdc(const MultiLayerNetwork& net, std::string_view x, int alpha, Direction direction,
           Variant variant = Variant::any);

/// Multi-layered degree centrality. The numerator is x's weighted degree
/// summed over layers; the denominator is (m - 1) times |L| (v1), |MN(x, 1)|
/// (v2) or sum_l |N(x, l)| (v3). Isolated nodes score 0.
double mdc(const MultiLayerNetwork& net, MdcVersion version, NodeIndex x, Direction direction);
double mdc(const MultiLayerNetwork& net, MdcVersion version, std::string_view x,
           Direction direction);

/// CDC(x, alpha) for alpha = 1..max_alpha (Any variant); entry a-1 holds alpha = a.
std::vector<double> cdc_alpha_profile(const MultiLayerNetwork& net, NodeIndex x, int max_alpha,
                                      Direction direction = Direction::both);

}  // namespace mlsn
