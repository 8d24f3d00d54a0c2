#pragma once

#include <string_view>
#include <vector>

#include "mlsn/network.hpp"

namespace mlsn {

/// Multi-layered neighbourhood variants, from most to least restrictive:
/// InOut (reciprocated on the same layers), then In, Out and InOutAny, then Any.
enum class Variant { in, out, in_out_any, in_out, any };

Variant parse_variant(std::string_view name);
const char* to_string(Variant v) noexcept;

/// Sorted, duplicate-free node identifiers.
using NodeSet = std::vector<NodeId>;

/// Number of layers the link contributes to the given variant.
constexpr std::uint32_t layer_count(const NeighbourLink& link, Variant v) noexcept {
  switch (v) {
    case Variant::in: return link.in_layers;
    case Variant::out: return link.out_layers;
    case Variant::in_out_any: return link.in_layers < link.out_layers ? link.in_layers
                                                                      : link.out_layers;
    case Variant::in_out: return link.both_layers;
    case Variant::any: return link.any_layers;
  }
  return 0;
}

constexpr bool qualifies(const NeighbourLink& link, Variant v, int alpha) noexcept {
  return alpha >= 1 && layer_count(link, v) >= static_cast<std::uint32_t>(alpha);
}

/// N(x, l): nodes adjacent to x on layer l in either direction.
NodeSet neighbourhood(const MultiLayerNetwork& net, std::string_view x, std::string_view layer);
std::vector<NodeIndex> neighbourhood(const MultiLayerNetwork& net, NodeIndex x, LayerIndex l);

/// MN_variant(x, alpha). alpha above the layer count yields the empty set;
/// alpha < 1 throws mlsn::Error(invalid_argument).
NodeSet multilayer_neighbourhood(const MultiLayerNetwork& net, std::string_view x, int alpha,
                                 Variant variant);
std::vector<NodeIndex> multilayer_neighbourhood(const MultiLayerNetwork& net, NodeIndex x,
                                                int alpha, Variant variant);

inline NodeSet mn_in(const MultiLayerNetwork& net, std::string_view x, int alpha) {
  return multilayer_neighbourhood(net, x, alpha, Variant::in);
}
inline NodeSet mn_out(const MultiLayerNetwork& net, std::string_view x, int alpha) {
  return multilayer_neighbourhood(net, x, alpha, Variant::out);
}
inline NodeSet mn_in_out_any(const MultiLayerNetwork& net, std::string_view x, int alpha) {
  return multilayer_neighbourhood(net, x, alpha, Variant::in_out_any);
}
inline NodeSet mn_in_out(const MultiLayerNetwork& net, std::string_view x, int alpha) {
  return multilayer_neighbourhood(net, x, alpha, Variant::in_out);
}
inline NodeSet mn_any(const MultiLayerNetwork& net, std::string_view x, int alpha) {
  return multilayer_neighbourhood(net, x, alpha, Variant::any);
}

void check_alpha(int alpha);

}  // namespace mlsn
