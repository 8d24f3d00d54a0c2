#include "mlsn/neighbourhoods.hpp"

#include <algorithm>

#include "mlsn/error.hpp"

namespace mlsn {

Variant parse_variant(std::string_view name) {
  if (name == "in") return Variant::in;
  if (name == "out") return Variant::out;
  if (name == "inoutany") return Variant::in_out_any;
  if (name == "inout") return Variant::in_out;
  if (name == "any") return Variant::any;
  throw Error(ErrorCode::invalid_argument, "unknown neighbourhood variant '" +
                                               std::string(name) + "'");
}

const char* to_string(Variant v) noexcept {
  switch (v) {
    case Variant::in: return "in";
    case Variant::out: return "out";
    case Variant::in_out_any: return "inoutany";
    case Variant::in_out: return "inout";
    case Variant::any: return "any";
  }
  return "unknown";
}

void check_alpha(int alpha) {
  if (alpha < 1)
    throw Error(ErrorCode::invalid_argument,
                "alpha must be at least 1, got " + std::to_string(alpha));
}

std::vector<NodeIndex> neighbourhood(const MultiLayerNetwork& net, NodeIndex x, LayerIndex l) {
  std::vector<NodeIndex> result;
  auto out = net.out_arcs(x, l);
  auto in = net.in_arcs(x, l);
  result.reserve(out.size() + in.size());
  for (const Arc& a : out) result.push_back(a.node);
  for (const Arc& a : in) result.push_back(a.node);
  std::inplace_merge(result.begin(), result.begin() + static_cast<std::ptrdiff_t>(out.size()),
                     result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

NodeSet neighbourhood(const MultiLayerNetwork& net, std::string_view x, std::string_view layer) {
  const NodeIndex xi = net.node_index(x);
  const LayerIndex l = net.layer_index(layer);
  NodeSet result;
  for (NodeIndex y : neighbourhood(net, xi, l)) result.push_back(net.node_id(y));
  return result;
}

std::vector<NodeIndex> multilayer_neighbourhood(const MultiLayerNetwork& net, NodeIndex x,
                                                int alpha, Variant variant) {
  check_alpha(alpha);
  std::vector<NodeIndex> result;
  for (const NeighbourLink& link : net.links(x))
    if (qualifies(link, variant, alpha)) result.push_back(link.node);
  return result;
}

NodeSet multilayer_neighbourhood(const MultiLayerNetwork& net, std::string_view x, int alpha,
                                 Variant variant) {
  const NodeIndex xi = net.node_index(x);
  NodeSet result;
  for (NodeIndex y : multilayer_neighbourhood(net, xi, alpha, variant))
    result.push_back(net.node_id(y));
  return result;
}

}  // namespace mlsn
