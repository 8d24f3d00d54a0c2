#include "mlsn/centrality.hpp"

#include <algorithm>

#include "mlsn/error.hpp"

namespace mlsn {
namespace {

void require_members(const MultiLayerNetwork& net) {
  if (net.node_count() < 2)
    throw Error(ErrorCode::degenerate_network,
                "degree centralities need at least two nodes, network has " +
                    std::to_string(net.node_count()));
}

Weight directed_weight(const NeighbourLink& link, Direction direction) {
  switch (direction) {
    case Direction::in: return link.in_weight;
    case Direction::out: return link.out_weight;
    case Direction::both: break;
  }
  return link.out_weight + link.in_weight;
}

}  // namespace

double degree_centrality(const MultiLayerNetwork& net_layer, NodeIndex x, Direction direction,
                         bool weighted) {
  if (net_layer.layer_count() != 1)
    throw Error(ErrorCode::contract_violation,
                "degree centrality expects a single-layer network, got " +
                    std::to_string(net_layer.layer_count()) + " layers");
  require_members(net_layer);
  if (x >= net_layer.node_count())
    throw Error(ErrorCode::not_found, "node index out of range");

  double degree = 0.0;
  for (const NeighbourLink& link : net_layer.links(x)) {
    const bool present = direction == Direction::both ? true
                         : direction == Direction::in ? link.in_layers > 0
                                                      : link.out_layers > 0;
    if (!present) continue;
    degree += weighted ? directed_weight(link, direction) : 1.0;
  }
  return degree / static_cast<double>(net_layer.node_count() - 1);
}

double degree_centrality(const MultiLayerNetwork& net_layer, std::string_view x,
                         Direction direction, bool weighted) {
  return degree_centrality(net_layer, net_layer.node_index(x), direction, weighted);
}

double cdc(const MultiLayerNetwork& net, NodeIndex x, int alpha, Direction direction,
           Variant variant) {
  check_alpha(alpha);
  require_members(net);
  double numerator = 0.0;
  for (const NeighbourLink& link : net.links(x))
    if (qualifies(link, variant, alpha)) numerator += directed_weight(link, direction);
  return numerator /
         (static_cast<double>(net.node_count() - 1) * static_cast<double>(net.layer_count()));
}

double cdc(const MultiLayerNetwork& net, std::string_view x, int alpha, Direction direction,
           Variant variant) {
  return cdc(net, net.node_index(x), alpha, direction, variant);
}

double mdc(const MultiLayerNetwork& net, MdcVersion version, NodeIndex x, Direction direction) {
  require_members(net);
  auto links = net.links(x);
  if (links.empty()) return 0.0;

  double numerator = 0.0;
  double per_layer_sizes = 0.0;
  for (const NeighbourLink& link : links) {
    numerator += directed_weight(link, direction);
    per_layer_sizes += link.any_layers;
  }
  double scale = 0.0;
  switch (version) {
    case MdcVersion::v1: scale = static_cast<double>(net.layer_count()); break;
    case MdcVersion::v2: scale = static_cast<double>(links.size()); break;
    case MdcVersion::v3: scale = per_layer_sizes; break;
  }
  return numerator / (static_cast<double>(net.node_count() - 1) * scale);
}

double mdc(const MultiLayerNetwork& net, MdcVersion version, std::string_view x,
           Direction direction) {
  return mdc(net, version, net.node_index(x), direction);
}

std::vector<double> cdc_alpha_profile(const MultiLayerNetwork& net, NodeIndex x, int max_alpha,
                                      Direction direction) {
  check_alpha(max_alpha);
  require_members(net);
  const auto top = static_cast<std::size_t>(max_alpha);
  std::vector<double> by_level(top + 1, 0.0);
  for (const NeighbourLink& link : net.links(x))
    by_level[std::min<std::size_t>(link.any_layers, top)] += directed_weight(link, direction);

  std::vector<double> result(top, 0.0);
  const double denominator =
      static_cast<double>(net.node_count() - 1) * static_cast<double>(net.layer_count());
  double running = 0.0;
  for (std::size_t a = top; a >= 1; --a) {
    running += by_level[a];
    result[a - 1] = running / denominator;
  }
  return result;
}

}  // namespace mlsn
