#include "mlsn/clustering.hpp"

#include <algorithm>

namespace mlsn {
namespace {

bool contains(std::span<const NodeIndex> sorted, NodeIndex n) {
  return std::binary_search(sorted.begin(), sorted.end(), n);
}

std::vector<NodeIndex> to_indices(const MultiLayerNetwork& net, const NodeSet& members) {
  std::vector<NodeIndex> out;
  for (const NodeId& id : members)
    if (auto i = net.find_node(id)) out.push_back(*i);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

Weight weighted_in_within(const MultiLayerNetwork& net, NodeIndex y,
                          std::span<const NodeIndex> members, LayerIndex l) {
  Weight sum = 0.0;
  for (const Arc& a : net.in_arcs(y, l))
    if (contains(members, a.node)) sum += a.weight;
  return sum;
}

Weight weighted_out_within(const MultiLayerNetwork& net, NodeIndex y,
                           std::span<const NodeIndex> members, LayerIndex l) {
  Weight sum = 0.0;
  for (const Arc& a : net.out_arcs(y, l))
    if (contains(members, a.node)) sum += a.weight;
  return sum;
}

Weight weighted_in_within(const MultiLayerNetwork& net, std::string_view y,
                          const NodeSet& members, std::string_view layer) {
  const LayerIndex l = net.layer_index(layer);
  auto yi = net.find_node(y);
  if (!yi) return 0.0;
  return weighted_in_within(net, *yi, to_indices(net, members), l);
}

Weight weighted_out_within(const MultiLayerNetwork& net, std::string_view y,
                           const NodeSet& members, std::string_view layer) {
  const LayerIndex l = net.layer_index(layer);
  auto yi = net.find_node(y);
  if (!yi) return 0.0;
  return weighted_out_within(net, *yi, to_indices(net, members), l);
}

double clcc(const MultiLayerNetwork& net, NodeIndex x, int alpha, Variant variant) {
  const std::vector<NodeIndex> members = multilayer_neighbourhood(net, x, alpha, variant);
  if (members.empty()) return 0.0;
  double numerator = 0.0;
  for (LayerIndex l = 0; l < net.layer_count(); ++l)
    for (NodeIndex y : members)
      numerator += weighted_in_within(net, y, members, l) + weighted_out_within(net, y, members, l);
  return numerator / (2.0 * static_cast<double>(members.size()) *
                      static_cast<double>(net.layer_count()));
}

ClccResult clcc(const MultiLayerNetwork& net, std::string_view x, int alpha, Variant variant) {
  const NodeIndex xi = net.node_index(x);
  ClccResult r;
  r.node = std::string(x);
  r.alpha = alpha;
  r.value = clcc(net, xi, alpha, variant);
  r.neighbourhood_size = multilayer_neighbourhood(net, xi, alpha, variant).size();
  return r;
}

std::vector<double> clcc_alpha_profile(const MultiLayerNetwork& net, NodeIndex x, int max_alpha) {
  check_alpha(max_alpha);
  std::vector<double> result(static_cast<std::size_t>(max_alpha), 0.0);
  auto links = net.links(x);
  if (links.empty()) return result;

  // An internal edge y->z lies inside MN(x, a) iff both endpoints reach a.
  // level[n] == 0 marks nodes outside MN(x, 1).
  thread_local std::vector<std::uint32_t> level;
  level.assign(net.node_count(), 0);
  for (const NeighbourLink& link : links) level[link.node] = link.any_layers;

  const auto top = static_cast<std::size_t>(max_alpha);
  std::vector<double> internal(top + 1, 0.0);
  std::vector<std::size_t> size_at(top + 2, 0);
  for (const NeighbourLink& y : links) {
    const std::size_t ly = std::min<std::size_t>(y.any_layers, top);
    ++size_at[ly];
    for (const NeighbourLink& yz : net.links(y.node)) {
      if (level[yz.node] == 0) continue;
      const std::size_t lz = std::min<std::size_t>(level[yz.node], top);
      internal[std::min(ly, lz)] += yz.out_weight;
    }
  }
  // Suffix sums: everything at level >= a belongs to alpha = a.
  double edges_sum = 0.0;
  std::size_t members = 0;
  for (std::size_t a = top; a >= 1; --a) {
    edges_sum += internal[a];
    members += size_at[a];
    if (members > 0)
      result[a - 1] = 2.0 * edges_sum /
                      (2.0 * static_cast<double>(members) * static_cast<double>(net.layer_count()));
  }
  return result;
}

}  // namespace mlsn
