#include "mlsn/network.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <tuple>

#include "mlsn/error.hpp"

namespace mlsn {
namespace {

template <class Id>
std::optional<std::uint32_t> find_sorted(const std::vector<Id>& ids, std::string_view id) {
  auto it = std::lower_bound(ids.begin(), ids.end(), id,
                             [](const Id& a, std::string_view b) { return a < b; });
  if (it == ids.end() || *it != id) return std::nullopt;
  return static_cast<std::uint32_t>(it - ids.begin());
}

std::string describe(const EdgeEvent& e) {
  return "(" + e.source + ", " + e.target + ", " + e.layer + ")";
}

}  // namespace

MultiLayerNetwork::MultiLayerNetwork(std::vector<NodeId> nodes, std::vector<LayerId> layers,
                                     std::vector<Edge> edges)
    : nodes_(std::move(nodes)), layers_(std::move(layers)), edges_(std::move(edges)) {
  if (!std::is_sorted(nodes_.begin(), nodes_.end()) ||
      std::adjacent_find(nodes_.begin(), nodes_.end()) != nodes_.end())
    throw Error(ErrorCode::validation, "node identifiers must be sorted and unique");
  if (!std::is_sorted(layers_.begin(), layers_.end()) ||
      std::adjacent_find(layers_.begin(), layers_.end()) != layers_.end())
    throw Error(ErrorCode::validation, "layer identifiers must be sorted and unique");
  if (nodes_.size() > std::numeric_limits<NodeIndex>::max())
    throw Error(ErrorCode::validation, "too many nodes");

  for (const Edge& e : edges_) {
    if (e.source >= nodes_.size() || e.target >= nodes_.size() || e.layer >= layers_.size())
      throw Error(ErrorCode::validation, "edge refers to an unknown node or layer");
    if (e.source == e.target)
      throw Error(ErrorCode::validation, "loop edge on node '" + nodes_[e.source] + "'");
    if (!(e.weight >= 0.0) || !std::isfinite(e.weight))
      throw Error(ErrorCode::validation, "edge weight must be finite and non-negative");
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.layer, a.source, a.target) < std::tie(b.layer, b.source, b.target);
  });
  auto dup = std::adjacent_find(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.layer == b.layer && a.source == b.source && a.target == b.target;
  });
  if (dup != edges_.end())
    throw Error(ErrorCode::duplicate_edge, "duplicate edge (" + nodes_[dup->source] + ", " +
                                               nodes_[dup->target] + ", " +
                                               layers_[dup->layer] + ")");
  build_indexes();
}

MultiLayerNetwork::Csr MultiLayerNetwork::make_csr(
    std::size_t rows, std::vector<std::pair<std::size_t, Arc>> entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return std::tie(a.first, a.second.node) < std::tie(b.first, b.second.node);
  });
  Csr csr;
  csr.offsets.assign(rows + 1, 0);
  csr.arcs.reserve(entries.size());
  for (const auto& [row, arc] : entries) {
    ++csr.offsets[row + 1];
    csr.arcs.push_back(arc);
  }
  for (std::size_t r = 0; r < rows; ++r) csr.offsets[r + 1] += csr.offsets[r];
  return csr;
}

void MultiLayerNetwork::build_indexes() {
  const std::size_t m = nodes_.size();
  const std::size_t rows = m * layers_.size();
  std::vector<std::pair<std::size_t, Arc>> out, in;
  out.reserve(edges_.size());
  in.reserve(edges_.size());
  for (const Edge& e : edges_) {
    out.push_back({e.layer * m + e.source, Arc{e.target, e.weight}});
    in.push_back({e.layer * m + e.target, Arc{e.source, e.weight}});
  }
  out_ = make_csr(rows, std::move(out));
  in_ = make_csr(rows, std::move(in));

  // Per-node neighbour summary across layers.
  link_offsets_.assign(m + 1, 0);
  links_.clear();
  struct Touch {
    NodeIndex node;
    LayerIndex layer;
    bool outgoing;
    Weight weight;
  };
  std::vector<Touch> touches;
  for (NodeIndex x = 0; x < m; ++x) {
    touches.clear();
    for (LayerIndex l = 0; l < layers_.size(); ++l) {
      for (const Arc& a : out_arcs(x, l)) touches.push_back({a.node, l, true, a.weight});
      for (const Arc& a : in_arcs(x, l)) touches.push_back({a.node, l, false, a.weight});
    }
    std::sort(touches.begin(), touches.end(), [](const Touch& a, const Touch& b) {
      return std::tie(a.node, a.layer) < std::tie(b.node, b.layer);
    });
    for (std::size_t i = 0; i < touches.size();) {
      NeighbourLink link{touches[i].node, 0, 0, 0, 0, 0.0, 0.0};
      while (i < touches.size() && touches[i].node == link.node) {
        const LayerIndex l = touches[i].layer;
        bool has_out = false, has_in = false;
        for (; i < touches.size() && touches[i].node == link.node && touches[i].layer == l; ++i) {
          if (touches[i].outgoing) {
            has_out = true;
            link.out_weight += touches[i].weight;
          } else {
            has_in = true;
            link.in_weight += touches[i].weight;
          }
        }
        link.out_layers += has_out;
        link.in_layers += has_in;
        link.both_layers += has_out && has_in;
        link.any_layers += 1;
      }
      links_.push_back(link);
    }
    link_offsets_[x + 1] = links_.size();
  }
}

std::optional<NodeIndex> MultiLayerNetwork::find_node(std::string_view id) const {
  return find_sorted(nodes_, id);
}

std::optional<LayerIndex> MultiLayerNetwork::find_layer(std::string_view id) const {
  return find_sorted(layers_, id);
}

NodeIndex MultiLayerNetwork::node_index(std::string_view id) const {
  if (auto i = find_node(id)) return *i;
  throw Error(ErrorCode::not_found, "unknown node '" + std::string(id) + "'");
}

LayerIndex MultiLayerNetwork::layer_index(std::string_view id) const {
  if (auto l = find_layer(id)) return *l;
  throw Error(ErrorCode::not_found, "unknown layer '" + std::string(id) + "'");
}

std::span<const Arc> MultiLayerNetwork::out_arcs(NodeIndex x, LayerIndex l) const {
  const std::size_t row = std::size_t{l} * nodes_.size() + x;
  return std::span<const Arc>(out_.arcs).subspan(out_.offsets[row],
                                                 out_.offsets[row + 1] - out_.offsets[row]);
}

std::span<const Arc> MultiLayerNetwork::in_arcs(NodeIndex x, LayerIndex l) const {
  const std::size_t row = std::size_t{l} * nodes_.size() + x;
  return std::span<const Arc>(in_.arcs).subspan(in_.offsets[row],
                                                in_.offsets[row + 1] - in_.offsets[row]);
}

std::span<const NeighbourLink> MultiLayerNetwork::links(NodeIndex x) const {
  return std::span<const NeighbourLink>(links_).subspan(
      link_offsets_[x], link_offsets_[x + 1] - link_offsets_[x]);
}

Weight MultiLayerNetwork::weight(NodeIndex source, NodeIndex target, LayerIndex l) const {
  auto arcs = out_arcs(source, l);
  auto it = std::lower_bound(arcs.begin(), arcs.end(), target,
                             [](const Arc& a, NodeIndex n) { return a.node < n; });
  return (it != arcs.end() && it->node == target) ? it->weight : 0.0;
}

bool MultiLayerNetwork::has_edge(NodeIndex source, NodeIndex target, LayerIndex l) const {
  auto arcs = out_arcs(source, l);
  return std::binary_search(arcs.begin(), arcs.end(), Arc{target, 0.0},
                            [](const Arc& a, const Arc& b) { return a.node < b.node; });
}

MultiLayerNetwork build_network(std::span<const EdgeEvent> events, DedupPolicy policy,
                                std::span<const NodeId> extra_nodes) {
  std::map<std::tuple<std::string_view, std::string_view, std::string_view>, Weight> merged;
  for (std::size_t i = 0; i < events.size(); ++i) {
    const EdgeEvent& e = events[i];
    if (e.source == e.target)
      throw Error(ErrorCode::validation,
                  "loop edge in record " + std::to_string(i + 1) + " " + describe(e));
    if (!(e.weight >= 0.0) || !std::isfinite(e.weight))
      throw Error(ErrorCode::validation, "invalid weight in record " + std::to_string(i + 1) +
                                             " " + describe(e));
    auto [it, inserted] = merged.try_emplace({e.source, e.target, e.layer}, e.weight);
    if (inserted) continue;
    switch (policy) {
      case DedupPolicy::sum: it->second += e.weight; break;
      case DedupPolicy::max: it->second = std::max(it->second, e.weight); break;
      case DedupPolicy::last: it->second = e.weight; break;
      case DedupPolicy::error:
        throw Error(ErrorCode::duplicate_edge,
                    "duplicate edge in record " + std::to_string(i + 1) + " " + describe(e));
    }
  }

  std::vector<NodeId> nodes(extra_nodes.begin(), extra_nodes.end());
  std::vector<LayerId> layers;
  for (const auto& [key, w] : merged) {
    nodes.emplace_back(std::get<0>(key));
    nodes.emplace_back(std::get<1>(key));
    layers.emplace_back(std::get<2>(key));
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  std::sort(layers.begin(), layers.end());
  layers.erase(std::unique(layers.begin(), layers.end()), layers.end());

  auto index_in = [](const std::vector<std::string>& ids, std::string_view id) {
    return static_cast<std::uint32_t>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };
  std::vector<Edge> edges;
  edges.reserve(merged.size());
  for (const auto& [key, w] : merged) {
    edges.push_back(Edge{index_in(nodes, std::get<0>(key)), index_in(nodes, std::get<1>(key)),
                         index_in(layers, std::get<2>(key)), w});
  }
  return MultiLayerNetwork(std::move(nodes), std::move(layers), std::move(edges));
}

MultiLayerNetwork normalize_out_weights(const MultiLayerNetwork& net) {
  std::vector<Edge> edges(net.edges().begin(), net.edges().end());
  // edges are sorted by (layer, source, target): each (source, layer) group is contiguous.
  for (std::size_t begin = 0; begin < edges.size();) {
    std::size_t end = begin;
    Weight total = 0.0;
    while (end < edges.size() && edges[end].layer == edges[begin].layer &&
           edges[end].source == edges[begin].source) {
      total += edges[end].weight;
      ++end;
    }
    if (total == 0.0)
      throw Error(ErrorCode::normalization,
                  "outgoing weights of node '" + net.node_id(edges[begin].source) +
                      "' on layer '" + net.layer_id(edges[begin].layer) + "' sum to zero");
    for (std::size_t i = begin; i < end; ++i) edges[i].weight /= total;
    begin = end;
  }
  return MultiLayerNetwork({net.nodes().begin(), net.nodes().end()},
                           {net.layers().begin(), net.layers().end()}, std::move(edges));
}

MultiLayerNetwork layer_view(const MultiLayerNetwork& net, std::string_view layer) {
  const LayerIndex l = net.layer_index(layer);
  std::vector<Edge> edges;
  for (const Edge& e : net.edges())
    if (e.layer == l) edges.push_back(Edge{e.source, e.target, 0, e.weight});
  return MultiLayerNetwork({net.nodes().begin(), net.nodes().end()}, {LayerId(layer)},
                           std::move(edges));
}

DedupPolicy parse_dedup_policy(std::string_view name) {
  if (name == "sum") return DedupPolicy::sum;
  if (name == "max") return DedupPolicy::max;
  if (name == "last") return DedupPolicy::last;
  if (name == "error") return DedupPolicy::error;
  throw Error(ErrorCode::invalid_argument, "unknown dedup policy '" + std::string(name) + "'");
}

}  // namespace mlsn
