#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mlsn {

using NodeId = std::string;
using LayerId = std::string;
using Weight = double;

/// Dense index of a node inside one network. Indices follow the lexicographic
/// order of node identifiers.
using NodeIndex = std::uint32_t;
using LayerIndex = std::uint32_t;

/// One weighted interaction record, the ingestion unit.
struct EdgeEvent {
  NodeId source;
  NodeId target;
  LayerId layer;
  Weight weight = 1.0;
  std::optional<std::int64_t> timestamp;  // epoch seconds
};

enum class DedupPolicy { sum, max, last, error };

/// Aggregated relation between a node and one of its neighbours across all
/// layers. Counts are numbers of layers; weights are sums over layers.
struct NeighbourLink {
  NodeIndex node;
  std::uint32_t out_layers;   // layers with (self -> node)
  std::uint32_t in_layers;    // layers with (node -> self)
  std::uint32_t both_layers;  // layers carrying both directions
  std::uint32_t any_layers;   // layers carrying either direction
  Weight out_weight;
  Weight in_weight;
};

struct Arc {
  NodeIndex node;
  Weight weight;
};

struct Edge {
  NodeIndex source;
  NodeIndex target;
  LayerIndex layer;
  Weight weight;
};

/// Immutable multi-layered network <V, E, L>.
///
/// Invariants: no loops, at most one edge per (source, target, layer), every
/// weight non-negative and finite. Per-layer adjacency is kept in both
/// directions, sorted by neighbour index, together with a per-node summary of
/// neighbours across layers which serves every multi-layered neighbourhood
/// query without rescanning layers.
class MultiLayerNetwork {
 public:
  MultiLayerNetwork() = default;

  /// Builds from already-indexed, duplicate-free edges. `nodes` and `layers`
  /// must be sorted and unique. Throws mlsn::Error(validation) on violated
  /// invariants.
  MultiLayerNetwork(std::vector<NodeId> nodes, std::vector<LayerId> layers,
                    std::vector<Edge> edges);

  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t layer_count() const noexcept { return layers_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const NodeId> nodes() const noexcept { return nodes_; }
  std::span<const LayerId> layers() const noexcept { return layers_; }
  /// Sorted by (layer, source, target).
  std::span<const Edge> edges() const noexcept { return edges_; }

  const NodeId& node_id(NodeIndex i) const { return nodes_.at(i); }
  const LayerId& layer_id(LayerIndex l) const { return layers_.at(l); }

  std::optional<NodeIndex> find_node(std::string_view id) const;
  std::optional<LayerIndex> find_layer(std::string_view id) const;
  /// Same as find_*, but throws mlsn::Error(not_found).
  NodeIndex node_index(std::string_view id) const;
  LayerIndex layer_index(std::string_view id) const;

  std::span<const Arc> out_arcs(NodeIndex x, LayerIndex l) const;
  std::span<const Arc> in_arcs(NodeIndex x, LayerIndex l) const;
  std::span<const NeighbourLink> links(NodeIndex x) const;

  /// w(x, y, l); zero for an absent edge.
  Weight weight(NodeIndex source, NodeIndex target, LayerIndex l) const;
  bool has_edge(NodeIndex source, NodeIndex target, LayerIndex l) const;

 private:
  struct Csr {
    std::vector<std::size_t> offsets;
    std::vector<Arc> arcs;
  };
  static Csr make_csr(std::size_t rows, std::vector<std::pair<std::size_t, Arc>> entries);
  void build_indexes();

  std::vector<NodeId> nodes_;
  std::vector<LayerId> layers_;
  std::vector<Edge> edges_;
  Csr out_;  // row = layer * |V| + node
  Csr in_;
  std::vector<std::size_t> link_offsets_;
  std::vector<NeighbourLink> links_;
};

/// Builds a network from events. Node set is the union of endpoints, layer set
/// the union of event layers. Repeated (source, target, layer) triples are
/// resolved with `policy`. Loops and negative weights are rejected.
/// `extra_nodes` adds members that may have no edges at all.
MultiLayerNetwork build_network(std::span<const EdgeEvent> events,
                                DedupPolicy policy = DedupPolicy::sum,
                                std::span<const NodeId> extra_nodes = {});

/// Rescales every node's outgoing weights on each layer to sum to one.
/// Nodes without outgoing edges on a layer are untouched.
MultiLayerNetwork normalize_out_weights(const MultiLayerNetwork& net);

/// Single-layer sub-network <V, E_l, {l}> keeping the full node set.
MultiLayerNetwork layer_view(const MultiLayerNetwork& net, std::string_view layer);

DedupPolicy parse_dedup_policy(std::string_view name);

}  // namespace mlsn
