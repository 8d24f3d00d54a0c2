#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "mlsn/neighbourhoods.hpp"

namespace mlsn {

/// Half-open interval [start, end) in epoch seconds.
struct TimeWindow {
  std::int64_t start = 0;
  std::int64_t end = 0;
};

struct WindowPartition {
  std::vector<TimeWindow> windows;
  std::vector<MultiLayerNetwork> networks;
  std::vector<std::size_t> event_counts;  // events retained per window
  std::size_t dropped_events = 0;
};

/// Splits timestamped events into `count` contiguous windows of
/// `window_length` seconds starting at `start`. Events outside all windows are
/// dropped and counted. Events without a timestamp raise Error(ingestion).
WindowPartition partition_windows(std::span<const EdgeEvent> events, std::int64_t start,
                                  std::int64_t window_length, int count,
                                  DedupPolicy policy = DedupPolicy::sum);

/// Window-membership mask per node; bit i set when the node is active in
/// window i, i.e. |MN_variant(x, alpha)| >= 1 there.
struct ActivityProfile {
  int window_count = 0;
  std::map<NodeId, std::uint64_t> active;  // every node seen in any window
};

ActivityProfile activity_profile(const WindowPartition& part, int alpha,
                                 Variant variant = Variant::any);

/// "W" followed by the 1-based indices of the set bits, e.g. 0b1011 -> "W124".
/// Indices are joined with '-' once there are more than nine windows.
std::string combination_label(std::uint64_t mask, int window_count);

struct CombinationCounts {
  int window_count = 0;
  /// Every non-empty window combination, including those with a zero count.
  std::map<std::string, std::size_t> counts;
  std::size_t no_active = 0;
  std::size_t universe = 0;
};

/// Assigns each node of the universe (profile nodes plus `roster`) to the
/// label of its exact active-window set, or to the no-active count.
CombinationCounts combination_counts(const ActivityProfile& profile,
                                     std::span<const NodeId> roster = {});

/// Labels ordered as a report lists them: more windows first, then by label.
std::vector<std::uint64_t> combination_order(int window_count);

inline constexpr int kMaxWindows = 16;

}  // namespace mlsn
