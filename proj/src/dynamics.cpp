#include "mlsn/dynamics.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "mlsn/error.hpp"
#include "mlsn/parallel.hpp"

namespace mlsn {

WindowPartition partition_windows(std::span<const EdgeEvent> events, std::int64_t start,
                                  std::int64_t window_length, int count, DedupPolicy policy) {
  if (count < 1 || count > kMaxWindows)
    throw Error(ErrorCode::invalid_argument,
                "window count must be within 1.." + std::to_string(kMaxWindows));
  if (window_length <= 0)
    throw Error(ErrorCode::invalid_argument, "window length must be positive");

  std::string missing;
  std::size_t missing_count = 0;
  for (std::size_t i = 0; i < events.size(); ++i) {
    if (events[i].timestamp) continue;
    if (++missing_count <= 10) missing += (missing.empty() ? "" : ", ") + std::to_string(i + 1);
  }
  if (missing_count > 0)
    throw Error(ErrorCode::ingestion, std::to_string(missing_count) +
                                          " event(s) without timestamp, records: " + missing +
                                          (missing_count > 10 ? ", ..." : ""));

  WindowPartition part;
  std::vector<std::vector<EdgeEvent>> buckets(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i)
    part.windows.push_back({start + i * window_length, start + (i + 1) * window_length});
  for (const EdgeEvent& e : events) {
    const std::int64_t t = *e.timestamp;
    if (t < start || t >= part.windows.back().end) {
      ++part.dropped_events;
      continue;
    }
    buckets[static_cast<std::size_t>((t - start) / window_length)].push_back(e);
  }
  for (const auto& bucket : buckets) {
    part.event_counts.push_back(bucket.size());
    part.networks.push_back(build_network(bucket, policy));
  }
  return part;
}

ActivityProfile activity_profile(const WindowPartition& part, int alpha, Variant variant) {
  check_alpha(alpha);
  ActivityProfile profile;
  profile.window_count = static_cast<int>(part.networks.size());

  std::vector<std::vector<bool>> active(part.networks.size());
  parallel_for(part.networks.size(), [&](std::size_t w) {
    const MultiLayerNetwork& net = part.networks[w];
    active[w].assign(net.node_count(), false);
    for (NodeIndex x = 0; x < net.node_count(); ++x) {
      for (const NeighbourLink& link : net.links(x)) {
        if (qualifies(link, variant, alpha)) {
          active[w][x] = true;
          break;
        }
      }
    }
  });
  for (std::size_t w = 0; w < part.networks.size(); ++w) {
    const MultiLayerNetwork& net = part.networks[w];
    for (NodeIndex x = 0; x < net.node_count(); ++x) {
      std::uint64_t& mask = profile.active[net.node_id(x)];
      if (active[w][x]) mask |= std::uint64_t{1} << w;
    }
  }
  return profile;
}

std::string combination_label(std::uint64_t mask, int window_count) {
  std::string label = "W";
  bool first = true;
  for (int w = 0; w < window_count; ++w) {
    if (!(mask & (std::uint64_t{1} << w))) continue;
    if (window_count > 9 && !first) label += '-';
    label += std::to_string(w + 1);
    first = false;
  }
  return label;
}

std::vector<std::uint64_t> combination_order(int window_count) {
  std::vector<std::uint64_t> masks;
  const std::uint64_t limit = std::uint64_t{1} << window_count;
  for (std::uint64_t m = 1; m < limit; ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(), [&](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa > pb;
    // Lexicographic order of the window index sequences.
    for (int w = 0; w < window_count; ++w) {
      const std::uint64_t bit = std::uint64_t{1} << w;
      if ((a & bit) != (b & bit)) return (a & bit) != 0;
    }
    return false;
  });
  return masks;
}

CombinationCounts combination_counts(const ActivityProfile& profile,
                                     std::span<const NodeId> roster) {
  CombinationCounts result;
  result.window_count = profile.window_count;
  const std::uint64_t limit = std::uint64_t{1} << profile.window_count;
  for (std::uint64_t m = 1; m < limit; ++m)
    result.counts[combination_label(m, profile.window_count)] = 0;

  for (const auto& [node, mask] : profile.active) {
    if (mask == 0)
      ++result.no_active;
    else
      ++result.counts[combination_label(mask, profile.window_count)];
  }
  std::set<std::string_view> extra;
  for (const NodeId& id : roster)
    if (!profile.active.contains(id)) extra.insert(id);
  result.no_active += extra.size();
  result.universe = profile.active.size() + extra.size();
  return result;
}

}  // namespace mlsn
