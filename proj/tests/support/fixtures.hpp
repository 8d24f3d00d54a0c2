#pragma once

#include <string>
#include <vector>

#include "mlsn/io.hpp"

#ifndef MLSN_TEST_DATA_DIR
#error "MLSN_TEST_DATA_DIR must point at tests/data"
#endif

namespace mlsn::testing {

inline std::string data_path(const std::string& name) {
  return std::string(MLSN_TEST_DATA_DIR) + "/" + name;
}

/// Three-layer example network over {t, u, v, x, y, z} with unit weights.
inline std::vector<EdgeEvent> fig1_events() { return parse_edge_file(data_path("fig1.csv")); }

inline MultiLayerNetwork fig1() { return build_network(fig1_events()); }

/// The eight layer-l1 tuples listed for the example network.
inline std::vector<EdgeEvent> enumerated_l1_events() {
  const char* pairs[][2] = {{"x", "y"}, {"y", "x"}, {"x", "z"}, {"z", "x"},
                            {"y", "z"}, {"u", "z"}, {"u", "v"}, {"v", "u"}};
  std::vector<EdgeEvent> events;
  for (auto& p : pairs) events.push_back({p[0], p[1], "l1", 1.0, std::nullopt});
  return events;
}

}  // namespace mlsn::testing
