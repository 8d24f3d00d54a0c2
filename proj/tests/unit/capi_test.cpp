#include <gtest/gtest.h>

#include <memory>
#include <string>
#include <vector>

#include "mlsn/mlsn.h"

namespace {

const std::string kData = MLSN_TEST_DATA_DIR;

struct Free {
  void operator()(mlsn_events* p) const { mlsn_events_free(p); }
  void operator()(mlsn_network* p) const { mlsn_network_free(p); }
  void operator()(mlsn_node_set* p) const { mlsn_node_set_free(p); }
  void operator()(char* p) const { mlsn_string_free(p); }
};
template <class T>
using Owned = std::unique_ptr<T, Free>;

Owned<mlsn_network> load_fig1() {
  mlsn_events* events = nullptr;
  EXPECT_EQ(mlsn_events_read_csv((kData + "/fig1.csv").c_str(), 1, &events), MLSN_OK);
  Owned<mlsn_events> owned(events);
  mlsn_network* net = nullptr;
  EXPECT_EQ(mlsn_network_build(events, MLSN_DEDUP_SUM, &net), MLSN_OK);
  return Owned<mlsn_network>(net);
}

std::vector<std::string> members(const mlsn_node_set* set) {
  std::vector<std::string> out;
  for (size_t i = 0; i < mlsn_node_set_size(set); ++i) out.emplace_back(mlsn_node_set_at(set, i));
  return out;
}

TEST(CApi, NetworkAccessors) {
  auto net = load_fig1();
  ASSERT_TRUE(net);
  EXPECT_EQ(mlsn_network_node_count(net.get()), 6u);
  EXPECT_EQ(mlsn_network_layer_count(net.get()), 3u);
  EXPECT_EQ(mlsn_network_edge_count(net.get()), 30u);
  EXPECT_STREQ(mlsn_network_node_id(net.get(), 0), "t");
  EXPECT_STREQ(mlsn_network_layer_id(net.get(), 2), "l3");
  EXPECT_EQ(mlsn_network_node_id(net.get(), 6), nullptr);
  double w = -1.0;
  EXPECT_EQ(mlsn_network_weight(net.get(), "x", "y", "l1", &w), MLSN_OK);
  EXPECT_EQ(w, 1.0);
  EXPECT_EQ(mlsn_network_weight(net.get(), "t", "x", "l1", &w), MLSN_OK);
  EXPECT_EQ(w, 0.0);
  EXPECT_EQ(mlsn_network_weight(net.get(), "q", "x", "l1", &w), MLSN_ERR_NOT_FOUND);
  EXPECT_NE(std::string(mlsn_last_error()).find('q'), std::string::npos);
}

TEST(CApi, Neighbourhoods) {
  auto net = load_fig1();
  mlsn_node_set* set = nullptr;
  ASSERT_EQ(mlsn_multilayer_neighbourhood(net.get(), "x", MLSN_VARIANT_IN, 2, &set), MLSN_OK);
  Owned<mlsn_node_set> in2(set);
  EXPECT_EQ(members(set), (std::vector<std::string>{"u", "v", "z"}));
  ASSERT_EQ(mlsn_neighbourhood(net.get(), "z", "l1", &set), MLSN_OK);
  Owned<mlsn_node_set> l1(set);
  EXPECT_EQ(members(set), (std::vector<std::string>{"t", "u", "x", "y"}));
  EXPECT_EQ(mlsn_multilayer_neighbourhood(net.get(), "x", MLSN_VARIANT_ANY, 0, &set),
            MLSN_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(mlsn_neighbourhood(net.get(), "x", "l9", &set), MLSN_ERR_NOT_FOUND);
}

TEST(CApi, Measures) {
  auto net = load_fig1();
  double value = -1.0;
  ASSERT_EQ(mlsn_clcc(net.get(), "z", 1, MLSN_VARIANT_ANY, &value), MLSN_OK);
  EXPECT_NEAR(value, 2.0 / 3.0, 1e-12);
  ASSERT_EQ(mlsn_clcc(net.get(), "z", 2, MLSN_VARIANT_ANY, &value), MLSN_OK);
  EXPECT_NEAR(value, 4.0 / 9.0, 1e-12);

  double cdc = 0.0, mdc = 0.0;
  ASSERT_EQ(mlsn_cdc(net.get(), "x", 1, MLSN_DIRECTION_BOTH, MLSN_VARIANT_ANY, &cdc), MLSN_OK);
  ASSERT_EQ(mlsn_mdc(net.get(), 1, "x", MLSN_DIRECTION_BOTH, &mdc), MLSN_OK);
  EXPECT_NEAR(cdc, mdc, 1e-12);
  EXPECT_EQ(mlsn_mdc(net.get(), 4, "x", MLSN_DIRECTION_BOTH, &mdc), MLSN_ERR_INVALID_ARGUMENT);

  EXPECT_EQ(mlsn_degree_centrality(net.get(), "z", MLSN_DIRECTION_BOTH, 0, &value),
            MLSN_ERR_CONTRACT);
  mlsn_network* layer = nullptr;
  ASSERT_EQ(mlsn_network_layer_view(net.get(), "l1", &layer), MLSN_OK);
  Owned<mlsn_network> l1(layer);
  ASSERT_EQ(mlsn_degree_centrality(layer, "z", MLSN_DIRECTION_BOTH, 0, &value), MLSN_OK);
  EXPECT_DOUBLE_EQ(value, 0.8);

  mlsn_measure_options options;
  mlsn_measure_options_init(&options);
  options.metric = "clcc";
  EXPECT_EQ(mlsn_metric_requires_alpha("clcc"), 1);
  EXPECT_EQ(mlsn_metric_requires_alpha("mdc2"), 0);
  EXPECT_EQ(mlsn_metric_requires_alpha("nope"), -1);
  std::vector<double> values(6);
  EXPECT_EQ(mlsn_measure_values(net.get(), &options, values.data(), values.size()),
            MLSN_ERR_INVALID_ARGUMENT);
  options.alpha = 3;
  ASSERT_EQ(mlsn_measure_values(net.get(), &options, values.data(), values.size()), MLSN_OK);
  EXPECT_EQ(values[0], 0.0);
  EXPECT_EQ(mlsn_measure_values(net.get(), &options, values.data(), 2),
            MLSN_ERR_INVALID_ARGUMENT);
}

TEST(CApi, NormalizeAndEvents) {
  mlsn_events* raw = nullptr;
  ASSERT_EQ(mlsn_events_create(&raw), MLSN_OK);
  Owned<mlsn_events> events(raw);
  EXPECT_EQ(mlsn_events_add(raw, "a", "b", "l", 3.0, 1, 50), MLSN_OK);
  EXPECT_EQ(mlsn_events_add(raw, "a", "c", "l", 1.0, 1, 20), MLSN_OK);
  EXPECT_EQ(mlsn_events_add(raw, "a", "c", "l", -1.0, 0, 0), MLSN_ERR_VALIDATION);
  EXPECT_EQ(mlsn_events_size(raw), 2u);
  int64_t first = 0;
  EXPECT_EQ(mlsn_events_min_timestamp(raw, &first), MLSN_OK);
  EXPECT_EQ(first, 20);

  mlsn_network* net = nullptr;
  ASSERT_EQ(mlsn_network_build(raw, MLSN_DEDUP_SUM, &net), MLSN_OK);
  Owned<mlsn_network> built(net);
  mlsn_network* normalized = nullptr;
  ASSERT_EQ(mlsn_network_normalize(net, &normalized), MLSN_OK);
  Owned<mlsn_network> norm(normalized);
  double w = 0.0;
  mlsn_network_weight(normalized, "a", "b", "l", &w);
  EXPECT_DOUBLE_EQ(w, 0.75);

  EXPECT_EQ(mlsn_events_add(raw, "a", "a", "l", 1.0, 0, 0), MLSN_ERR_VALIDATION);
  EXPECT_EQ(mlsn_events_read_csv("/no/such/file.csv", 1, &raw), MLSN_ERR_IO);
}

TEST(CApi, RenderedReports) {
  auto net = load_fig1();
  char* text = nullptr;
  ASSERT_EQ(mlsn_render_sweep(net.get(), 3, MLSN_FORMAT_CSV, &text), MLSN_OK);
  Owned<char> sweep(text);
  EXPECT_STREQ(text, "alpha,mn_nonempty,cdc_nonzero,clcc_nonzero\n1,6,6,5\n2,6,6,5\n3,4,4,1\n");

  ASSERT_EQ(mlsn_render_neighbourhood(net.get(), "x", MLSN_VARIANT_ANY, 3, &text), MLSN_OK);
  Owned<char> hood(text);
  EXPECT_NE(std::string(text).find("\"members\""), std::string::npos);

  const double values[] = {0.00001, 0.00003};
  ASSERT_EQ(mlsn_render_histogram(values, 2, nullptr, 0, MLSN_FORMAT_CSV, &text), MLSN_OK);
  Owned<char> hist(text);
  EXPECT_EQ(std::string(text).rfind("range,frequency,cumulative_percent\n", 0), 0u);

  const double flat[] = {1.0, 1.0, 1.0};
  EXPECT_EQ(mlsn_render_fit(flat, 3, &text), MLSN_ERR_DEGENERATE_FIT);
  mlsn_fit_result fit{};
  EXPECT_EQ(mlsn_fit_exp_decay(values, 1, &fit), MLSN_ERR_INSUFFICIENT_DATA);

  mlsn_events* raw = nullptr;
  ASSERT_EQ(mlsn_events_read_csv((kData + "/fig1.csv").c_str(), 1, &raw), MLSN_OK);
  Owned<mlsn_events> events(raw);
  mlsn_window_options options;
  mlsn_window_options_init(&options);
  EXPECT_EQ(options.count, 5);
  EXPECT_EQ(options.length, 90 * 86400);
  EXPECT_EQ(mlsn_render_windows(raw, &options, MLSN_FORMAT_CSV, &text), MLSN_ERR_INGESTION);
}

TEST(CApi, StatusStrings) {
  EXPECT_STREQ(mlsn_status_string(MLSN_OK), "ok");
  EXPECT_NE(mlsn_version(), nullptr);
  int64_t t = 0;
  EXPECT_EQ(mlsn_parse_timestamp("1970-01-01T00:00:10Z", &t), MLSN_OK);
  EXPECT_EQ(t, 10);
  EXPECT_EQ(mlsn_parse_duration("90d", &t), MLSN_OK);
  EXPECT_EQ(t, 90 * 86400);
  EXPECT_EQ(mlsn_parse_duration("x", &t), MLSN_ERR_PARSE);
}

}  // namespace
