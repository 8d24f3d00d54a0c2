#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "fixtures.hpp"
#include "mlsn/centrality.hpp"
#include "mlsn/error.hpp"
#include "oracle.hpp"

namespace mlsn {
namespace {

using testing::fig1;
namespace oracle = testing::oracle;

oracle::Dir to_dir(Direction d) {
  return d == Direction::both ? oracle::Dir::both
         : d == Direction::in ? oracle::Dir::in
                              : oracle::Dir::out;
}

TEST(DegreeCentrality, FigOneLayerOne) {
  const auto l1 = layer_view(fig1(), "l1");
  EXPECT_DOUBLE_EQ(degree_centrality(l1, "z", Direction::both), 4.0 / 5.0);
  // z on l1: in from x, y, u, t; out to x
  EXPECT_DOUBLE_EQ(degree_centrality(l1, "z", Direction::in), 4.0 / 5.0);
  EXPECT_DOUBLE_EQ(degree_centrality(l1, "z", Direction::out), 1.0 / 5.0);
}

TEST(DegreeCentrality, IsolatedAndComplete) {
  const auto l2 = layer_view(fig1(), "l2");
  for (Direction d : {Direction::both, Direction::in, Direction::out})
    EXPECT_EQ(degree_centrality(l2, "t", d), 0.0);

  std::vector<EdgeEvent> events;
  const char* ids[] = {"a", "b", "c", "d"};
  for (const char* a : ids)
    for (const char* b : ids)
      if (std::string(a) != b) events.push_back({a, b, "l", 1.0, {}});
  const auto full = build_network(events);
  for (const char* a : ids)
    for (Direction d : {Direction::both, Direction::in, Direction::out})
      EXPECT_DOUBLE_EQ(degree_centrality(full, a, d), 1.0);
}

TEST(DegreeCentrality, WeightedSumsReplaceCounts) {
  const std::vector<EdgeEvent> events{{"a", "b", "l", 0.5, {}}, {"c", "a", "l", 2.0, {}}};
  const auto net = build_network(events);
  EXPECT_DOUBLE_EQ(degree_centrality(net, "a", Direction::both, true), 2.5 / 2.0);
  EXPECT_DOUBLE_EQ(degree_centrality(net, "a", Direction::in, true), 2.0 / 2.0);
  EXPECT_DOUBLE_EQ(degree_centrality(net, "a", Direction::out, true), 0.5 / 2.0);
}

TEST(DegreeCentrality, Contracts) {
  try {
    degree_centrality(fig1(), "x", Direction::both);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::contract_violation);
  }
  const std::vector<EdgeEvent> none;
  const std::vector<NodeId> single{"a"};
  const MultiLayerNetwork lonely({"a"}, {"l"}, {});
  try {
    degree_centrality(lonely, "a", Direction::both);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::degenerate_network);
  }
}

TEST(Cdc, EnumeratedTuplesWithSixMembers) {
  const auto events = testing::enumerated_l1_events();
  const std::vector<NodeId> t{"t"};
  const auto six = build_network(events, DedupPolicy::sum, t);
  EXPECT_DOUBLE_EQ(cdc(six, "x", 1, Direction::both), 4.0 / 5.0);
  EXPECT_DOUBLE_EQ(cdc(six, "x", 1, Direction::in), 2.0 / 5.0);
  EXPECT_DOUBLE_EQ(cdc(six, "x", 1, Direction::out), 2.0 / 5.0);
  // the tuples alone only span five members
  EXPECT_DOUBLE_EQ(cdc(build_network(events), "x", 1, Direction::both), 4.0 / 4.0);
}

TEST(Cdc, EmptyNeighbourhoodAndDegenerateNetwork) {
  EXPECT_EQ(cdc(fig1(), "t", 3, Direction::both), 0.0);
  const std::vector<EdgeEvent> none;
  const std::vector<NodeId> single{"a"};
  const auto lonely = build_network(none, DedupPolicy::sum, single);
  try {
    cdc(lonely, "a", 1, Direction::both);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::degenerate_network);
  }
  EXPECT_THROW(mdc(lonely, MdcVersion::v1, "a", Direction::both), Error);
}

TEST(Mdc, ThreeNodeTwoLayerExample) {
  const std::vector<EdgeEvent> events{{"a", "b", "l1", 1.0, {}},
                                      {"b", "a", "l1", 1.0, {}},
                                      {"a", "b", "l2", 1.0, {}},
                                      {"a", "c", "l2", 1.0, {}}};
  const auto net = build_network(events);
  EXPECT_DOUBLE_EQ(mdc(net, MdcVersion::v1, "a", Direction::both), 1.0);
  EXPECT_DOUBLE_EQ(mdc(net, MdcVersion::v2, "a", Direction::both), 1.0);
  EXPECT_DOUBLE_EQ(mdc(net, MdcVersion::v3, "a", Direction::both), 2.0 / 3.0);
}

TEST(Mdc, IsolatedNodeIsZero) {
  const auto events = testing::enumerated_l1_events();
  const std::vector<NodeId> t{"t"};
  const auto net = build_network(events, DedupPolicy::sum, t);
  for (MdcVersion v : {MdcVersion::v1, MdcVersion::v2, MdcVersion::v3})
    for (Direction d : {Direction::both, Direction::in, Direction::out})
      EXPECT_EQ(mdc(net, v, "t", d), 0.0);
}

TEST(Centrality, MatchesNaiveScansAndIdentities) {
  std::mt19937_64 rng(4242);
  for (int round = 0; round < 300; ++round) {
    const auto raw = testing::random_network(rng);
    const auto net = build_network(raw.events);
    for (const auto& x : raw.nodes) {
      const NodeIndex xi = net.node_index(x);
      for (Direction d : {Direction::both, Direction::in, Direction::out}) {
        for (int version = 1; version <= 3; ++version)
          EXPECT_NEAR(mdc(net, static_cast<MdcVersion>(version), xi, d),
                      oracle::mdc(raw, version, x, to_dir(d)), 1e-12);
        double previous = std::numeric_limits<double>::infinity();
        const auto profile = cdc_alpha_profile(net, xi, 5, d);
        for (int alpha = 1; alpha <= 5; ++alpha) {
          const double value = cdc(net, xi, alpha, d);
          EXPECT_NEAR(value, oracle::cdc(raw, x, alpha, to_dir(d)), 1e-12);
          EXPECT_NEAR(profile[alpha - 1], value, 1e-12);
          EXPECT_LE(value, previous + 1e-15);
          previous = value;
        }
        EXPECT_NEAR(cdc(net, xi, 1, d), mdc(net, MdcVersion::v1, xi, d), 1e-12);
      }
      for (int alpha = 1; alpha <= 4; ++alpha)
        EXPECT_NEAR(cdc(net, xi, alpha, Direction::in) + cdc(net, xi, alpha, Direction::out),
                    cdc(net, xi, alpha, Direction::both), 1e-12);
      for (MdcVersion v : {MdcVersion::v1, MdcVersion::v2, MdcVersion::v3})
        EXPECT_NEAR(mdc(net, v, xi, Direction::in) + mdc(net, v, xi, Direction::out),
                    mdc(net, v, xi, Direction::both), 1e-12);
      EXPECT_LE(mdc(net, MdcVersion::v3, xi, Direction::both),
                mdc(net, MdcVersion::v2, xi, Direction::both) + 1e-15);
    }
  }
}

TEST(Cdc, OutNormalizedBound) {
  std::mt19937_64 rng(8);
  for (int round = 0; round < 100; ++round) {
    const auto net = normalize_out_weights(build_network(testing::random_network(rng).events));
    const double bound = 1.0 / static_cast<double>(net.node_count() - 1);
    for (NodeIndex x = 0; x < net.node_count(); ++x)
      for (int alpha = 1; alpha <= 4; ++alpha)
        EXPECT_LE(cdc(net, x, alpha, Direction::out), bound + 1e-12);
  }
}

}  // namespace
}  // namespace mlsn
