#include <gtest/gtest.h>

#include <algorithm>

#include "mwall/amalgam.hpp"
#include "mwall/amalgam_validate.hpp"
#include "mwall/errors.hpp"
#include "mwall/modular.hpp"
#include "test_support.hpp"

namespace mwall {
namespace {

using testing::fixture;
using testing::rng;

AmalgamWallspace load(const std::string& name, int radius) { return AmalgamWallspace(load_spec(fixture(name)), radius); }

Point random_local(std::mt19937_64& g, const AmalgamWallspace& aw, const TreeNode& n) {
  const auto& vs = aw.spec().vertices[static_cast<std::size_t>(node_vertex(aw.graph(), n))];
  if (vs.kind == VertexKind::Free) return tree_point(testing::random_word(g, vs.rank, 3));
  return lattice_point(testing::random_vector(g, static_cast<std::size_t>(vs.rank), 4));
}

AmalgamPoint random_point(std::mt19937_64& g, const AmalgamWallspace& aw, const BassSerreTruncation& t) {
  const auto& n = t.nodes[static_cast<std::size_t>(testing::uniform(g, 0, static_cast<std::int64_t>(t.nodes.size()) - 1))];
  return aw.point(n, random_local(g, aw, n));
}

TEST(Amalgam, HandComputedValues) {
  auto aw = load("z2-amalgam.json", 6);
  auto t = aw.truncation(1);
  ASSERT_FALSE(t.edges.empty());
  const auto& child = t.nodes[t.edges.front().child];
  auto [p, c] = aw.edge_basepoints(child);
  EXPECT_EQ(aw.pseudometric(p, c), Scalar(1));

  auto x = aw.base_point();
  EXPECT_EQ(aw.pseudometric(x, aw.point(x.node, lattice_point({2, 3}))), Scalar(5));

  auto a = aw.point(root_node(aw.graph()), lattice_point({0, 2}));
  TreeNode across = node_step(aw.graph(), root_node(aw.graph()), GroupElement{}, {0, true});
  auto b = aw.point(across, lattice_point({0, 3}));
  auto sep = aw.separation(a, b);
  EXPECT_EQ(sep.vertical, Scalar(1));
  EXPECT_EQ(sep.horizontal, Scalar(5));
  EXPECT_EQ(aw.pseudometric(a, b), Scalar(6));

  EXPECT_EQ(aw.pseudometric(x, aw.act(aw.group().generator(0), x)), Scalar(1));
  EXPECT_TRUE(aw.pseudometric(x, aw.act(aw.group().identity(), x)).is_zero());
}

TEST(Amalgam, VerticalWeightsFollowEdgeOrbits) {
  auto one = load("z2-amalgam.json", 4);
  for (const auto& e : one.truncation(1).edges) EXPECT_EQ(one.vertical_weight(e.orbit), Scalar(1));

  auto two = load("path-three.json", 4);
  EXPECT_EQ(two.vertical_weight(0), Scalar(1));
  EXPECT_EQ(two.vertical_weight(1), Scalar(2));
  auto t = two.truncation(1);
  for (const auto& e : t.edges) {
    auto [p, c] = two.edge_basepoints(t.nodes[e.child]);
    EXPECT_EQ(two.separation(p, c).vertical, two.vertical_weight(e.orbit));
  }
}

TEST(Amalgam, AssemblyRefusesNonMonicSpecs) {
  auto s = load_spec(fixture("nonmonic-edge.json"));
  try {
    AmalgamWallspace aw(s, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::GluePeriodMismatch);
  }
  AmalgamWallspace monic(monic_rescale(s, s.base), 2);
  auto x = monic.base_point();
  EXPECT_EQ(monic.pseudometric(x, monic.act(monic.group().generator(0), x)), Scalar(1));
}

TEST(Amalgam, HostsOutsideTheTruncationAreRejected) {
  auto aw = load("z2-amalgam.json", 0);
  TreeNode across = node_step(aw.graph(), root_node(aw.graph()), GroupElement{}, {0, true});
  try {
    aw.point(across, lattice_point({0, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::HostOutsideTruncation);
  }
}

class AmalgamProperty : public ::testing::TestWithParam<const char*> {};

TEST_P(AmalgamProperty, PseudometricAxioms) {
  auto aw = load(GetParam(), 6);
  auto t = aw.truncation(1);
  auto g = rng(101);
  for (int trial = 0; trial < 150; ++trial) {
    auto a = random_point(g, aw, t), b = random_point(g, aw, t), c = random_point(g, aw, t);
    Scalar ab = aw.pseudometric(a, b), bc = aw.pseudometric(b, c), ac = aw.pseudometric(a, c);
    EXPECT_TRUE(aw.pseudometric(a, a).is_zero());
    EXPECT_EQ(ab, aw.pseudometric(b, a));
    EXPECT_LE(ac, ab + bc);
    EXPECT_GE(ab, Scalar(0));
  }
}

TEST_P(AmalgamProperty, GroupInvariance) {
  auto hosts = load(GetParam(), 2).truncation(1);
  auto aw = load(GetParam(), 2 + truncation_for_ball(load(GetParam(), 0), 2));
  auto g = rng(103);
  auto elements = ball(aw.group(), 2);
  for (int trial = 0; trial < 60; ++trial) {
    auto a = random_point(g, aw, hosts), b = random_point(g, aw, hosts);
    const auto& h = elements[static_cast<std::size_t>(testing::uniform(g, 0, static_cast<std::int64_t>(elements.size()) - 1))];
    EXPECT_EQ(aw.pseudometric(aw.act(h, a), aw.act(h, b)), aw.pseudometric(a, b));
  }
}

TEST_P(AmalgamProperty, SingleVerticalWallPerTreeEdge) {
  auto aw = load(GetParam(), 3);
  auto t = aw.truncation(1);
  for (const auto& e : t.edges) {
    auto [p, c] = aw.edge_basepoints(t.nodes[e.child]);
    auto s = aw.separation(p, c);
    EXPECT_EQ(s.vertical, aw.vertical_weight(e.orbit));
    EXPECT_TRUE(s.horizontal.is_zero()) << format_node(aw.graph(), t.nodes[e.child]);
  }
}

TEST_P(AmalgamProperty, TruncationStability) {
  auto small = load(GetParam(), 2);
  auto big = load(GetParam(), 4);
  auto t = small.truncation(1);
  auto g = rng(107);
  for (int trial = 0; trial < 60; ++trial) {
    auto a = random_point(g, small, t), b = random_point(g, small, t);
    EXPECT_EQ(small.pseudometric(a, b), big.pseudometric(big.point(a.node, a.local), big.point(b.node, b.local)));
  }
}

TEST_P(AmalgamProperty, EnumerationIndependence) {
  auto aw = load(GetParam(), 2);
  auto t = aw.truncation(1);
  auto g = rng(109);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<WallPiece> pieces;
    for (int k = 0; k < 3; ++k) {
      const auto& n = t.nodes[static_cast<std::size_t>(testing::uniform(g, 0, static_cast<std::int64_t>(t.nodes.size()) - 1))];
      int v = node_vertex(aw.graph(), n);
      if (aw.spec().vertices[static_cast<std::size_t>(v)].kind != VertexKind::FreeAbelian) continue;
      std::vector<MeasurableParamSet> sets;
      for (std::size_t f = 0; f < aw.vertex_wallspace(v).family_count(); ++f) {
        std::int64_t lo = testing::uniform(g, -5, 5);
        sets.emplace_back(IntervalSet::of(Scalar(lo, 2), Scalar(lo + testing::uniform(g, 1, 6), 2)));
      }
      pieces.push_back({n, sets});
    }
    std::vector<TreeNode> order = t.nodes;
    Scalar first = aw.horizontal_measure(pieces, order);
    std::reverse(order.begin(), order.end());
    Scalar second = aw.horizontal_measure(pieces, order);
    std::shuffle(order.begin(), order.end(), g);
    EXPECT_EQ(first, second);
    EXPECT_EQ(first, aw.horizontal_measure(pieces, order));
  }
}

INSTANTIATE_TEST_SUITE_P(Fixtures, AmalgamProperty, ::testing::Values("z2-amalgam.json", "path-three.json"),
                         [](const auto& info) { return std::string(info.param).substr(0, std::string(info.param).find('.')) == "z2-amalgam" ? std::string("Z2") : std::string("Path"); });

TEST(Amalgam, PropernessTrend) {
  auto probe = load("z2-amalgam.json", 0);
  auto aw = load("z2-amalgam.json", truncation_for_ball(probe, 6));
  auto rows = properness_profile(aw, aw.base_point(), 6);
  ASSERT_EQ(rows.size(), 7u);
  EXPECT_TRUE(rows[0].min_value.is_zero());
  for (std::size_t n = 1; n < rows.size(); ++n) EXPECT_GE(rows[n].min_value, rows[n - 1].min_value);
  EXPECT_GT(rows[6].min_value, Scalar(3));
  auto single = properness_profile(aw, aw.base_point(), 0);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_TRUE(single[0].min_value.is_zero());
}

std::vector<std::string> codes_for(const std::string& name) { return validate(load_spec(fixture(name))).codes(); }

TEST(Validate, Fixtures) {
  EXPECT_TRUE(codes_for("z2-amalgam.json").empty());
  EXPECT_TRUE(codes_for("nonmonic-edge.json").empty());
  EXPECT_TRUE(codes_for("path-three.json").empty());
  EXPECT_TRUE(codes_for("diagonal-dual.json").empty());
  EXPECT_EQ(codes_for("rho-mismatch.json"), (std::vector<std::string>{"E_FUNDOM"}));
  EXPECT_EQ(codes_for("off-axis.json"), (std::vector<std::string>{"E_SKIM_MASS", "E_FUNDOM"}));
  EXPECT_EQ(codes_for("trivial-edge.json"), (std::vector<std::string>{"E_EDGE_NOT_INFINITE_CYCLIC"}));
  EXPECT_EQ(codes_for("diagonal-edge.json"), (std::vector<std::string>{"E_NOT_DISPERSED"}));
  EXPECT_EQ(codes_for("triangle-weight-2.json"), (std::vector<std::string>{"E_NONTRIVIAL_MODULAR"}));
}

TEST(Validate, ReportJson) {
  auto r = validate(load_spec(fixture("rho-mismatch.json")));
  auto j = r.to_json();
  EXPECT_EQ(j["name"], "rho-mismatch");
  EXPECT_EQ(j["ok"], false);
  bool found = false;
  for (const auto& c : j["checks"])
    if (c.contains("code")) {
      EXPECT_EQ(c["code"], "E_FUNDOM");
      EXPECT_EQ(c["pass"], false);
      found = true;
    }
  EXPECT_TRUE(found);
}

}  // namespace
}  // namespace mwall
