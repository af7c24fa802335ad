#include <gtest/gtest.h>

#include <set>

#include "mwall/amalgam_spec.hpp"
#include "mwall/bass_serre.hpp"
#include "mwall/chart.hpp"
#include "mwall/cube.hpp"
#include "mwall/errors.hpp"
#include "mwall/modular.hpp"
#include "test_support.hpp"

namespace mwall {
namespace {

using testing::fixture;
using testing::rng;

std::string parse_error(const std::string& text) {
  try {
    parse_spec_text(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    return e.what();
  }
  ADD_FAILURE() << "parsed: " << text;
  return {};
}

const char* kVertex = R"({"id": "%", "kind": "free_abelian", "rank": 2})";

std::string vertex(const std::string& id) {
  std::string s = kVertex;
  s.replace(s.find('%'), 1, id);
  return s;
}

std::string edge(const std::string& id, const std::string& u, const std::string& v) {
  return R"({"id": ")" + id + R"(", "ends": [{"vertex": ")" + u +
         R"(", "generator_image": [1, 0], "basepoint": [0, 0], "rho": 1}, {"vertex": ")" + v +
         R"(", "generator_image": [1, 0], "basepoint": [0, 0], "rho": 1}]})";
}

std::string graph(const std::vector<std::string>& vs, const std::vector<std::string>& es) {
  std::string out = R"({"name": "t", "graph": {"vertices": [)";
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? "," : "") + vs[i];
  out += R"(], "edges": [)";
  for (std::size_t i = 0; i < es.size(); ++i) out += (i ? "," : "") + es[i];
  return out + R"(]}, "base": "A"})";
}

TEST(AmalgamSpec, ShippedFixtureParses) {
  auto s = load_spec(fixture("z2-amalgam.json"));
  EXPECT_EQ(s.vertices.size(), 2u);
  EXPECT_EQ(s.edges.size(), 1u);
  EXPECT_EQ(s.base, 0);
  auto again = parse_spec(spec_to_json(s));
  EXPECT_EQ(spec_to_json(again), spec_to_json(s));
}

TEST(AmalgamSpec, ShapeErrors) {
  EXPECT_NE(parse_error(graph({}, {})).find("no vertices"), std::string::npos);
  EXPECT_NE(parse_error(graph({vertex("A")}, {edge("e", "A", "A")})).find("graph must be simplicial"), std::string::npos);
  EXPECT_NE(parse_error(graph({vertex("A"), vertex("B")}, {edge("e", "A", "B"), edge("f", "B", "A")})).find("multiple edge"),
            std::string::npos);
  EXPECT_NE(parse_error(graph({vertex("A"), vertex("B")}, {})).find("connected"), std::string::npos);
  EXPECT_NE(parse_error("{\"graph\": [").find("malformed JSON"), std::string::npos);
  EXPECT_NE(parse_error(graph({vertex("A"), vertex("B")}, {edge("e", "A", "C")})).find("$.graph.edges[0]"), std::string::npos);
  try {
    load_spec(fixture("missing.json"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
  }
}

TEST(Modular, SingleEdgeWeight) {
  auto s = load_spec(fixture("rho-mismatch.json"));
  auto r = modular_weights(s);
  EXPECT_EQ(r.edge_weights[0], Scalar(2));
  EXPECT_EQ(directed_weight(r, {0, false}), Scalar(1, 2));
  EXPECT_TRUE(r.cycles.empty());
  EXPECT_TRUE(r.trivial);
}

TEST(Modular, TriangleProducts) {
  auto one = load_spec(fixture("triangle-trivial.json"));
  auto r1 = modular_weights(one);
  EXPECT_EQ(r1.edge_weights, (std::vector<Scalar>{2, 3, Scalar(1, 6)}));
  ASSERT_EQ(r1.cycles.size(), 1u);
  EXPECT_EQ(r1.cycles[0].product, Scalar(1));
  EXPECT_TRUE(r1.trivial);

  auto two = load_spec(fixture("triangle-weight-2.json"));
  auto r2 = modular_weights(two);
  ASSERT_EQ(r2.cycles.size(), 1u);
  EXPECT_EQ(r2.cycles[0].product, Scalar(2));
  EXPECT_FALSE(r2.trivial);
  try {
    monic_rescale(two, two.base);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NontrivialModular);
    EXPECT_NE(std::string(e.what()).find("2"), std::string::npos);
  }
}

TEST(ModularProperty, CycleProductIsMultiplicative) {
  auto s = load_spec(fixture("triangle-weight-2.json"));
  auto r = modular_weights(s);
  std::vector<DirEdge> loop{{0, true}, {1, true}, {2, true}};
  std::vector<DirEdge> back{{2, false}, {1, false}, {0, false}};
  EXPECT_EQ(cycle_product(s, r, loop), Scalar(2));
  EXPECT_EQ(cycle_product(s, r, back), Scalar(1, 2));
  auto twice = loop;
  twice.insert(twice.end(), loop.begin(), loop.end());
  EXPECT_EQ(cycle_product(s, r, twice), Scalar(4));
  std::vector<DirEdge> there_and_back{{0, true}, {0, false}};
  EXPECT_EQ(cycle_product(s, r, there_and_back), Scalar(1));
  EXPECT_THROW(cycle_product(s, r, {{0, true}}), Error);
}

TEST(Modular, MonicRescale) {
  auto s = load_spec(fixture("nonmonic-edge.json"));
  auto f = monic_factors(s, s.base);
  EXPECT_EQ(f, (std::vector<Scalar>{1, Scalar(1, 2)}));
  auto monic = monic_rescale(s, s.base);
  for (const auto& e : monic.edges)
    for (const auto& end : e.ends) EXPECT_EQ(end.rho, Scalar(1));
  EXPECT_EQ(monic.vertices[1].scale, Scalar(1, 2));

  auto already = load_spec(fixture("z2-amalgam.json"));
  EXPECT_EQ(spec_to_json(monic_rescale(already, 0)), spec_to_json(already));
}

TEST(ModularProperty, RescaledVertexMetricsScale) {
  auto s = load_spec(fixture("triangle-trivial.json"));
  auto monic = monic_rescale(s, s.base);
  auto f = monic_factors(s, s.base);
  auto g = rng(81);
  for (std::size_t v = 0; v < s.vertices.size(); ++v) {
    auto before = vertex_wallspace(s.vertices[v]);
    auto after = vertex_wallspace(monic.vertices[v]);
    for (int trial = 0; trial < 30; ++trial) {
      Point a = lattice_point(testing::random_vector(g, 2, 5)), b = lattice_point(testing::random_vector(g, 2, 5));
      EXPECT_EQ(after.pseudometric(a, b), f[v] * before.pseudometric(a, b));
    }
  }
}

std::shared_ptr<GraphOfGroupsGroup> group_of(const GraphOfGroupsSpec& s) {
  std::vector<GroupModel> models;
  std::vector<std::string> names;
  for (const auto& v : s.vertices) {
    models.push_back(vertex_model(v));
    names.push_back(v.id);
  }
  std::vector<GogEdge> edges;
  std::vector<std::string> edge_names;
  for (const auto& e : s.edges) {
    GogEdge ge;
    ge.u = e.ends[0].vertex;
    ge.v = e.ends[1].vertex;
    ge.z_u = local_element(models[static_cast<std::size_t>(ge.u)], e.ends[0].generator_image);
    ge.z_v = local_element(models[static_cast<std::size_t>(ge.v)], e.ends[1].generator_image);
    edges.push_back(ge);
    edge_names.push_back(e.id);
  }
  return std::make_shared<GraphOfGroupsGroup>(models, names, edges, edge_names, s.base);
}

TEST(BassSerre, Truncations) {
  auto gg = group_of(load_spec(fixture("z2-amalgam.json")));
  auto zero = bass_serre_truncation(*gg, 0);
  EXPECT_EQ(zero.nodes.size(), 1u);
  EXPECT_TRUE(zero.edges.empty());

  auto one = bass_serre_truncation(*gg, 1, 2);
  auto m = GroupModel::free_abelian(2);
  auto reps = coset_representatives(m, SubgroupSpec({m.from_vector({1, 0})}), 2);
  EXPECT_EQ(one.nodes.size(), 1 + reps.size());
  for (const auto& e : one.edges) {
    EXPECT_EQ(e.parent, 0u);
    EXPECT_EQ(node_depth(one.nodes[e.child]), 1u);
    EXPECT_EQ(one.index_of(one.nodes[e.child]), e.child);
  }

  auto path = group_of(load_spec(fixture("path-three.json")));
  auto two = bass_serre_truncation(*path, 2, 1);
  std::set<int> orbits;
  std::size_t depth = 0;
  for (const auto& e : two.edges) {
    orbits.insert(e.orbit);
    depth = std::max(depth, node_depth(two.nodes[e.child]));
  }
  EXPECT_EQ(orbits, (std::set<int>{0, 1}));
  EXPECT_EQ(depth, 2u);
}

TEST(BassSerreProperty, TreeDistancesAreConsistent) {
  auto gg = group_of(load_spec(fixture("z2-amalgam.json")));
  auto t = bass_serre_truncation(*gg, 3, 1);
  for (const auto& e : t.edges) {
    EXPECT_EQ(node_parent(t.nodes[e.child]), t.nodes[e.parent]);
    EXPECT_EQ(tree_distance(t.nodes[e.child], t.nodes[e.parent]), 1u);
  }
  for (std::size_t i = 0; i < t.nodes.size(); i += 7)
    for (std::size_t j = 0; j < t.nodes.size(); j += 5) {
      const auto& a = t.nodes[i];
      const auto& b = t.nodes[j];
      EXPECT_EQ(tree_distance(a, b), node_depth(a) + node_depth(b) - 2 * common_steps(a, b));
      EXPECT_EQ(tree_distance(a, b), tree_distance(b, a));
    }
}

TEST(Chart, LatticeChart) {
  auto m = GroupModel::free_abelian(2);
  auto w = standard_cubing(2);
  Point x = lattice_point({0, 0});
  CuttingChart c(w, m, m.from_vector({1, 0}), x);
  EXPECT_EQ(c.period(), Scalar(1));
  EXPECT_TRUE(c.glues(0));
  EXPECT_FALSE(c.glues(1));
  for (std::int64_t k = 1; k <= 4; ++k)
    EXPECT_EQ(c.to_chart(w.separators(x, lattice_point({k, 0}))), IntervalSet::of(0, k));

  CuttingChart diag(w, m, m.from_vector({1, 1}), x);
  EXPECT_EQ(diag.period(), Scalar(2));
  EXPECT_EQ(diag.to_chart(w.separators(x, lattice_point({1, 1}))), IntervalSet::of(0, 2));
}

TEST(Chart, TreeChart) {
  auto m = GroupModel::free_group(2);
  auto w = tree_wallspace(2);
  CuttingChart c(w, m, m.parse("ab"), tree_point({}));
  EXPECT_EQ(c.period(), Scalar(2));
  EXPECT_EQ(c.to_chart(w.separators(tree_point({}), tree_point(words::parse("abab", 2)))), IntervalSet::of(0, 4));
  EXPECT_THROW(CuttingChart(w, m, m.parse("a"), tree_point(words::parse("b", 2))), Error);
}

TEST(ChartProperty, RoundTripAndSideIndependence) {
  auto g = rng(91);
  auto m = GroupModel::free_abelian(2);
  auto w = standard_cubing(2);
  auto f = GroupModel::free_group(2);
  auto t = tree_wallspace(2);
  std::vector<CuttingChart> charts{CuttingChart(w, m, m.from_vector({1, 0}), lattice_point({0, 3})),
                                   CuttingChart(w, m, m.from_vector({2, -1}), lattice_point({1, 1})),
                                   CuttingChart(t, f, f.parse("ab"), tree_point({})),
                                   CuttingChart(t, f, f.parse("a"), tree_point(words::parse("aaa", 2)))};
  std::vector<const MeasuredWallspace*> spaces{&w, &w, &t, &t};
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Interval> pieces;
    for (int i = 0; i < 3; ++i) {
      std::int64_t lo = testing::uniform(g, -12, 12);
      pieces.push_back({Scalar(lo), Scalar(lo + testing::uniform(g, 1, 4))});
    }
    auto chart_set = IntervalSet::from_list(pieces);
    for (std::size_t c = 0; c < charts.size(); ++c) {
      auto sets = charts[c].from_chart(chart_set);
      // Every chart carries the same set with the same mass.
      EXPECT_EQ(spaces[c]->measure(sets), chart_set.measure());
      EXPECT_EQ(charts[c].to_chart(sets), chart_set);
    }
  }
}

}  // namespace
}  // namespace mwall
