#include <gtest/gtest.h>

#include "mwall/cube.hpp"
#include "mwall/dispersal.hpp"
#include "mwall/errors.hpp"
#include "mwall/folner.hpp"
#include "mwall/max_clique.hpp"
#include "test_support.hpp"

namespace mwall {
namespace {

using testing::rng;

const Point kOrigin2 = lattice_point({0, 0});

CosetDistanceTable line_table(int radius) {
  auto m = GroupModel::free_abelian(2);
  TableOptions o;
  o.radius = radius;
  return coset_distance_table(standard_cubing(2), m, SubgroupSpec({m.from_vector({1, 0})}), kOrigin2, o);
}

TEST(Dispersal, LineTableEntries) {
  auto m = GroupModel::free_abelian(2);
  auto t = line_table(4);
  EXPECT_TRUE(t.stable);
  ASSERT_EQ(t.size(), 9u);
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j) {
      std::int64_t yi = m.to_vector(t.representatives[i])[1], yj = m.to_vector(t.representatives[j])[1];
      EXPECT_EQ(t.at(i, j), Scalar(std::llabs(yi - yj)));
    }
}

TEST(DispersalProperty, TablesMatchQuotientMetric) {
  auto m = GroupModel::free_abelian(2);
  auto w = standard_cubing(2);
  for (IntVec v : {IntVec{1, 0}, IntVec{0, 1}, IntVec{1, 1}, IntVec{2, 0}}) {
    TableOptions o;
    o.radius = 2;
    auto t = coset_distance_table(w, m, SubgroupSpec({m.from_vector(v)}), kOrigin2, o);
    EXPECT_TRUE(t.stable);
    for (std::size_t i = 0; i < t.size(); ++i) {
      EXPECT_TRUE(t.at(i, i).is_zero());
      for (std::size_t j = 0; j < t.size(); ++j) {
        EXPECT_EQ(t.at(i, j), t.at(j, i));
        EXPECT_GE(t.at(i, j), Scalar(0));
        // Only coordinates constant along the line separate the cosets.
        IntVec a = m.to_vector(t.representatives[i]), b = m.to_vector(t.representatives[j]);
        std::int64_t expect = 0;
        for (std::size_t c = 0; c < 2; ++c)
          if (v[c] == 0) expect += std::llabs(a[c] - b[c]);
        EXPECT_EQ(t.at(i, j), Scalar(expect));
      }
    }
  }
}

TEST(Dispersal, FreeGroupTable) {
  auto m = GroupModel::free_group(2);
  TableOptions o;
  o.radius = 2;
  o.truncation = 4;
  auto t = coset_distance_table(tree_wallspace(2), m, SubgroupSpec({m.parse("a")}), tree_point({}), o);
  std::size_t base = t.size(), bh = t.size();
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.representatives[i].is_identity()) base = i;
    if (t.representatives[i] == m.parse("b")) bh = i;
  }
  ASSERT_LT(base, t.size());
  ASSERT_LT(bh, t.size());
  EXPECT_EQ(t.at(base, bh), Scalar(1));
}

TEST(Dispersal, ProfileExamples) {
  auto t = line_table(8);
  auto p = dispersal_profile(t, {Scalar(0), Scalar(3)});
  EXPECT_EQ(p.clique[0], 1u);
  EXPECT_EQ(p.n[0], 2u);
  EXPECT_EQ(p.clique[1], 4u);
  EXPECT_EQ(p.n[1], 5u);
  EXPECT_TRUE(dispersal_profile(t, {}).n.empty());
}

TEST(DispersalProperty, ProfilesAreMonotone) {
  auto m = GroupModel::free_group(2);
  TableOptions o;
  o.radius = 3;
  o.truncation = 4;
  auto t = coset_distance_table(tree_wallspace(2), m, SubgroupSpec({m.parse("a")}), tree_point({}), o);
  std::vector<Scalar> grid;
  for (int d = 0; d <= 6; ++d) grid.push_back(d);
  auto p = dispersal_profile(t, grid);
  for (std::size_t i = 1; i < grid.size(); ++i) EXPECT_GE(p.n[i], p.n[i - 1]);
  EXPECT_GE(p.n[0], 2u);
}

TEST(DispersalProperty, MaxCliqueMatchesBruteForce) {
  auto g = rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = static_cast<std::size_t>(testing::uniform(g, 1, 12));
    std::vector<std::uint64_t> adj(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (testing::uniform(g, 0, 1)) {
          adj[i] |= 1ull << j;
          adj[j] |= 1ull << i;
        }
    std::size_t best = 0;
    for (std::uint64_t s = 0; s < (1ull << n); ++s) {
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i)
        if (s >> i & 1) ok = (adj[i] | 1ull << i | ~s) == ~0ull;
      if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(s)));
    }
    EXPECT_EQ(max_clique(adj).size(), best);
  }
}

TEST(Dispersal, OversizedTablesAreRefused) {
  auto m = GroupModel::free_group(2);
  TableOptions o;
  o.radius = 4;
  o.truncation = 2;
  auto t = coset_distance_table(tree_wallspace(2), m, SubgroupSpec({m.parse("a")}), tree_point({}), o);
  ASSERT_GT(t.size(), kMaxCliqueTable);
  try {
    dispersal_profile(t, {Scalar(1)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TableTooLarge);
  }
}

TEST(Dispersal, UnstableTruncationIsFlagged) {
  auto m = GroupModel::free_abelian(2);
  TableOptions o;
  o.radius = 1;
  o.truncation = 4;
  SubgroupSpec h({m.from_vector({6, 0})});
  auto t = coset_distance_table(standard_cubing(2), m, h, kOrigin2, o);
  EXPECT_FALSE(t.stable);
  o.require_stable = true;
  try {
    coset_distance_table(standard_cubing(2), m, h, kOrigin2, o);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnstableTruncation);
  }
}

TEST(Dispersal, FiniteIndexBoundFormula) {
  EXPECT_EQ(finite_index_bound(10, 1, 2), Scalar(14));
  EXPECT_EQ(finite_index_bound(7, 0, 3), Scalar(7));
}

TEST(Dispersal, FiniteIndexImplication) {
  auto m = GroupModel::free_abelian(2);
  SubgroupSpec h({m.from_vector({1, 0})});
  SubgroupSpec sub({m.from_vector({2, 0}), m.from_vector({0, 1})});
  TableOptions o;
  o.radius = 5;
  for (std::int64_t big_k = 1; big_k <= 3; ++big_k) {
    auto r = check_finite_index_bound(standard_cubing(2), m, h, sub, kOrigin2, big_k, 1, 2, o);
    EXPECT_EQ(r.k, Scalar(big_k + 4));
    EXPECT_GT(r.premises, 0u);
    EXPECT_EQ(r.violations, 0u);
    EXPECT_TRUE(r.pass);
  }
}

TEST(Dispersal, TransitivityOnLatticeChain) {
  auto m = GroupModel::free_abelian(3);
  SubgroupSpec g2({m.from_vector({1, 0, 0}), m.from_vector({0, 1, 0})}), g3({m.from_vector({1, 0, 0})});
  TableOptions o;
  o.radius = 3;
  o.truncation = 4;
  std::vector<Scalar> grid{0, 1, 2};
  auto r = check_transitivity(standard_cubing(3), m, g2, g3, lattice_point({0, 0, 0}), grid, o);
  EXPECT_TRUE(r.pass());
  for (std::size_t i = 0; i < grid.size(); ++i) EXPECT_LE(r.clique32[i], r.clique31[i]);

  auto same = check_transitivity(standard_cubing(3), m, g2, g2, lattice_point({0, 0, 0}), grid, o);
  EXPECT_TRUE(same.pass());
  EXPECT_EQ(same.clique31, same.clique21);
}

TEST(Dispersal, IntersectionChecks) {
  auto m = GroupModel::free_abelian(2);
  SubgroupSpec h({m.from_vector({1, 0})});
  TableOptions o;
  o.radius = 3;
  std::vector<Scalar> grid{0, 1, 2};
  auto r = check_intersection(standard_cubing(2), m, SubgroupSpec({m.from_vector({2, 0}), m.from_vector({0, 1})}), h, kOrigin2, grid, o);
  EXPECT_TRUE(r.pass());
  auto whole = check_intersection(standard_cubing(2), m, SubgroupSpec::whole(m), h, kOrigin2, grid, o);
  EXPECT_TRUE(whole.pass());
  EXPECT_EQ(whole.clique_inner, whole.clique_outer);

  auto f = GroupModel::free_group(2);
  TableOptions of;
  of.radius = 3;
  of.truncation = 4;
  auto tr = check_intersection(tree_wallspace(2), f, SubgroupSpec({f.parse("aa"), f.parse("b"), f.parse("abA")}),
                               SubgroupSpec({f.parse("a")}), tree_point({}), grid, of);
  EXPECT_TRUE(tr.pass());
}

TEST(Dispersal, BasepointDecomposition) {
  auto m = GroupModel::free_abelian(2);
  auto w = standard_cubing(2);
  SubgroupSpec h({m.from_vector({1, 0})});
  auto d = basepoint_decomposition(w, m, h, m.from_vector({0, 9}), kOrigin2, lattice_point({0, 5}), 6);
  EXPECT_TRUE(d.partition_ok);
  EXPECT_EQ(d.omega1 + d.omega2 + d.omega3, d.total);
  EXPECT_EQ(d.total, Scalar(9));
  EXPECT_EQ(d.omega2_bound, Scalar(10));
  EXPECT_LE(d.omega2, Scalar(10));
  EXPECT_EQ(d.m, Scalar(5));
  EXPECT_LE(d.omega3, Scalar(5));
  EXPECT_TRUE(d.omega2_ok);
  EXPECT_TRUE(d.omega3_ok);

  auto same = basepoint_decomposition(w, m, h, m.from_vector({0, 9}), kOrigin2, kOrigin2, 6);
  EXPECT_TRUE(same.omega2.is_zero());
  EXPECT_TRUE(same.omega3.is_zero());
  EXPECT_EQ(same.omega1, same.total);

  auto folner = folner_wallspace(2, default_folner_schedule(2, 3));
  try {
    basepoint_decomposition(folner, m, h, m.from_vector({0, 9}), kOrigin2, kOrigin2, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotCubeType);
  }
}

TEST(DispersalProperty, DecompositionPartitionsOnRandomInputs) {
  auto m = GroupModel::free_abelian(2);
  auto w = standard_cubing(2);
  auto g = rng(71);
  for (int trial = 0; trial < 25; ++trial) {
    IntVec v = testing::random_vector(g, 2, 1);
    if (v == IntVec{0, 0}) continue;
    auto d = basepoint_decomposition(w, m, SubgroupSpec({m.from_vector(v)}), m.from_vector(testing::random_vector(g, 2, 6)),
                                     lattice_point(testing::random_vector(g, 2, 2)), lattice_point(testing::random_vector(g, 2, 2)), 6);
    EXPECT_TRUE(d.partition_ok);
    EXPECT_EQ(d.omega1 + d.omega2 + d.omega3, d.total);
    EXPECT_TRUE(d.omega2_ok);
  }
}

}  // namespace
}  // namespace mwall
