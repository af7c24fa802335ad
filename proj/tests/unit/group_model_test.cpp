#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <set>

#include "mwall/amalgam.hpp"
#include "mwall/errors.hpp"
#include "mwall/graph_group.hpp"
#include "test_support.hpp"

namespace mwall {
namespace {

using testing::rng;

TEST(GroupModel, FreeAbelianMultiply) {
  auto m = GroupModel::free_abelian(2);
  auto p = m.multiply(m.from_vector({1, 2}), m.from_vector({3, -2}));
  EXPECT_EQ(m.to_vector(p), (IntVec{4, 0}));
}

TEST(GroupModel, FreeMultiplyReduces) {
  auto m = GroupModel::free_group(2);
  auto p = m.multiply(m.parse("ab"), m.parse("Ba"));
  EXPECT_EQ(m.to_word(p), (Word{1, 1}));
}

TEST(GroupModel, BallSizes) {
  EXPECT_EQ(ball(GroupModel::free_abelian(1), 2).size(), 5u);
  EXPECT_EQ(ball(GroupModel::free_group(2), 2).size(), 17u);
  EXPECT_EQ(ball(GroupModel::free_abelian(2), 1).size(), 5u);
  EXPECT_EQ(ball(GroupModel::free_abelian(3), 0).size(), 1u);
}

TEST(GroupModel, FreeSpheresGrowByThree) {
  auto m = GroupModel::free_group(2);
  auto entries = enumerate_ball(m, 4);
  std::array<std::size_t, 5> sphere{};
  for (const auto& e : entries) ++sphere[static_cast<std::size_t>(e.length)];
  EXPECT_EQ(sphere[0], 1u);
  for (std::size_t k = 1; k <= 4; ++k) EXPECT_EQ(sphere[k], 4u * static_cast<std::size_t>(std::pow(3, k - 1)));
}

TEST(GroupModel, BallCapOverflows) {
  EXPECT_THROW(
      {
        try {
          enumerate_ball(GroupModel::free_group(3), 8, 1000);
        } catch (const Error& e) {
          EXPECT_EQ(e.code(), ErrorCode::TruncationOverflow);
          throw;
        }
      },
      Error);
}

TEST(GroupModel, BallsAreNested) {
  for (auto m : {GroupModel::free_abelian(2), GroupModel::free_group(2)}) {
    for (int r = 0; r < 4; ++r) {
      auto small = ball(m, r), big = ball(m, r + 1);
      std::set<std::string> outer;
      for (const auto& g : big) outer.insert(m.format(g));
      for (const auto& g : small) EXPECT_TRUE(outer.count(m.format(g))) << m.format(g);
    }
  }
}

TEST(GroupModel, RejectsMalformedWords) {
  auto m = GroupModel::free_group(2);
  EXPECT_TRUE(m.from_word(Word{1, -1}).is_identity());
  EXPECT_THROW(m.parse("ac"), Error);
}

TEST(GroupModel, CosetRepresentativesOfLine) {
  auto m = GroupModel::free_abelian(2);
  auto reps = coset_representatives(m, SubgroupSpec({m.from_vector({1, 0})}), 2);
  std::set<IntVec> got;
  for (const auto& g : reps) got.insert(m.to_vector(g));
  EXPECT_EQ(got, (std::set<IntVec>{{0, -2}, {0, -1}, {0, 0}, {0, 1}, {0, 2}}));
}

TEST(GroupModel, CosetRepresentativesInFreeGroup) {
  auto m = GroupModel::free_group(2);
  auto reps = coset_representatives(m, SubgroupSpec({m.parse("a")}), 1);
  std::set<std::string> got;
  for (const auto& g : reps) got.insert(m.format(g));
  EXPECT_EQ(got, (std::set<std::string>{m.format(m.identity()), m.format(m.parse("b")), m.format(m.parse("B"))}));
}

TEST(GroupModel, WholeGroupHasOneCoset) {
  for (auto m : {GroupModel::free_abelian(2), GroupModel::free_group(2)}) {
    auto reps = coset_representatives(m, SubgroupSpec::whole(m), 3);
    ASSERT_EQ(reps.size(), 1u);
    EXPECT_TRUE(reps[0].is_identity());
  }
}

// Property: associativity and inverses on small balls.
TEST(GroupModelProperty, AssociativeWithInverses) {
  for (auto m : {GroupModel::free_abelian(2), GroupModel::free_group(2)}) {
    auto b = ball(m, 3);
    auto g = rng(17);
    for (int trial = 0; trial < 400; ++trial) {
      const auto& x = b[static_cast<std::size_t>(testing::uniform(g, 0, static_cast<std::int64_t>(b.size()) - 1))];
      const auto& y = b[static_cast<std::size_t>(testing::uniform(g, 0, static_cast<std::int64_t>(b.size()) - 1))];
      const auto& z = b[static_cast<std::size_t>(testing::uniform(g, 0, static_cast<std::int64_t>(b.size()) - 1))];
      EXPECT_EQ(m.multiply(m.multiply(x, y), z), m.multiply(x, m.multiply(y, z)));
    }
    for (const auto& x : ball(m, 4)) EXPECT_TRUE(m.multiply(x, m.invert(x)).is_identity());
  }
}

TEST(GroupModelProperty, CosetRepresentativesAreInequivalent) {
  auto g = rng(5);
  for (int trial = 0; trial < 6; ++trial) {
    auto m = trial % 2 ? GroupModel::free_group(2) : GroupModel::free_abelian(3);
    GroupElement z = trial % 2 ? m.from_word(testing::random_word(g, 2, 2)) : m.from_vector(testing::random_vector(g, 3, 2));
    if (z.is_identity()) continue;
    SubgroupSpec h({z});
    auto reps = coset_representatives(m, h, 2);
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j)
        EXPECT_FALSE(in_subgroup(m, h, m.multiply(m.invert(reps[i]), reps[j])));
  }
}

TEST(GroupModelProperty, SplitByCyclicRecombines) {
  auto m = GroupModel::free_group(2);
  auto z = m.parse("ab");
  for (const auto& g : ball(m, 4)) {
    auto s = split_by_cyclic(m, g, z);
    EXPECT_EQ(m.multiply(s.transversal, m.power(z, s.power)), g);
    EXPECT_EQ(split_by_cyclic(m, m.multiply(g, z), z).transversal, s.transversal);
  }
}

// Permutations of {0..5}; composition applies the right factor first.
using Perm = std::array<int, 6>;

Perm compose(const Perm& p, const Perm& q) {
  Perm r{};
  for (int i = 0; i < 6; ++i) r[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(q[static_cast<std::size_t>(i)])];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r{};
  for (int i = 0; i < 6; ++i) r[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])] = i;
  return r;
}

Perm identity_perm() { return {0, 1, 2, 3, 4, 5}; }

Perm power(const Perm& p, std::int64_t k) {
  Perm base = k < 0 ? inverse(p) : p, out = identity_perm();
  for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) out = compose(out, base);
  return out;
}

// A.x1 = B.x1 -> (0 1 2), A.x2 -> (3 4 5), B.x2 -> (3 4): a representation of
// the amalgam into S6 with nonabelian image.
struct Representation {
  Perm shared{1, 2, 0, 3, 4, 5};
  Perm a2{0, 1, 2, 4, 5, 3};
  Perm b2{0, 1, 2, 4, 3, 5};

  Perm of_generator(std::size_t i) const { return i == 1 ? a2 : i == 3 ? b2 : shared; }

  Perm of_element(const GraphOfGroupsGroup& gg, const GroupElement& g) const {
    GogPath p = gg.decode(g);
    Perm out = identity_perm();
    for (std::size_t i = 0; i < p.elems.size(); ++i) {
      int v = i == 0 ? p.start : gg.target(p.edges[i - 1]);
      IntVec c = gg.vertex_group(v).to_vector(p.elems[i]);
      out = compose(out, compose(power(shared, c[0]), power(v == 0 ? a2 : b2, c[1])));
    }
    return out;
  }
};

TEST(GroupModelProperty, AmalgamProductsMatchRepresentation) {
  auto spec = load_spec(testing::fixture("z2-amalgam.json"));
  AmalgamWallspace aw(spec, 0);
  const GroupModel& m = aw.group();
  ASSERT_EQ(m.generator_count(), 4u);
  Representation rep;
  auto g = rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    GroupElement x = m.identity();
    Perm expect = identity_perm();
    int len = static_cast<int>(testing::uniform(g, 0, 8));
    for (int k = 0; k < len; ++k) {
      auto i = static_cast<std::size_t>(testing::uniform(g, 0, 3));
      bool inv = testing::uniform(g, 0, 1);
      x = m.multiply(x, inv ? m.invert(m.generator(i)) : m.generator(i));
      expect = compose(expect, inv ? inverse(rep.of_generator(i)) : rep.of_generator(i));
    }
    EXPECT_TRUE(m.is_normal(x));
    EXPECT_EQ(rep.of_element(m.graph(), x), expect);
  }
}

TEST(GroupModelProperty, AmalgamAssociativeWithInverses) {
  auto spec = load_spec(testing::fixture("z2-amalgam.json"));
  AmalgamWallspace aw(spec, 0);
  const GroupModel& m = aw.group();
  auto b = ball(m, 2);
  auto g = rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    auto pick = [&] { return b[static_cast<std::size_t>(testing::uniform(g, 0, static_cast<std::int64_t>(b.size()) - 1))]; };
    auto x = pick(), y = pick(), z = pick();
    EXPECT_EQ(m.multiply(m.multiply(x, y), z), m.multiply(x, m.multiply(y, z)));
    EXPECT_TRUE(m.multiply(x, m.invert(x)).is_identity());
  }
  // The edge relation: A.x1 and B.x1 are the same element.
  EXPECT_EQ(m.generator(0), m.generator(2));
}

}  // namespace
}  // namespace mwall
