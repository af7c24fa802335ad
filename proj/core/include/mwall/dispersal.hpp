#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "mwall/group_model.hpp"
#include "mwall/wallspace.hpp"

namespace mwall {

using Action = std::function<Point(const GroupElement&, const Point&)>;

// Translation on Z^n coordinates, left multiplication on free-group trees.
Action standard_action(const GroupModel& m);

struct TableOptions {
  int radius = 4;      // coset representatives meet ball(radius)
  int truncation = 6;  // orbit sets use h in H with |h| <= truncation
  std::optional<SubgroupSpec> ambient;
  bool require_stable = false;
  std::size_t membership_budget = 20000;
};

// Truncated orbit {h x : h in H, |h| <= k}.
std::vector<Point> truncated_orbit(const GroupModel& m, const Action& act, const SubgroupSpec& h, const Point& x,
                                   int k, std::size_t membership_budget = 20000);

struct CosetDistanceTable {
  std::vector<GroupElement> representatives;
  std::vector<std::vector<Scalar>> values;
  int radius = 0;
  int truncation = 0;
  int check_truncation = 0;
  bool stable = true;

  std::size_t size() const { return representatives.size(); }
  const Scalar& at(std::size_t i, std::size_t j) const { return values[i][j]; }
};

CosetDistanceTable coset_distance_table(const MeasuredWallspace& w, const GroupModel& m, const SubgroupSpec& h,
                                        const Point& x, const TableOptions& options = {},
                                        const Action& act = nullptr);

inline constexpr std::size_t kMaxCliqueTable = 40;

struct DispersalProfile {
  std::vector<Scalar> grid;
  std::vector<std::size_t> clique;  // largest pairwise-within-d subset
  std::vector<std::size_t> n;       // clique + 1
};

DispersalProfile dispersal_profile(const CosetDistanceTable& t, const std::vector<Scalar>& grid);
// Largest subset of table indices pairwise within d.
std::vector<std::size_t> close_clique(const CosetDistanceTable& t, const Scalar& d);

Scalar finite_index_bound(const Scalar& big_k, std::int64_t r, std::int64_t dim);

struct FiniteIndexReport {
  Scalar k;
  std::size_t pairs = 0;
  std::size_t premises = 0;  // pairs with #(g_a H' x, g_b H' x) > k
  std::size_t violations = 0;
  bool pass = false;
};

// H' = H n G'. Checks, on the H' <= G' table, that # > k forces the
// corresponding H cosets to be more than K apart.
FiniteIndexReport check_finite_index_bound(const MeasuredWallspace& w, const GroupModel& m, const SubgroupSpec& h,
                                           const SubgroupSpec& finite_index, const Point& x, const Scalar& big_k,
                                           std::int64_t r, std::int64_t dim, const TableOptions& options = {},
                                           const Action& act = nullptr);

struct TransitivityReport {
  std::vector<Scalar> grid;
  std::vector<std::size_t> clique31, clique21, clique32;
  std::vector<std::size_t> classes;    // G2 cosets met by the largest G3 <= G1 clique
  std::vector<std::size_t> per_class;  // most G3 cosets of that clique inside one G2 coset
  bool composition_holds = true;
  bool converse_holds = true;
  bool pass() const { return composition_holds && converse_holds; }
};

// g3 <= g2 <= g1; g1 is the whole group.
TransitivityReport check_transitivity(const MeasuredWallspace& w, const GroupModel& m, const SubgroupSpec& g2,
                                      const SubgroupSpec& g3, const Point& x, const std::vector<Scalar>& grid,
                                      const TableOptions& options = {}, const Action& act = nullptr);

struct IntersectionReport {
  std::vector<Scalar> grid;
  std::vector<std::size_t> clique_inner, clique_outer;
  bool injective = true;
  bool bounded = true;
  bool pass() const { return injective && bounded; }
};

// H' = H n G' inside G'.
IntersectionReport check_intersection(const MeasuredWallspace& w, const GroupModel& m, const SubgroupSpec& sub,
                                      const SubgroupSpec& h, const Point& x, const std::vector<Scalar>& grid,
                                      const TableOptions& options = {}, const Action& act = nullptr);

struct OmegaDecomposition {
  Scalar omega1, omega2, omega3;
  Scalar total;         // #(Hx, gHx) on the truncation
  Scalar omega2_bound;  // #(x, y) + #(gx, gy)
  Scalar m;             // Hy inside N_m(Hx)
  bool omega2_ok = false;
  bool omega3_ok = false;  // omega3 <= 2m
  bool partition_ok = false;
};

OmegaDecomposition basepoint_decomposition(const MeasuredWallspace& w, const GroupModel& m, const SubgroupSpec& h,
                                           const GroupElement& g, const Point& x, const Point& y, int truncation,
                                           const Action& act = nullptr);

}  // namespace mwall
