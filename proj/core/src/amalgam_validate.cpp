#include "mwall/amalgam_validate.hpp"

#include <optional>

#include "mwall/chart.hpp"
#include "mwall/cube.hpp"
#include "mwall/dispersal.hpp"
#include "mwall/errors.hpp"
#include "mwall/families.hpp"
#include "mwall/modular.hpp"

namespace mwall {

bool ValidationReport::ok() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::vector<std::string> ValidationReport::codes() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.pass) out.push_back(c.code);
  return out;
}

nlohmann::json ValidationReport::to_json() const {
  nlohmann::json items = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json j{{"axiom", c.axiom}, {"pass", c.pass}, {"detail", c.detail}};
    if (!c.edge.empty()) {
      j["edge"] = c.edge;
      j["end"] = c.end;
    }
    if (!c.vertex.empty()) j["vertex"] = c.vertex;
    if (!c.pass) j["code"] = c.code;
    items.push_back(std::move(j));
  }
  return {{"name", name}, {"ok", ok()}, {"checks", items}};
}

namespace {

// Walls of one family that skim the orbit <z>x, by mass.
Scalar skim_mass(const MeasuredWallspace& w, std::size_t f, const GroupModel& m, const GroupElement& z,
                 const Point& x) {
  const auto& entry = w.families()[f];
  if (dynamic_cast<const LinearFamily*>(entry.family.get())) return 0;
  if (dynamic_cast<const TreeFamily*>(entry.family.get())) {
    // Edges on the bridge from x to the axis cut off x alone.
    auto split = words::cyclic_split(m.to_word(z));
    SubtreeHull axis;
    axis.rank = m.rank();
    axis.rays.push_back({split.conjugator, split.core});
    axis.rays.push_back({split.conjugator, words::inverse(split.core)});
    return entry.weight * Scalar(CubeHull(std::move(axis)).distance_to(x));
  }
  fail(ErrorCode::NotCubeType, "family " + std::to_string(f) + " has no exact skim classification");
}

std::size_t rational_rank(std::vector<std::vector<Scalar>> rows) {
  std::size_t rank = 0;
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      Scalar f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Cyclic subgroups of free groups always are; in Z^n the families constant
// on <z> must separate the cosets up to finitely many.
bool exactly_dispersed(const MeasuredWallspace& w, const GroupModel& m, const GroupElement& z, std::string& why) {
  if (m.kind() == GroupKind::Free) {
    why = "cyclic subgroup of a free group";
    return true;
  }
  IntVec zv = m.to_vector(z);
  std::vector<std::vector<Scalar>> constant;
  for (const auto& entry : w.families()) {
    const auto* lin = dynamic_cast<const LinearFamily*>(entry.family.get());
    if (!lin) fail(ErrorCode::NotCubeType, "expected linear wall families on a free abelian vertex");
    Scalar dot = 0;
    for (std::size_t i = 0; i < zv.size(); ++i) dot += lin->coefficients()[i] * Scalar(zv[i]);
    if (dot.is_zero()) constant.push_back(lin->coefficients());
  }
  std::size_t r = rational_rank(constant);
  why = "families constant on the orbit have rank " + std::to_string(r) + " of " + std::to_string(zv.size() - 1);
  return r + 1 == zv.size();
}

}  // namespace

ValidationReport validate(const GraphOfGroupsSpec& s, const ValidationOptions& options) {
  ValidationReport report;
  report.name = s.name;

  auto modular = modular_weights(s);
  {
    Check c{"", -1, "", "modular", "E_NONTRIVIAL_MODULAR", modular.trivial, "every cycle has weight 1"};
    for (const auto& cyc : modular.cycles) {
      if (cyc.product == Scalar(1)) continue;
      std::string path;
      for (const auto& d : cyc.path) path += (path.empty() ? "" : " ") + s.edges[static_cast<std::size_t>(d.edge)].id + (d.forward ? "+" : "-");
      c.detail = "cycle " + path + " has weight " + cyc.product.str();
      break;
    }
    report.checks.push_back(std::move(c));
  }

  for (const auto& edge : s.edges) {
    std::optional<Scalar> mass[2];
    for (int k = 0; k < 2; ++k) {
      const auto& end = edge.ends[k];
      const auto& vs = s.vertices[static_cast<std::size_t>(end.vertex)];
      auto add = [&](std::string axiom, std::string code, bool pass, std::string detail) {
        report.checks.push_back({edge.id, k, vs.id, std::move(axiom), std::move(code), pass, std::move(detail)});
      };
      GroupModel m = vertex_model(vs);
      MeasuredWallspace w = vertex_wallspace(vs);
      GroupElement z = local_element(m, end.generator_image);
      Point x = local_point(vs, end.basepoint);

      if (z.is_identity()) {
        add("infinite_cyclic", "E_EDGE_NOT_INFINITE_CYCLIC", false, "edge generator is the identity");
        continue;
      }
      add("infinite_cyclic", "E_EDGE_NOT_INFINITE_CYCLIC", true, "generator " + m.format(z));

      {
        Scalar skim = 0;
        std::string detail;
        try {
          for (std::size_t f = 0; f < w.family_count(); ++f) skim += skim_mass(w, f, m, z, x);
          detail = "skim mass " + skim.str();
        } catch (const Error& e) {
          skim = 1;
          detail = e.what();
        }
        add("skim", "E_SKIM_MASS", skim.is_zero(), detail);
      }

      Point zx = standard_action(m)(z, x);
      auto sep = w.separators(x, zx);
      try {
        CuttingChart chart(w, m, z, x);
        Scalar domain = w.measure(sep);
        IntervalSet image = chart.to_chart(sep);
        bool fits = domain == chart.period() && chart.glued_part(sep) == sep;
        bool aligned = image == IntervalSet::of(0, chart.period());
        std::string detail = "domain mass " + domain.str() + ", period " + chart.period().str() + ", chart image " + image.str();
        add("fundamental_domain", "E_FUNDOM", fits && aligned, detail);
        mass[k] = chart.period();
      } catch (const Error& e) {
        add("fundamental_domain", "E_FUNDOM", false, e.what());
      }

      try {
        SubgroupSpec h({z});
        TableOptions inner;
        inner.radius = options.inner_radius;
        // The orbit needs a few translates of x by z itself.
        inner.truncation = options.truncation + static_cast<int>(m.word_length(z).value_or(0));
        TableOptions outer = inner;
        outer.radius = options.outer_radius;
        auto t_in = coset_distance_table(w, m, h, x, inner);
        auto t_out = coset_distance_table(w, m, h, x, outer);
        if (!t_in.stable || !t_out.stable) {
          add("dispersed", "E_DISPERSAL_UNSTABLE", false, "coset distances change when the orbit truncation grows");
        } else {
          auto a = dispersal_profile(t_in, {options.probe}).clique.front();
          auto b = dispersal_profile(t_out, {options.probe}).clique.front();
          std::string why;
          bool dispersed = exactly_dispersed(w, m, z, why);
          add("dispersed", "E_NOT_DISPERSED", dispersed,
              why + "; clique at d=" + options.probe.str() + ": " + std::to_string(a) + " at radius " +
                  std::to_string(options.inner_radius) + ", " + std::to_string(b) + " at radius " +
                  std::to_string(options.outer_radius));
        }
      } catch (const Error& e) {
        add("dispersed", "E_DISPERSAL_UNSTABLE", false, e.what());
      }
    }

    if (mass[0] && mass[1]) {
      const Scalar& r0 = edge.ends[0].rho;
      const Scalar& r1 = edge.ends[1].rho;
      bool consistent = *mass[0] * r1 == *mass[1] * r0;
      report.checks.push_back({edge.id, -1, "", "edge_scale", "E_FUNDOM", consistent,
                               "domain masses " + mass[0]->str() + ", " + mass[1]->str() + " against rho " + r0.str() +
                                   ", " + r1.str()});
    }
  }
  return report;
}

}  // namespace mwall
