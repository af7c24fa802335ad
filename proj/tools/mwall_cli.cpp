#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mwall/amalgam.hpp"
#include "mwall/amalgam_validate.hpp"
#include "mwall/cube.hpp"
#include "mwall/dispersal.hpp"
#include "mwall/errors.hpp"
#include "mwall/hyperbolic.hpp"
#include "mwall/modular.hpp"

namespace {

using namespace mwall;
using nlohmann::json;

constexpr int kExitValidation = 2;
constexpr int kExitTruncation = 3;
constexpr int kExitNumeric = 4;
constexpr int kExitUnstable = 5;
constexpr int kExitUsage = 64;

struct RunConfig {
  std::string input;
  int radius = 4;
  int orbit = 6;
  double tol = 0.02;
  std::uint64_t seed = 1;
  std::string out;
  std::string format;
};

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::TruncationOverflow:
    case ErrorCode::UndecidableAtRadius:
    case ErrorCode::HostOutsideTruncation:
    case ErrorCode::TableTooLarge:
      return kExitTruncation;
    case ErrorCode::QuadratureDivergence:
    case ErrorCode::BisectionFailure:
      return kExitNumeric;
    case ErrorCode::UnstableTruncation:
      return kExitUnstable;
    default:
      return kExitValidation;
  }
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) fail(ErrorCode::InvalidArgument, "cannot write " + cfg.out);
  f << text;
}

std::string fixed(double v, int digits = 6) {
  std::ostringstream s;
  s << std::setprecision(digits) << std::fixed << v;
  return s.str();
}

int cmd_validate(const RunConfig& cfg) {
  auto report = validate(load_spec(cfg.input));
  emit(cfg, report.to_json().dump(2) + "\n");
  return report.ok() ? 0 : kExitValidation;
}

int cmd_modular(const RunConfig& cfg) {
  auto spec = load_spec(cfg.input);
  auto r = modular_weights(spec);
  json weights = json::object();
  for (std::size_t e = 0; e < spec.edges.size(); ++e) weights[spec.edges[e].id] = r.edge_weights[e].str();
  json cycles = json::array();
  for (const auto& c : r.cycles) {
    json path = json::array();
    for (const auto& d : c.path) path.push_back(spec.edges[static_cast<std::size_t>(d.edge)].id + (d.forward ? "+" : "-"));
    cycles.push_back({{"path", path}, {"product", c.product.str()}});
  }
  json out{{"name", spec.name}, {"edge_weights", weights}, {"cycles", cycles}, {"trivial", r.trivial}};
  if (r.trivial) {
    auto factors = monic_factors(spec, spec.base);
    json lambda = json::object();
    for (std::size_t v = 0; v < spec.vertices.size(); ++v) lambda[spec.vertices[v].id] = factors[v].str();
    out["scale_factors"] = lambda;
    out["monic_spec"] = spec_to_json(monic_rescale(spec, spec.base));
  }
  emit(cfg, out.dump(2) + "\n");
  return r.trivial ? 0 : kExitValidation;
}

int cmd_properness(const RunConfig& cfg) {
  auto spec = load_spec(cfg.input);
  AmalgamWallspace probe(spec, 0);
  AmalgamWallspace aw(spec, truncation_for_ball(probe, cfg.radius));
  auto rows = properness_profile(aw, aw.base_point(), cfg.radius);
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"n", r.n}, {"min_hash", r.min_value.str()}, {"argmin_word", r.argmin_word},
                     {"sphere_size", r.sphere_size}, {"max_tree_distance", r.max_tree_distance}});
    emit(cfg, json{{"name", spec.name}, {"rows", arr}}.dump(2) + "\n");
  } else {
    std::string text = "n,min_hash,argmin_word\n";
    for (const auto& r : rows) text += std::to_string(r.n) + "," + r.min_value.str() + "," + r.argmin_word + "\n";
    emit(cfg, text);
  }
  return 0;
}

LocalElement local_of(const json& v, int rank) {
  if (v.is_string()) return words::parse(v.get<std::string>(), rank);
  return v.get<IntVec>();
}

int cmd_dispersal(const RunConfig& cfg) {
  std::ifstream f(cfg.input);
  if (!f) fail(ErrorCode::InvalidArgument, "cannot read " + cfg.input);
  json doc;
  try {
    doc = json::parse(f);
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, e.what());
  }
  if (!doc.contains("subgroup")) fail(ErrorCode::ParseError, "$: missing field 'subgroup'");
  VertexSpec vs;
  const auto& g = doc.at("group");
  vs.kind = g.at("kind").get<std::string>() == "free" ? VertexKind::Free : VertexKind::FreeAbelian;
  vs.rank = g.at("rank").get<int>();
  GroupModel m = vertex_model(vs);
  MeasuredWallspace w = vertex_wallspace(vs);
  std::vector<GroupElement> gens;
  for (const auto& e : doc.at("subgroup")) gens.push_back(local_element(m, local_of(e, vs.rank)));
  Point x = local_point(vs, local_of(doc.value("basepoint", json(vs.kind == VertexKind::Free ? json("") : json(IntVec(static_cast<std::size_t>(vs.rank), 0)))), vs.rank));
  std::vector<Scalar> grid;
  for (const auto& d : doc.value("grid", json::array())) grid.push_back(d.is_string() ? Scalar::parse(d.get<std::string>()) : Scalar(d.get<std::int64_t>()));
  TableOptions opt;
  opt.radius = cfg.radius;
  opt.truncation = cfg.orbit;
  auto table = coset_distance_table(w, m, SubgroupSpec(gens), x, opt);
  auto profile = dispersal_profile(table, grid);
  if (cfg.format == "json") {
    json rows = json::array();
    for (std::size_t i = 0; i < grid.size(); ++i) rows.push_back({{"d", grid[i].str()}, {"n_of_d", profile.n[i]}});
    emit(cfg, json{{"cosets", table.size()}, {"stable", table.stable}, {"rows", rows}}.dump(2) + "\n");
  } else {
    std::string text = "d,n_of_d\n";
    for (std::size_t i = 0; i < grid.size(); ++i) text += grid[i].str() + "," + std::to_string(profile.n[i]) + "\n";
    emit(cfg, text);
    std::cerr << "stable=" << (table.stable ? "true" : "false") << "\n";
  }
  return table.stable ? 0 : kExitUnstable;
}

int cmd_hyp(const RunConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  auto measure = hyp::calibrate();
  std::uniform_real_distribution<double> crofton_d(0.5, 5.0), phi(0, 2 * M_PI), bound_d(2.0, 8.0);
  json crofton = json::array();
  int crofton_ok = 0;
  for (int i = 0; i < 20; ++i) {
    hyp::HPoint a = hyp::random_point(rng, 1.0);
    double d = crofton_d(rng);
    hyp::HPoint b = hyp::point_at(a, d, phi(rng));
    double got = hyp::crossing_measure(measure, a, b);
    double rel = std::abs(got - d) / d;
    bool ok = rel <= cfg.tol;
    crofton_ok += ok;
    crofton.push_back({{"distance", fixed(d)}, {"measure", fixed(got)}, {"relative_error", fixed(rel, 8)}, {"pass", ok}});
  }
  double theta0 = hyp::half_measure_angle(measure);
  double d0 = hyp::d0_of_theta0(theta0);
  json bound = json::array();
  int bound_ok = 0;
  for (int i = 0; i < 50; ++i) {
    auto [g1, g2] = hyp::random_disjoint_pair(rng, bound_d(rng));
    auto r = hyp::distance_bound_check(measure, g1, g2, theta0);
    bound_ok += r.pass;
    bound.push_back({{"distance", fixed(r.distance)}, {"separating_mass", fixed(r.lhs)}, {"bound", fixed(r.rhs)}, {"pass", r.pass}});
  }
  json out{{"calibration", fixed(measure.c, 8)},
           {"theta0", fixed(theta0)},
           {"d0", fixed(d0)},
           {"crofton", {{"pass", crofton_ok}, {"trials", 20}, {"pairs", crofton}}},
           {"distance_bound", {{"pass", bound_ok}, {"trials", 50}, {"pairs", bound}}}};
  emit(cfg, out.dump(2) + "\n");
  return (crofton_ok == 20 && bound_ok == 50) ? 0 : kExitNumeric;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Measured wallspace experiments"};
  app.require_subcommand(1);
  RunConfig cfg;
  auto add_common = [&](CLI::App* sub, int default_radius) {
    cfg.radius = default_radius;
    sub->add_option("--radius", cfg.radius, "ball or table radius")->check(CLI::NonNegativeNumber);
    sub->add_option("--orbit", cfg.orbit, "orbit truncation")->check(CLI::PositiveNumber);
    sub->add_option("--tol", cfg.tol, "relative tolerance")->check(CLI::Range(0.0, 0.2));
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--out", cfg.out, "output path");
    sub->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  };
  struct Command {
    const char* name;
    const char* help;
    bool needs_input;
    int radius;
    int (*run)(const RunConfig&);
  };
  const Command commands[] = {
      {"validate", "check a graph of groups spec", true, 4, cmd_validate},
      {"properness", "per-sphere minima of the amalgam pseudometric", true, 6, cmd_properness},
      {"dispersal", "dispersal profile of a subgroup", true, 3, cmd_dispersal},
      {"hyp", "hyperbolic plane calibration and bounds", false, 0, cmd_hyp},
      {"modular", "modular weights and monic rescaling", true, 0, cmd_modular},
  };
  std::vector<std::pair<CLI::App*, const Command*>> subs;
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    if (c.needs_input) sub->add_option("input", cfg.input, "input JSON")->required();
    subs.emplace_back(sub, &c);
  }
  for (auto& [sub, c] : subs) {
    sub->preparse_callback([&cfg, r = c->radius](std::size_t) { cfg.radius = r; });
    add_common(sub, c->radius);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }
  for (auto& [sub, c] : subs) {
    if (!sub->parsed()) continue;
    try {
      if (c->needs_input && !std::ifstream(cfg.input)) {
        std::cerr << "error: cannot read " << cfg.input << "\n";
        return kExitUsage;
      }
      return c->run(cfg);
    } catch (const Error& e) {
      std::cerr << "error: " << code_name(e.code()) << ": " << e.what() << "\n";
      return exit_code(e.code());
    }
  }
  return kExitUsage;
}
