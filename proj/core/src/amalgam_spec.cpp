#include "mwall/amalgam_spec.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "mwall/cube.hpp"
#include "mwall/errors.hpp"

namespace mwall {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  fail(ErrorCode::ParseError, where + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) bad(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) bad(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string text_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_string()) bad(where + "." + key, "expected a string");
  return v.get<std::string>();
}

Scalar scalar_of(const json& v, const std::string& where) {
  try {
    if (v.is_number_integer()) return Scalar(v.get<std::int64_t>());
    if (v.is_number()) return Scalar::parse(v.dump());
    if (v.is_string()) return Scalar::parse(v.get<std::string>());
  } catch (const Error& e) {
    bad(where, e.what());
  }
  bad(where, "expected a number or a rational string");
}

IntVec int_vector(const json& v, const std::string& where) {
  if (!v.is_array()) bad(where, "expected an integer array");
  IntVec out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number_integer()) bad(where + "[" + std::to_string(i) + "]", "expected an integer");
    out.push_back(v[i].get<std::int64_t>());
  }
  return out;
}

IntMat int_matrix(const json& v, const std::string& where) {
  if (!v.is_array()) bad(where, "expected an array of integer arrays");
  IntMat out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(int_vector(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

LocalElement local_of(const json& v, const VertexSpec& vs, const std::string& where) {
  if (vs.kind == VertexKind::FreeAbelian) {
    IntVec x = int_vector(v, where);
    if (x.size() != static_cast<std::size_t>(vs.rank)) bad(where, "expected " + std::to_string(vs.rank) + " entries");
    return x;
  }
  if (!v.is_string()) bad(where, "expected a word");
  try {
    return words::parse(v.get<std::string>(), vs.rank);
  } catch (const Error& e) {
    bad(where, e.what());
  }
}

json local_to_json(const LocalElement& e, int rank) {
  if (const auto* v = std::get_if<IntVec>(&e)) return *v;
  (void)rank;
  return words::format(std::get<Word>(e));
}

json scalar_to_json(const Scalar& s) {
  if (s.is_small() && s.is_integer()) return s.to_int64();
  return s.str();
}

}  // namespace

int GraphOfGroupsSpec::vertex_index(const std::string& id) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].id == id) return static_cast<int>(i);
  return -1;
}

GraphOfGroupsSpec parse_spec(const json& doc) {
  GraphOfGroupsSpec s;
  if (!doc.is_object()) bad("$", "expected an object");
  if (doc.contains("name")) s.name = text_field(doc, "name", "$");
  const json& graph = field(doc, "graph", "$");
  const json& verts = field(graph, "vertices", "$.graph");
  if (!verts.is_array() || verts.empty()) bad("$.graph.vertices", "graph has no vertices");
  for (std::size_t i = 0; i < verts.size(); ++i) {
    std::string where = "$.graph.vertices[" + std::to_string(i) + "]";
    const json& jv = verts[i];
    VertexSpec v;
    v.id = text_field(jv, "id", where);
    if (s.vertex_index(v.id) >= 0) bad(where, "duplicate vertex id '" + v.id + "'");
    std::string kind = text_field(jv, "kind", where);
    if (kind == "free_abelian")
      v.kind = VertexKind::FreeAbelian;
    else if (kind == "free")
      v.kind = VertexKind::Free;
    else
      bad(where + ".kind", "unknown kind '" + kind + "'");
    const json& rank = field(jv, "rank", where);
    if (!rank.is_number_integer() || rank.get<int>() < 1) bad(where + ".rank", "expected a positive integer");
    v.rank = rank.get<int>();
    if (jv.contains("extra_factors")) {
      const json& ef = jv["extra_factors"];
      if (!ef.is_array()) bad(where + ".extra_factors", "expected an array");
      if (!ef.empty() && v.kind != VertexKind::FreeAbelian)
        bad(where + ".extra_factors", "extra factors need a free abelian vertex");
      for (std::size_t k = 0; k < ef.size(); ++k) {
        std::string fw = where + ".extra_factors[" + std::to_string(k) + "]";
        DualFactor f;
        f.subgroup = int_matrix(field(ef[k], "subgroup", fw), fw + ".subgroup");
        f.complement = int_matrix(field(ef[k], "complement", fw), fw + ".complement");
        v.extra_factors.push_back(std::move(f));
      }
    }
    if (jv.contains("scale")) {
      v.scale = scalar_of(jv["scale"], where + ".scale");
      if (v.scale.sign() <= 0) bad(where + ".scale", "scale must be positive");
    }
    s.vertices.push_back(std::move(v));
  }
  const json& edges = field(graph, "edges", "$.graph");
  if (!edges.is_array()) bad("$.graph.edges", "expected an array");
  std::set<std::pair<int, int>> seen;
  std::set<std::string> edge_ids;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::string where = "$.graph.edges[" + std::to_string(i) + "]";
    EdgeSpec e;
    e.id = text_field(edges[i], "id", where);
    if (!edge_ids.insert(e.id).second) bad(where, "duplicate edge id '" + e.id + "'");
    const json& ends = field(edges[i], "ends", where);
    if (!ends.is_array() || ends.size() != 2) bad(where + ".ends", "expected two edge ends");
    for (int k = 0; k < 2; ++k) {
      std::string ew = where + ".ends[" + std::to_string(k) + "]";
      const json& je = ends[static_cast<std::size_t>(k)];
      EdgeEndSpec end;
      std::string vid = text_field(je, "vertex", ew);
      end.vertex = s.vertex_index(vid);
      if (end.vertex < 0) bad(ew + ".vertex", "unknown vertex '" + vid + "'");
      const VertexSpec& vs = s.vertices[static_cast<std::size_t>(end.vertex)];
      end.generator_image = local_of(field(je, "generator_image", ew), vs, ew + ".generator_image");
      if (je.contains("basepoint"))
        end.basepoint = local_of(je["basepoint"], vs, ew + ".basepoint");
      else if (vs.kind == VertexKind::FreeAbelian)
        end.basepoint = IntVec(static_cast<std::size_t>(vs.rank), 0);
      else
        end.basepoint = Word{};
      end.rho = je.contains("rho") ? scalar_of(je["rho"], ew + ".rho") : Scalar(1);
      e.ends[k] = std::move(end);
    }
    int a = e.ends[0].vertex, b = e.ends[1].vertex;
    if (a == b) bad(where, "graph must be simplicial (loop edge)");
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second) bad(where, "graph must be simplicial (multiple edge)");
    s.edges.push_back(std::move(e));
  }
  if (doc.contains("base")) {
    std::string b = text_field(doc, "base", "$");
    s.base = s.vertex_index(b);
    if (s.base < 0) bad("$.base", "unknown vertex '" + b + "'");
  }
  // Connectivity.
  std::vector<int> comp(s.vertices.size());
  for (std::size_t i = 0; i < comp.size(); ++i) comp[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (comp[static_cast<std::size_t>(x)] != x) x = comp[static_cast<std::size_t>(x)];
    return x;
  };
  for (const auto& e : s.edges) comp[static_cast<std::size_t>(find(e.ends[0].vertex))] = find(e.ends[1].vertex);
  for (std::size_t i = 0; i < comp.size(); ++i)
    if (find(static_cast<int>(i)) != find(0)) bad("$.graph", "graph must be connected");
  return s;
}

GraphOfGroupsSpec parse_spec_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::ParseError, "byte " + std::to_string(e.byte) + ": malformed JSON");
  }
  return parse_spec(doc);
}

GraphOfGroupsSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidArgument, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_spec_text(buf.str());
}

json spec_to_json(const GraphOfGroupsSpec& s) {
  json verts = json::array();
  for (const auto& v : s.vertices) {
    json jv{{"id", v.id}, {"kind", v.kind == VertexKind::FreeAbelian ? "free_abelian" : "free"}, {"rank", v.rank}};
    if (!v.extra_factors.empty()) {
      json ef = json::array();
      for (const auto& f : v.extra_factors) ef.push_back({{"subgroup", f.subgroup}, {"complement", f.complement}});
      jv["extra_factors"] = ef;
    }
    if (v.scale != Scalar(1)) jv["scale"] = scalar_to_json(v.scale);
    verts.push_back(jv);
  }
  json edges = json::array();
  for (const auto& e : s.edges) {
    json ends = json::array();
    for (const auto& end : e.ends) {
      int rank = s.vertices[static_cast<std::size_t>(end.vertex)].rank;
      ends.push_back({{"vertex", s.vertices[static_cast<std::size_t>(end.vertex)].id},
                      {"generator_image", local_to_json(end.generator_image, rank)},
                      {"basepoint", local_to_json(end.basepoint, rank)},
                      {"rho", scalar_to_json(end.rho)}});
    }
    edges.push_back({{"id", e.id}, {"ends", ends}});
  }
  json out{{"graph", {{"vertices", verts}, {"edges", edges}}}, {"base", s.vertices.at(static_cast<std::size_t>(s.base)).id}};
  if (!s.name.empty()) out["name"] = s.name;
  return out;
}

GroupModel vertex_model(const VertexSpec& v) {
  return v.kind == VertexKind::FreeAbelian ? GroupModel::free_abelian(v.rank) : GroupModel::free_group(v.rank);
}

MeasuredWallspace vertex_wallspace(const VertexSpec& v) {
  MeasuredWallspace w = v.kind == VertexKind::FreeAbelian ? standard_cubing(v.rank) : tree_wallspace(v.rank);
  for (const auto& f : v.extra_factors) {
    DualComplex dc = dual_cube_complex({v.rank, f.subgroup, f.complement});
    for (const auto& wf : dc.wallspace.families()) w.add_family(wf.family, wf.weight);
  }
  return v.scale == Scalar(1) ? w : scale(w, v.scale);
}

GroupElement local_element(const GroupModel& m, const LocalElement& e) {
  if (const auto* v = std::get_if<IntVec>(&e)) return m.from_vector(*v);
  return m.from_word(std::get<Word>(e));
}

Point local_point(const VertexSpec& v, const LocalElement& e) {
  if (v.kind == VertexKind::FreeAbelian) return lattice_point(std::get<IntVec>(e));
  return tree_point(std::get<Word>(e));
}

}  // namespace mwall
