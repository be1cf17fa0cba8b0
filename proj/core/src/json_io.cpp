#include "gatelat/json_io.hpp"

#include <cstdio>
#include <map>

#include "gatelat/error.hpp"

namespace gatelat {

namespace {

void require(bool cond, std::string const &what) {
  if (!cond)
    fail(ErrorCode::ParseError, what);
}

std::string const &as_string(json const &j, std::string const &what) {
  require(j.is_string(), what + " must be a string");
  return j.get_ref<std::string const &>();
}

int as_int(json const &j, std::string const &what) {
  require(j.is_number_integer(), what + " must be an integer");
  return j.get<int>();
}

} // namespace

RawGraph graph_from_json(json const &j) {
  require(j.is_object(), "graph must be an object");
  require(j.contains("vertices") && j["vertices"].is_array(),
          "graph needs a 'vertices' array");
  require(j.contains("edges") && j["edges"].is_array(),
          "graph needs an 'edges' array");
  RawGraph g;
  for (auto const &v : j["vertices"])
    g.vertices.push_back(as_string(v, "vertex id"));
  for (auto const &e : j["edges"]) {
    require(e.is_object() && e.contains("id") && e.contains("src") &&
                e.contains("dst"),
            "edge needs 'id', 'src' and 'dst'");
    g.edges.push_back({as_string(e["id"], "edge id"),
                       as_string(e["src"], "edge src"),
                       as_string(e["dst"], "edge dst")});
  }
  return g;
}

json to_json(EdgeShift const &shift) {
  json edges = json::array();
  for (int e = 0; e < shift.num_edges(); ++e)
    edges.push_back({{"id", shift.edge_name(e)},
                     {"src", shift.vertex_name(shift.src(e))},
                     {"dst", shift.vertex_name(shift.dst(e))}});
  json vertices = json::array();
  for (int v = 0; v < shift.num_vertices(); ++v)
    vertices.push_back(shift.vertex_name(v));
  return {{"vertices", vertices}, {"edges", edges}};
}

std::vector<int> path_from_json(EdgeShift const &shift, json const &j) {
  require(j.is_array(), "path must be an array of edge ids");
  std::vector<int> path;
  for (auto const &e : j) {
    auto const &name = as_string(e, "edge id");
    auto idx = shift.find_edge(name);
    if (!idx)
      fail(ErrorCode::UnknownEdge, "unknown edge '" + name + "'");
    path.push_back(*idx);
  }
  if (!shift.is_path(path))
    fail(ErrorCode::EndpointMismatch, "edge sequence is not a path");
  return path;
}

json path_to_json(EdgeShift const &shift, std::span<int const> path) {
  json out = json::array();
  for (int e : path)
    out.push_back(shift.edge_name(e));
  return out;
}

Context context_from_json(EdgeShift const &shift, json const &left,
                          json const &right) {
  auto l = shift.find_vertex(as_string(left, "context left"));
  auto r = shift.find_vertex(as_string(right, "context right"));
  if (!l || !r)
    fail(ErrorCode::UnknownVertex, "context names an unknown vertex");
  return {*l, *r};
}

Interval interval_from_json(json const &j) {
  require(j.is_array() && j.size() == 2, "interval must be [lo, hi]");
  Interval iv{as_int(j[0], "interval bound"), as_int(j[1], "interval bound")};
  require(iv.lo <= iv.hi, "interval must have lo <= hi");
  return iv;
}

json to_json(Interval iv) { return json::array({iv.lo, iv.hi}); }

Gate gate_from_json(ShiftPtr const &shift, json const &j) {
  require(j.is_object() && j.contains("support"), "gate needs a 'support'");
  Interval support = interval_from_json(j["support"]);
  GateTable table;
  if (j.contains("contexts")) {
    require(j["contexts"].is_array(), "'contexts' must be an array");
    for (auto const &c : j["contexts"]) {
      require(c.is_object() && c.contains("left") && c.contains("right") &&
                  c.contains("perm"),
              "context entry needs 'left', 'right' and 'perm'");
      Context ctx = context_from_json(*shift, c["left"], c["right"]);
      require(c["perm"].is_array(), "'perm' must be an array of pairs");
      auto &pairs = table[ctx];
      for (auto const &pr : c["perm"]) {
        require(pr.is_array() && pr.size() == 2, "perm entry must be a pair");
        pairs.emplace_back(path_from_json(*shift, pr[0]),
                           path_from_json(*shift, pr[1]));
      }
    }
  }
  return gate_from_table(shift, support, table);
}

json to_json(Gate const &g) {
  auto const &shift = g.shift();
  json contexts = json::array();
  for (auto const &[ctx, pairs] : gate_table(g)) {
    json perm = json::array();
    for (auto const &[from, to] : pairs)
      perm.push_back(
          json::array({path_to_json(shift, from), path_to_json(shift, to)}));
    contexts.push_back({{"left", shift.vertex_name(ctx.left)},
                        {"right", shift.vertex_name(ctx.right)},
                        {"perm", perm}});
  }
  return {{"support", to_json(g.support())}, {"contexts", contexts}};
}

json to_json(ParityReport const &report, EdgeShift const &shift) {
  json rows = json::array();
  for (auto const &row : report.rows)
    rows.push_back({{"left", shift.vertex_name(row.ctx.left)},
                    {"right", shift.vertex_name(row.ctx.right)},
                    {"sign", row.sign}});
  return {{"support", to_json(report.support)},
          {"rows", rows},
          {"verdict", verdict_name(report.verdict)}};
}

CA ca_from_json(ShiftPtr const &shift, json const &j) {
  require(j.is_object() && j.contains("neighborhood") && j.contains("rule"),
          "automaton needs 'neighborhood' and 'rule'");
  int power = j.contains("power") ? as_int(j["power"], "power") : 1;
  require(power >= 1, "power must be positive");
  Interval nb = interval_from_json(j["neighborhood"]);
  require(j["rule"].is_array(), "'rule' must be an array");
  std::vector<std::map<std::vector<int>, int>> entries(power);
  for (auto const &r : j["rule"]) {
    require(r.is_object() && r.contains("in") && r.contains("out"),
            "rule entry needs 'in' and 'out'");
    int residue = r.contains("residue") ? as_int(r["residue"], "residue") : -1;
    auto in = path_from_json(*shift, r["in"]);
    auto out = shift->find_edge(as_string(r["out"], "rule output"));
    if (!out)
      fail(ErrorCode::UnknownEdge, "rule outputs an unknown edge");
    if (residue < 0) {
      for (auto &m : entries)
        m[in] = *out;
    } else {
      require(residue < power, "residue out of range");
      entries[residue][in] = *out;
    }
  }
  return ca_from_rule(shift, power, nb, entries);
}

json to_json(CA const &f) {
  auto const &shift = f.shift();
  json rule = json::array();
  f.space().for_each([&](std::span<int const> p, std::uint64_t r) {
    for (int t = 0; t < f.power(); ++t) {
      json entry = {{"in", path_to_json(shift, p)},
                    {"out", shift.edge_name(f.output(t, r))}};
      if (f.power() > 1)
        entry["residue"] = t;
      rule.push_back(std::move(entry));
    }
  });
  return {{"power", f.power()},
          {"neighborhood", to_json(f.neighborhood())},
          {"rule", rule}};
}

GateLattice lattice_from_json(ShiftPtr const &shift, json const &j) {
  require(j.is_object() && j.contains("gate") && j.contains("period"),
          "lattice needs 'gate' and 'period'");
  int period = as_int(j["period"], "period");
  int offset = j.contains("offset") ? as_int(j["offset"], "offset") : 0;
  return make_lattice(gate_from_json(shift, j["gate"]), period, offset);
}

json to_json(GateLattice const &lat) {
  return {{"gate", to_json(lat.gate)},
          {"period", lat.period},
          {"offset", lat.offset}};
}

json to_json(LatticeWord const &w) {
  json factors = json::array();
  for (auto const &f : w.factors)
    factors.push_back({{"lattice", to_json(f.lattice)}, {"exp", f.exp}});
  return {{"factors", factors}};
}

json to_json(Perm const &p) {
  json cycles = json::array();
  for (auto const &c : p.cycles())
    cycles.push_back(c);
  return cycles;
}

Perm perm_from_json(json const &j) {
  require(j.is_object() && j.contains("degree"),
          "permutation needs 'degree' and 'images' or 'cycles'");
  int degree = as_int(j["degree"], "degree");
  require(degree >= 0, "degree must be nonnegative");
  if (j.contains("images")) {
    auto images = j["images"].get<std::vector<unsigned>>();
    require(static_cast<int>(images.size()) == degree,
            "image list length must equal the degree");
    return Perm(std::move(images));
  }
  std::vector<std::vector<unsigned>> cycles;
  if (j.contains("cycles"))
    cycles = j["cycles"].get<std::vector<std::vector<unsigned>>>();
  return Perm::from_cycles(static_cast<unsigned>(degree), cycles);
}

json to_json(GenerationCertificate const &cert) {
  json terms = json::array();
  for (auto const &t : cert.terms)
    terms.push_back({{"conjugator", to_json(t.conjugator)}, {"exp", t.exp}});
  json supports = json::array();
  for (auto const &s : cert.supports)
    supports.push_back(to_json(s));
  return {{"terms", terms},
          {"verified", cert.verified},
          {"lhs_hash", hex64(cert.lhs_hash)},
          {"rhs_hash", hex64(cert.rhs_hash)},
          {"K", cert.K},
          {"power", cert.power},
          {"supports", supports}};
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

} // namespace gatelat
