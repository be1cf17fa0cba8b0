#include "support.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "gatelat/error.hpp"
#include "gatelat/parity.hpp"
#include "gatelat/path_space.hpp"

namespace fixtures {

namespace {

ShiftPtr shift_of(std::vector<std::string> vertices,
                  std::vector<RawEdge> edges) {
  return make_shift(RawGraph{std::move(vertices), std::move(edges)});
}

} // namespace

ShiftPtr full2() {
  static ShiftPtr s =
      shift_of({"v"}, {{"0", "v", "v"}, {"1", "v", "v"}});
  return s;
}

ShiftPtr full3() {
  static ShiftPtr s = shift_of(
      {"v"}, {{"0", "v", "v"}, {"1", "v", "v"}, {"2", "v", "v"}});
  return s;
}

ShiftPtr cg2() {
  static ShiftPtr s = shift_of({"a", "b"}, {{"aa", "a", "a"},
                                            {"ab", "a", "b"},
                                            {"ba", "b", "a"},
                                            {"bb", "b", "b"}});
  return s;
}

ShiftPtr gm() {
  static ShiftPtr s =
      shift_of({"1", "2"}, {{"e11", "1", "1"}, {"e12", "1", "2"},
                            {"e21", "2", "1"}});
  return s;
}

ShiftPtr two_cycle() {
  static ShiftPtr s =
      shift_of({"a", "b"}, {{"ab", "a", "b"}, {"ba", "b", "a"}});
  return s;
}

std::vector<int> edges_of(EdgeShift const &shift,
                          std::vector<std::string> const &names) {
  std::vector<int> out;
  for (auto const &n : names)
    out.push_back(*shift.find_edge(n));
  return out;
}

PeriodicConfiguration cfg(EdgeShift const &shift,
                          std::vector<std::string> const &names) {
  return {edges_of(shift, names)};
}

std::vector<int> cg2_path(std::string const &vertices) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
    names.push_back(vertices.substr(i, 2));
  return edges_of(*cg2(), names);
}

Gate chi() {
  auto s = cg2();
  GateTable t;
  int a = *s->find_vertex("a"), b = *s->find_vertex("b");
  t[{a, a}] = {{cg2_path("aaa"), cg2_path("aba")},
               {cg2_path("aba"), cg2_path("aaa")}};
  t[{a, b}] = {{cg2_path("aab"), cg2_path("abb")},
               {cg2_path("abb"), cg2_path("aab")}};
  return gate_from_table(s, {0, 1}, t);
}

Gate flip(ShiftPtr const &shift) {
  int zero = *shift->find_edge("0"), one = *shift->find_edge("1");
  return gate_from_function(shift, {0, 0}, [=](std::span<int> w) {
    if (w[0] == zero)
      w[0] = one;
    else if (w[0] == one)
      w[0] = zero;
  });
}

CA complement() {
  return ca_from_function(full2(), 1, {0, 0},
                          [](int, std::span<int const> w) { return 1 - w[0]; });
}

CA xor_rule() {
  return ca_from_function(full2(), 1, {0, 1}, [](int, std::span<int const> w) {
    return w[0] ^ w[1];
  });
}

CA cg2_relabel() {
  auto s = cg2();
  return ca_from_function(s, 1, {0, 0}, [s](int, std::span<int const> w) {
    std::string name = s->edge_name(w[0]);
    for (char &c : name)
      c = c == 'a' ? 'b' : 'a';
    return *s->find_edge(name);
  });
}

ShiftPtr random_graph(std::mt19937 &rng, int max_vertices) {
  for (;;) {
    int nv = std::uniform_int_distribution<int>(1, max_vertices)(rng);
    RawGraph raw;
    for (int v = 0; v < nv; ++v)
      raw.vertices.push_back("q" + std::to_string(v));
    std::uniform_int_distribution<int> mult(0, 5);
    int id = 0;
    for (int a = 0; a < nv; ++a)
      for (int b = 0; b < nv; ++b) {
        // mostly 0 or 1 edges, sometimes 2
        int m = mult(rng);
        int count = m < 3 ? 0 : m < 5 ? 1 : 2;
        for (int k = 0; k < count; ++k)
          raw.edges.push_back({"e" + std::to_string(id++), raw.vertices[a],
                               raw.vertices[b]});
      }
    try {
      return make_shift(raw);
    } catch (Error const &) {
    }
  }
}

Perm random_perm(std::mt19937 &rng, unsigned n) {
  std::vector<unsigned> images(n);
  std::iota(images.begin(), images.end(), 0u);
  std::shuffle(images.begin(), images.end(), rng);
  return Perm(images);
}

Gate random_gate(std::mt19937 &rng, ShiftPtr const &shift, Interval support,
                 bool even) {
  auto space = path_space(shift, support.length());
  std::map<Context, Perm> perms;
  for (auto const &blk : context_blocks(*space)) {
    auto n = static_cast<unsigned>(blk.ranks.size());
    Perm p = random_perm(rng, n);
    if (even && !p.is_even())
      p = Perm::from_cycles(n, {{0, 1}}) * p;
    perms.emplace(blk.ctx, p);
  }
  return gate_from_perms(shift, support, perms);
}

GateLattice random_lattice(std::mt19937 &rng, ShiftPtr const &shift,
                           int max_period) {
  int n = std::uniform_int_distribution<int>(1, max_period)(rng);
  int len = std::uniform_int_distribution<int>(1, n)(rng);
  int s = std::uniform_int_distribution<int>(-1, 1)(rng);
  int j = std::uniform_int_distribution<int>(0, n - 1)(rng);
  return make_lattice(random_gate(rng, shift, {s, s + len - 1}), n, j);
}

LatticeWord random_word(std::mt19937 &rng, ShiftPtr const &shift,
                        int max_len, int max_period) {
  LatticeWord w{shift, {}};
  int len = std::uniform_int_distribution<int>(1, max_len)(rng);
  for (int k = 0; k < len; ++k)
    w.factors.push_back({random_lattice(rng, shift, max_period),
                         std::uniform_int_distribution<int>(0, 1)(rng) ? 1
                                                                        : -1});
  return w;
}

} // namespace fixtures

namespace oracle {

std::vector<std::vector<int>> all_paths(EdgeShift const &shift, int n) {
  std::vector<std::vector<int>> out;
  int ne = shift.num_edges();
  std::vector<int> word(n, 0);
  for (;;) {
    bool ok = true;
    for (int i = 0; i + 1 < n; ++i)
      ok = ok && shift.dst(word[i]) == shift.src(word[i + 1]);
    if (ok)
      out.push_back(word);
    int i = n - 1;
    while (i >= 0 && ++word[i] == ne)
      word[i--] = 0;
    if (i < 0)
      return out;
  }
}

namespace {

// vertices reachable from v by a path of exactly m edges
std::set<int> reach(EdgeShift const &shift, int v, int m) {
  std::set<int> cur{v};
  for (int k = 0; k < m; ++k) {
    std::set<int> next;
    for (int u : cur)
      for (int e : shift.out_edges(u))
        next.insert(shift.dst(e));
    cur = std::move(next);
  }
  return cur;
}

} // namespace

std::optional<int> gluing_length(EdgeShift const &shift, int max_m) {
  std::vector<std::vector<int>> words;
  for (int len = 1; len <= 3; ++len)
    for (auto &w : all_paths(shift, len))
      words.push_back(w);
  for (int m = 1; m <= max_m; ++m) {
    bool all = true;
    for (auto const &u : words) {
      auto r = reach(shift, shift.dst(u.back()), m);
      for (auto const &v : words)
        if (!r.count(shift.src(v.front()))) {
          all = false;
          break;
        }
      if (!all)
        break;
    }
    if (all)
      return m;
  }
  return std::nullopt;
}

std::optional<int> even_filling_length(EdgeShift const &shift, int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    std::map<std::pair<int, int>, int> counts;
    for (auto const &p : all_paths(shift, n))
      ++counts[{shift.src(p.front()), shift.dst(p.back())}];
    if (std::all_of(counts.begin(), counts.end(),
                    [](auto const &kv) { return kv.second % 2 == 0; }))
      return n;
  }
  return std::nullopt;
}

int sign_by_application(Gate const &g, Context ctx) {
  auto const &shift = g.shift();
  int len = g.support().length();
  std::vector<std::vector<int>> fills;
  for (auto const &p : all_paths(shift, len))
    if (shift.src(p.front()) == ctx.left && shift.dst(p.back()) == ctx.right)
      fills.push_back(p);
  std::vector<bool> seen(fills.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < fills.size(); ++i) {
    if (seen[i])
      continue;
    int length = 0;
    std::size_t k = i;
    while (!seen[k]) {
      seen[k] = true;
      ++length;
      PathPattern out = apply_gate(g, PathPattern{g.support().lo, fills[k]});
      k = static_cast<std::size_t>(
          std::find(fills.begin(), fills.end(), out.edges) - fills.begin());
    }
    if (length % 2 == 0)
      sign = -sign;
  }
  return sign;
}

bool every_even_perm_is_commutator(unsigned n) {
  std::vector<Perm> all;
  std::vector<unsigned> images(n);
  std::iota(images.begin(), images.end(), 0u);
  do
    all.push_back(Perm(images));
  while (std::next_permutation(images.begin(), images.end()));
  // one representative per cycle type
  std::map<std::vector<unsigned>, Perm> reps;
  for (auto const &p : all)
    if (p.is_even())
      reps.emplace(p.cycle_type(), p);
  for (auto const &[type, p] : reps) {
    bool found = false;
    for (std::size_t a = 0; a < all.size() && !found; ++a) {
      Perm ai = all[a].inverse();
      for (std::size_t b = 0; b < all.size() && !found; ++b) {
        // a^-1 b^-1 a b, written out by images
        auto const &bb = all[b].images();
        auto const &aa = all[a].images();
        auto bi = all[b].inverse().images();
        bool eq = true;
        for (unsigned x = 0; x < n && eq; ++x)
          eq = ai[bi[aa[bb[x]]]] == p[x];
        found = eq;
      }
    }
    if (!found)
      return false;
  }
  return true;
}

std::vector<Perm> normal_closure(Perm const &p) {
  unsigned n = p.degree();
  std::vector<Perm> alt;
  std::vector<unsigned> images(n);
  std::iota(images.begin(), images.end(), 0u);
  do {
    Perm a(images);
    if (a.is_even())
      alt.push_back(a);
  } while (std::next_permutation(images.begin(), images.end()));
  std::set<Perm> gens;
  for (auto const &a : alt)
    gens.insert(a.inverse() * p * a);
  std::set<Perm> group{Perm(n)};
  std::vector<Perm> frontier{Perm(n)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (auto const &x : frontier)
      for (auto const &g : gens)
        for (Perm y : {x * g, x * g.inverse()})
          if (group.insert(y).second)
            next.push_back(y);
    frontier = std::move(next);
  }
  return {group.begin(), group.end()};
}

PeriodicConfiguration ca_apply_direct(CA const &f,
                                      PeriodicConfiguration const &x) {
  int P = x.period();
  Interval nb = f.neighborhood();
  PeriodicConfiguration y = x;
  std::vector<int> window(nb.length());
  for (int i = 0; i < P; ++i) {
    for (int k = nb.lo; k <= nb.hi; ++k)
      window[k - nb.lo] = x.edges[((i + k) % P + P) % P];
    y.edges[i] = f.eval(i, window);
  }
  return y;
}

PeriodicConfiguration lattice_apply_direct(GateLattice const &lat,
                                           PeriodicConfiguration const &x) {
  PeriodicConfiguration y = x;
  for (int k = lat.offset; k < x.period(); k += lat.period)
    y = apply_gate(lat.gate, y, k);
  return y;
}

} // namespace oracle
