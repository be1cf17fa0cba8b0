#include "gatelat/automaton.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "gatelat/error.hpp"
#include "gatelat/lattice.hpp"

namespace gatelat {

namespace {

int floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return static_cast<int>(q);
}

int mod(long a, long b) {
  long r = a % b;
  return static_cast<int>(r < 0 ? r + b : r);
}

} // namespace

CellularAutomaton::CellularAutomaton(ShiftPtr shift, int power,
                                     Interval neighborhood, Rule rule,
                                     Unchecked)
    : _shift(std::move(shift)), _power(power), _neighborhood(neighborhood),
      _space(path_space(_shift, neighborhood.length())),
      _rule(std::move(rule)) {}

CellularAutomaton make_ca_unchecked(ShiftPtr shift, int power,
                                    Interval neighborhood,
                                    CellularAutomaton::Rule rule) {
  return CellularAutomaton(std::move(shift), power, neighborhood,
                           std::move(rule), CellularAutomaton::Unchecked{});
}

CellularAutomaton::CellularAutomaton(ShiftPtr shift, int power,
                                     Interval neighborhood, Rule rule)
    : _shift(std::move(shift)), _power(power), _neighborhood(neighborhood),
      _rule(std::move(rule)) {
  if (power < 1)
    fail(ErrorCode::InvalidArgument, "power must be positive");
  if (neighborhood.length() < 1)
    fail(ErrorCode::InvalidArgument, "empty neighborhood");
  _space = path_space(_shift, neighborhood.length());
  if (static_cast<int>(_rule.size()) != power)
    fail(ErrorCode::PartialRule, "one rule table per residue required");
  int ne = _shift->num_edges();
  for (auto const &table : _rule) {
    if (table.size() != _space->size())
      fail(ErrorCode::PartialRule, "rule table is incomplete");
    for (auto out : table) {
      if (out < 0)
        fail(ErrorCode::PartialRule, "rule has a missing entry");
      if (out >= ne)
        fail(ErrorCode::InvalidImage, "rule outputs an unknown edge");
    }
  }
  // consecutive outputs must compose on every path one longer than a window
  PathSpace longer(_shift, neighborhood.length() + 1);
  int w = neighborhood.length();
  longer.for_each([&](std::span<int const> p, std::uint64_t) {
    for (int t = 0; t < power; ++t) {
      int a = _rule[t][_space->rank(p.first(w))];
      int b = _rule[(t + 1) % power][_space->rank(p.subspan(1))];
      if (_shift->dst(a) != _shift->src(b))
        fail(ErrorCode::InvalidImage,
             "outputs at consecutive positions do not compose");
    }
  });
}

CA CellularAutomaton::identity(ShiftPtr shift, int power) {
  std::vector<std::int32_t> table(shift->num_edges());
  std::iota(table.begin(), table.end(), 0);
  return make_ca_unchecked(std::move(shift), power, {0, 0},
                           Rule(power, table));
}

CA CellularAutomaton::shift_map(ShiftPtr shift, int k, int power) {
  std::vector<std::int32_t> table(shift->num_edges());
  std::iota(table.begin(), table.end(), 0);
  return make_ca_unchecked(std::move(shift), power, {k, k},
                           Rule(power, table));
}

bool CellularAutomaton::is_identity() const {
  return ca_equal(*this, identity(_shift, _power));
}

CA ca_from_function(ShiftPtr shift, int power, Interval neighborhood,
                    std::function<int(int, std::span<int const>)> const &f) {
  auto space = path_space(shift, neighborhood.length());
  CA::Rule rule(power, std::vector<std::int32_t>(space->size()));
  space->for_each([&](std::span<int const> p, std::uint64_t r) {
    for (int t = 0; t < power; ++t)
      rule[t][r] = f(t, p);
  });
  return CA(std::move(shift), power, neighborhood, std::move(rule));
}

CA ca_from_rule(ShiftPtr shift, int power, Interval neighborhood,
                std::vector<std::map<std::vector<int>, int>> const &entries) {
  if (static_cast<int>(entries.size()) != power)
    fail(ErrorCode::PartialRule, "one rule map per residue required");
  auto space = path_space(shift, neighborhood.length());
  CA::Rule rule(power, std::vector<std::int32_t>(space->size(), -1));
  for (int t = 0; t < power; ++t)
    for (auto const &[in, out] : entries[t]) {
      if (static_cast<int>(in.size()) != neighborhood.length() ||
          !shift->is_path(in))
        fail(ErrorCode::PartialRule, "rule input is not a window path");
      rule[t][space->rank(in)] = out;
    }
  return CA(std::move(shift), power, neighborhood, std::move(rule));
}

CA ca_compose(CA const &f, CA const &g) {
  require_same_shift(f.shift_ptr(), g.shift_ptr());
  if (f.power() != g.power())
    fail(ErrorCode::PowerMismatch, "composing automata of different powers");
  Interval nf = f.neighborhood(), ng = g.neighborhood();
  Interval nb{nf.lo + ng.lo, nf.hi + ng.hi};
  auto space = path_space(f.shift_ptr(), nb.length());
  int h = f.power();
  CA::Rule rule(h, std::vector<std::int32_t>(space->size()));
  std::vector<int> y(nf.length());
  space->for_each([&](std::span<int const> p, std::uint64_t r) {
    for (int t = 0; t < h; ++t) {
      for (int k = nf.lo; k <= nf.hi; ++k)
        y[k - nf.lo] = g.eval(t + k, p.subspan(k + ng.lo - nb.lo, ng.length()));
      rule[t][r] = f.eval(t, y);
    }
  });
  return make_ca_unchecked(f.shift_ptr(), h, nb, std::move(rule));
}

CA ca_extend(CA const &f, Interval nb) {
  if (!nb.contains(f.neighborhood()))
    fail(ErrorCode::InvalidArgument, "extension must contain neighborhood");
  if (nb == f.neighborhood())
    return f;
  auto space = path_space(f.shift_ptr(), nb.length());
  Interval old = f.neighborhood();
  CA::Rule rule(f.power(), std::vector<std::int32_t>(space->size()));
  space->for_each([&](std::span<int const> p, std::uint64_t r) {
    auto sub = f.space().rank(p.subspan(old.lo - nb.lo, old.length()));
    for (int t = 0; t < f.power(); ++t)
      rule[t][r] = f.output(t, sub);
  });
  return make_ca_unchecked(f.shift_ptr(), f.power(), nb, std::move(rule));
}

bool ca_equal(CA const &f, CA const &g) {
  if (!same_shift(f.shift_ptr(), g.shift_ptr()))
    return false;
  if (f.power() != g.power())
    fail(ErrorCode::PowerMismatch, "comparing automata of different powers");
  Interval u = hull(f.neighborhood(), g.neighborhood());
  return ca_extend(f, u).rule() == ca_extend(g, u).rule();
}

namespace {

std::optional<CA> drop_position(CA const &f, bool left) {
  Interval nb = f.neighborhood();
  int len = nb.length();
  if (len < 2)
    return std::nullopt;
  auto sub = path_space(f.shift_ptr(), len - 1);
  CA::Rule rule(f.power(), std::vector<std::int32_t>(sub->size(), -1));
  bool ok = true;
  f.space().for_each([&](std::span<int const> p, std::uint64_t r) {
    if (!ok)
      return;
    auto s = sub->rank(left ? p.subspan(1) : p.first(len - 1));
    for (int t = 0; t < f.power(); ++t) {
      auto &slot = rule[t][s];
      int out = f.output(t, r);
      if (slot < 0)
        slot = out;
      else if (slot != out)
        ok = false;
    }
  });
  if (!ok)
    return std::nullopt;
  Interval smaller = left ? Interval{nb.lo + 1, nb.hi}
                          : Interval{nb.lo, nb.hi - 1};
  return make_ca_unchecked(f.shift_ptr(), f.power(), smaller, std::move(rule));
}

} // namespace

CA ca_minimize(CA const &f) {
  CA cur = f;
  for (bool changed = true; changed;) {
    changed = false;
    for (bool left : {true, false})
      if (auto smaller = drop_position(cur, left)) {
        cur = std::move(*smaller);
        changed = true;
      }
  }
  return cur;
}

CA ca_lift(CA const &f, int power) {
  if (power < 1 || power % f.power() != 0)
    fail(ErrorCode::PowerMismatch, "lift target is not a multiple of power");
  CA::Rule rule(power);
  for (int t = 0; t < power; ++t)
    rule[t] = f.rule()[t % f.power()];
  return make_ca_unchecked(f.shift_ptr(), power, f.neighborhood(),
                           std::move(rule));
}

CA ca_translate(CA const &f, int d) {
  int h = f.power();
  CA::Rule rule(h);
  for (int t = 0; t < h; ++t)
    rule[t] = f.rule()[mod(t - d, h)];
  return make_ca_unchecked(f.shift_ptr(), h, f.neighborhood(),
                           std::move(rule));
}

CA ca_invert(CA const &f, int radius_bound) {
  Interval nf = f.neighborhood();
  int h = f.power();
  for (int rho = 0; rho <= radius_bound; ++rho) {
    Interval ywin{-rho, rho};
    Interval xwin = hull({-rho + nf.lo, rho + nf.hi}, {0, 0});
    auto xspace = path_space(f.shift_ptr(), xwin.length());
    auto yspace = path_space(f.shift_ptr(), ywin.length());
    CA::Rule rule(h, std::vector<std::int32_t>(yspace->size(), -1));
    std::vector<int> y(ywin.length());
    bool consistent = true;
    xspace->for_each([&](std::span<int const> x, std::uint64_t) {
      if (!consistent)
        return;
      for (int t = 0; t < h; ++t) {
        for (int k = -rho; k <= rho; ++k)
          y[k + rho] = f.eval(t + k, x.subspan(k + nf.lo - xwin.lo,
                                               nf.length()));
        auto &slot = rule[t][yspace->rank(y)];
        int x0 = x[-xwin.lo];
        if (slot < 0)
          slot = x0;
        else if (slot != x0) {
          consistent = false;
          return;
        }
      }
    });
    if (!consistent)
      continue;
    for (auto const &table : rule)
      for (auto v : table)
        if (v < 0)
          fail(ErrorCode::NotInvertibleWithinBound,
               "automaton is not surjective");
    CA g(f.shift_ptr(), h, ywin, std::move(rule));
    CA id = CA::identity(f.shift_ptr(), h);
    if (!ca_equal(ca_compose(f, g), id) || !ca_equal(ca_compose(g, f), id))
      fail(ErrorCode::NotInvertibleWithinBound,
           "candidate inverse failed verification");
    return ca_minimize(g);
  }
  fail(ErrorCode::NotInvertibleWithinBound,
       "no inverse of radius <= " + std::to_string(radius_bound));
}

CA ca_commutator(CA const &f, CA const &g, CA const &f_inv, CA const &g_inv) {
  return ca_minimize(
      ca_compose(ca_compose(f_inv, g_inv), ca_minimize(ca_compose(f, g))));
}

PeriodicConfiguration ca_apply(CA const &f, PeriodicConfiguration const &x) {
  int p = x.period();
  if (p == 0 || p % f.power() != 0)
    fail(ErrorCode::PeriodMismatch,
         "period is not a multiple of the automaton power");
  if (!f.shift().is_cycle(x.edges))
    fail(ErrorCode::UnknownEdge, "configuration is not a closed path");
  Interval nb = f.neighborhood();
  PeriodicConfiguration y;
  y.edges.resize(p);
  std::vector<int> window(nb.length());
  for (int i = 0; i < p; ++i) {
    for (int k = nb.lo; k <= nb.hi; ++k)
      window[k - nb.lo] = x.edges[mod(i + k, p)];
    y.edges[i] = f.eval(i, window);
  }
  return y;
}

std::uint64_t ca_hash(CA const &f) {
  CA m = ca_minimize(f);
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::int64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= static_cast<std::uint8_t>(v >> (8 * b));
      h *= 1099511628211ull;
    }
  };
  mix(m.power());
  mix(m.neighborhood().lo);
  mix(m.neighborhood().hi);
  for (auto const &table : m.rule())
    for (auto v : table)
      mix(v);
  return h;
}

namespace {

// product of translates of g over sites k with (k mod power) in phases
CA sites_to_ca(Gate const &g, int power, std::vector<bool> const &phases) {
  int len = g.support().length();
  Interval nb{-(len - 1), len - 1};
  auto space = path_space(g.shift_ptr(), nb.length());
  CA::Rule rule(power, std::vector<std::int32_t>(space->size()));
  std::vector<int> buf(nb.length());
  int s = g.support().lo, e = g.support().hi;
  space->for_each([&](std::span<int const> p, std::uint64_t r) {
    for (int t = 0; t < power; ++t) {
      std::copy(p.begin(), p.end(), buf.begin());
      for (int k = t - e; k <= t - s; ++k) {
        if (!phases[mod(k, power)])
          continue;
        g.apply_window(std::span<int>(buf).subspan(k + s - t + len - 1, len));
      }
      rule[t][r] = buf[len - 1];
    }
  });
  return make_ca_unchecked(g.shift_ptr(), power, nb, std::move(rule));
}

} // namespace

CA gate_to_ca(Gate const &g, int power, int phase) {
  std::vector<bool> phases(power, false);
  phases[mod(phase, power)] = true;
  return ca_minimize(sites_to_ca(g, power, phases));
}

CA gate_lattice_to_ca(GateLattice const &lat, int power) {
  if (power == 0)
    power = lat.period;
  if (power % lat.period != 0)
    fail(ErrorCode::PowerMismatch, "power must be a multiple of the period");
  std::vector<bool> phases(power, false);
  for (int k = lat.offset; k < power; k += lat.period)
    phases[k] = true;
  if (lat.gate.is_identity())
    return CA::identity(lat.gate.shift_ptr(), power);
  return ca_minimize(sites_to_ca(lat.gate, power, phases));
}

namespace {

bool block_fits(GateLattice const &lat, int m) {
  int n = lat.period, B = m * n;
  int b0 = lat.offset + (m * n) / 2;
  Interval s = lat.gate.support();
  for (int u = 0; u < m; ++u) {
    int k = lat.offset + u * n;
    int lo = k + s.lo - b0, hi = k + s.hi - b0;
    if (floor_div(lo, B) != floor_div(hi, B))
      return false;
  }
  return true;
}

} // namespace

SimpleSymmetry simple_symmetry_form(GateLattice const &lat, int m) {
  if (m < 1)
    fail(ErrorCode::InvalidArgument, "m must be positive");
  if (!block_fits(lat, m)) {
    int limit = 2 * (lat.period + lat.gate.support().length()) + 2;
    std::string hint = "no valid m up to " + std::to_string(limit);
    for (int k = 1; k <= limit; ++k)
      if (block_fits(lat, k)) {
        hint = "least valid m is " + std::to_string(k);
        break;
      }
    fail(ErrorCode::BlockTooSmall,
         "gate support straddles a block boundary at m = " + std::to_string(m) +
             "; " + hint);
  }

  int n = lat.period, B = m * n;
  int b0 = lat.offset + (m * n) / 2;
  SimpleSymmetry sym;
  sym.blocks = block_presentation(lat.gate.shift(), B, 0);
  sym.m = m;
  sym.block_length = B;
  sym.phase = mod(b0, B);

  // sites whose support lies in the block starting at b0; block boundary
  // vertices are never moved since a gate fixes its end vertices
  std::vector<int> sites;
  for (int k = b0 - B; k <= b0 + 2 * B; ++k)
    if (mod(k - lat.offset, n) == 0 && k + lat.gate.support().lo >= b0 &&
        k + lat.gate.support().hi <= b0 + B - 1)
      sites.push_back(k);

  auto const &bshift = *sym.blocks.shift;
  std::vector<unsigned> images(bshift.num_edges());
  std::map<std::vector<int>, unsigned> index;
  for (int e = 0; e < bshift.num_edges(); ++e)
    index[sym.blocks.edge_words[e]] = static_cast<unsigned>(e);
  int len = lat.gate.support().length();
  for (int e = 0; e < bshift.num_edges(); ++e) {
    std::vector<int> w = sym.blocks.edge_words[e];
    for (int k : sites)
      lat.gate.apply_window(
          std::span<int>(w).subspan(k + lat.gate.support().lo - b0, len));
    images[e] = index.at(w);
  }
  sym.edge_perm = Perm(std::move(images));
  return sym;
}

CA symmetry_to_ca(SimpleSymmetry const &sym, ShiftPtr const &shift) {
  int B = sym.block_length;
  auto block_space = path_space(shift, B);
  std::vector<std::int32_t> block_of(block_space->size());
  for (int e = 0; e < sym.blocks.shift->num_edges(); ++e)
    block_of[block_space->rank(sym.blocks.edge_words[e])] = e;

  Interval nb{-(B - 1), B - 1};
  auto space = path_space(shift, nb.length());
  CA::Rule rule(B, std::vector<std::int32_t>(space->size()));
  space->for_each([&](std::span<int const> p, std::uint64_t r) {
    for (int t = 0; t < B; ++t) {
      int o = mod(t - sym.phase, B); // offset of t inside its block
      auto word = p.subspan(B - 1 - o, B);
      int e = block_of[block_space->rank(word)];
      rule[t][r] = sym.blocks.edge_words[sym.edge_perm[e]][o];
    }
  });
  return ca_minimize(make_ca_unchecked(shift, B, nb, std::move(rule)));
}

} // namespace gatelat
