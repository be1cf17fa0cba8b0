#include "gatelat/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gatelat/error.hpp"

namespace gatelat {

namespace {

int mod(long a, long b) {
  long r = a % b;
  return static_cast<int>(r < 0 ? r + b : r);
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

} // namespace

GateLattice make_lattice(Gate g, int n, int j) {
  if (n < 1)
    fail(ErrorCode::InvalidArgument, "lattice period must be positive");
  if (j < 0 || j >= n)
    fail(ErrorCode::InvalidArgument, "lattice offset must lie in [0, n)");
  int len = g.support().length();
  for (int u = 1; u * n < len; ++u) {
    if (auto bad = commutation_failure(g, translate(g, u * n))) {
      std::string path;
      for (int e : bad->path)
        path += (path.empty() ? "" : " ") + g.shift().edge_name(e);
      fail(ErrorCode::NonCommuting,
           "translates at offsets 0 and " + std::to_string(u * n) +
               " do not commute; witness path [" + path + "] at [" +
               std::to_string(bad->support.lo) + "," +
               std::to_string(bad->support.hi) + "]");
    }
  }
  return GateLattice{std::move(g), n, j};
}

GateLattice translate_lattice(GateLattice const &lat, int k) {
  return GateLattice{lat.gate, lat.period, mod(lat.offset + k, lat.period)};
}

GateLattice invert_lattice(GateLattice const &lat) {
  return GateLattice{invert(lat.gate), lat.period, lat.offset};
}

LatticeWord word_of(GateLattice const &lat) {
  return LatticeWord{lat.gate.shift_ptr(), {{lat, 1}}};
}

LatticeWord word_of(std::vector<GateLattice> const &lats) {
  if (lats.empty())
    fail(ErrorCode::InvalidArgument, "empty lattice list has no shift");
  LatticeWord w{lats.front().gate.shift_ptr(), {}};
  for (auto const &l : lats) {
    require_same_shift(w.shift, l.gate.shift_ptr());
    w.factors.push_back({l, 1});
  }
  return w;
}

LatticeWord word_concat(LatticeWord const &a, LatticeWord const &b) {
  require_same_shift(a.shift, b.shift);
  LatticeWord w = a;
  w.factors.insert(w.factors.end(), b.factors.begin(), b.factors.end());
  return w;
}

LatticeWord word_inverse(LatticeWord const &w) {
  LatticeWord out{w.shift, {}};
  for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it)
    out.factors.push_back({it->lattice, -it->exp});
  return out;
}

LatticeWord word_translate(LatticeWord const &w, int k) {
  LatticeWord out{w.shift, {}};
  for (auto const &f : w.factors)
    out.factors.push_back({translate_lattice(f.lattice, k), f.exp});
  return out;
}

int word_period(LatticeWord const &w) {
  int p = 1;
  for (auto const &f : w.factors)
    p = std::lcm(p, f.lattice.period);
  return p;
}

CA word_eval(LatticeWord const &w, int power) {
  int p = word_period(w);
  if (power != 0) {
    if (power % p != 0)
      fail(ErrorCode::PowerMismatch, "power must be a multiple of the periods");
    p = power;
  }
  CA acc = CA::identity(w.shift, p);
  for (auto const &f : w.factors) {
    require_same_shift(w.shift, f.lattice.gate.shift_ptr());
    CA c = gate_lattice_to_ca(
        f.exp > 0 ? f.lattice : invert_lattice(f.lattice), p);
    acc = ca_minimize(ca_compose(acc, c));
  }
  return acc;
}

bool word_equal(LatticeWord const &a, LatticeWord const &b) {
  require_same_shift(a.shift, b.shift);
  int p = std::lcm(word_period(a), word_period(b));
  return ca_equal(word_eval(a, p), word_eval(b, p));
}

PeriodicConfiguration apply_lattice(GateLattice const &lat,
                                    PeriodicConfiguration const &cfg) {
  int P = cfg.period();
  if (P == 0 || P % lat.period != 0)
    fail(ErrorCode::PeriodMismatch, "lattice period does not divide " +
                                        std::to_string(P));
  Gate const &g = lat.gate;
  if (!g.shift().is_cycle(cfg.edges))
    fail(ErrorCode::UnknownEdge, "configuration is not a closed path");
  int len = g.support().length();
  if (len <= P) {
    // supports of sites k and k + P are disjoint: apply around the circle
    PeriodicConfiguration out = cfg;
    for (int k = lat.offset; k < P; k += lat.period)
      out = apply_gate(g, out, k);
    return out;
  }
  // each position: apply the covering gates on a local window
  int s = g.support().lo, e = g.support().hi;
  PeriodicConfiguration out = cfg;
  std::vector<int> window(2 * len - 1);
  for (int i = 0; i < P; ++i) {
    for (int t = 0; t < 2 * len - 1; ++t)
      window[t] = cfg.edges[mod(i - (len - 1) + t, P)];
    for (int k = i - e; k <= i - s; ++k)
      if (mod(k - lat.offset, lat.period) == 0)
        g.apply_window(std::span<int>(window).subspan(k + s - i + len - 1, len));
    out.edges[i] = window[len - 1];
  }
  return out;
}

PeriodicConfiguration apply_word(LatticeWord const &w,
                                 PeriodicConfiguration const &cfg) {
  PeriodicConfiguration x = cfg;
  for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it)
    x = apply_lattice(it->exp > 0 ? it->lattice : invert_lattice(it->lattice),
                      x);
  return x;
}

std::vector<GateLattice> refine(GateLattice const &lat, int m) {
  if (m < 1)
    fail(ErrorCode::InvalidArgument, "refinement factor must be positive");
  std::vector<GateLattice> out;
  for (int u = 0; u < m; ++u)
    out.push_back(
        GateLattice{lat.gate, m * lat.period, lat.offset + u * lat.period});
  return out;
}

std::vector<GateLattice> normalize_lattice(GateLattice const &lat) {
  Gate g = minimize(lat.gate);
  int s = g.support().lo, len = g.support().length();
  int n = lat.period;
  GateLattice base{translate(g, -s), n, mod(lat.offset + s, n)};
  std::vector<GateLattice> parts =
      len <= n ? std::vector<GateLattice>{base} : refine(base, ceil_div(len, n));
  for (auto &part : parts)
    part.gate = rebase(part.gate, {0, part.period - 1});
  return parts;
}

EvenizeResult evenize(GateLattice const &lat) {
  if (!is_mixing(lat.gate.shift()).mixing)
    fail(ErrorCode::NotMixing, "evenization needs a mixing shift");
  EvenizeResult result;
  result.normalized = normalize_lattice(lat);
  auto even_here = [](GateLattice const &part) {
    return parity_report(part.gate).verdict == Verdict::Even;
  };
  if (std::all_of(result.normalized.begin(), result.normalized.end(),
                  even_here)) {
    result.already_even = true;
    result.factors = {lat};
    return result;
  }
  for (auto const &part : result.normalized) {
    if (even_here(part)) {
      result.factors.push_back(part);
      continue;
    }
    int n = part.period;
    // least m >= 0, p >= 1 with A^(mn) = A^((m+p)n), A = M mod 2
    Matrix a = mat_pow_mod2(part.gate.shift().matrix(), n);
    std::map<Matrix, int> seen;
    Matrix cur = mat_identity(a.size());
    int m = 0, p = 0;
    for (int k = 0;; ++k) {
      auto [it, inserted] = seen.emplace(cur, k);
      if (!inserted) {
        m = it->second;
        p = k - it->second;
        break;
      }
      cur = mat_mul_mod2(cur, a);
    }
    result.m = m;
    result.p = p;
    Gate paired = compose(part.gate, translate(part.gate, p * n));
    paired = rebase(paired, {-m * n, (m + p) * n + n - 1});
    for (int t = 0; t < p; ++t) {
      GateLattice f =
          make_lattice(paired, 2 * p * n, mod(part.offset + t * n, 2 * p * n));
      if (!is_even(f.gate).even)
        fail(ErrorCode::NotEven, "paired gate is not even");
      result.factors.push_back(std::move(f));
    }
  }
  return result;
}

namespace {

CA invert_or_fail(CA const &f) {
  try {
    return ca_invert(f, 8);
  } catch (Error const &e) {
    if (e.code() == ErrorCode::NotInvertibleWithinBound)
      fail(ErrorCode::NotInvertible, e.what());
    throw;
  }
}

int radius_pad(CA const &f) {
  Interval nb = f.neighborhood();
  return std::max(0, -nb.lo) + std::max(0, nb.hi);
}

int round_up(int x, int step) { return ceil_div(std::max(x, 1), step) * step; }

} // namespace

int conjugation_bound(GateLattice const &lat, CA const &f, CA const &f_inv) {
  int bound = 0;
  int h = f.power();
  for (int u = 0; u < h; ++u) {
    Gate moved = translate(lat.gate, lat.offset + u * lat.period);
    Gate psi = conjugate_by_automorphism(moved, f, f_inv);
    bound = std::max(bound, hull(moved.support(), psi.support()).length() +
                                radius_pad(f));
  }
  return bound;
}

std::vector<GateLattice> conjugate_lattice(GateLattice const &lat, CA const &f,
                                           int K) {
  require_same_shift(lat.gate.shift_ptr(), f.shift_ptr());
  int step = std::lcm(lat.period, f.power());
  if (K < 1 || K % step != 0)
    fail(ErrorCode::PeriodMismatch,
         "K must be a multiple of " + std::to_string(step));
  CA f_inv = invert_or_fail(f);
  int bound = conjugation_bound(lat, f, f_inv);
  if (K < bound)
    fail(ErrorCode::NotSparseEnough,
         "K = " + std::to_string(K) + " is below the sparseness bound; least "
         "admissible K is " + std::to_string(round_up(bound, step)));
  std::vector<GateLattice> out;
  for (int u = 0; u < K / lat.period; ++u) {
    int site = lat.offset + u * lat.period;
    Gate psi = conjugate_by_automorphism(translate(lat.gate, site), f, f_inv);
    // keep the support start of the input gate when possible
    int d = psi.support().lo - lat.gate.support().lo;
    out.push_back(make_lattice(translate(psi, -site - d), K, mod(site + d, K)));
  }
  return out;
}

int kin_bound(CA const &f, Gate const &g) {
  CA f_inv = invert_or_fail(f);
  Gate m = minimize(g);
  Gate moved = conjugate_by_automorphism(invert(m), f, f_inv);
  Gate comm = minimize(compose(moved, m));
  int bound = std::max({m.support().length() + moved.support().length(),
                        comm.support().length(), m.support().length()});
  return round_up(bound, f.power());
}

KinReport kin_commutator_check(CA const &f, Gate const &g, int K) {
  require_same_shift(f.shift_ptr(), g.shift_ptr());
  if (K < 1 || K % f.power() != 0)
    fail(ErrorCode::PowerMismatch, "K must be a multiple of the power");
  CA f_inv = invert_or_fail(f);
  KinReport report;
  report.K = K;
  report.bound = kin_bound(f, g);
  Gate comm = minimize(
      compose(conjugate_by_automorphism(invert(g), f, f_inv), g));
  report.commutator_support = comm.support();

  CA fk = ca_lift(f, K), fk_inv = ca_lift(f_inv, K);
  try {
    CA lhs = gate_lattice_to_ca(make_lattice(comm, K, 0), K);
    GateLattice gl = make_lattice(g, K, 0);
    CA G = gate_lattice_to_ca(gl, K);
    CA G_inv = gate_lattice_to_ca(invert_lattice(gl), K);
    CA rhs = ca_commutator(fk, G, fk_inv, G_inv);
    report.equal = ca_equal(lhs, rhs);
  } catch (Error const &e) {
    if (e.code() != ErrorCode::NonCommuting)
      throw;
    report.equal = false;
    report.note = e.what();
  }
  return report;
}

Gate separating_gate(CA const &f) {
  if (f.is_identity())
    fail(ErrorCode::TrivialInput, "identity has no separating gate");
  auto const &shift = f.shift();
  if (!is_mixing(shift).mixing)
    fail(ErrorCode::NotMixing, "separating gates need a mixing shift");
  CA f_inv = invert_or_fail(f);
  int h = f.power();

  for (int P = h; P <= 24; P += h) {
    std::vector<std::vector<int>> movers;
    PathSpace space(f.shift_ptr(), P);
    space.for_each([&](std::span<int const> p, std::uint64_t) {
      if (movers.size() >= 4 || !shift.is_cycle(p))
        return;
      PeriodicConfiguration x{{p.begin(), p.end()}};
      if (ca_apply(f, x) != x)
        movers.push_back(x.edges);
    });
    for (auto const &xe : movers) {
      PeriodicConfiguration x{xe};
      PeriodicConfiguration fx = ca_apply(f, x);
      int i = 0;
      while (x.edges[i] == fx.edges[i])
        ++i;
      for (int a = 0, b = 0; a + b + 1 <= 16; (a < b ? ++a : ++b)) {
        int len = a + b + 1;
        std::vector<int> u(len), v(len);
        for (int t = 0; t < len; ++t) {
          u[t] = x.edges[mod(i - a + t, P)];
          v[t] = fx.edges[mod(i - a + t, P)];
        }
        Context ctx{shift.src(u.front()), shift.dst(u.back())};
        bool same = shift.src(v.front()) == ctx.left &&
                    shift.dst(v.back()) == ctx.right;
        auto fillings = enumerate_paths(shift, ctx, len);
        if (static_cast<int>(fillings.size()) < 3 + (same ? 1 : 0))
          continue;
        std::vector<std::vector<int>> others;
        for (auto const &w : fillings)
          if (w.edges != u && w.edges != v && others.size() < 2)
            others.push_back(w.edges);
        GateTable table;
        table[ctx] = {{u, others[0]}, {others[0], others[1]}, {others[1], u}};
        Gate chi = gate_from_table(f.shift_ptr(), {i - a, i + b}, table);
        Gate comm =
            compose(conjugate_by_automorphism(invert(chi), f, f_inv), chi);
        if (!comm.is_identity())
          return chi;
      }
    }
  }
  fail(ErrorCode::NotMixing, "no separating gate found within search limits");
}

} // namespace gatelat
