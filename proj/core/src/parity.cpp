#include "gatelat/parity.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "gatelat/error.hpp"

namespace gatelat {

char const *verdict_name(Verdict v) {
  switch (v) {
  case Verdict::Even: return "even";
  case Verdict::Odd: return "odd";
  case Verdict::Mixed: return "mixed";
  }
  return "mixed";
}

int context_sign(Gate const &g, Context ctx) {
  return context_perm(g, ctx).sign();
}

ParityReport parity_report(Gate const &g) {
  ParityReport report;
  report.support = g.support();
  bool any_odd = false, any_even = false;
  for (auto const &[ctx, perm] : context_perms(g)) {
    int s = perm.sign();
    report.rows.push_back({ctx, s});
    (s == 1 ? any_even : any_odd) = true;
  }
  report.verdict = !any_odd ? Verdict::Even
                   : any_even ? Verdict::Mixed
                              : Verdict::Odd;
  return report;
}

EvennessResult is_even(Gate const &g) {
  Gate m = minimize(g);
  // parity at enlargement (i, j) is A^i P A^j over GF(2); zero at
  // (k, k) for k >= preperiod iff zero for every larger enlargement
  auto [mu, period] = mod2_power_cycle(m.shift());
  (void)period;
  int k = std::max(1, mu);
  EvennessResult result;
  result.minimal = parity_report(m);
  result.enlarged = parity_report(rebase(m, m.support().widened(1, 1)));
  result.enlargement = k;
  result.decisive = k == 1 ? result.enlarged
                           : parity_report(rebase(m, m.support().widened(k, k)));
  result.even = result.decisive.verdict == Verdict::Even;
  return result;
}

namespace {

void check_ore_input(Perm const &p) {
  if (p.degree() < 5)
    fail(ErrorCode::DomainTooSmall, "commutator factorization needs >= 5 points");
  if (!p.is_even())
    fail(ErrorCode::OddPermutation, "permutation " + p.str() + " is odd");
}

void verify_ore(Perm const &p, Perm const &q, Perm const &r) {
  if (commutator(q, r) != p)
    fail(ErrorCode::VerificationFailed, "commutator witness failed verification");
}

} // namespace

std::pair<Perm, Perm> ore_exhaustive(Perm const &p) {
  check_ore_input(p);
  unsigned n = p.degree();
  // [q, r] = p  <=>  r^-1 q r = q p
  std::vector<unsigned> images(n);
  std::iota(images.begin(), images.end(), 0u);
  do {
    Perm q(images);
    Perm qp = q * p;
    if (qp.cycle_type() != q.cycle_type())
      continue;
    Perm r = conjugator(q, qp);
    verify_ore(p, q, r);
    return {q, r};
  } while (std::next_permutation(images.begin(), images.end()));
  fail(ErrorCode::InvalidArgument, "no commutator witness exists");
}

std::pair<Perm, Perm> ore_constructive(Perm const &p) {
  check_ore_input(p);
  unsigned n = p.degree();
  // p = s t with involutions s, t of equal transposition count
  std::vector<unsigned> s(n), t(n);
  std::iota(s.begin(), s.end(), 0u);
  std::iota(t.begin(), t.end(), 0u);
  bool flip = false;
  for (auto const &cycle : p.cycles()) {
    long k = static_cast<long>(cycle.size());
    auto at = [&](long i) { return cycle[((i % k) + k) % k]; };
    // t: i -> a - i, s: i -> a + 1 - i, so s t: i -> i + 1
    long a = (k % 2 == 0 && flip) ? 1 : 0;
    if (k % 2 == 0)
      flip = !flip;
    for (long i = 0; i < k; ++i) {
      t[at(i)] = at(a - i);
      s[at(i)] = at(a + 1 - i);
    }
  }
  Perm sp(s), tp(t);
  Perm r = conjugator(sp, tp);
  verify_ore(p, sp, r);
  return {sp, r};
}

std::pair<Perm, Perm> perm_commutator_factor(Perm const &p) {
  check_ore_input(p);
  if (p.is_identity())
    return {Perm(p.degree()), Perm(p.degree())};
  return p.degree() <= 7 ? ore_exhaustive(p) : ore_constructive(p);
}

GateWitness commutator_witness(Gate const &g) {
  if (!is_even(g).even)
    fail(ErrorCode::NotEven, "gate is not eventually even");
  if (g.is_identity()) {
    Gate id = Gate::identity(g.shift_ptr(), g.support());
    return {id, id, g.support()};
  }
  Gate m = minimize(g);
  auto const &shift = m.shift();
  int nv = shift.num_vertices();
  int cap = 4 * (nv * nv + 2) + 16;
  if (!is_mixing(shift).mixing)
    fail(ErrorCode::NotMixing, "shift is not mixing");
  for (int e = 0; e <= cap; ++e) {
    for (int left = 0; left <= e; ++left) {
      Interval s = m.support().widened(left, e - left);
      auto counts = mat_pow(shift.matrix(), s.length());
      bool enough = true;
      for (auto const &row : counts)
        for (auto c : row)
          enough = enough && (c == 0 || c >= 5);
      if (!enough)
        continue;
      Gate r = rebase(m, s);
      auto perms = context_perms(r);
      if (!std::all_of(perms.begin(), perms.end(),
                       [](auto const &cp) { return cp.second.is_even(); }))
        continue;
      std::map<Context, Perm> qs, rs;
      for (auto const &[ctx, perm] : perms) {
        auto [q, rr] = perm_commutator_factor(perm);
        qs.emplace(ctx, q);
        rs.emplace(ctx, rr);
      }
      Gate g1 = gate_from_perms(m.shift_ptr(), s, qs);
      Gate g2 = gate_from_perms(m.shift_ptr(), s, rs);
      if (!gates_equal(gate_commutator(g1, g2), g))
        fail(ErrorCode::VerificationFailed, "gate witness failed verification");
      return {g1, g2, s};
    }
  }
  fail(ErrorCode::NotMixing, "could not reach 5 fillings per context");
}

Perm evaluate_terms(Perm const &p, std::vector<ConjugateTerm> const &terms) {
  Perm acc(p.degree());
  Perm pinv = p.inverse();
  for (auto const &t : terms)
    acc = acc * conjugate(t.exp > 0 ? p : pinv, t.conjugator);
  return acc;
}

namespace {

using Terms = std::vector<ConjugateTerm>;

// terms for (h^a)^e where h = product of `h_terms`
void append_conjugated(Terms &out, Terms const &h_terms, Perm const &a, int e) {
  if (e > 0) {
    for (auto const &t : h_terms)
      out.push_back({t.conjugator * a, t.exp});
  } else {
    for (auto it = h_terms.rbegin(); it != h_terms.rend(); ++it)
      out.push_back({it->conjugator * a, -it->exp});
  }
}

std::vector<Perm> three_cycles(unsigned n) {
  std::vector<Perm> out;
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = a + 1; b < n; ++b)
      for (unsigned c = b + 1; c < n; ++c) {
        out.push_back(Perm::from_cycles(n, {{a, b, c}}));
        out.push_back(Perm::from_cycles(n, {{a, c, b}}));
      }
  return out;
}

bool is_three_cycle(Perm const &p) {
  auto cs = p.cycles();
  return cs.size() == 1 && cs[0].size() == 3;
}

// permutations of T (as permutations of n points) that are even
std::vector<Perm> alternating_on(unsigned n, std::vector<unsigned> const &set) {
  std::vector<Perm> out;
  std::vector<unsigned> order = set;
  do {
    std::vector<unsigned> images(n);
    std::iota(images.begin(), images.end(), 0u);
    for (std::size_t k = 0; k < set.size(); ++k)
      images[set[k]] = order[k];
    Perm a(std::move(images));
    if (a.is_even())
      out.push_back(std::move(a));
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

} // namespace

Perm even_conjugator(Perm const &c, Perm const &d) {
  Perm x = conjugator(c, d);
  if (x.degree() == 0)
    fail(ErrorCode::InvalidArgument, "permutations are not conjugate");
  if (x.is_even())
    return x;
  std::vector<unsigned> outside;
  for (unsigned i = 0; i < c.degree() && outside.size() < 2; ++i)
    if (c[i] == i)
      outside.push_back(i);
  if (outside.size() < 2)
    fail(ErrorCode::DomainTooSmall, "no room for an even conjugator");
  Perm z = Perm::from_cycles(c.degree(), {{outside[0], outside[1]}});
  return z * x;
}

std::vector<Perm> three_cycle_factors(Perm const &p) {
  if (!p.is_even())
    fail(ErrorCode::OddPermutation, "only even permutations split into 3-cycles");
  unsigned n = p.degree();
  std::vector<Perm> out;
  Perm rest = p;
  while (!rest.is_identity()) {
    auto moved = rest.cycles();
    unsigned a = moved[0][0];
    unsigned b = rest[a];
    unsigned x = rest[b];
    if (x == a) {
      // pick another moved point, else any other point
      x = n;
      for (auto const &cyc : moved)
        for (unsigned y : cyc)
          if (x == n && y != a && y != b)
            x = y;
      for (unsigned y = 0; x == n && y < n; ++y)
        if (y != a && y != b)
          x = y;
    }
    Perm c = Perm::from_cycles(n, {{a, b, x}});
    out.push_back(c);
    rest = c.inverse() * rest;
  }
  return out;
}

AltCertificate alt_normal_closure(Perm const &p) {
  unsigned n = p.degree();
  if (n < 5)
    fail(ErrorCode::DomainTooSmall, "closure needs >= 5 points");
  if (p.is_identity())
    fail(ErrorCode::IdentityInput, "identity generates the trivial group");

  AltCertificate cert;
  cert.target = Perm::from_cycles(n, {{0, 1, 2}});

  // g = product of terms (p^a)^e
  Terms g_terms{{Perm(n), 1}};
  Perm g = p;

  if (!g.is_even()) {
    for (auto const &pi : three_cycles(n)) {
      Perm cand = commutator(g, conjugate(g, pi));
      if (cand.is_identity())
        continue;
      // [g, g^pi] = g^-1 (g^pi)^-1 g g^pi
      Terms next;
      append_conjugated(next, g_terms, Perm(n), -1);
      append_conjugated(next, g_terms, pi, -1);
      append_conjugated(next, g_terms, Perm(n), 1);
      append_conjugated(next, g_terms, pi, 1);
      g_terms = std::move(next);
      g = cand;
      break;
    }
  }

  if (g.support_size() > 6) {
    for (auto const &c : three_cycles(n)) {
      Perm cand = commutator(g, c);
      if (cand.is_identity())
        continue;
      // [g, c] = g^-1 g^c
      Terms next;
      append_conjugated(next, g_terms, Perm(n), -1);
      append_conjugated(next, g_terms, c, 1);
      g_terms = std::move(next);
      g = cand;
      break;
    }
  }

  if (!is_three_cycle(g)) {
    // breadth-first search in Alt(T) over conjugates of g and inverses
    std::vector<unsigned> set;
    for (auto const &cyc : g.cycles())
      set.insert(set.end(), cyc.begin(), cyc.end());
    for (unsigned i = 0; set.size() < 5 && i < n; ++i)
      if (std::find(set.begin(), set.end(), i) == set.end())
        set.push_back(i);
    std::sort(set.begin(), set.end());

    auto alt = alternating_on(n, set);
    std::vector<std::pair<Perm, ConjugateTerm>> gens;
    std::set<Perm> seen_gen;
    Perm ginv = g.inverse();
    for (auto const &a : alt)
      for (int e : {1, -1}) {
        Perm x = conjugate(e > 0 ? g : ginv, a);
        if (seen_gen.insert(x).second)
          gens.push_back({x, {a, e}});
      }

    std::map<Perm, std::pair<Perm, std::size_t>> parent;
    std::deque<Perm> queue{Perm(n)};
    parent.emplace(Perm(n), std::make_pair(Perm(n), gens.size()));
    std::optional<Perm> found;
    while (!queue.empty() && !found) {
      Perm cur = queue.front();
      queue.pop_front();
      for (std::size_t k = 0; k < gens.size(); ++k) {
        Perm next = cur * gens[k].first;
        if (parent.count(next))
          continue;
        parent.emplace(next, std::make_pair(cur, k));
        if (is_three_cycle(next)) {
          found = next;
          break;
        }
        queue.push_back(next);
      }
    }
    if (!found)
      fail(ErrorCode::InvalidArgument, "closure search failed");

    std::vector<ConjugateTerm> path;
    for (Perm cur = *found; !cur.is_identity();) {
      auto const &[prev, k] = parent.at(cur);
      path.push_back(gens[k].second);
      cur = prev;
    }
    std::reverse(path.begin(), path.end());
    Terms next;
    for (auto const &t : path)
      append_conjugated(next, g_terms, t.conjugator, t.exp);
    g_terms = std::move(next);
    g = *found;
  }

  Perm beta = even_conjugator(g, cert.target);
  Terms final_terms;
  append_conjugated(final_terms, g_terms, beta, 1);
  cert.terms = std::move(final_terms);
  cert.verified = evaluate_terms(p, cert.terms) == cert.target &&
                  std::all_of(cert.terms.begin(), cert.terms.end(),
                              [](auto const &t) { return t.conjugator.is_even(); });
  if (!cert.verified)
    fail(ErrorCode::VerificationFailed, "closure certificate failed verification");
  return cert;
}

} // namespace gatelat
