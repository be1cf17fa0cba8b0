#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "gatelat/error.hpp"
#include "gatelat/lattice.hpp"

namespace gatelat {

namespace {

int mod(long a, long b) {
  long r = a % b;
  return static_cast<int>(r < 0 ? r + b : r);
}

struct ResidueData {
  Gate chi;
  Gate chi0;
  Interval support;
  // (gamma, exp) with product of (chi0^gamma)^exp = target at support
  std::vector<std::pair<Gate, int>> chi0_terms;
};

std::vector<Perm> three_cycles_of(unsigned n) {
  std::vector<Perm> out;
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = a + 1; b < n; ++b)
      for (unsigned c = b + 1; c < n; ++c) {
        out.push_back(Perm::from_cycles(n, {{a, b, c}}));
        out.push_back(Perm::from_cycles(n, {{a, c, b}}));
      }
  return out;
}

ResidueData residue_data(CA const &G, CA const &G_inv, Gate const &tau,
                         Budget &budget) {
  auto const &shift = G.shift();
  Gate chi = separating_gate(G);
  Gate chi0 =
      minimize(compose(conjugate_by_automorphism(invert(chi), G, G_inv), chi));
  budget.spend(chi0.image().size(), "commutator gate");

  // support with >= 5 fillings per context, chi0 moving every context and
  // the target even in every context
  Interval base = hull(hull(chi0.support(), tau.support()), chi.support());
  int nv = shift.num_vertices();
  int cap = 4 * (nv * nv + 2) + 16;
  std::optional<Interval> support;
  for (int e = 0; e <= cap && !support; ++e)
    for (int left = 0; left <= e && !support; ++left) {
      Interval s = base.widened(left, e - left);
      auto counts = mat_pow(shift.matrix(), s.length());
      bool enough = true;
      for (auto const &row : counts)
        for (auto c : row)
          enough = enough && (c == 0 || c >= 5);
      if (!enough)
        continue;
      budget.spend(2 * PathSpace(G.shift_ptr(), s.length()).size(),
                   "support search");
      auto c0 = context_perms(rebase(chi0, s));
      auto tp = context_perms(rebase(tau, s));
      bool ok = true;
      for (std::size_t k = 0; k < c0.size(); ++k)
        ok = ok && !c0[k].second.is_identity() && tp[k].second.is_even();
      if (ok)
        support = s;
    }
  if (!support)
    fail(ErrorCode::NotMixing, "no support with enough fillings found");

  ResidueData data{chi, chi0, *support, {}};
  Interval S = *support;
  auto c0 = context_perms(rebase(chi0, S));
  auto tp = context_perms(rebase(tau, S));
  for (std::size_t k = 0; k < c0.size(); ++k) {
    Context ctx = c0[k].first;
    Perm const &pi0 = c0[k].second;
    Perm const &tau_p = tp[k].second;
    if (tau_p.is_identity())
      continue;
    unsigned d = pi0.degree();
    Perm lambda;
    for (auto const &c : three_cycles_of(d))
      if (c * pi0 != pi0 * c) {
        lambda = c;
        break;
      }
    Perm g = commutator(pi0, lambda);
    AltCertificate closure = alt_normal_closure(g);
    budget.spend(closure.terms.size() * d, "alternating closure");

    auto gate_of = [&](Perm const &p) {
      return gate_from_perms(G.shift_ptr(), S, {{ctx, p}});
    };
    for (auto const &c : three_cycle_factors(tau_p)) {
      Perm beta = even_conjugator(closure.target, c);
      for (auto const &t : closure.terms) {
        Perm gamma = t.conjugator * beta;
        Gate gg = gate_of(gamma), lg = gate_of(lambda * gamma);
        // g^gamma = (chi0^gamma)^-1 chi0^(lambda gamma)
        if (t.exp > 0) {
          data.chi0_terms.emplace_back(gg, -1);
          data.chi0_terms.emplace_back(lg, 1);
        } else {
          data.chi0_terms.emplace_back(lg, -1);
          data.chi0_terms.emplace_back(gg, 1);
        }
      }
    }
  }

  // gate-level check before lifting to lattices
  Gate chi0_s = rebase(chi0, S), chi0_inv = invert(chi0_s);
  Gate acc = Gate::identity(G.shift_ptr(), S);
  for (auto const &[gamma, e] : data.chi0_terms) {
    acc = compose(acc, gate_conjugate(e > 0 ? chi0_s : chi0_inv, gamma));
    budget.spend(acc.image().size(), "gate-level check");
  }
  if (!gates_equal(acc, tau))
    fail(ErrorCode::VerificationFailed, "gate-level expansion failed");
  return data;
}

} // namespace

CA certificate_product(LatticeWord const &f, GenerationCertificate const &cert,
                       int power, Budget *budget) {
  CA F = word_eval(f, power);
  CA F_inv = word_eval(word_inverse(f), power);
  CA acc = CA::identity(f.shift, power);
  for (auto const &t : cert.terms) {
    CA W = word_eval(t.conjugator, power);
    CA W_inv = word_eval(word_inverse(t.conjugator), power);
    CA term = ca_minimize(
        ca_compose(ca_compose(W_inv, t.exp > 0 ? F : F_inv), W));
    acc = ca_minimize(ca_compose(acc, term));
    if (budget)
      budget->spend(acc.space().size() * static_cast<std::uint64_t>(power),
                    "certificate verification");
  }
  return acc;
}

GenerationCertificate normal_generation_trace(LatticeWord const &f,
                                              GateLattice const &target,
                                              Budget &budget) {
  require_same_shift(f.shift, target.gate.shift_ptr());
  CA F = word_eval(f);
  if (F.is_identity())
    fail(ErrorCode::TrivialInput, "the word evaluates to the identity");
  if (!is_mixing(F.shift()).mixing)
    fail(ErrorCode::NotMixing, "shift is not mixing");
  int h = F.power(), n = target.period, j = target.offset;

  GenerationCertificate cert;
  auto finish = [&](int power) {
    cert.power = power;
    CA lhs = certificate_product(f, cert, power, &budget);
    CA rhs = gate_lattice_to_ca(target, power);
    cert.lhs_hash = ca_hash(lhs);
    cert.rhs_hash = ca_hash(rhs);
    cert.verified = ca_equal(lhs, rhs);
    if (!cert.verified)
      fail(ErrorCode::VerificationFailed, "certificate failed verification");
    return cert;
  };

  int step = std::lcm(h, n);
  if (target.gate.is_identity()) {
    cert.K = step;
    return finish(step);
  }
  if (word_equal(word_of(target), f)) {
    cert.K = step;
    cert.terms.push_back({LatticeWord{f.shift, {}}, 1});
    return finish(step);
  }
  Gate tau = minimize(target.gate);
  if (!is_even(tau).even)
    fail(ErrorCode::NotEven, "target lattice gate is not eventually even");

  CA F_inv = word_eval(word_inverse(f));
  std::map<int, ResidueData> by_residue;
  int K = step;
  for (int t = 0; t < h; ++t) {
    int r = mod(j + t * n, h);
    if (by_residue.count(r))
      continue;
    CA G = ca_translate(F, -r), G_inv = ca_translate(F_inv, -r);
    ResidueData data = residue_data(G, G_inv, tau, budget);
    int need = std::max({data.support.length(), data.chi.support().length(),
                         kin_bound(G, data.chi)});
    K = std::max(K, (need + step - 1) / step * step);
    by_residue.emplace(r, std::move(data));
  }
  cert.K = K;

  for (int t = 0; t < K / n; ++t) {
    int c = j + t * n;
    ResidueData const &data = by_residue.at(mod(c, h));
    cert.supports.push_back(data.support.shifted(c));
    GateLattice chi_k = make_lattice(data.chi, K, 0);
    for (auto const &[gamma, e] : data.chi0_terms) {
      LatticeWord wg{f.shift, {}};
      if (!gamma.is_identity())
        wg.factors.push_back({make_lattice(gamma, K, 0), 1});
      LatticeWord wcg{f.shift, {{chi_k, 1}}};
      wcg.factors.insert(wcg.factors.end(), wg.factors.begin(),
                         wg.factors.end());
      // (chi0^K)^(gamma^K) = (F^(gamma^K))^-1 F^(chi^K gamma^K)
      LatticeWord first = e > 0 ? wg : wcg;
      LatticeWord second = e > 0 ? wcg : wg;
      cert.terms.push_back({word_translate(first, c), -1});
      cert.terms.push_back({word_translate(second, c), 1});
    }
  }
  return finish(K);
}

} // namespace gatelat
