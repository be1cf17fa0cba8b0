#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "gatelat/error.hpp"
#include "gatelat/parity.hpp"
#include "support.hpp"

using namespace gatelat;
using namespace fixtures;

namespace {

ErrorCode code_of(auto &&f) {
  try {
    f();
  } catch (Error const &e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

std::vector<int> signs(ParityReport const &r) {
  std::vector<int> out;
  for (auto const &row : r.rows)
    out.push_back(row.sign);
  return out;
}

// even at some enlargement up to max_grow on each side
bool even_somewhere(Gate const &g, int max_grow) {
  for (int l = 0; l <= max_grow; ++l)
    for (int r = 0; r <= max_grow; ++r)
      if (parity_report(rebase(g, g.support().widened(l, r))).verdict ==
          Verdict::Even)
        return true;
  return false;
}

Gate transposition01() {
  auto s = full3();
  return gate_from_function(s, {0, 0}, [](std::span<int> w) {
    if (w[0] < 2)
      w[0] = 1 - w[0];
  });
}

} // namespace

TEST_CASE("context signs of chi") {
  Gate g = chi();
  auto const &s = *cg2();
  int a = *s.find_vertex("a"), b = *s.find_vertex("b");
  CHECK(context_sign(g, {a, a}) == -1);
  CHECK(context_sign(g, {a, b}) == -1);
  CHECK(context_sign(g, {b, a}) == 1);
  CHECK(signs(parity_report(rebase(g, {0, 2}))) ==
        std::vector<int>{1, 1, 1, 1});
  CHECK(signs(parity_report(rebase(translate(g, 1), {0, 2}))) ==
        std::vector<int>{-1, -1, -1, -1});
  CHECK(parity_report(g).verdict == Verdict::Mixed);
}

TEST_CASE("context_sign agrees with cycle counting by application") {
  std::mt19937 rng(8);
  for (int k = 0; k < 10; ++k) {
    auto s = random_graph(rng, 3);
    Gate g = random_gate(rng, s, {0, 2});
    for (auto const &row : parity_report(g).rows)
      CHECK(row.sign == oracle::sign_by_application(g, row.ctx));
  }
}

TEST_CASE("context signs are multiplicative") {
  std::mt19937 rng(12);
  for (int k = 0; k < 10; ++k) {
    auto s = k % 2 ? cg2() : gm();
    Gate a = random_gate(rng, s, {0, 2});
    Gate b = random_gate(rng, s, {0, 2});
    Gate ab = compose(a, b);
    for (auto const &row : parity_report(ab).rows)
      CHECK(row.sign == context_sign(a, row.ctx) * context_sign(b, row.ctx));
  }
}

TEST_CASE("is_even examples") {
  CHECK(is_even(chi()).even);
  CHECK_FALSE(is_even(transposition01()).even);
  CHECK(is_even(Gate::identity(cg2(), {0, 1})).even);
  for (int len = 1; len <= 3; ++len)
    CHECK(parity_report(rebase(transposition01(), {0, len - 1})).verdict ==
          Verdict::Odd);
}

TEST_CASE("is_even agrees with a search over enlargements") {
  std::mt19937 rng(31);
  std::vector<ShiftPtr> graphs{cg2(), gm(), full2()};
  for (int k = 0; k < 24; ++k) {
    auto s = graphs[k % 3];
    Gate g = random_gate(rng, s, {0, 1});
    auto r = is_even(g);
    CHECK(r.even == even_somewhere(g, 4));
    // verdict stable under two more enlargements
    Interval d = r.decisive.support;
    for (int w = 1; w <= 2; ++w)
      CHECK((parity_report(rebase(g, d.widened(w, w))).verdict ==
             Verdict::Even) == r.even);
  }
}

TEST_CASE("perm_commutator_factor examples") {
  auto [q0, r0] = perm_commutator_factor(Perm(5));
  CHECK(commutator(q0, r0).is_identity());
  for (auto const &cycles :
       {std::vector<std::vector<unsigned>>{{0, 1, 2}},
        std::vector<std::vector<unsigned>>{{0, 1}, {2, 3}}}) {
    Perm p = Perm::from_cycles(5, cycles);
    auto [q, r] = perm_commutator_factor(p);
    CHECK(commutator(q, r) == p);
  }
  CHECK(code_of([] { perm_commutator_factor(Perm::from_cycles(5, {{0, 1}})); }) ==
        ErrorCode::OddPermutation);
  CHECK(code_of([] { perm_commutator_factor(Perm::from_cycles(4, {{0, 1, 2}})); }) ==
        ErrorCode::DomainTooSmall);
}

TEST_CASE("brute-force oracle: even permutations of 5 and 6 points are commutators") {
  CHECK(oracle::every_even_perm_is_commutator(5));
  CHECK(oracle::every_even_perm_is_commutator(6));
}

TEST_CASE("perm_commutator_factor round-trips on 5 and 6 points") {
  for (unsigned n = 5; n <= 6; ++n) {
    std::vector<unsigned> images(n);
    std::iota(images.begin(), images.end(), 0u);
    do {
      Perm p(images);
      if (!p.is_even())
        continue;
      auto [q, r] = perm_commutator_factor(p);
      REQUIRE(commutator(q, r) == p);
    } while (std::next_permutation(images.begin(), images.end()));
  }
}

TEST_CASE("constructive Ore method on large domains") {
  std::mt19937 rng(99);
  for (unsigned n : {8u, 9u, 12u, 20u})
    for (int k = 0; k < 30; ++k) {
      Perm p = random_perm(rng, n);
      if (!p.is_even())
        p = Perm::from_cycles(n, {{0, 1}}) * p;
      auto [q, r] = ore_constructive(p);
      CHECK(commutator(q, r) == p);
    }
}

TEST_CASE("commutator witnesses for gates") {
  auto w = commutator_witness(chi());
  CHECK(w.support == Interval{0, 3});
  CHECK(gates_equal(gate_commutator(w.g1, w.g2), chi()));

  auto id = commutator_witness(Gate::identity(full2(), {0, 0}));
  CHECK(id.g1.is_identity());
  CHECK(id.g2.is_identity());

  CHECK(code_of([] { commutator_witness(transposition01()); }) ==
        ErrorCode::NotEven);
}

TEST_CASE("commutator witnesses for random even gates") {
  std::mt19937 rng(4);
  for (int k = 0; k < 6; ++k) {
    auto s = k % 2 ? gm() : full2();
    Gate g = random_gate(rng, s, {0, 1}, true);
    if (!is_even(g).even)
      continue;
    auto w = commutator_witness(g);
    CHECK(gates_equal(gate_commutator(w.g1, w.g2), g));
  }
}

TEST_CASE("alt_normal_closure examples") {
  Perm c = Perm::from_cycles(5, {{0, 1, 2}});
  auto cert = alt_normal_closure(c);
  CHECK(cert.verified);
  CHECK(cert.terms.size() == 1);
  CHECK(evaluate_terms(c, cert.terms) == c);

  Perm t = Perm::from_cycles(5, {{0, 1}});
  auto ct = alt_normal_closure(t);
  CHECK(ct.verified);
  CHECK(ct.target == c);
  CHECK(code_of([] { alt_normal_closure(Perm(5)); }) ==
        ErrorCode::IdentityInput);
}

TEST_CASE("alt_normal_closure certificates against the closure oracle") {
  // the closure oracle contains the target exactly when a certificate exists
  for (auto const &cycles : {std::vector<std::vector<unsigned>>{{0, 1}},
                             std::vector<std::vector<unsigned>>{{0, 1, 2, 3}},
                             std::vector<std::vector<unsigned>>{{0, 1}, {2, 3}},
                             std::vector<std::vector<unsigned>>{{0, 1, 2, 3, 4}}}) {
    Perm p = Perm::from_cycles(5, cycles);
    auto closure = oracle::normal_closure(p);
    Perm target = Perm::from_cycles(5, {{0, 1, 2}});
    CHECK(std::binary_search(closure.begin(), closure.end(), target));
    auto cert = alt_normal_closure(p);
    CHECK(cert.verified);
    // independent evaluation: product of (p^a)^e, left to right
    Perm acc(5);
    for (auto const &t : cert.terms) {
      CHECK(t.conjugator.is_even());
      Perm conj = t.conjugator.inverse() * p * t.conjugator;
      acc = acc * (t.exp > 0 ? conj : conj.inverse());
    }
    CHECK(acc == target);
  }
}

TEST_CASE("three-cycle factors and even conjugators") {
  std::mt19937 rng(1);
  for (int k = 0; k < 40; ++k) {
    Perm p = random_perm(rng, 7);
    if (!p.is_even())
      continue;
    Perm acc(7);
    for (auto const &c : three_cycle_factors(p)) {
      CHECK(c.cycle_type().front() == 3);
      CHECK(c.support_size() == 3);
      acc = acc * c;
    }
    CHECK(acc == p);
  }
  Perm c = Perm::from_cycles(6, {{0, 1, 2}});
  Perm d = Perm::from_cycles(6, {{5, 3, 4}});
  Perm b = even_conjugator(c, d);
  CHECK(b.is_even());
  CHECK(conjugate(c, b) == d);
}
