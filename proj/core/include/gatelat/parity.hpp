#pragma once

#include <utility>
#include <vector>

#include "gatelat/gate.hpp"
#include "gatelat/permutation.hpp"

namespace gatelat {

enum class Verdict { Even, Odd, Mixed };

struct ParityRow {
  Context ctx;
  int sign = 1;
};

struct ParityReport {
  Interval support;
  std::vector<ParityRow> rows; // nonempty contexts, ordered
  Verdict verdict = Verdict::Even;
};

char const *verdict_name(Verdict v);

int context_sign(Gate const &g, Context ctx);
ParityReport parity_report(Gate const &g);

struct EvennessResult {
  bool even = true;
  ParityReport minimal;   // at the minimal support
  ParityReport enlarged;  // one window step wider on each side
  ParityReport decisive;  // the enlargement the verdict is read from
  int enlargement = 1;
};

EvennessResult is_even(Gate const &g);

// p = q^-1 r^-1 q r
std::pair<Perm, Perm> perm_commutator_factor(Perm const &p);
std::pair<Perm, Perm> ore_exhaustive(Perm const &p);
std::pair<Perm, Perm> ore_constructive(Perm const &p);

struct GateWitness {
  Gate g1;
  Gate g2;
  Interval support;
};

// [g1, g2] = g
GateWitness commutator_witness(Gate const &g);

// product of (p^alpha)^exp over terms, left to right
struct ConjugateTerm {
  Perm conjugator;
  int exp = 1;
};

struct AltCertificate {
  Perm target;
  std::vector<ConjugateTerm> terms;
  bool verified = false;
};

Perm evaluate_terms(Perm const &p, std::vector<ConjugateTerm> const &terms);

// designated target (0 1 2)
AltCertificate alt_normal_closure(Perm const &p);

// 3-cycles c_1, ..., c_k with p = c_1 c_2 ... c_k
std::vector<Perm> three_cycle_factors(Perm const &p);

// even b with c^b = d for 3-cycles c, d on at least 5 points
Perm even_conjugator(Perm const &c, Perm const &d);

} // namespace gatelat
