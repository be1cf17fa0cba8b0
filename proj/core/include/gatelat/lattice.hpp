#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gatelat/automaton.hpp"
#include "gatelat/budget.hpp"
#include "gatelat/gate.hpp"
#include "gatelat/parity.hpp"

namespace gatelat {

// The gate applied at every site k = offset (mod period), as translate(gate, k).
struct GateLattice {
  Gate gate;
  int period = 1;
  int offset = 0;
};

GateLattice make_lattice(Gate g, int n, int j);
GateLattice translate_lattice(GateLattice const &lat, int k);
GateLattice invert_lattice(GateLattice const &lat);

struct WordFactor {
  GateLattice lattice;
  int exp = 1;
};

// Product of factors, leftmost applied last.
struct LatticeWord {
  ShiftPtr shift;
  std::vector<WordFactor> factors;
};

LatticeWord word_of(GateLattice const &lat);
LatticeWord word_of(std::vector<GateLattice> const &lats);
LatticeWord word_concat(LatticeWord const &a, LatticeWord const &b);
LatticeWord word_inverse(LatticeWord const &w);
LatticeWord word_translate(LatticeWord const &w, int k);
int word_period(LatticeWord const &w);

// power 0 means the lcm of the factor periods
CA word_eval(LatticeWord const &w, int power = 0);
bool word_equal(LatticeWord const &a, LatticeWord const &b);

PeriodicConfiguration apply_lattice(GateLattice const &lat,
                                    PeriodicConfiguration const &cfg);
PeriodicConfiguration apply_word(LatticeWord const &w,
                                 PeriodicConfiguration const &cfg);

std::vector<GateLattice> refine(GateLattice const &lat, int m);

// same product, gate support [0, L-1] and period >= L
std::vector<GateLattice> normalize_lattice(GateLattice const &lat);

struct EvenizeResult {
  std::vector<GateLattice> normalized;
  int m = 0;
  int p = 0;
  bool already_even = false;
  std::vector<GateLattice> factors;
};

EvenizeResult evenize(GateLattice const &lat);

int conjugation_bound(GateLattice const &lat, CA const &f, CA const &f_inv);

// f^-1 lat f as K/period lattices of period K, one per coset
std::vector<GateLattice> conjugate_lattice(GateLattice const &lat, CA const &f,
                                           int K);

struct KinReport {
  bool equal = false;
  int K = 0;
  int bound = 0;
  Interval commutator_support;
  std::string note;
};

int kin_bound(CA const &f, Gate const &g);
KinReport kin_commutator_check(CA const &f, Gate const &g, int K);

Gate separating_gate(CA const &f);

struct CertificateTerm {
  LatticeWord conjugator;
  int exp = 1;
};

struct GenerationCertificate {
  std::vector<CertificateTerm> terms;
  bool verified = false;
  std::uint64_t lhs_hash = 0;
  std::uint64_t rhs_hash = 0;
  int K = 0;
  int power = 0;
  std::vector<Interval> supports; // per coset
};

CA certificate_product(LatticeWord const &f, GenerationCertificate const &cert,
                       int power, Budget *budget = nullptr);

GenerationCertificate normal_generation_trace(LatticeWord const &f,
                                              GateLattice const &target,
                                              Budget &budget);

} // namespace gatelat
