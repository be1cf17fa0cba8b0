#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "gatelat/edge_shift.hpp"
#include "gatelat/gate.hpp"
#include "gatelat/path_space.hpp"
#include "gatelat/permutation.hpp"

namespace gatelat {

struct GateLattice;

// Endomorphism of (X, sigma^power): the edge at position i is
// rule[i mod power][rank of x restricted to i + neighborhood].
class CellularAutomaton {
 public:
  using Rule = std::vector<std::vector<std::int32_t>>;

  CellularAutomaton(ShiftPtr shift, int power, Interval neighborhood,
                    Rule rule);

  static CellularAutomaton identity(ShiftPtr shift, int power = 1);
  // x -> sigma_k(x), i.e. position i reads x_{i+k}
  static CellularAutomaton shift_map(ShiftPtr shift, int k = 1,
                                     int power = 1);

  ShiftPtr const &shift_ptr() const { return _shift; }
  EdgeShift const &shift() const { return *_shift; }
  int power() const { return _power; }
  Interval neighborhood() const { return _neighborhood; }
  PathSpace const &space() const { return *_space; }
  Rule const &rule() const { return _rule; }

  int residue(long position) const {
    long r = position % _power;
    return static_cast<int>(r < 0 ? r + _power : r);
  }
  int output(int residue, std::uint64_t rank) const {
    return _rule[residue][rank];
  }
  // window holds x at [position + lo, position + hi]
  int eval(long position, std::span<int const> window) const {
    return _rule[residue(position)][_space->rank(window)];
  }

  bool is_identity() const;

 private:
  ShiftPtr _shift;
  int _power;
  Interval _neighborhood;
  std::shared_ptr<PathSpace const> _space;
  Rule _rule;

  struct Unchecked {};
  CellularAutomaton(ShiftPtr shift, int power, Interval neighborhood,
                    Rule rule, Unchecked);
  friend CellularAutomaton make_ca_unchecked(ShiftPtr, int, Interval, Rule);
};

using CA = CellularAutomaton;

// f(residue, window) -> output edge
CA ca_from_function(ShiftPtr shift, int power, Interval neighborhood,
                    std::function<int(int, std::span<int const>)> const &f);

// explicit rule entries per residue; every window path must be listed
CA ca_from_rule(ShiftPtr shift, int power, Interval neighborhood,
                std::vector<std::map<std::vector<int>, int>> const &entries);

CA ca_compose(CA const &f, CA const &g); // f after g
bool ca_equal(CA const &f, CA const &g);
CA ca_invert(CA const &f, int radius_bound);
CA ca_extend(CA const &f, Interval neighborhood);
CA ca_minimize(CA const &f);
CA ca_lift(CA const &f, int power);
// sigma_{-d} f sigma_d
CA ca_translate(CA const &f, int d);
CA ca_commutator(CA const &f, CA const &g, CA const &f_inv, CA const &g_inv);

PeriodicConfiguration ca_apply(CA const &f, PeriodicConfiguration const &x);

// hash of the minimized rule table
std::uint64_t ca_hash(CA const &f);

// power defaults to the lattice period and must be a multiple of it
CA gate_lattice_to_ca(GateLattice const &lat, int power = 0);
// the gate alone, applied at every site k = phase mod power
CA gate_to_ca(Gate const &g, int power, int phase);

struct SimpleSymmetry {
  BlockPresentation blocks; // block length m*n, no vertex memory
  int m = 1;
  int block_length = 1;
  int phase = 0; // block k covers positions [phase + k*B, phase + (k+1)*B - 1]
  Perm edge_perm;
};

SimpleSymmetry simple_symmetry_form(GateLattice const &lat, int m);
CA symmetry_to_ca(SimpleSymmetry const &sym, ShiftPtr const &shift);

} // namespace gatelat
