#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gatelat/edge_shift.hpp"
#include "gatelat/path_space.hpp"
#include "gatelat/permutation.hpp"

namespace gatelat {

class CellularAutomaton;

struct Interval {
  int lo = 0;
  int hi = 0;

  int length() const { return hi - lo + 1; }
  bool contains(Interval other) const {
    return lo <= other.lo && other.hi <= hi;
  }
  Interval shifted(int k) const { return {lo + k, hi + k}; }
  Interval widened(int left, int right) const {
    return {lo - left, hi + right};
  }

  auto operator<=>(Interval const &) const = default;
};

Interval hull(Interval a, Interval b);

// Permutation of all paths covering a support interval that fixes the
// boundary vertices. Stored as an image table over canonical path ranks.
class Gate {
 public:
  Gate(ShiftPtr shift, Interval support, std::vector<std::uint32_t> image);

  static Gate identity(ShiftPtr shift, Interval support);

  ShiftPtr const &shift_ptr() const { return _shift; }
  EdgeShift const &shift() const { return *_shift; }
  Interval support() const { return _support; }
  PathSpace const &space() const { return *_space; }
  std::vector<std::uint32_t> const &image() const { return _image; }

  bool is_identity() const;

  // window holds exactly the edges at the support positions
  void apply_window(std::span<int> window) const;

 private:
  struct Unchecked {};
  Gate(ShiftPtr shift, Interval support,
       std::shared_ptr<PathSpace const> space,
       std::vector<std::uint32_t> image, Unchecked);

  friend Gate make_gate_unchecked(ShiftPtr, Interval,
                                  std::shared_ptr<PathSpace const>,
                                  std::vector<std::uint32_t>);

  ShiftPtr _shift;
  Interval _support;
  std::shared_ptr<PathSpace const> _space;
  std::vector<std::uint32_t> _image;
};

std::shared_ptr<PathSpace const> path_space(ShiftPtr const &shift, int length);

using PathMap = std::vector<std::pair<std::vector<int>, std::vector<int>>>;
using GateTable = std::map<Context, PathMap>;

// Contexts absent from the table act as the identity.
Gate gate_from_table(ShiftPtr shift, Interval support, GateTable const &table);

// Each Perm acts on the context's fillings in canonical order.
Gate gate_from_perms(ShiftPtr shift, Interval support,
                     std::map<Context, Perm> const &perms);

// f rewrites a window of support length in place.
Gate gate_from_function(ShiftPtr shift, Interval support,
                        std::function<void(std::span<int>)> const &f);

Perm context_perm(Gate const &g, Context ctx);
std::vector<std::pair<Context, Perm>> context_perms(Gate const &g);
GateTable gate_table(Gate const &g); // nontrivial contexts, moved paths only

Gate rebase(Gate const &g, Interval support);
Gate compose(Gate const &g1, Gate const &g2); // g1 after g2
Gate invert(Gate const &g);
Gate translate(Gate const &g, int k);
Gate gate_commutator(Gate const &a, Gate const &b); // a^-1 b^-1 a b
Gate gate_conjugate(Gate const &a, Gate const &b);  // b^-1 a b

// least support on which the same global map is a gate
Gate minimize(Gate const &g);

bool gates_equal(Gate const &a, Gate const &b);

PathPattern apply_gate(Gate const &g, PathPattern const &pattern);
// applies translate(g, site); the support must fit in one period
PeriodicConfiguration apply_gate(Gate const &g,
                                 PeriodicConfiguration const &cfg, int site);

bool commutes(Gate const &a, Gate const &b);

struct CommutationFailure {
  Interval support;
  std::vector<int> path;
};
std::optional<CommutationFailure> commutation_failure(Gate const &a,
                                                      Gate const &b);

// f^-1 g f
Gate conjugate_by_automorphism(Gate const &g, CellularAutomaton const &f,
                               CellularAutomaton const &f_inv);
Gate conjugate_by_automorphism(Gate const &g, CellularAutomaton const &f,
                               int radius_bound = 6);

} // namespace gatelat
