#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "gatelat/automaton.hpp"
#include "gatelat/edge_shift.hpp"
#include "gatelat/gate.hpp"
#include "gatelat/lattice.hpp"

namespace fixtures {

using namespace gatelat;

ShiftPtr full2();
ShiftPtr full3();
ShiftPtr cg2();
ShiftPtr gm();
ShiftPtr two_cycle();

// swap the middle vertex in contexts with left vertex a
Gate chi();
// single-cell symbol swap 0 <-> 1
Gate flip(ShiftPtr const &shift);
CA complement();
CA xor_rule();
// vertex relabeling a <-> b on CG2
CA cg2_relabel();

std::vector<int> edges_of(EdgeShift const &shift,
                          std::vector<std::string> const &names);
PeriodicConfiguration cfg(EdgeShift const &shift,
                          std::vector<std::string> const &names);
// vertex word v0 v1 ... vk read as the path v0v1, v1v2, ... on CG2
std::vector<int> cg2_path(std::string const &vertices);

// random essential graph with at most max_vertices vertices
ShiftPtr random_graph(std::mt19937 &rng, int max_vertices);
Perm random_perm(std::mt19937 &rng, unsigned n);
Gate random_gate(std::mt19937 &rng, ShiftPtr const &shift, Interval support,
                 bool even = false);
// gate support no longer than the period, so all translates commute
GateLattice random_lattice(std::mt19937 &rng, ShiftPtr const &shift,
                           int max_period);
LatticeWord random_word(std::mt19937 &rng, ShiftPtr const &shift,
                        int max_len, int max_period);

} // namespace fixtures

namespace oracle {

using namespace gatelat;

// every edge sequence of length n that is a path, in lexicographic order
std::vector<std::vector<int>> all_paths(EdgeShift const &shift, int n);

// exists m <= max_m such that every pair of words u, v of length <= 3
// glues through some word of length exactly m; returns the least such m
std::optional<int> gluing_length(EdgeShift const &shift, int max_m);

// least hole length n <= max_n with an even filling count in every context
std::optional<int> even_filling_length(EdgeShift const &shift, int max_n);

// sign of the permutation g induces on the fillings of ctx, by applying g
// to every filling pattern and counting cycles
int sign_by_application(Gate const &g, Context ctx);

// brute-force: is some even permutation of each cycle type a commutator
bool every_even_perm_is_commutator(unsigned n);

// brute-force normal closure of p under conjugation by A_n
std::vector<Perm> normal_closure(Perm const &p);

// f applied to x through the local rule, position by position
PeriodicConfiguration ca_apply_direct(CA const &f,
                                      PeriodicConfiguration const &x);

// x -> translate(g, k) for every k = j (mod n) in [0, period), in order
PeriodicConfiguration lattice_apply_direct(GateLattice const &lat,
                                           PeriodicConfiguration const &x);

} // namespace oracle
