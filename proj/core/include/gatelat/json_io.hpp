#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "gatelat/automaton.hpp"
#include "gatelat/edge_shift.hpp"
#include "gatelat/gate.hpp"
#include "gatelat/lattice.hpp"
#include "gatelat/parity.hpp"

namespace gatelat {

using json = nlohmann::json;

RawGraph graph_from_json(json const &j);
json to_json(EdgeShift const &shift);

std::vector<int> path_from_json(EdgeShift const &shift, json const &j);
json path_to_json(EdgeShift const &shift, std::span<int const> path);
Context context_from_json(EdgeShift const &shift, json const &left,
                          json const &right);

Interval interval_from_json(json const &j);
json to_json(Interval iv);

Gate gate_from_json(ShiftPtr const &shift, json const &j);
json to_json(Gate const &g);

json to_json(ParityReport const &report, EdgeShift const &shift);

CA ca_from_json(ShiftPtr const &shift, json const &j);
json to_json(CA const &f);

GateLattice lattice_from_json(ShiftPtr const &shift, json const &j);
json to_json(GateLattice const &lat);
json to_json(LatticeWord const &w);

json to_json(Perm const &p);
Perm perm_from_json(json const &j);

json to_json(GenerationCertificate const &cert);

std::string hex64(std::uint64_t v);

} // namespace gatelat
