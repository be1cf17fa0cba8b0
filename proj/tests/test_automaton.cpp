#include <doctest.h>

#include <random>

#include "gatelat/automaton.hpp"
#include "gatelat/error.hpp"
#include "gatelat/lattice.hpp"
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

bool equal_on_periodic(CA const &f, CA const &g, int max_period) {
  for (int P = f.power(); P <= max_period; P += f.power())
    for (auto const &x : periodic_points(f.shift(), P))
      if (ca_apply(f, x) != ca_apply(g, x))
        return false;
  return true;
}

} // namespace

TEST_CASE("rule construction") {
  auto id = ca_from_function(full2(), 1, {-1, 1},
                             [](int, std::span<int const> w) { return w[1]; });
  CHECK(ca_equal(id, CA::identity(full2())));
  auto right = ca_from_function(
      full2(), 1, {0, 1}, [](int, std::span<int const> w) { return w[1]; });
  CHECK(ca_equal(right, CA::shift_map(full2())));
  CHECK_NOTHROW(xor_rule());

  // CG2 rule that always outputs aa cannot follow itself after ab
  CHECK(code_of([] {
          ca_from_function(cg2(), 1, {0, 0},
                           [](int, std::span<int const> w) {
                             return w[0] == 1 ? 1 : 0;
                           });
        }) == ErrorCode::InvalidImage);

  std::vector<std::map<std::vector<int>, int>> partial(1);
  partial[0][{0}] = 0;
  CHECK(code_of([&] { ca_from_rule(full2(), 1, {0, 0}, partial); }) ==
        ErrorCode::PartialRule);
}

TEST_CASE("ca_apply follows the local rule") {
  std::mt19937 rng(6);
  for (auto const &f : {xor_rule(), complement(), CA::shift_map(gm(), 2)})
    for (int P = f.power(); P <= 8; P += f.power())
      for (auto const &x : periodic_points(f.shift(), P))
        CHECK(ca_apply(f, x) == oracle::ca_apply_direct(f, x));
}

TEST_CASE("ca algebra") {
  auto sigma = CA::shift_map(full2());
  auto inv = ca_invert(sigma, 1);
  CHECK(ca_equal(ca_compose(sigma, inv), CA::identity(full2())));
  CHECK(ca_equal(ca_compose(inv, sigma), CA::identity(full2())));
  CHECK(ca_equal(ca_extend(CA::identity(full2()), {-1, 1}),
                 CA::identity(full2())));
  CHECK(code_of([] { ca_invert(xor_rule(), 4); }) ==
        ErrorCode::NotInvertibleWithinBound);
  CHECK(code_of([&] {
          ca_compose(sigma, CA::identity(full2(), 2));
        }) == ErrorCode::PowerMismatch);

  for (auto const &f : {xor_rule(), sigma, complement()})
    for (auto const &g : {xor_rule(), sigma, complement()}) {
      auto fg = ca_compose(f, g);
      for (int P = 1; P <= 8; ++P)
        for (auto const &x : periodic_points(*full2(), P))
          CHECK(ca_apply(fg, x) == ca_apply(f, ca_apply(g, x)));
      CHECK(ca_equal(f, g) == equal_on_periodic(f, g, 10));
    }
}

TEST_CASE("ca_invert on lattice automata") {
  std::mt19937 rng(15);
  for (int k = 0; k < 6; ++k) {
    auto lat = random_lattice(rng, k % 2 ? cg2() : full2(), 2);
    CA f = gate_lattice_to_ca(lat);
    CA g = ca_invert(f, 4);
    CHECK(ca_equal(ca_compose(f, g), CA::identity(f.shift_ptr(), f.power())));
    CHECK(ca_equal(ca_compose(g, f), CA::identity(f.shift_ptr(), f.power())));
  }
}

TEST_CASE("ca_translate and ca_lift") {
  CA f = gate_lattice_to_ca(make_lattice(chi(), 2, 0));
  CA t = ca_translate(f, 1);
  CHECK(ca_equal(t, gate_lattice_to_ca(make_lattice(chi(), 2, 1))));
  CHECK(ca_equal(ca_lift(f, 4), gate_lattice_to_ca(make_lattice(chi(), 2, 0), 4)));
  CHECK(ca_hash(f) == ca_hash(ca_extend(f, {-3, 3})));
}

TEST_CASE("gate lattice compilation") {
  CHECK(gate_lattice_to_ca(make_lattice(Gate::identity(cg2(), {0, 0}), 3, 1))
            .is_identity());
  CHECK(ca_equal(gate_lattice_to_ca(make_lattice(flip(full2()), 1, 0)),
                 complement()));

  CA f = gate_lattice_to_ca(make_lattice(chi(), 2, 0));
  CHECK(f.power() == 2);
  auto x = PeriodicConfiguration{cg2_path("aaa")};
  CHECK(ca_apply(f, x).edges == cg2_path("aba"));

  std::mt19937 rng(21);
  for (int k = 0; k < 10; ++k) {
    auto s = std::vector{full2(), cg2(), gm()}[k % 3];
    auto lat = random_lattice(rng, s, 3);
    CA c = gate_lattice_to_ca(lat);
    for (int P = lat.period; P <= 12; P += lat.period) {
      if (P < lat.gate.support().length())
        continue;
      for (auto const &x : periodic_points(*s, P))
        CHECK(ca_apply(c, x) == oracle::lattice_apply_direct(lat, x));
    }
  }
}

TEST_CASE("simple symmetry forms") {
  auto id = simple_symmetry_form(
      make_lattice(Gate::identity(full2(), {0, 0}), 2, 0), 2);
  CHECK(id.edge_perm.is_identity());

  auto lat = make_lattice(flip(full2()), 4, 0);
  auto sym = simple_symmetry_form(lat, 1);
  CA via = symmetry_to_ca(sym, full2());
  CA direct = gate_lattice_to_ca(lat);
  for (int P = 4; P <= 16; P += 4)
    for (auto const &x : periodic_points(*full2(), P))
      CHECK(ca_apply(via, x) == ca_apply(direct, x));
  CHECK(ca_equal(via, direct));

  // edges keep their endpoints
  auto const &bs = *sym.blocks.shift;
  for (int e = 0; e < bs.num_edges(); ++e) {
    int pe = static_cast<int>(sym.edge_perm[e]);
    CHECK(bs.src(pe) == bs.src(e));
    CHECK(bs.dst(pe) == bs.dst(e));
  }

  auto chi2 = make_lattice(chi(), 2, 0);
  CHECK(code_of([&] { simple_symmetry_form(chi2, 1); }) ==
        ErrorCode::BlockTooSmall);
  auto sym2 = simple_symmetry_form(chi2, 2);
  CHECK(ca_equal(symmetry_to_ca(sym2, cg2()), gate_lattice_to_ca(chi2, 4)));
}

TEST_CASE("simple symmetry forms of sparse lattices") {
  std::mt19937 rng(17);
  for (int k = 0; k < 4; ++k) {
    auto s = k % 2 ? cg2() : full2();
    auto lat = make_lattice(random_gate(rng, s, {0, 1}), 4, k % 4);
    auto sym = simple_symmetry_form(lat, 2);
    CHECK(ca_equal(symmetry_to_ca(sym, s), gate_lattice_to_ca(lat, 8)));
  }
}
