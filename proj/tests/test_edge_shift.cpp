#include <doctest.h>

#include <random>

#include "gatelat/edge_shift.hpp"
#include "gatelat/error.hpp"
#include "gatelat/path_space.hpp"
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

} // namespace

TEST_CASE("validate computes the adjacency matrix") {
  CHECK(full2()->matrix() == Matrix{{2}});
  CHECK(cg2()->matrix() == Matrix{{1, 1}, {1, 1}});
  CHECK(gm()->matrix() == Matrix{{1, 1}, {1, 0}});
}

TEST_CASE("validate rejects malformed graphs") {
  RawGraph sink{{"a", "b"}, {{"x", "a", "b"}, {"y", "a", "a"}}};
  CHECK(code_of([&] { EdgeShift::validate(sink); }) == ErrorCode::NonEssential);

  RawGraph dangling{{"a"}, {{"x", "a", "z"}}};
  CHECK(code_of([&] { EdgeShift::validate(dangling); }) ==
        ErrorCode::DanglingEdge);

  RawGraph dup{{"a"}, {{"x", "a", "a"}, {"x", "a", "a"}}};
  CHECK(code_of([&] { EdgeShift::validate(dup); }) == ErrorCode::DuplicateId);
}

TEST_CASE("trim deletes non-essential vertices iteratively") {
  // c -> b -> a, a loops: b and c have no in-edges after trimming
  RawGraph raw{{"a", "b", "c"},
               {{"aa", "a", "a"}, {"ba", "b", "a"}, {"cb", "c", "b"}}};
  auto s = EdgeShift::validate(raw, true);
  CHECK(s.num_vertices() == 1);
  CHECK(s.num_edges() == 1);

  RawGraph empty{{"a", "b"}, {{"ab", "a", "b"}}};
  CHECK(code_of([&] { EdgeShift::validate(empty, true); }) ==
        ErrorCode::NonEssential);
}

TEST_CASE("enumerate_paths examples") {
  auto const &c = *cg2();
  int a = *c.find_vertex("a"), b = *c.find_vertex("b");
  auto paths = enumerate_paths(c, {a, b}, 2);
  REQUIRE(paths.size() == 2);
  CHECK(paths[0].edges == cg2_path("aab"));
  CHECK(paths[1].edges == cg2_path("abb"));

  CHECK(enumerate_paths(*full2(), {0, 0}, 3).size() == 8);

  auto const &g = *gm();
  int two = *g.find_vertex("2");
  CHECK(enumerate_paths(g, {two, two}, 1).empty());
}

TEST_CASE("path counts match matrix powers and the brute-force order") {
  std::mt19937 rng(11);
  std::vector<ShiftPtr> graphs{full2(), cg2(), gm()};
  for (int k = 0; k < 6; ++k)
    graphs.push_back(random_graph(rng, 3));
  for (auto const &s : graphs)
    for (int n = 1; n <= 5; ++n) {
      auto brute = oracle::all_paths(*s, n);
      Matrix mn = mat_pow(s->matrix(), n);
      for (int a = 0; a < s->num_vertices(); ++a)
        for (int b = 0; b < s->num_vertices(); ++b) {
          auto got = enumerate_paths(*s, {a, b}, n);
          CHECK(static_cast<std::int64_t>(got.size()) == mn[a][b]);
          std::vector<std::vector<int>> want;
          for (auto const &p : brute)
            if (s->src(p.front()) == a && s->dst(p.back()) == b)
              want.push_back(p);
          REQUIRE(got.size() == want.size());
          for (std::size_t i = 0; i < got.size(); ++i)
            CHECK(got[i].edges == want[i]);
        }
    }
}

TEST_CASE("path space ranks agree with enumeration order") {
  std::mt19937 rng(5);
  for (int k = 0; k < 5; ++k) {
    auto s = random_graph(rng, 3);
    PathSpace space(s, 4);
    auto brute = oracle::all_paths(*s, 4);
    REQUIRE(space.size() == brute.size());
    space.for_each([&](std::span<int const> p, std::uint64_t r) {
      CHECK(std::vector<int>(p.begin(), p.end()) == brute[r]);
      CHECK(space.rank(p) == r);
      CHECK(space.unrank(r) == brute[r]);
    });
  }
}

TEST_CASE("mixing examples") {
  auto f = is_mixing(*full2());
  CHECK(f.mixing);
  CHECK(f.exponent == 1);
  auto g = is_mixing(*gm());
  CHECK(g.mixing);
  CHECK(g.exponent == 2);
  CHECK_FALSE(is_mixing(*two_cycle()).mixing);
}

TEST_CASE("mixing agrees with the gluing oracle") {
  std::mt19937 rng(2024);
  for (int k = 0; k < 15; ++k) {
    auto s = random_graph(rng, 4);
    auto r = is_mixing(*s);
    auto o = oracle::gluing_length(*s, 12);
    CHECK(r.mixing == o.has_value());
    if (o)
      CHECK(r.exponent == o);
  }
}

TEST_CASE("even fillings examples and oracle") {
  CHECK(has_even_fillings(*full2()) == 1);
  CHECK(has_even_fillings(*cg2()) == 2);
  CHECK_FALSE(has_even_fillings(*gm()).has_value());
  std::mt19937 rng(77);
  for (int k = 0; k < 15; ++k) {
    auto s = random_graph(rng, 4);
    CHECK(has_even_fillings(*s) == oracle::even_filling_length(*s, 6));
  }
}

TEST_CASE("block presentation examples") {
  auto f = block_presentation(*full2(), 2, 0);
  CHECK(f.shift->num_vertices() == 1);
  CHECK(f.shift->num_edges() == 4);

  auto g = block_presentation(*gm(), 1, 1);
  CHECK(g.shift->num_vertices() == 3);
  CHECK(g.shift->num_edges() == 5);

  auto c = block_presentation(*cg2(), 1, 0);
  CHECK(c.shift->matrix() == cg2()->matrix());
}

TEST_CASE("block presentation recoding round-trips") {
  for (auto const &s : {full2(), cg2(), gm()})
    for (int n = 1; n <= 3; ++n)
      for (int c = 0; c <= 2; ++c) {
        auto bp = block_presentation(*s, n, c);
        for (int P = n; P <= 12; P += n)
          for (auto const &x : periodic_points(*s, P)) {
            auto y = bp.encode(*s, x);
            CHECK(y.period() == P / n);
            CHECK(bp.shift->is_cycle(y.edges));
            CHECK(bp.decode(y) == x);
          }
      }
}

TEST_CASE("periodic points are the closed paths") {
  CHECK(periodic_points(*full2(), 3).size() == 8);
  // trace of M^P counts closed paths
  for (int P = 1; P <= 6; ++P) {
    Matrix mp = mat_pow(gm()->matrix(), P);
    CHECK(static_cast<std::int64_t>(periodic_points(*gm(), P).size()) ==
          mp[0][0] + mp[1][1]);
  }
}
