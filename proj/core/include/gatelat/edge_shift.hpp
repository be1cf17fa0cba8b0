#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gatelat {

using Matrix = std::vector<std::vector<std::int64_t>>;

Matrix mat_identity(std::size_t n);
Matrix mat_mul(Matrix const &a, Matrix const &b);
Matrix mat_mod2(Matrix const &a);
Matrix mat_mul_mod2(Matrix const &a, Matrix const &b);
Matrix mat_pow(Matrix const &a, unsigned k);
Matrix mat_pow_mod2(Matrix const &a, unsigned k);

struct RawEdge {
  std::string id;
  std::string src;
  std::string dst;
};

struct RawGraph {
  std::vector<std::string> vertices;
  std::vector<RawEdge> edges;
};

// Pair of vertices flanking a hole, as vertex indices.
struct Context {
  int left = 0;
  int right = 0;

  auto operator<=>(Context const &) const = default;
};

struct PathPattern {
  int base = 0;
  std::vector<int> edges;

  bool operator==(PathPattern const &) const = default;
};

struct PeriodicConfiguration {
  std::vector<int> edges;

  int period() const { return static_cast<int>(edges.size()); }
  bool operator==(PeriodicConfiguration const &) const = default;
};

// Validated essential graph. Vertices and edges are indexed in increasing
// order of their id strings, so edge index order is canonical path order.
class EdgeShift {
 public:
  static EdgeShift validate(RawGraph const &raw, bool trim = false);

  int num_vertices() const { return static_cast<int>(_vertex_names.size()); }
  int num_edges() const { return static_cast<int>(_edge_names.size()); }

  std::string const &vertex_name(int v) const { return _vertex_names[v]; }
  std::string const &edge_name(int e) const { return _edge_names[e]; }
  std::optional<int> find_vertex(std::string_view name) const;
  std::optional<int> find_edge(std::string_view name) const;

  int src(int e) const { return _src[e]; }
  int dst(int e) const { return _dst[e]; }
  std::span<int const> out_edges(int v) const { return _out[v]; }
  Matrix const &matrix() const { return _matrix; }

  bool is_path(std::span<int const> edges) const;
  bool is_cycle(std::span<int const> edges) const;

  RawGraph raw() const;
  std::vector<std::string> vertex_names_of(std::span<int const> edges) const;

  bool operator==(EdgeShift const &other) const;

 private:
  std::vector<std::string> _vertex_names;
  std::vector<std::string> _edge_names;
  std::vector<int> _src;
  std::vector<int> _dst;
  std::vector<std::vector<int>> _out;
  Matrix _matrix;
};

using ShiftPtr = std::shared_ptr<EdgeShift const>;

ShiftPtr make_shift(RawGraph const &raw, bool trim = false);
bool same_shift(ShiftPtr const &a, ShiftPtr const &b);
void require_same_shift(ShiftPtr const &a, ShiftPtr const &b);

// Paths of length n from ctx.left to ctx.right, lexicographic by edge index.
std::vector<PathPattern> enumerate_paths(EdgeShift const &shift, Context ctx,
                                         int n);

struct MixingResult {
  bool mixing = false;
  std::optional<int> exponent;
};

MixingResult is_mixing(EdgeShift const &shift);

std::optional<int> has_even_fillings(EdgeShift const &shift);

// (A_2)^k for k = mu, mu+1, ... is periodic; returns mu (least preperiod)
// and the period of the powers of M mod 2.
std::pair<int, int> mod2_power_cycle(EdgeShift const &shift);

struct BlockPresentation {
  ShiftPtr shift;
  int n = 1;
  int c = 0;
  std::vector<std::vector<int>> vertex_words; // vertex index -> c-path
  std::vector<std::vector<int>> edge_words;   // edge index -> (c+n)-path

  // block k covers original positions [k*n, k*n + c + n - 1]
  PeriodicConfiguration encode(EdgeShift const &orig,
                               PeriodicConfiguration const &x) const;
  PeriodicConfiguration decode(PeriodicConfiguration const &y) const;
  PathPattern encode(EdgeShift const &orig, PathPattern const &p) const;
  PathPattern decode(PathPattern const &p) const;
};

BlockPresentation block_presentation(EdgeShift const &shift, int n, int c);

std::vector<Context> nonempty_contexts(EdgeShift const &shift, int n);

// all closed paths of the given length, lexicographic
std::vector<PeriodicConfiguration> periodic_points(EdgeShift const &shift,
                                                   int period);

} // namespace gatelat
