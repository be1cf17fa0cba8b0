#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gatelat/edge_shift.hpp"

namespace gatelat {

// Upper bound on the number of paths any table may index.
inline constexpr std::uint64_t kMaxTableSize = std::uint64_t{1} << 24;

// Ranking of all paths of a fixed length in canonical (lexicographic) order.
class PathSpace {
 public:
  PathSpace(EdgeShift const &shift, int length);
  PathSpace(ShiftPtr shift, int length);

  EdgeShift const &shift() const { return *_shift; }
  int length() const { return _length; }
  std::uint64_t size() const { return _size; }

  std::uint64_t rank(std::span<int const> path) const;
  void unrank(std::uint64_t r, std::span<int> out) const;
  std::vector<int> unrank(std::uint64_t r) const;

  // number of paths of length k starting at v
  std::uint64_t count_from(int k, int v) const {
    return _from[static_cast<std::size_t>(k) * _nv + v];
  }

  // f(path, rank) for every path, in rank order
  template <class F> void for_each(F &&f) const {
    std::vector<int> path(_length);
    std::vector<int> slot(_length, 0);
    std::uint64_t r = 0;
    int ne = _shift->num_edges();
    // odometer over out-edge choices; every prefix extends (essential graph)
    int pos = 0;
    slot[0] = 0;
    for (;;) {
      if (pos == 0) {
        if (slot[0] == ne)
          return;
        path[0] = slot[0];
      } else {
        auto outs = _shift->out_edges(_shift->dst(path[pos - 1]));
        if (slot[pos] == static_cast<int>(outs.size())) {
          --pos;
          ++slot[pos];
          continue;
        }
        path[pos] = outs[slot[pos]];
      }
      if (pos + 1 == _length) {
        f(std::span<int const>(path), r++);
        ++slot[pos];
      } else {
        ++pos;
        slot[pos] = 0;
      }
    }
  }

 private:
  ShiftPtr _owner;
  EdgeShift const *_shift;
  int _length;
  int _nv;
  std::uint64_t _size = 0;
  std::vector<std::uint64_t> _from;   // (length+1) x V
  std::vector<std::uint64_t> _offset; // length x E, offset among siblings
  std::vector<std::uint64_t> _first;  // E, offset of first edge
};

} // namespace gatelat

namespace gatelat {

// Fillings of one context, as ascending global ranks.
struct ContextBlock {
  Context ctx;
  std::vector<std::uint32_t> ranks;
};

// Nonempty contexts only, ordered by (left, right).
std::vector<ContextBlock> context_blocks(PathSpace const &space);

} // namespace gatelat
