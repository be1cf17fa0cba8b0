#include "gatelat/path_space.hpp"

#include "gatelat/error.hpp"

namespace gatelat {

PathSpace::PathSpace(EdgeShift const &shift, int length)
    : _shift(&shift), _length(length), _nv(shift.num_vertices()) {
  if (length < 1)
    fail(ErrorCode::InvalidArgument, "path length must be positive");
  int ne = shift.num_edges();
  _from.assign(static_cast<std::size_t>(length + 1) * _nv, 0);
  for (int v = 0; v < _nv; ++v)
    _from[v] = 1;
  for (int k = 1; k <= length; ++k)
    for (int v = 0; v < _nv; ++v) {
      std::uint64_t total = 0;
      for (int e : shift.out_edges(v)) {
        total += count_from(k - 1, shift.dst(e));
        if (total > kMaxTableSize)
          fail(ErrorCode::TableTooLarge,
               "more than 2^24 paths of length " + std::to_string(length));
      }
      _from[static_cast<std::size_t>(k) * _nv + v] = total;
    }

  _offset.assign(static_cast<std::size_t>(length) * ne, 0);
  for (int k = 0; k < length; ++k)
    for (int v = 0; v < _nv; ++v) {
      std::uint64_t acc = 0;
      for (int e : shift.out_edges(v)) {
        _offset[static_cast<std::size_t>(k) * ne + e] = acc;
        acc += count_from(k, shift.dst(e));
      }
    }

  _first.assign(ne, 0);
  for (int e = 0; e < ne; ++e) {
    _first[e] = _size;
    _size += count_from(length - 1, shift.dst(e));
    if (_size > kMaxTableSize)
      fail(ErrorCode::TableTooLarge,
           "more than 2^24 paths of length " + std::to_string(length));
  }
}

PathSpace::PathSpace(ShiftPtr shift, int length)
    : PathSpace(*shift, length) {
  _owner = std::move(shift);
}

std::uint64_t PathSpace::rank(std::span<int const> path) const {
  int ne = _shift->num_edges();
  std::uint64_t r = _first[path[0]];
  for (int i = 1; i < _length; ++i)
    r += _offset[static_cast<std::size_t>(_length - 1 - i) * ne + path[i]];
  return r;
}

void PathSpace::unrank(std::uint64_t r, std::span<int> out) const {
  int ne = _shift->num_edges();
  int e = 0;
  while (e + 1 < ne && _first[e + 1] <= r)
    ++e;
  out[0] = e;
  r -= _first[e];
  for (int i = 1; i < _length; ++i) {
    int k = _length - 1 - i;
    auto outs = _shift->out_edges(_shift->dst(out[i - 1]));
    std::size_t t = 0;
    while (t + 1 < outs.size() &&
           _offset[static_cast<std::size_t>(k) * ne + outs[t + 1]] <= r)
      ++t;
    out[i] = outs[t];
    r -= _offset[static_cast<std::size_t>(k) * ne + outs[t]];
  }
}

std::vector<int> PathSpace::unrank(std::uint64_t r) const {
  std::vector<int> out(_length);
  unrank(r, out);
  return out;
}

} // namespace gatelat

#include <map>

namespace gatelat {

std::vector<ContextBlock> context_blocks(PathSpace const &space) {
  std::map<Context, std::vector<std::uint32_t>> blocks;
  auto const &shift = space.shift();
  space.for_each([&](std::span<int const> p, std::uint64_t r) {
    blocks[{shift.src(p.front()), shift.dst(p.back())}].push_back(
        static_cast<std::uint32_t>(r));
  });
  std::vector<ContextBlock> out;
  for (auto &[ctx, ranks] : blocks)
    out.push_back({ctx, std::move(ranks)});
  return out;
}

} // namespace gatelat
