#include "gatelat/gate.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include "gatelat/automaton.hpp"
#include "gatelat/error.hpp"

namespace gatelat {

Interval hull(Interval a, Interval b) {
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

std::shared_ptr<PathSpace const> path_space(ShiftPtr const &shift,
                                            int length) {
  struct Key {
    EdgeShift const *shift;
    int length;
    bool operator==(Key const &) const = default;
  };
  struct KeyHash {
    std::size_t operator()(Key const &k) const {
      return std::hash<void const *>()(k.shift) * 31u + k.length;
    }
  };
  static std::mutex mutex;
  static std::unordered_map<Key, std::weak_ptr<PathSpace const>, KeyHash>
      cache;

  Key key{shift.get(), length};
  std::lock_guard lock(mutex);
  auto it = cache.find(key);
  if (it != cache.end())
    if (auto sp = it->second.lock())
      return sp;
  auto sp = std::make_shared<PathSpace const>(shift, length);
  cache[key] = sp;
  if (cache.size() > 4096)
    std::erase_if(cache, [](auto const &kv) { return kv.second.expired(); });
  return sp;
}

Gate::Gate(ShiftPtr shift, Interval support,
           std::shared_ptr<PathSpace const> space,
           std::vector<std::uint32_t> image, Unchecked)
    : _shift(std::move(shift)), _support(support), _space(std::move(space)),
      _image(std::move(image)) {}

Gate make_gate_unchecked(ShiftPtr shift, Interval support,
                         std::shared_ptr<PathSpace const> space,
                         std::vector<std::uint32_t> image) {
  return Gate(std::move(shift), support, std::move(space), std::move(image),
              Gate::Unchecked{});
}

Gate::Gate(ShiftPtr shift, Interval support, std::vector<std::uint32_t> image)
    : _shift(std::move(shift)), _support(support),
      _image(std::move(image)) {
  if (support.length() < 1)
    fail(ErrorCode::InvalidArgument, "empty gate support");
  _space = path_space(_shift, support.length());
  if (_image.size() != _space->size())
    fail(ErrorCode::NotBijective, "image table has wrong size");
  std::vector<bool> hit(_image.size(), false);
  std::vector<int> p(support.length()), q(support.length());
  for (std::size_t r = 0; r < _image.size(); ++r) {
    if (_image[r] >= _image.size() || hit[_image[r]])
      fail(ErrorCode::NotBijective, "image table is not a permutation");
    hit[_image[r]] = true;
    _space->unrank(r, p);
    _space->unrank(_image[r], q);
    if (_shift->src(p.front()) != _shift->src(q.front()) ||
        _shift->dst(p.back()) != _shift->dst(q.back()))
      fail(ErrorCode::EndpointMismatch, "image path changes its endpoints");
  }
}

Gate Gate::identity(ShiftPtr shift, Interval support) {
  auto space = path_space(shift, support.length());
  std::vector<std::uint32_t> image(space->size());
  std::iota(image.begin(), image.end(), 0u);
  return make_gate_unchecked(std::move(shift), support, std::move(space),
                             std::move(image));
}

bool Gate::is_identity() const {
  for (std::size_t r = 0; r < _image.size(); ++r)
    if (_image[r] != r)
      return false;
  return true;
}

void Gate::apply_window(std::span<int> window) const {
  _space->unrank(_image[_space->rank(window)], window);
}

Gate gate_from_table(ShiftPtr shift, Interval support,
                     GateTable const &table) {
  auto space = path_space(shift, support.length());
  std::vector<std::uint32_t> image(space->size());
  std::iota(image.begin(), image.end(), 0u);
  std::vector<bool> assigned(space->size(), false);
  for (auto const &[ctx, pairs] : table) {
    for (auto const &[from, to] : pairs) {
      for (auto const *path : {&from, &to}) {
        if (static_cast<int>(path->size()) != support.length() ||
            !shift->is_path(*path))
          fail(ErrorCode::NotBijective, "table entry is not a path of length " +
                                            std::to_string(support.length()));
        if (shift->src(path->front()) != ctx.left ||
            shift->dst(path->back()) != ctx.right)
          fail(ErrorCode::EndpointMismatch,
               "table path does not belong to its context");
      }
      auto r = space->rank(from);
      if (assigned[r])
        fail(ErrorCode::NotBijective, "path mapped twice");
      assigned[r] = true;
      image[r] = static_cast<std::uint32_t>(space->rank(to));
    }
  }
  return Gate(std::move(shift), support, std::move(image));
}

Gate gate_from_perms(ShiftPtr shift, Interval support,
                     std::map<Context, Perm> const &perms) {
  auto space = path_space(shift, support.length());
  std::vector<std::uint32_t> image(space->size());
  std::iota(image.begin(), image.end(), 0u);
  for (auto const &block : context_blocks(*space)) {
    auto it = perms.find(block.ctx);
    if (it == perms.end())
      continue;
    if (it->second.degree() != block.ranks.size())
      fail(ErrorCode::NotBijective, "context permutation has wrong degree");
    for (std::size_t k = 0; k < block.ranks.size(); ++k)
      image[block.ranks[k]] = block.ranks[it->second[k]];
  }
  for (auto const &[ctx, perm] : perms) {
    if (!perm.is_identity() &&
        enumerate_paths(*shift, ctx, support.length()).empty())
      fail(ErrorCode::EmptyContext, "permutation given for an empty context");
  }
  return make_gate_unchecked(std::move(shift), support, std::move(space),
                             std::move(image));
}

Gate gate_from_function(ShiftPtr shift, Interval support,
                        std::function<void(std::span<int>)> const &f) {
  auto space = path_space(shift, support.length());
  std::vector<std::uint32_t> image(space->size());
  std::vector<int> buf(support.length());
  space->for_each([&](std::span<int const> p, std::uint64_t r) {
    std::copy(p.begin(), p.end(), buf.begin());
    f(buf);
    if (!shift->is_path(buf))
      fail(ErrorCode::EndpointMismatch, "function produced an invalid path");
    image[r] = static_cast<std::uint32_t>(space->rank(buf));
  });
  return Gate(std::move(shift), support, std::move(image));
}

Perm context_perm(Gate const &g, Context ctx) {
  for (auto const &block : context_blocks(g.space())) {
    if (block.ctx != ctx)
      continue;
    std::vector<unsigned> images(block.ranks.size());
    for (std::size_t k = 0; k < block.ranks.size(); ++k) {
      auto target = g.image()[block.ranks[k]];
      images[k] = static_cast<unsigned>(
          std::lower_bound(block.ranks.begin(), block.ranks.end(), target) -
          block.ranks.begin());
    }
    return Perm(std::move(images));
  }
  fail(ErrorCode::EmptyContext, "context has no fillings");
}

std::vector<std::pair<Context, Perm>> context_perms(Gate const &g) {
  std::vector<std::pair<Context, Perm>> out;
  for (auto const &block : context_blocks(g.space())) {
    std::vector<unsigned> images(block.ranks.size());
    for (std::size_t k = 0; k < block.ranks.size(); ++k) {
      auto target = g.image()[block.ranks[k]];
      images[k] = static_cast<unsigned>(
          std::lower_bound(block.ranks.begin(), block.ranks.end(), target) -
          block.ranks.begin());
    }
    out.emplace_back(block.ctx, Perm(std::move(images)));
  }
  return out;
}

GateTable gate_table(Gate const &g) {
  GateTable table;
  auto const &shift = g.shift();
  g.space().for_each([&](std::span<int const> p, std::uint64_t r) {
    if (g.image()[r] == r)
      return;
    Context ctx{shift.src(p.front()), shift.dst(p.back())};
    table[ctx].emplace_back(std::vector<int>(p.begin(), p.end()),
                            g.space().unrank(g.image()[r]));
  });
  return table;
}

Gate rebase(Gate const &g, Interval support) {
  if (!support.contains(g.support()))
    fail(ErrorCode::SupportTooSmall, "new support does not contain [" +
                                         std::to_string(g.support().lo) + "," +
                                         std::to_string(g.support().hi) + "]");
  if (support == g.support())
    return g;
  auto space = path_space(g.shift_ptr(), support.length());
  std::vector<std::uint32_t> image(space->size());
  std::vector<int> buf(support.length());
  int off = g.support().lo - support.lo;
  int len = g.support().length();
  space->for_each([&](std::span<int const> p, std::uint64_t r) {
    std::copy(p.begin(), p.end(), buf.begin());
    g.apply_window(std::span<int>(buf).subspan(off, len));
    image[r] = static_cast<std::uint32_t>(space->rank(buf));
  });
  return make_gate_unchecked(g.shift_ptr(), support, std::move(space),
                             std::move(image));
}

Gate compose(Gate const &g1, Gate const &g2) {
  require_same_shift(g1.shift_ptr(), g2.shift_ptr());
  Interval u = hull(g1.support(), g2.support());
  Gate a = rebase(g1, u), b = rebase(g2, u);
  std::vector<std::uint32_t> image(b.image().size());
  for (std::size_t r = 0; r < image.size(); ++r)
    image[r] = a.image()[b.image()[r]];
  return make_gate_unchecked(g1.shift_ptr(), u,
                             path_space(g1.shift_ptr(), u.length()),
                             std::move(image));
}

Gate invert(Gate const &g) {
  std::vector<std::uint32_t> image(g.image().size());
  for (std::size_t r = 0; r < image.size(); ++r)
    image[g.image()[r]] = static_cast<std::uint32_t>(r);
  return make_gate_unchecked(g.shift_ptr(), g.support(),
                             path_space(g.shift_ptr(), g.support().length()),
                             std::move(image));
}

Gate translate(Gate const &g, int k) {
  return make_gate_unchecked(g.shift_ptr(), g.support().shifted(k),
                             path_space(g.shift_ptr(), g.support().length()),
                             g.image());
}

Gate gate_commutator(Gate const &a, Gate const &b) {
  return compose(compose(invert(a), invert(b)), compose(a, b));
}

Gate gate_conjugate(Gate const &a, Gate const &b) {
  return compose(invert(b), compose(a, b));
}

namespace {

// Restriction of g to the support without its first (left) or last edge,
// if g never touches that edge and acts consistently.
std::optional<Gate> drop_edge(Gate const &g, bool left) {
  int len = g.support().length();
  if (len < 2)
    return std::nullopt;
  auto sub = path_space(g.shift_ptr(), len - 1);
  constexpr std::uint32_t unset = ~std::uint32_t{0};
  std::vector<std::uint32_t> image(sub->size(), unset);
  std::vector<int> q(len);
  bool ok = true;
  g.space().for_each([&](std::span<int const> p, std::uint64_t r) {
    if (!ok)
      return;
    g.space().unrank(g.image()[r], q);
    std::size_t edge = left ? 0 : len - 1;
    if (p[edge] != q[edge]) {
      ok = false;
      return;
    }
    auto from = left ? p.subspan(1) : p.first(len - 1);
    auto to = left ? std::span<int const>(q).subspan(1)
                   : std::span<int const>(q).first(len - 1);
    auto fr = sub->rank(from);
    auto tr = static_cast<std::uint32_t>(sub->rank(to));
    if (image[fr] == unset)
      image[fr] = tr;
    else if (image[fr] != tr)
      ok = false;
  });
  if (!ok)
    return std::nullopt;
  Interval s = g.support();
  Interval support = left ? Interval{s.lo + 1, s.hi} : Interval{s.lo, s.hi - 1};
  return make_gate_unchecked(g.shift_ptr(), support, std::move(sub),
                             std::move(image));
}

} // namespace

Gate minimize(Gate const &g) {
  if (g.is_identity())
    return Gate::identity(g.shift_ptr(), {g.support().lo, g.support().lo});
  Gate cur = g;
  for (bool changed = true; changed;) {
    changed = false;
    for (bool left : {true, false})
      if (auto smaller = drop_edge(cur, left)) {
        cur = std::move(*smaller);
        changed = true;
      }
  }
  return cur;
}

bool gates_equal(Gate const &a, Gate const &b) {
  if (!same_shift(a.shift_ptr(), b.shift_ptr()))
    return false;
  Interval u = hull(a.support(), b.support());
  return rebase(a, u).image() == rebase(b, u).image();
}

PathPattern apply_gate(Gate const &g, PathPattern const &pattern) {
  Interval covered{pattern.base,
                   pattern.base + static_cast<int>(pattern.edges.size()) - 1};
  if (pattern.edges.empty() || !covered.contains(g.support()))
    fail(ErrorCode::SupportNotCovered, "pattern does not cover the support");
  if (!g.shift().is_path(pattern.edges))
    fail(ErrorCode::UnknownEdge, "pattern is not a path");
  PathPattern out = pattern;
  g.apply_window(std::span<int>(out.edges).subspan(
      g.support().lo - pattern.base, g.support().length()));
  return out;
}

PeriodicConfiguration apply_gate(Gate const &g,
                                 PeriodicConfiguration const &cfg, int site) {
  int p = cfg.period();
  if (g.support().length() > p)
    fail(ErrorCode::SupportNotCovered, "support longer than the period");
  if (!g.shift().is_cycle(cfg.edges))
    fail(ErrorCode::UnknownEdge, "configuration is not a closed path");
  PeriodicConfiguration out = cfg;
  std::vector<int> window(g.support().length());
  auto pos = [&](int k) {
    int i = (g.support().lo + site + k) % p;
    return i < 0 ? i + p : i;
  };
  for (int k = 0; k < g.support().length(); ++k)
    window[k] = out.edges[pos(k)];
  g.apply_window(window);
  for (int k = 0; k < g.support().length(); ++k)
    out.edges[pos(k)] = window[k];
  return out;
}

std::optional<CommutationFailure> commutation_failure(Gate const &a,
                                                      Gate const &b) {
  require_same_shift(a.shift_ptr(), b.shift_ptr());
  Interval u = hull(a.support(), b.support());
  Gate ra = rebase(a, u), rb = rebase(b, u);
  for (std::size_t r = 0; r < ra.image().size(); ++r)
    if (ra.image()[rb.image()[r]] != rb.image()[ra.image()[r]])
      return CommutationFailure{u, ra.space().unrank(r)};
  return std::nullopt;
}

bool commutes(Gate const &a, Gate const &b) {
  return !commutation_failure(a, b);
}

Gate conjugate_by_automorphism(Gate const &g, CellularAutomaton const &f,
                               CellularAutomaton const &f_inv) {
  require_same_shift(g.shift_ptr(), f.shift_ptr());
  require_same_shift(g.shift_ptr(), f_inv.shift_ptr());
  if (f.power() != f_inv.power())
    fail(ErrorCode::PowerMismatch, "automaton and inverse differ in power");

  Interval s = g.support();
  Interval nf = f.neighborhood(), ni = f_inv.neighborhood();
  // positions where the result can differ from x
  Interval weak{s.lo - ni.hi, s.hi - ni.lo};
  // positions of f(x) read by f^-1 on weak, and x read to produce them
  Interval y_range{weak.lo + ni.lo, weak.hi + ni.hi};
  Interval x_range{y_range.lo + nf.lo, y_range.hi + nf.hi};
  Interval strong = hull(x_range, weak);

  auto space = path_space(g.shift_ptr(), strong.length());
  std::vector<std::uint32_t> image(space->size());
  std::vector<int> y(y_range.length()), out(strong.length());
  space->for_each([&](std::span<int const> x, std::uint64_t r) {
    for (int k = y_range.lo; k <= y_range.hi; ++k)
      y[k - y_range.lo] = f.eval(
          k, x.subspan(k + nf.lo - strong.lo, nf.length()));
    g.apply_window(std::span<int>(y).subspan(s.lo - y_range.lo, s.length()));
    std::copy(x.begin(), x.end(), out.begin());
    for (int i = weak.lo; i <= weak.hi; ++i)
      out[i - strong.lo] = f_inv.eval(
          i, std::span<int const>(y).subspan(i + ni.lo - y_range.lo,
                                             ni.length()));
    if (!g.shift().is_path(out))
      fail(ErrorCode::NotInvertible, "supplied inverse is not an inverse");
    image[r] = static_cast<std::uint32_t>(space->rank(out));
  });
  return minimize(Gate(g.shift_ptr(), strong, std::move(image)));
}

Gate conjugate_by_automorphism(Gate const &g, CellularAutomaton const &f,
                               int radius_bound) {
  try {
    return conjugate_by_automorphism(g, f, ca_invert(f, radius_bound));
  } catch (Error const &e) {
    if (e.code() == ErrorCode::NotInvertibleWithinBound)
      fail(ErrorCode::NotInvertible, e.what());
    throw;
  }
}

} // namespace gatelat
