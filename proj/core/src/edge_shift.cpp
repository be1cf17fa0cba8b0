#include "gatelat/edge_shift.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "gatelat/error.hpp"

namespace gatelat {

Matrix mat_identity(std::size_t n) {
  Matrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    m[i][i] = 1;
  return m;
}

Matrix mat_mul(Matrix const &a, Matrix const &b) {
  std::size_t n = a.size();
  Matrix c(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0)
        continue;
      for (std::size_t j = 0; j < n; ++j)
        c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

Matrix mat_mod2(Matrix const &a) {
  Matrix c = a;
  for (auto &row : c)
    for (auto &x : row)
      x &= 1;
  return c;
}

Matrix mat_mul_mod2(Matrix const &a, Matrix const &b) {
  return mat_mod2(mat_mul(mat_mod2(a), mat_mod2(b)));
}

Matrix mat_pow(Matrix const &a, unsigned k) {
  Matrix r = mat_identity(a.size());
  for (unsigned i = 0; i < k; ++i)
    r = mat_mul(r, a);
  return r;
}

Matrix mat_pow_mod2(Matrix const &a, unsigned k) {
  Matrix r = mat_identity(a.size());
  for (unsigned i = 0; i < k; ++i)
    r = mat_mul_mod2(r, a);
  return r;
}

EdgeShift EdgeShift::validate(RawGraph const &raw, bool trim) {
  std::set<std::string> vertices;
  for (auto const &v : raw.vertices)
    if (!vertices.insert(v).second)
      fail(ErrorCode::DuplicateId, "vertex '" + v + "' listed twice");

  std::set<std::string> edge_ids;
  for (auto const &e : raw.edges) {
    if (!edge_ids.insert(e.id).second)
      fail(ErrorCode::DuplicateId, "edge '" + e.id + "' listed twice");
    if (!vertices.count(e.src))
      fail(ErrorCode::DanglingEdge,
           "edge '" + e.id + "' has unknown source '" + e.src + "'");
    if (!vertices.count(e.dst))
      fail(ErrorCode::DanglingEdge,
           "edge '" + e.id + "' has unknown target '" + e.dst + "'");
  }

  std::vector<RawEdge> edges = raw.edges;
  for (;;) {
    std::map<std::string, std::pair<int, int>> degree; // (in, out)
    for (auto const &v : vertices)
      degree[v] = {0, 0};
    for (auto const &e : edges) {
      ++degree[e.src].second;
      ++degree[e.dst].first;
    }
    std::vector<std::string> bad;
    for (auto const &[v, d] : degree)
      if (d.first == 0 || d.second == 0)
        bad.push_back(v);
    if (bad.empty())
      break;
    if (!trim) {
      std::string list;
      for (auto const &v : bad)
        list += (list.empty() ? "" : ", ") + v;
      fail(ErrorCode::NonEssential,
           "vertices without in- or out-edges: " + list);
    }
    for (auto const &v : bad)
      vertices.erase(v);
    std::erase_if(edges, [&](RawEdge const &e) {
      return !vertices.count(e.src) || !vertices.count(e.dst);
    });
  }
  if (vertices.empty())
    fail(ErrorCode::NonEssential, "graph has no essential part");

  EdgeShift shift;
  shift._vertex_names.assign(vertices.begin(), vertices.end());
  std::sort(edges.begin(), edges.end(),
            [](RawEdge const &x, RawEdge const &y) { return x.id < y.id; });

  auto vertex_index = [&](std::string const &name) {
    return static_cast<int>(std::lower_bound(shift._vertex_names.begin(),
                                             shift._vertex_names.end(), name) -
                            shift._vertex_names.begin());
  };

  int nv = shift.num_vertices();
  shift._out.assign(nv, {});
  shift._matrix.assign(nv, std::vector<std::int64_t>(nv, 0));
  for (auto const &e : edges) {
    int s = vertex_index(e.src), d = vertex_index(e.dst);
    int idx = static_cast<int>(shift._edge_names.size());
    shift._edge_names.push_back(e.id);
    shift._src.push_back(s);
    shift._dst.push_back(d);
    shift._out[s].push_back(idx);
    ++shift._matrix[s][d];
  }
  return shift;
}

std::optional<int> EdgeShift::find_vertex(std::string_view name) const {
  auto it = std::lower_bound(_vertex_names.begin(), _vertex_names.end(), name);
  if (it == _vertex_names.end() || *it != name)
    return std::nullopt;
  return static_cast<int>(it - _vertex_names.begin());
}

std::optional<int> EdgeShift::find_edge(std::string_view name) const {
  auto it = std::lower_bound(_edge_names.begin(), _edge_names.end(), name);
  if (it == _edge_names.end() || *it != name)
    return std::nullopt;
  return static_cast<int>(it - _edge_names.begin());
}

bool EdgeShift::is_path(std::span<int const> edges) const {
  for (int e : edges)
    if (e < 0 || e >= num_edges())
      return false;
  for (std::size_t k = 1; k < edges.size(); ++k)
    if (_dst[edges[k - 1]] != _src[edges[k]])
      return false;
  return true;
}

bool EdgeShift::is_cycle(std::span<int const> edges) const {
  return !edges.empty() && is_path(edges) &&
         _dst[edges.back()] == _src[edges.front()];
}

RawGraph EdgeShift::raw() const {
  RawGraph g;
  g.vertices = _vertex_names;
  for (int e = 0; e < num_edges(); ++e)
    g.edges.push_back(
        {_edge_names[e], _vertex_names[_src[e]], _vertex_names[_dst[e]]});
  return g;
}

std::vector<std::string>
EdgeShift::vertex_names_of(std::span<int const> edges) const {
  std::vector<std::string> out;
  if (edges.empty())
    return out;
  out.push_back(_vertex_names[_src[edges.front()]]);
  for (int e : edges)
    out.push_back(_vertex_names[_dst[e]]);
  return out;
}

bool EdgeShift::operator==(EdgeShift const &other) const {
  return _vertex_names == other._vertex_names &&
         _edge_names == other._edge_names && _src == other._src &&
         _dst == other._dst;
}

ShiftPtr make_shift(RawGraph const &raw, bool trim) {
  return std::make_shared<EdgeShift const>(EdgeShift::validate(raw, trim));
}

bool same_shift(ShiftPtr const &a, ShiftPtr const &b) {
  return a == b || (a && b && *a == *b);
}

void require_same_shift(ShiftPtr const &a, ShiftPtr const &b) {
  if (!same_shift(a, b))
    fail(ErrorCode::ShiftMismatch, "operands live on different shifts");
}

std::vector<PathPattern> enumerate_paths(EdgeShift const &shift, Context ctx,
                                         int n) {
  if (n < 1)
    fail(ErrorCode::InvalidArgument, "path length must be positive");
  int nv = shift.num_vertices();
  // reach[k][v]: some path of length k from v ends at ctx.right
  std::vector<std::vector<bool>> reach(n + 1, std::vector<bool>(nv, false));
  reach[0][ctx.right] = true;
  for (int k = 1; k <= n; ++k)
    for (int v = 0; v < nv; ++v)
      for (int e : shift.out_edges(v))
        if (reach[k - 1][shift.dst(e)]) {
          reach[k][v] = true;
          break;
        }

  std::vector<PathPattern> out;
  if (!reach[n][ctx.left])
    return out;
  std::vector<int> path;
  auto dfs = [&](auto &self, int v, int remaining) -> void {
    if (remaining == 0) {
      out.push_back({0, path});
      return;
    }
    for (int e : shift.out_edges(v)) {
      if (!reach[remaining - 1][shift.dst(e)])
        continue;
      path.push_back(e);
      self(self, shift.dst(e), remaining - 1);
      path.pop_back();
    }
  };
  dfs(dfs, ctx.left, n);
  return out;
}

MixingResult is_mixing(EdgeShift const &shift) {
  int nv = shift.num_vertices();
  int bound = nv * nv - 2 * nv + 2;
  Matrix a = shift.matrix();
  for (auto &row : a)
    for (auto &x : row)
      x = x > 0;
  Matrix p = a;
  for (int k = 1; k <= bound; ++k) {
    bool positive = true;
    for (auto const &row : p)
      for (auto x : row)
        positive = positive && x > 0;
    if (positive)
      return {true, k};
    p = mat_mul(p, a);
    for (auto &row : p)
      for (auto &x : row)
        x = x > 0;
  }
  return {false, std::nullopt};
}

std::optional<int> has_even_fillings(EdgeShift const &shift) {
  Matrix a = mat_mod2(shift.matrix());
  Matrix p = a;
  for (int k = 1; k <= shift.num_vertices(); ++k) {
    bool zero = true;
    for (auto const &row : p)
      for (auto x : row)
        zero = zero && x == 0;
    if (zero)
      return k;
    p = mat_mul_mod2(p, a);
  }
  return std::nullopt;
}

std::pair<int, int> mod2_power_cycle(EdgeShift const &shift) {
  Matrix a = mat_mod2(shift.matrix());
  std::map<Matrix, int> seen;
  Matrix p = mat_identity(a.size());
  for (int k = 0;; ++k) {
    auto [it, inserted] = seen.emplace(p, k);
    if (!inserted)
      return {it->second, k - it->second};
    p = mat_mul_mod2(p, a);
  }
}

std::vector<Context> nonempty_contexts(EdgeShift const &shift, int n) {
  Matrix p = mat_pow(shift.matrix(), static_cast<unsigned>(n));
  std::vector<Context> out;
  for (int a = 0; a < shift.num_vertices(); ++a)
    for (int b = 0; b < shift.num_vertices(); ++b)
      if (p[a][b] > 0)
        out.push_back({a, b});
  return out;
}

std::vector<PeriodicConfiguration> periodic_points(EdgeShift const &shift,
                                                   int period) {
  std::vector<PeriodicConfiguration> out;
  for (int v = 0; v < shift.num_vertices(); ++v)
    for (auto &p : enumerate_paths(shift, {v, v}, period))
      out.push_back({std::move(p.edges)});
  std::sort(out.begin(), out.end(), [](auto const &a, auto const &b) {
    return a.edges < b.edges;
  });
  return out;
}

namespace {

std::string join_ids(EdgeShift const &shift, std::span<int const> edges) {
  std::string s;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (k)
      s += '.';
    s += shift.edge_name(edges[k]);
  }
  return s;
}

// all paths of length len, lexicographic
std::vector<std::vector<int>> all_paths(EdgeShift const &shift, int len) {
  std::vector<std::vector<int>> out;
  for (int a = 0; a < shift.num_vertices(); ++a)
    for (int b = 0; b < shift.num_vertices(); ++b)
      for (auto &p : enumerate_paths(shift, {a, b}, len))
        out.push_back(std::move(p.edges));
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

BlockPresentation block_presentation(EdgeShift const &shift, int n, int c) {
  if (n < 1 || c < 0)
    fail(ErrorCode::InvalidArgument, "block presentation needs n >= 1, c >= 0");

  RawGraph raw;
  std::map<std::string, std::vector<int>> vertex_word_of;
  if (c == 0) {
    for (int v = 0; v < shift.num_vertices(); ++v)
      raw.vertices.push_back(shift.vertex_name(v));
  } else {
    for (auto const &w : all_paths(shift, c)) {
      std::string name = join_ids(shift, w);
      raw.vertices.push_back(name);
      vertex_word_of[name] = w;
    }
  }

  auto vertex_label = [&](std::span<int const> word, int at_vertex) {
    return c == 0 ? shift.vertex_name(at_vertex) : join_ids(shift, word);
  };

  std::map<std::string, std::vector<int>> edge_word_of;
  for (auto const &w : all_paths(shift, c + n)) {
    std::string name = join_ids(shift, w);
    std::span<int const> ws(w);
    raw.edges.push_back(
        {name, vertex_label(ws.first(c), shift.src(w.front())),
         vertex_label(ws.last(c), shift.dst(w.back()))});
    edge_word_of[name] = w;
  }

  BlockPresentation bp;
  bp.shift = make_shift(raw);
  bp.n = n;
  bp.c = c;
  bp.vertex_words.resize(bp.shift->num_vertices());
  if (c > 0)
    for (int v = 0; v < bp.shift->num_vertices(); ++v)
      bp.vertex_words[v] = vertex_word_of.at(bp.shift->vertex_name(v));
  bp.edge_words.resize(bp.shift->num_edges());
  for (int e = 0; e < bp.shift->num_edges(); ++e)
    bp.edge_words[e] = edge_word_of.at(bp.shift->edge_name(e));
  return bp;
}

namespace {

int lookup_block(BlockPresentation const &bp, EdgeShift const &orig,
                 std::vector<int> const &word) {
  auto id = bp.shift->find_edge(join_ids(orig, word));
  if (!id)
    fail(ErrorCode::UnknownEdge, "block word is not a path");
  return *id;
}

} // namespace

PeriodicConfiguration
BlockPresentation::encode(EdgeShift const &orig,
                          PeriodicConfiguration const &x) const {
  int p = x.period();
  if (p % n != 0)
    fail(ErrorCode::PeriodMismatch, "period not a multiple of block length");
  PeriodicConfiguration y;
  std::vector<int> word(c + n);
  for (int k = 0; k < p / n; ++k) {
    for (int t = 0; t < c + n; ++t)
      word[t] = x.edges[(k * n + t) % p];
    y.edges.push_back(lookup_block(*this, orig, word));
  }
  return y;
}

PeriodicConfiguration
BlockPresentation::decode(PeriodicConfiguration const &y) const {
  PeriodicConfiguration x;
  for (int e : y.edges)
    for (int t = 0; t < n; ++t)
      x.edges.push_back(edge_words[e][t]);
  return x;
}

PathPattern BlockPresentation::encode(EdgeShift const &orig,
                                      PathPattern const &p) const {
  auto floor_div = [](int a, int b) { return a / b - (a % b != 0 && a < 0); };
  int first = -floor_div(-p.base, n); // ceil(base / n)
  int end = p.base + static_cast<int>(p.edges.size());
  PathPattern q;
  q.base = first;
  std::vector<int> word(c + n);
  for (int k = first; k * n + c + n <= end; ++k) {
    for (int t = 0; t < c + n; ++t)
      word[t] = p.edges[k * n + t - p.base];
    q.edges.push_back(lookup_block(*this, orig, word));
  }
  return q;
}

PathPattern BlockPresentation::decode(PathPattern const &q) const {
  PathPattern p;
  p.base = q.base * n;
  for (std::size_t k = 0; k < q.edges.size(); ++k) {
    auto const &w = edge_words[q.edges[k]];
    bool last = k + 1 == q.edges.size();
    p.edges.insert(p.edges.end(), w.begin(), last ? w.end() : w.begin() + n);
  }
  return p;
}

} // namespace gatelat
