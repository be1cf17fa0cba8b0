#include "gatelat/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gatelat/error.hpp"

namespace gatelat {

Perm::Perm(unsigned degree) : _images(degree) {
  std::iota(_images.begin(), _images.end(), 0u);
}

Perm::Perm(std::vector<unsigned> images) : _images(std::move(images)) {
  std::vector<bool> seen(_images.size(), false);
  for (unsigned x : _images) {
    if (x >= _images.size() || seen[x])
      fail(ErrorCode::NotBijective, "image list is not a permutation");
    seen[x] = true;
  }
}

Perm Perm::from_cycles(unsigned degree,
                       std::vector<std::vector<unsigned>> const &cycles) {
  std::vector<unsigned> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  std::vector<bool> used(degree, false);
  for (auto const &cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      unsigned x = cycle[k];
      if (x >= degree || used[x])
        fail(ErrorCode::NotBijective, "cycles are not disjoint");
      used[x] = true;
      images[x] = cycle[(k + 1) % cycle.size()];
    }
  }
  return Perm(std::move(images));
}

bool Perm::is_identity() const {
  for (unsigned i = 0; i < degree(); ++i)
    if (_images[i] != i)
      return false;
  return true;
}

int Perm::sign() const {
  std::vector<bool> seen(degree(), false);
  unsigned transpositions = 0;
  for (unsigned i = 0; i < degree(); ++i) {
    if (seen[i])
      continue;
    unsigned len = 0;
    for (unsigned j = i; !seen[j]; j = _images[j]) {
      seen[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

unsigned Perm::support_size() const {
  unsigned n = 0;
  for (unsigned i = 0; i < degree(); ++i)
    n += _images[i] != i;
  return n;
}

Perm Perm::inverse() const {
  std::vector<unsigned> inv(degree());
  for (unsigned i = 0; i < degree(); ++i)
    inv[_images[i]] = i;
  Perm result;
  result._images = std::move(inv);
  return result;
}

Perm Perm::operator*(Perm const &rhs) const {
  if (rhs.degree() != degree())
    fail(ErrorCode::InvalidArgument, "degree mismatch in product");
  Perm result;
  result._images.resize(degree());
  for (unsigned i = 0; i < degree(); ++i)
    result._images[i] = _images[rhs._images[i]];
  return result;
}

std::vector<std::vector<unsigned>> Perm::cycles() const {
  std::vector<std::vector<unsigned>> result;
  std::vector<bool> seen(degree(), false);
  for (unsigned i = 0; i < degree(); ++i) {
    if (seen[i] || _images[i] == i)
      continue;
    std::vector<unsigned> cycle;
    for (unsigned j = i; !seen[j]; j = _images[j]) {
      seen[j] = true;
      cycle.push_back(j);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::vector<unsigned> Perm::cycle_type() const {
  std::vector<unsigned> type;
  std::vector<bool> seen(degree(), false);
  for (unsigned i = 0; i < degree(); ++i) {
    if (seen[i])
      continue;
    unsigned len = 0;
    for (unsigned j = i; !seen[j]; j = _images[j]) {
      seen[j] = true;
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

std::string Perm::str() const {
  auto cs = cycles();
  if (cs.empty())
    return "()";
  std::ostringstream out;
  for (auto const &c : cs) {
    out << '(';
    for (std::size_t k = 0; k < c.size(); ++k)
      out << (k ? " " : "") << c[k];
    out << ')';
  }
  return out.str();
}

Perm commutator(Perm const &a, Perm const &b) {
  return a.inverse() * b.inverse() * a * b;
}

Perm conjugate(Perm const &a, Perm const &b) { return b.inverse() * a * b; }

Perm conjugator(Perm const &a, Perm const &b) {
  if (a.degree() != b.degree() || a.cycle_type() != b.cycle_type())
    return Perm();

  // cycles of a (fixed points as 1-cycles), grouped by length
  auto all_cycles = [](Perm const &p) {
    std::vector<std::vector<unsigned>> out;
    std::vector<bool> seen(p.degree(), false);
    for (unsigned i = 0; i < p.degree(); ++i) {
      if (seen[i])
        continue;
      std::vector<unsigned> c;
      for (unsigned j = i; !seen[j]; j = p[j]) {
        seen[j] = true;
        c.push_back(j);
      }
      out.push_back(std::move(c));
    }
    std::stable_sort(out.begin(), out.end(),
                     [](auto const &x, auto const &y) {
                       return x.size() > y.size();
                     });
    return out;
  };

  // c^-1 a c = b  <=>  a c = c b, so c maps the cycles of b onto those of a
  auto ca = all_cycles(a);
  auto cb = all_cycles(b);
  std::vector<unsigned> images(a.degree());
  for (std::size_t k = 0; k < ca.size(); ++k)
    for (std::size_t t = 0; t < ca[k].size(); ++t)
      images[cb[k][t]] = ca[k][t];
  return Perm(std::move(images));
}

} // namespace gatelat
