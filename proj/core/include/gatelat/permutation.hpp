#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace gatelat {

// Permutation of {0, ..., n-1} in image form. Products compose right to
// left: (a * b)(i) = a(b(i)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(unsigned degree);
  explicit Perm(std::vector<unsigned> images);

  static Perm from_cycles(unsigned degree,
                          std::vector<std::vector<unsigned>> const &cycles);

  unsigned degree() const { return static_cast<unsigned>(_images.size()); }
  unsigned operator[](unsigned i) const { return _images[i]; }
  std::vector<unsigned> const &images() const { return _images; }

  bool is_identity() const;
  int sign() const;
  bool is_even() const { return sign() == 1; }
  unsigned support_size() const;

  Perm inverse() const;
  Perm operator*(Perm const &rhs) const;

  // nontrivial cycles, each starting at its least point, sorted by that point
  std::vector<std::vector<unsigned>> cycles() const;

  // cycle type as descending list of all cycle lengths (fixed points included)
  std::vector<unsigned> cycle_type() const;

  std::string str() const;

  bool operator==(Perm const &) const = default;
  auto operator<=>(Perm const &) const = default;

 private:
  std::vector<unsigned> _images;
};

// a^-1 b^-1 a b
Perm commutator(Perm const &a, Perm const &b);

// b^-1 a b
Perm conjugate(Perm const &a, Perm const &b);

// some c with c^-1 a c == b, or an empty Perm when a and b are not conjugate
Perm conjugator(Perm const &a, Perm const &b);

} // namespace gatelat
