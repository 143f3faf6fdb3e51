#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pclose/orders.hpp"

namespace cgt {

/// A point of the permutation domain, 0-based internally. Text I/O is
/// 1-based (cycle notation over {1..n}).
using Point = int;

/// A permutation of {0..degree-1} in image form. Immutable value type.
///
/// Composition is left-to-right: (a * b)(x) = b(a(x)), i.e. apply a first.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree);  // identity
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(int degree) { return Permutation(degree); }

  int degree() const { return int(img_.size()); }
  Point operator[](Point x) const { return img_[size_t(x)]; }
  const std::vector<Point>& images() const { return img_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation operator*(const Permutation& rhs) const;  // apply *this first
  /// Conjugate: h^-1 * this * h.
  Permutation conjugated_by(const Permutation& h) const;

  BigOrder order() const;  // lcm of cycle lengths

  bool operator==(const Permutation& rhs) const { return img_ == rhs.img_; }
  bool operator!=(const Permutation& rhs) const { return img_ != rhs.img_; }
  bool operator<(const Permutation& rhs) const { return img_ < rhs.img_; }

  std::size_t hash() const;

  /// Disjoint-cycle string, 1-based, fixed points omitted; "()" for identity.
  std::string to_cycles() const;

  std::vector<Point> moved_points() const;
  int smallest_moved_point() const;  // -1 if identity

  /// Extend to a larger degree, acting trivially on the new points.
  Permutation extended(int new_degree) const;
  /// Shift the support by `offset` within a permutation of degree new_degree.
  Permutation shifted(int offset, int new_degree) const;

 private:
  std::vector<Point> img_;
};

/// Commutator a^-1 b^-1 a b.
Permutation commutator(const Permutation& a, const Permutation& b);

struct PermHash {
  std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

struct PointVecHash {
  std::size_t operator()(const std::vector<Point>& v) const;
};

}  // namespace cgt
