#include "pclose/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "pclose/errors.hpp"

namespace cgt {

Permutation::Permutation(int degree) : img_(size_t(degree)) {
  std::iota(img_.begin(), img_.end(), 0);
}

Permutation::Permutation(std::vector<Point> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (Point x : img_) {
    if (x < 0 || size_t(x) >= img_.size() || seen[size_t(x)])
      throw ParseError("image list is not a bijection of {1.." + std::to_string(img_.size()) + "}");
    seen[size_t(x)] = 1;
  }
}

bool Permutation::is_identity() const {
  for (Point x = 0; x < degree(); ++x)
    if (img_[size_t(x)] != x) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(img_.size());
  for (Point x = 0; x < degree(); ++x) inv[size_t(img_[size_t(x)])] = x;
  Permutation p;
  p.img_ = std::move(inv);
  return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw PreconditionError("permutation degree mismatch in product");
  std::vector<Point> out(img_.size());
  for (Point x = 0; x < degree(); ++x) out[size_t(x)] = rhs.img_[size_t(img_[size_t(x)])];
  Permutation p;
  p.img_ = std::move(out);
  return p;
}

Permutation Permutation::conjugated_by(const Permutation& h) const {
  return h.inverse() * (*this) * h;
}

BigOrder Permutation::order() const {
  std::vector<char> seen(img_.size(), 0);
  BigOrder ord = 1;
  for (Point x = 0; x < degree(); ++x) {
    if (seen[size_t(x)]) continue;
    BigOrder len = 0;
    Point y = x;
    do {
      seen[size_t(y)] = 1;
      y = img_[size_t(y)];
      ++len;
    } while (y != x);
    ord = ord / order_gcd(ord, len) * len;
  }
  return ord;
}

std::size_t Permutation::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (Point x : img_) {
    h ^= std::size_t(x);
    h *= 1099511628211ULL;
  }
  return h;
}

std::string Permutation::to_cycles() const {
  std::vector<char> seen(img_.size(), 0);
  std::string s;
  for (Point x = 0; x < degree(); ++x) {
    if (seen[size_t(x)] || img_[size_t(x)] == x) continue;
    s.push_back('(');
    Point y = x;
    bool first = true;
    do {
      seen[size_t(y)] = 1;
      if (!first) s.push_back(' ');
      s += std::to_string(y + 1);
      first = false;
      y = img_[size_t(y)];
    } while (y != x);
    s.push_back(')');
  }
  if (s.empty()) s = "()";
  return s;
}

std::vector<Point> Permutation::moved_points() const {
  std::vector<Point> out;
  for (Point x = 0; x < degree(); ++x)
    if (img_[size_t(x)] != x) out.push_back(x);
  return out;
}

int Permutation::smallest_moved_point() const {
  for (Point x = 0; x < degree(); ++x)
    if (img_[size_t(x)] != x) return x;
  return -1;
}

Permutation Permutation::extended(int new_degree) const {
  if (new_degree < degree()) throw PreconditionError("extended: new degree smaller than current");
  std::vector<Point> out(static_cast<size_t>(new_degree));
  std::iota(out.begin(), out.end(), 0);
  for (Point x = 0; x < degree(); ++x) out[size_t(x)] = img_[size_t(x)];
  Permutation p;
  p.img_ = std::move(out);
  return p;
}

Permutation Permutation::shifted(int offset, int new_degree) const {
  if (offset + degree() > new_degree) throw PreconditionError("shifted: support exceeds new degree");
  std::vector<Point> out(static_cast<size_t>(new_degree));
  std::iota(out.begin(), out.end(), 0);
  for (Point x = 0; x < degree(); ++x) out[size_t(x + offset)] = img_[size_t(x)] + offset;
  Permutation p;
  p.img_ = std::move(out);
  return p;
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

std::size_t PointVecHash::operator()(const std::vector<Point>& v) const {
  std::size_t h = 1469598103934665603ULL;
  for (Point x : v) {
    h ^= std::size_t(x);
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace cgt
