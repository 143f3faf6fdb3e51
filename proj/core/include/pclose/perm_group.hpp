#pragma once

#include <memory>
#include <random>
#include <vector>

#include "pclose/orders.hpp"
#include "pclose/permutation.hpp"

namespace cgt {

/// One level of a stabilizer chain: a base point, the orbit of that point
/// under this level's generators, and a transversal.
///
/// Transversal elements are stored explicitly for small degrees and as
/// Schreier vectors (parent pointers) above kExplicitTransversalMaxDegree.
class ChainLevel {
 public:
  static constexpr int kExplicitTransversalMaxDegree = 1024;

  ChainLevel(Point beta, int degree);

  Point beta() const { return beta_; }
  const std::vector<Point>& orbit() const { return orbit_; }
  bool in_orbit(Point p) const { return where_[size_t(p)] >= 0; }
  int orbit_size() const { return int(orbit_.size()); }
  const std::vector<Permutation>& gens() const { return gens_; }

  /// u with u(beta) = p; p must lie in the orbit.
  Permutation transversal(Point p) const;

  void add_gen(const Permutation& g);
  /// Extends the orbit after generator additions. Returns true if it grew.
  bool extend_orbit();

  /// Schreier-generator worklist: (orbit position, generator index) pairs not
  /// yet processed by verification. Pairs already verified stay verified.
  std::vector<std::pair<int, int>> take_unprocessed();

 private:
  Point beta_;
  int degree_;
  std::vector<Point> orbit_;
  std::vector<int> where_;        // point -> orbit position, -1 outside
  std::vector<int> parent_gen_;   // per point
  std::vector<Point> parent_pt_;  // per point
  std::vector<Permutation> gens_;
  std::vector<Permutation> explicit_trans_;  // by orbit position, when small degree
  int processed_orbit_ = 0;  // pairs (pos, gen) with pos < processed_orbit_ and
  int processed_gens_ = 0;   // gen < processed_gens_ have been handed out
};

/// Deterministic Schreier-Sims stabilizer chain.
///
/// `forced_base` points become the leading levels of the chain whether or
/// not anything moves them; homomorphism graph groups rely on this to keep
/// one domain's base points ahead of the other's.
class StabilizerChain {
 public:
  StabilizerChain(int degree, const std::vector<Permutation>& gens,
                  std::vector<Point> preferred_base = {}, std::vector<Point> forced_base = {});

  int degree() const { return degree_; }
  BigOrder order() const;
  const std::vector<ChainLevel>& levels() const { return levels_; }
  const std::vector<Permutation>& strong_gens() const { return strong_; }
  std::vector<Point> base() const;

  /// Sift: returns the residue and the level where sifting stopped
  /// (levels().size() if fully sifted).
  std::pair<Permutation, size_t> sift(const Permutation& g) const;
  bool contains(const Permutation& g) const;

 private:
  void insert_generator(const Permutation& g);
  void verify();
  Point pick_base_point(const Permutation& g) const;

  int degree_;
  std::vector<Point> preferred_base_;
  std::vector<ChainLevel> levels_;
  std::vector<Permutation> strong_;
};

/// A finite permutation group with a base and strong generating set.
/// Immutable after construction; cheap to copy (shared chain).
class PermGroup {
 public:
  PermGroup() = default;  // empty handle; degree() == 0
  PermGroup(int degree, std::vector<Permutation> generators,
            std::vector<Point> preferred_base = {});

  static PermGroup trivial(int degree);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  BigOrder order() const;
  bool is_trivial() const { return order() == 1; }
  bool contains(const Permutation& p) const;
  bool contains(const PermGroup& h) const;  // all generators of h
  bool same_group_as(const PermGroup& h) const;

  const StabilizerChain& chain() const { return *chain_; }
  std::vector<Point> base() const { return chain_->base(); }
  const std::vector<Permutation>& strong_generators() const { return chain_->strong_gens(); }
  std::vector<std::vector<Point>> basic_orbits() const;

  /// Orbits of the natural action on {0..degree-1}, sorted by smallest point.
  std::vector<std::vector<Point>> orbits() const;

  /// Uniformly random element (product of random transversal elements).
  Permutation random_element(std::mt19937_64& rng) const;

  /// Generators conjugated by w (degree must match); the group G^w.
  PermGroup conjugated_by(const Permutation& w) const;

  /// Deterministic identity string: degree, order, sorted generator cycles.
  std::string identity_key() const;

 private:
  int degree_ = 0;
  std::vector<Permutation> gens_;
  std::shared_ptr<const StabilizerChain> chain_;
};

}  // namespace cgt
