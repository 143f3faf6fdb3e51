#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "pclose/perm_group.hpp"

namespace cgt {

/// A homomorphism between permutation groups, given by generator images.
///
/// Well-definedness is exact: the graph group {(g, phi(g))} on the disjoint
/// union of the two domains has order |source| iff the generator images
/// respect all relations. Images and preimages of arbitrary elements are
/// computed by sifting through graph-group chains based source-first and
/// target-first respectively.
class Homomorphism {
 public:
  Homomorphism(PermGroup source, int target_degree, std::vector<Permutation> generator_images);

  const PermGroup& source() const { return source_; }
  int target_degree() const { return target_degree_; }
  const std::vector<Permutation>& generator_images() const { return images_; }
  const PermGroup& image_group() const { return image_; }

  bool well_defined() const { return well_defined_; }

  /// phi(g); g must lie in the source group.
  Permutation image(const Permutation& g) const;
  /// Some preimage of h; nullopt when h is outside the image.
  std::optional<Permutation> preimage(const Permutation& h) const;
  /// Generators of the kernel, as a subgroup of the source.
  PermGroup kernel() const;

 private:
  Permutation combine(const Permutation& a, const Permutation& b) const;
  Permutation source_part(const Permutation& c) const;
  Permutation target_part(const Permutation& c) const;

  PermGroup source_;
  int target_degree_;
  std::vector<Permutation> images_;
  PermGroup image_;
  bool well_defined_;
  std::shared_ptr<const StabilizerChain> graph_src_first_;
  std::shared_ptr<const StabilizerChain> graph_tgt_first_;
};

struct QuotientResult {
  PermGroup group;
  Homomorphism map;
};

/// Faithful permutation representation of G/N together with the projection.
/// Tries the action on N-orbits first; falls back to the action on the
/// cosets of N (canonical coset representatives). Throws ResourceError when
/// the coset degree would exceed the cap.
QuotientResult quotient(const PermGroup& g, const PermGroup& n, int degree_cap = -1);

}  // namespace cgt
