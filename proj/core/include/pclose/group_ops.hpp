#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pclose/perm_group.hpp"

namespace cgt {

/// Default cap for exhaustive element enumeration used by class-based
/// structure algorithms (not the subgroup-lattice oracle bound).
inline constexpr std::size_t kDefaultEnumBound = 500000;

/// <A, B> as a subgroup of Sym(degree).
PermGroup join(const PermGroup& a, const PermGroup& b);
PermGroup join(int degree, const std::vector<PermGroup>& parts);

/// Smallest normal subgroup of G containing S. Requires S <= G.
PermGroup normal_closure(const PermGroup& g, const PermGroup& s);

/// Normal closure in <G, extra_conjugators> of S, still a subgroup of G
/// provided the extra conjugators normalize G (used for [G,A]-style closures).
PermGroup normal_closure_under(const PermGroup& g, const std::vector<Permutation>& conjugators,
                               const PermGroup& s);

/// [A, B]: the group generated by all commutators, closed under conjugation
/// by A and B.
PermGroup commutator_group(const PermGroup& a, const PermGroup& b);

PermGroup derived_subgroup(const PermGroup& g);
std::vector<PermGroup> derived_series(const PermGroup& g);
std::vector<PermGroup> lower_central_series(const PermGroup& g);
PermGroup perfect_core(const PermGroup& g);

bool is_abelian(const PermGroup& g);
bool is_perfect(const PermGroup& g);
bool is_solvable(const PermGroup& g);
bool is_nilpotent(const PermGroup& g);

/// True iff every generator of x normalizes k (conjugates land back in k).
bool normalizes(const PermGroup& x, const PermGroup& k);
bool is_normal_in(const PermGroup& n, const PermGroup& g);

/// Subnormality via the descending chain H_{i+1} = <K^{H_i}>. Requires K <= G.
bool is_subnormal(const PermGroup& g, const PermGroup& k);

/// All elements; throws ResourceError past the bound.
std::vector<Permutation> elements(const PermGroup& g, std::size_t bound = kDefaultEnumBound);

/// One representative per conjugacy class (deterministic order).
std::vector<Permutation> conjugacy_class_reps(const PermGroup& g,
                                              std::size_t bound = kDefaultEnumBound);

/// H ∩ K computed by enumerating the smaller group and filtering; both must
/// share a degree. Throws ResourceError when the smaller side exceeds bound.
PermGroup intersection_small(const PermGroup& h, const PermGroup& k,
                             std::size_t bound = kDefaultEnumBound);

/// External direct product: blocks act on disjoint point ranges.
PermGroup direct_product(const std::vector<PermGroup>& factors);
/// The i-th factor of a direct product built by direct_product (embedded).
PermGroup embed_factor(const PermGroup& factor, int offset, int total_degree);

/// Centralizer of one permutation or of a subgroup, by backtrack search over
/// the stabilizer chain with forced-image propagation (see backtrack.cpp).
PermGroup centralizer(const PermGroup& g, const Permutation& t);
PermGroup centralizer(const PermGroup& g, const PermGroup& t);
PermGroup center(const PermGroup& g);

/// Normalizer of K in G by backtrack search (leaf-verified). Intended for
/// small and medium instances.
PermGroup normalizer(const PermGroup& g, const PermGroup& k);

}  // namespace cgt
