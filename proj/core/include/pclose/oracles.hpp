#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "pclose/perm_group.hpp"

namespace cgt {

/// Bounded exhaustive context for one ambient group: the full element list
/// plus bitset arithmetic over element indices. Backs the subgroup-lattice
/// oracles used for cross-checks and small-tier closures.
class ElementTable {
 public:
  using Bits = std::vector<std::uint64_t>;

  ElementTable(const PermGroup& g, std::size_t bound);

  const PermGroup& group() const { return group_; }
  const std::vector<Permutation>& elts() const { return elts_; }
  std::size_t size() const { return elts_.size(); }
  int index_of(const Permutation& p) const;

  Bits empty_bits() const;
  static void set_bit(Bits& b, int i) { b[size_t(i) >> 6] |= (1ULL << (i & 63)); }
  static bool get_bit(const Bits& b, int i) { return (b[size_t(i) >> 6] >> (i & 63)) & 1; }
  static int popcount(const Bits& b);
  static Bits bits_and(const Bits& a, const Bits& b);
  static Bits bits_or(const Bits& a, const Bits& b);
  static bool bits_subset(const Bits& a, const Bits& b);  // a subset of b

  /// Subgroup closure of a seed set of element indices.
  Bits subgroup_closure(const std::vector<int>& seed) const;
  /// Conjugacy class of elts()[rep] under the ambient group.
  Bits conjugacy_class(int rep) const;
  /// One representative index per ambient conjugacy class, ascending.
  std::vector<int> class_reps() const;

  std::vector<int> bits_to_list(const Bits& b) const;
  /// PermGroup from a subgroup bitset, with a small greedy generating set.
  PermGroup to_group(const Bits& b) const;
  /// Bitset of a subgroup given as a PermGroup (membership filter).
  Bits bits_of_group(const PermGroup& h) const;

  /// All subgroups: join-closure of the cyclic subgroups. Deterministic
  /// order (by order, then bitset).
  std::vector<Bits> all_subgroups() const;
  /// All normal subgroups: join-closure of the class closures.
  std::vector<Bits> normal_subgroups() const;
  /// Normal subgroups of the subgroup `h` (conjugation within h only).
  std::vector<Bits> normal_subgroups_of(const Bits& h) const;
  /// All subnormal subgroups, by recursive descent through normal lattices.
  std::vector<Bits> subnormal_subgroups() const;

 private:
  std::vector<Bits> join_closure(std::vector<Bits> seeds) const;

  PermGroup group_;
  std::vector<Permutation> elts_;
  std::unordered_map<Permutation, int, PermHash> index_;
  std::vector<std::vector<int>> gen_product_;  // element index x gen index -> element index
};

}  // namespace cgt
