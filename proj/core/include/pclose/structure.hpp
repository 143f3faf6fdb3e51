#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pclose/group_ops.hpp"
#include "pclose/perm_group.hpp"

namespace cgt {

/// A verified direct decomposition of G along unions of its point orbits:
/// G is the internal direct product of the embedded factors. Empty when no
/// decomposition was certified.
struct OrbitSplit {
  std::vector<std::vector<Point>> blocks;  // point sets, one per factor
  std::vector<PermGroup> factors;          // embedded in the full degree
};

std::optional<OrbitSplit> orbit_split(const PermGroup& g);

PermGroup solvable_radical(const PermGroup& g);
PermGroup fitting_subgroup(const PermGroup& g);
PermGroup p_core(const PermGroup& g, std::uint64_t p);

/// Subnormal quasisimple subgroups, lifted from the simple factors of the
/// nonabelian minimal normal subgroups of G/Sol(G) through perfect cores of
/// preimages and filtered by the quasisimple test.
std::vector<PermGroup> components(const PermGroup& g);
PermGroup layer_subgroup(const PermGroup& g);
PermGroup generalized_fitting(const PermGroup& g);

bool is_simple(const PermGroup& g);
bool is_quasisimple(const PermGroup& g);

/// Minimal normal subgroups. Exhaustive (class-closure lattice) up to the
/// enumeration bound; above it only certified orbit-split products of
/// radical-free groups are handled.
std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& g);

struct SimpleId {
  std::string label;
  bool identified = false;
};

/// Identify a simple group by order plus (for the 20160 collision) element
/// orders. `has_element_of_order` must answer exactly.
SimpleId identify_simple(const PermGroup& g);

/// Multiset of composition factor labels ("C2", "A5", "PSL(2,32)", ...),
/// sorted. all_identified reports whether every nonabelian factor was
/// recognized.
std::vector<std::string> composition_factors(const PermGroup& g, bool* all_identified = nullptr);

struct StructureReport {
  BigOrder order = 1;
  PermGroup solvable_radical;
  PermGroup fitting;
  PermGroup generalized_fitting;
  std::vector<PermGroup> components;
  PermGroup layer;
  std::vector<std::string> composition_factors;
  bool is_kgroup = true;
};

StructureReport analyze(const PermGroup& g);

}  // namespace cgt
