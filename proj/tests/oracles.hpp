// Test-side brute-force oracles. These deliberately avoid the stabilizer
// chain machinery: everything here is plain closure arithmetic on
// Permutation values, so the fast implementations are checked against an
// independent route.
#pragma once

#include <set>
#include <vector>

#include "pclose/permutation.hpp"

namespace oracles {

using cgt::Permutation;

/// Closure of a generating set under products (BFS). No BSGS involved.
inline std::vector<Permutation> brute_elements(int degree, const std::vector<Permutation>& gens) {
  std::set<Permutation> seen{Permutation(degree)};
  std::vector<Permutation> todo{Permutation(degree)};
  for (size_t pos = 0; pos < todo.size(); ++pos) {
    for (const auto& g : gens) {
      Permutation a = todo[pos] * g;
      if (seen.insert(a).second) todo.push_back(a);
      Permutation b = g * todo[pos];
      if (seen.insert(b).second) todo.push_back(b);
    }
  }
  return {todo.begin(), todo.end()};
}

inline std::set<Permutation> brute_element_set(int degree, const std::vector<Permutation>& gens) {
  auto v = brute_elements(degree, gens);
  return {v.begin(), v.end()};
}

/// Elements of `ambient` commuting with every element of `targets`.
inline std::vector<Permutation> brute_centralizer(const std::vector<Permutation>& ambient,
                                                  const std::vector<Permutation>& targets) {
  std::vector<Permutation> out;
  for (const auto& g : ambient) {
    bool ok = true;
    for (const auto& t : targets)
      if (!(g * t == t * g)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(g);
  }
  return out;
}

/// Element set of the smallest normal subgroup of <ambient_gens> containing
/// seed_gens: close the seeds under conjugation by ambient elements and
/// under products.
inline std::set<Permutation> brute_normal_closure(int degree,
                                                  const std::vector<Permutation>& ambient_elements,
                                                  const std::vector<Permutation>& seed_gens) {
  std::vector<Permutation> gens = seed_gens;
  for (size_t i = 0; i < gens.size(); ++i)
    for (const auto& c : ambient_elements) {
      Permutation y = gens[i].conjugated_by(c);
      bool known = false;
      for (const auto& g : gens)
        if (g == y) {
          known = true;
          break;
        }
      if (!known) gens.push_back(y);
    }
  return brute_element_set(degree, gens);
}

}  // namespace oracles
