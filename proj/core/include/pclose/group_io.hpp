#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pclose/perm_group.hpp"
#include "pclose/permutation.hpp"

namespace cgt {

/// Parse disjoint-cycle notation, 1-based, e.g. "(1 2 3)(4 5)". Whitespace
/// insensitive; commas between points allowed; "()" is the identity.
Permutation parse_cycles(const std::string& text, int degree);

/// Group-spec text format: first line "degree N"; each subsequent nonempty
/// line one generator in cycle notation. '#' starts a comment.
PermGroup parse_group_spec(std::istream& in);
PermGroup parse_group_spec_string(const std::string& text);
PermGroup load_group_spec(const std::string& path);
std::string format_group_spec(const PermGroup& g);

/// Action-spec: a group spec for the wrapper W followed by
///   group: <1-based generator indices>
///   actors: <1-based generator indices>
///   prime: r
/// The two index lists partition the wrapper's generator list.
struct ActionSpec {
  int degree = 0;
  std::vector<Permutation> wrapper_gens;
  std::vector<int> group_idx;   // 0-based into wrapper_gens
  std::vector<int> actors_idx;  // 0-based
  long prime = 0;
};

ActionSpec parse_action_spec(std::istream& in);
ActionSpec parse_action_spec_string(const std::string& text);
ActionSpec load_action_spec(const std::string& path);

/// Functor-spec: an action-spec plus one line per cyclic subgroup
/// representative:
///   theta <element-word> : <generator list>
/// where <element-word> is a product of actor generators ("a1 a2^2" style,
/// "1" for the identity is not allowed) and the generator list is a comma
/// separated list of cycle-notation permutations ("-" for the trivial group).
struct FunctorSpec {
  ActionSpec action;
  std::vector<std::pair<std::string, std::vector<std::string>>> theta_lines;
};

FunctorSpec parse_functor_spec(std::istream& in);
FunctorSpec parse_functor_spec_string(const std::string& text);
FunctorSpec load_functor_spec(const std::string& path);

/// Evaluate an element word over the actor generators, e.g. "a1 a3^2".
Permutation eval_actor_word(const std::string& word, const std::vector<Permutation>& actor_gens);

}  // namespace cgt
