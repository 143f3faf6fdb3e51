#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pclose/findings.hpp"
#include "pclose/perm_group.hpp"

namespace cgt {

/// Declared closure axioms of a group-theoretic property. Declarations are
/// claims; verify_axioms() tests them over a corpus and the closure
/// operators refuse properties whose required flags are not validated.
struct AxiomFlags {
  bool subgroup_closed = false;
  bool quotient_closed = false;
  bool intersection_quotient = false;  // G/M, G/N P-groups => G/(M ∩ N) too
  bool normal_product = false;         // M, N normal P-subgroups => MN too
  bool extension_closed = false;
  bool contains_solvable = false;      // every solvable group is a P-group
};

/// A named, pure, decidable predicate on finite groups with declared
/// closure axioms. Instances live in a fixed registry (compile-time set
/// plus parametric pi:<primes> entries); duplicates by name are rejected.
class Property {
 public:
  const std::string& name() const { return name_; }
  bool test(const PermGroup& g) const { return pred_(g); }
  const AxiomFlags& declared() const { return flags_; }

  /// True for built-ins whose declared axioms are theorems. The planted
  /// negative control ("abelian" declaring normal_product) stays false.
  bool validated() const { return validated_; }

  bool pc1_ok() const {  // Hypothesis of the basic closure calculus
    return validated_ && flags_.subgroup_closed && flags_.quotient_closed &&
           flags_.intersection_quotient && flags_.normal_product;
  }
  bool sqe_ok() const {  // closed under subgroups, quotients and extensions
    return validated_ && flags_.subgroup_closed && flags_.quotient_closed && flags_.extension_closed;
  }
  bool md1_ok() const { return sqe_ok() && flags_.contains_solvable; }

  /// Whether every P-group is solvable (decides when the component lift is
  /// a certified bijection).
  bool all_p_solvable() const { return all_p_solvable_; }

  /// Lookup: trivial | nilpotent | solvable | odd-order | abelian | pi:<p1,p2,...>
  static const Property& by_name(const std::string& name);
  static std::vector<std::string> builtin_names();

  Property(std::string name, std::function<bool(const PermGroup&)> pred, AxiomFlags flags,
           bool validated, bool all_p_solvable);

 private:
  std::string name_;
  std::function<bool(const PermGroup&)> pred_;
  AxiomFlags flags_;
  bool validated_;
  bool all_p_solvable_;
};

struct AxiomFailure {
  std::string axiom;
  std::string instance;
  std::string witness;
};

struct AxiomReport {
  bool pass = true;
  long checks_run = 0;
  std::vector<AxiomFailure> failures;
};

/// Exhaustively test the declared axioms of P over the corpus groups whose
/// order fits the oracle bound (subgroups, quotients, normal pairs and
/// extensions are all drawn from inside each corpus member).
AxiomReport verify_axioms(const Property& p, const std::vector<PermGroup>& corpus,
                          std::size_t bound = 2000);

/// O_P(G): the unique maximal normal P-subgroup. Requires validated pc:1
/// flags.
PermGroup o_p(const PermGroup& g, const Property& p);

/// O^P(G): the unique smallest normal subgroup with P quotient.
PermGroup o_upper_p(const PermGroup& g, const Property& p);

/// O_{P,E}(G) = O_P(G) L_P(G). Requires md:1 flags (subgroup, quotient,
/// extension closed; every solvable group a P-group). Defined with the
/// P-component machinery.
PermGroup o_pe(const PermGroup& g, const Property& p);

}  // namespace cgt
