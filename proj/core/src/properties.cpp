#include "pclose/properties.hpp"

#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "pclose/errors.hpp"
#include "pclose/homomorphism.hpp"
#include "pclose/oracles.hpp"
#include "pclose/structure.hpp"

namespace cgt {

Property::Property(std::string name, std::function<bool(const PermGroup&)> pred, AxiomFlags flags,
                   bool validated, bool all_p_solvable)
    : name_(std::move(name)),
      pred_(std::move(pred)),
      flags_(flags),
      validated_(validated),
      all_p_solvable_(all_p_solvable) {}

namespace {

std::set<std::uint64_t> parse_pi(const std::string& name) {
  std::set<std::uint64_t> primes;
  std::string spec = name.substr(3);
  std::istringstream is(spec);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) continue;
    std::uint64_t p = std::stoull(tok);
    auto f = factor_order(p);
    if (f.size() != 1 || f.begin()->second != 1)
      throw ParseError("pi property: '" + tok + "' is not prime");
    primes.insert(p);
  }
  if (primes.empty()) throw ParseError("pi property: empty prime set in '" + name + "'");
  return primes;
}

bool order_is_pi(BigOrder o, const std::set<std::uint64_t>& primes) {
  for (auto& [p, e] : factor_order(o))
    if (!primes.count(p)) return false;
  return true;
}

std::map<std::string, Property>& registry() {
  static std::map<std::string, Property> reg = [] {
    std::map<std::string, Property> r;
    auto put = [&](Property p) {
      if (!r.emplace(p.name(), p).second) throw InternalError("duplicate property name " + p.name());
    };
    AxiomFlags all{true, true, true, true, true, false};
    AxiomFlags pc1_only{true, true, true, true, false, false};
    AxiomFlags sol_flags{true, true, true, true, true, true};
    put(Property(
        "trivial", [](const PermGroup& g) { return g.order() == 1; }, all, true, true));
    put(Property(
        "nilpotent", [](const PermGroup& g) { return is_nilpotent(g); }, pc1_only, true, true));
    put(Property(
        "solvable", [](const PermGroup& g) { return is_solvable(g); }, sol_flags, true, true));
    put(Property(
        "odd-order", [](const PermGroup& g) { return g.order() % 2 == 1; }, all, true, true));
    // Negative control: "abelian" declares normal_product, which is false
    // (two abelian normal subgroups of D8 generate D8). Never validated, so
    // the closure operators refuse it; verify_axioms must find the witness.
    AxiomFlags abelian_flags{true, true, true, true, false, false};
    put(Property(
        "abelian", [](const PermGroup& g) { return is_abelian(g); }, abelian_flags, false, true));
    return r;
  }();
  return reg;
}

std::mutex pi_mutex;

}  // namespace

const Property& Property::by_name(const std::string& name) {
  auto& reg = registry();
  {
    auto it = reg.find(name);
    if (it != reg.end()) return it->second;
  }
  if (name.rfind("pi:", 0) == 0) {
    std::lock_guard<std::mutex> lock(pi_mutex);
    auto it = reg.find(name);
    if (it != reg.end()) return it->second;
    auto primes = parse_pi(name);
    AxiomFlags flags{true, true, true, true, true, false};
    bool single = primes.size() == 1;  // p-groups are nilpotent, hence solvable
    auto [ins, fresh] = reg.emplace(
        name, Property(
                  name, [primes](const PermGroup& g) { return order_is_pi(g.order(), primes); },
                  flags, true, single));
    return ins->second;
  }
  throw ParseError("unknown property '" + name + "'");
}

std::vector<std::string> Property::builtin_names() {
  return {"trivial", "nilpotent", "solvable", "odd-order", "abelian"};
}

namespace {

std::string short_gens(const PermGroup& g) {
  std::string s = "<";
  for (size_t i = 0; i < g.generators().size(); ++i) {
    if (i) s += ", ";
    s += g.generators()[i].to_cycles();
  }
  return s + "> (order " + order_to_string(g.order()) + ")";
}

}  // namespace

AxiomReport verify_axioms(const Property& p, const std::vector<PermGroup>& corpus, std::size_t bound) {
  AxiomReport report;
  if (corpus.empty()) throw PreconditionError("verify_axioms: empty corpus");
  const AxiomFlags& fl = p.declared();
  for (const PermGroup& g : corpus) {
    if (g.order() > BigOrder(bound)) continue;
    ElementTable tab(g, bound);
    std::string inst = "group " + short_gens(g);
    bool pg = p.test(g);

    if (fl.subgroup_closed) {
      auto subs = tab.all_subgroups();
      std::vector<PermGroup> sub_groups;
      std::vector<char> sat;
      for (const auto& bits : subs) {
        PermGroup h = tab.to_group(bits);
        sat.push_back(p.test(h) ? 1 : 0);
        sub_groups.push_back(std::move(h));
      }
      for (size_t i = 0; i < subs.size(); ++i) {
        if (!sat[i]) continue;
        for (size_t j = 0; j < subs.size(); ++j) {
          ++report.checks_run;
          if (ElementTable::bits_subset(subs[j], subs[i]) && !sat[j]) {
            report.failures.push_back({"subgroup_closed", inst,
                                       "H = " + short_gens(sub_groups[i]) +
                                           " satisfies P but its subgroup " +
                                           short_gens(sub_groups[j]) + " does not"});
          }
        }
      }
    }

    auto normals = tab.normal_subgroups();
    std::vector<PermGroup> normal_groups;
    for (const auto& bits : normals) normal_groups.push_back(tab.to_group(bits));
    std::vector<char> quotient_sat;
    std::vector<char> normal_sat;
    for (size_t i = 0; i < normals.size(); ++i) {
      auto [q, phi] = quotient(g, normal_groups[i]);
      quotient_sat.push_back(p.test(q) ? 1 : 0);
      normal_sat.push_back(p.test(normal_groups[i]) ? 1 : 0);
    }

    if (fl.quotient_closed && pg) {
      for (size_t i = 0; i < normals.size(); ++i) {
        ++report.checks_run;
        if (!quotient_sat[i])
          report.failures.push_back({"quotient_closed", inst,
                                     "G satisfies P but G/N does not for N = " +
                                         short_gens(normal_groups[i])});
      }
    }

    if (fl.intersection_quotient) {
      for (size_t i = 0; i < normals.size(); ++i)
        for (size_t j = i + 1; j < normals.size(); ++j) {
          if (!quotient_sat[i] || !quotient_sat[j]) continue;
          ++report.checks_run;
          PermGroup meet = tab.to_group(ElementTable::bits_and(normals[i], normals[j]));
          auto [q, phi] = quotient(g, meet);
          if (!p.test(q))
            report.failures.push_back({"intersection_quotient", inst,
                                       "G/M and G/N satisfy P but G/(M ∩ N) does not, M = " +
                                           short_gens(normal_groups[i]) + ", N = " +
                                           short_gens(normal_groups[j])});
        }
    }

    if (fl.normal_product) {
      for (size_t i = 0; i < normals.size(); ++i)
        for (size_t j = i + 1; j < normals.size(); ++j) {
          if (!normal_sat[i] || !normal_sat[j]) continue;
          ++report.checks_run;
          PermGroup prod = tab.to_group(
              tab.subgroup_closure(tab.bits_to_list(ElementTable::bits_or(normals[i], normals[j]))));
          if (!p.test(prod))
            report.failures.push_back({"normal_product", inst,
                                       "normal P-subgroups M = " + short_gens(normal_groups[i]) +
                                           " and N = " + short_gens(normal_groups[j]) +
                                           " generate " + short_gens(prod) +
                                           " which does not satisfy P"});
        }
    }

    if (fl.extension_closed) {
      for (size_t i = 0; i < normals.size(); ++i) {
        if (!normal_sat[i] || !quotient_sat[i]) continue;
        ++report.checks_run;
        if (!pg)
          report.failures.push_back({"extension_closed", inst,
                                     "N and G/N satisfy P but G does not, N = " +
                                         short_gens(normal_groups[i])});
      }
    }

    if (fl.contains_solvable) {
      ++report.checks_run;
      if (is_solvable(g) && !pg)
        report.failures.push_back({"contains_solvable", inst, "G is solvable but not a P-group"});
    }
  }
  report.pass = report.failures.empty();
  return report;
}

namespace {

/// Join of class closures satisfying `keep`; exact P-core for subgroup
/// closed properties with the normal-product axiom. Splits certified direct
/// products first and falls back to enumeration.
PermGroup generic_core(const PermGroup& g, const Property& p) {
  if (p.test(g)) return g;
  if (auto split = orbit_split(g)) {
    std::vector<PermGroup> parts;
    for (const auto& f : split->factors) parts.push_back(generic_core(f, p));
    return join(g.degree(), parts);
  }
  if (g.order() > BigOrder(kDefaultEnumBound))
    throw ResourceError("o_p: group too large for class enumeration and not reducible");
  std::vector<Permutation> acc;
  PermGroup current = PermGroup::trivial(g.degree());
  for (const auto& rep : conjugacy_class_reps(g)) {
    if (rep.is_identity() || current.contains(rep)) continue;
    PermGroup ncl = normal_closure(g, PermGroup(g.degree(), {rep}));
    if (p.test(ncl)) {
      acc.insert(acc.end(), ncl.generators().begin(), ncl.generators().end());
      current = PermGroup(g.degree(), acc);
    }
  }
  return current;
}

}  // namespace

PermGroup o_p(const PermGroup& g, const Property& p) {
  if (!p.pc1_ok())
    throw PreconditionError("o_p: property '" + p.name() + "' lacks validated closure axioms");
  if (p.name() == "trivial") return PermGroup::trivial(g.degree());
  if (p.name() == "solvable") return solvable_radical(g);
  if (p.name() == "nilpotent") return fitting_subgroup(g);
  if (p.name() == "odd-order") {
    // odd normal subgroups are solvable, so the odd core lives in the radical
    PermGroup rad = solvable_radical(g);
    return generic_core(rad, p);
  }
  return generic_core(g, p);
}

namespace {

PermGroup pi_residual(const PermGroup& g, const std::set<std::uint64_t>& pi_primes) {
  // O^pi(G) = normal closure of the pi'-parts of all elements: the smallest
  // normal subgroup with pi-quotient. Class representatives suffice.
  if (auto split = orbit_split(g)) {
    std::vector<PermGroup> parts;
    for (const auto& f : split->factors) parts.push_back(pi_residual(f, pi_primes));
    return join(g.degree(), parts);
  }
  if (g.order() > BigOrder(kDefaultEnumBound))
    throw ResourceError("o_upper_p: group too large for class enumeration and not reducible");
  std::vector<Permutation> seeds;
  for (const auto& rep : conjugacy_class_reps(g)) {
    BigOrder m = rep.order();
    BigOrder pi_part = 1;
    for (auto& [q, e] : factor_order(m)) {
      if (pi_primes.count(q)) {
        for (int i = 0; i < e; ++i) pi_part *= q;
      }
    }
    // rep^(pi_part) has pi'-order
    Permutation y = rep;
    Permutation acc(g.degree());
    BigOrder k = pi_part;
    while (k > 0) {
      if (k & 1) acc = acc * y;
      y = y * y;
      k >>= 1;
    }
    if (!acc.is_identity()) seeds.push_back(acc);
  }
  if (seeds.empty()) return PermGroup::trivial(g.degree());
  return normal_closure(g, PermGroup(g.degree(), seeds));
}

}  // namespace

PermGroup o_upper_p(const PermGroup& g, const Property& p) {
  if (!p.pc1_ok())
    throw PreconditionError("o_upper_p: property '" + p.name() + "' lacks validated closure axioms");
  if (p.test(g)) return PermGroup::trivial(g.degree());
  if (p.name() == "trivial") return g;
  if (p.name() == "solvable") return perfect_core(g);
  if (p.name() == "nilpotent") return lower_central_series(g).back();
  if (p.name() == "odd-order") {
    // quotient has odd order iff N contains every 2-element
    std::set<std::uint64_t> odd_primes;
    for (auto& [q, e] : factor_order(g.order()))
      if (q != 2) odd_primes.insert(q);
    if (odd_primes.empty()) return g;
    return pi_residual(g, odd_primes);
  }
  if (p.name().rfind("pi:", 0) == 0) {
    std::set<std::uint64_t> primes;
    for (auto& [q, e] : factor_order(g.order())) primes.insert(q);
    std::set<std::uint64_t> pi;
    std::string spec = p.name().substr(3);
    std::istringstream is(spec);
    std::string tok;
    while (std::getline(is, tok, ',')) pi.insert(std::stoull(tok));
    return pi_residual(g, pi);
  }
  throw PreconditionError("o_upper_p: no algorithm for property '" + p.name() + "'");
}

}  // namespace cgt
