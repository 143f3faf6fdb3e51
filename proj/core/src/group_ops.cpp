#include "pclose/group_ops.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "pclose/errors.hpp"

namespace cgt {

PermGroup join(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree()) throw PreconditionError("join: degree mismatch");
  std::vector<Permutation> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return PermGroup(a.degree(), std::move(gens));
}

PermGroup join(int degree, const std::vector<PermGroup>& parts) {
  std::vector<Permutation> gens;
  for (const auto& p : parts) {
    if (p.degree() != degree) throw PreconditionError("join: degree mismatch");
    gens.insert(gens.end(), p.generators().begin(), p.generators().end());
  }
  return PermGroup(degree, std::move(gens));
}

PermGroup normal_closure(const PermGroup& g, const PermGroup& s) {
  if (!g.contains(s)) throw PreconditionError("normal_closure: S not contained in G");
  return normal_closure_under(g, g.generators(), s);
}

PermGroup normal_closure_under(const PermGroup& g, const std::vector<Permutation>& conjugators,
                               const PermGroup& s) {
  // Orbit of the generating set under conjugation, re-closing the BSGS as
  // new conjugates fall outside the current closure.
  std::vector<Permutation> gens = s.generators();
  PermGroup current = s;
  std::deque<Permutation> todo(gens.begin(), gens.end());
  while (!todo.empty()) {
    Permutation x = todo.front();
    todo.pop_front();
    for (const auto& c : conjugators) {
      Permutation y = x.conjugated_by(c);
      if (!current.contains(y)) {
        gens.push_back(y);
        current = PermGroup(g.degree(), gens);
        todo.push_back(y);
      }
    }
  }
  return current;
}

PermGroup commutator_group(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree()) throw PreconditionError("commutator_group: degree mismatch");
  std::vector<Permutation> comms;
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) comms.push_back(commutator(x, y));
  PermGroup seed(a.degree(), std::move(comms));
  std::vector<Permutation> conj = a.generators();
  conj.insert(conj.end(), b.generators().begin(), b.generators().end());
  return normal_closure_under(seed, conj, seed);
}

PermGroup derived_subgroup(const PermGroup& g) { return commutator_group(g, g); }

std::vector<PermGroup> derived_series(const PermGroup& g) {
  std::vector<PermGroup> series{g};
  while (true) {
    PermGroup next = derived_subgroup(series.back());
    if (next.order() == series.back().order()) break;
    series.push_back(next);
    if (series.back().is_trivial()) break;
  }
  return series;
}

std::vector<PermGroup> lower_central_series(const PermGroup& g) {
  std::vector<PermGroup> series{g};
  while (true) {
    PermGroup next = commutator_group(series.back(), g);
    if (next.order() == series.back().order()) break;
    series.push_back(next);
    if (series.back().is_trivial()) break;
  }
  return series;
}

PermGroup perfect_core(const PermGroup& g) {
  PermGroup cur = g;
  while (true) {
    PermGroup next = derived_subgroup(cur);
    if (next.order() == cur.order()) return cur;
    cur = next;
  }
}

bool is_abelian(const PermGroup& g) {
  const auto& gen = g.generators();
  for (size_t i = 0; i < gen.size(); ++i)
    for (size_t j = i + 1; j < gen.size(); ++j)
      if (!(gen[i] * gen[j] == gen[j] * gen[i])) return false;
  return true;
}

bool is_perfect(const PermGroup& g) { return derived_subgroup(g).order() == g.order(); }

bool is_solvable(const PermGroup& g) { return derived_series(g).back().is_trivial(); }

bool is_nilpotent(const PermGroup& g) { return lower_central_series(g).back().is_trivial(); }

bool normalizes(const PermGroup& x, const PermGroup& k) {
  for (const auto& c : x.generators())
    for (const auto& g : k.generators())
      if (!k.contains(g.conjugated_by(c))) return false;
  return true;
}

bool is_normal_in(const PermGroup& n, const PermGroup& g) {
  return g.contains(n) && normalizes(g, n);
}

bool is_subnormal(const PermGroup& g, const PermGroup& k) {
  if (!g.contains(k)) throw PreconditionError("is_subnormal: K not contained in G");
  PermGroup h = g;
  while (true) {
    if (h.order() == k.order()) return true;
    PermGroup next = normal_closure_under(h, h.generators(), k);
    if (next.order() == h.order()) return false;  // chain stabilized above K
    h = next;
  }
}

std::vector<Permutation> elements(const PermGroup& g, std::size_t bound) {
  if (g.order() > BigOrder(bound))
    throw ResourceError("element enumeration: order " + order_to_string(g.order()) +
                        " exceeds bound " + std::to_string(bound));
  std::vector<Permutation> out{Permutation(g.degree())};
  std::unordered_set<Permutation, PermHash> seen(out.begin(), out.end());
  for (size_t pos = 0; pos < out.size(); ++pos) {
    for (const auto& gen : g.generators()) {
      Permutation next = out[pos] * gen;
      if (seen.insert(next).second) out.push_back(std::move(next));
    }
  }
  return out;
}

std::vector<Permutation> conjugacy_class_reps(const PermGroup& g, std::size_t bound) {
  std::vector<Permutation> elts = elements(g, bound);
  std::sort(elts.begin(), elts.end());
  std::unordered_set<Permutation, PermHash> assigned;
  std::vector<Permutation> reps;
  for (const auto& e : elts) {
    if (assigned.count(e)) continue;
    reps.push_back(e);
    // BFS the class under conjugation by generators.
    std::vector<Permutation> orb{e};
    assigned.insert(e);
    for (size_t pos = 0; pos < orb.size(); ++pos)
      for (const auto& gen : g.generators()) {
        Permutation c = orb[pos].conjugated_by(gen);
        if (assigned.insert(c).second) orb.push_back(std::move(c));
      }
  }
  return reps;
}

PermGroup intersection_small(const PermGroup& h, const PermGroup& k, std::size_t bound) {
  if (h.degree() != k.degree()) throw PreconditionError("intersection: degree mismatch");
  const PermGroup& small = h.order() <= k.order() ? h : k;
  const PermGroup& big = h.order() <= k.order() ? k : h;
  std::vector<Permutation> gens;
  for (const auto& e : elements(small, bound))
    if (big.contains(e)) gens.push_back(e);
  return PermGroup(h.degree(), std::move(gens));
}

PermGroup direct_product(const std::vector<PermGroup>& factors) {
  int total = 0;
  for (const auto& f : factors) total += f.degree();
  std::vector<Permutation> gens;
  int offset = 0;
  for (const auto& f : factors) {
    for (const auto& g : f.generators()) gens.push_back(g.shifted(offset, total));
    offset += f.degree();
  }
  return PermGroup(total, std::move(gens));
}

PermGroup embed_factor(const PermGroup& factor, int offset, int total_degree) {
  std::vector<Permutation> gens;
  for (const auto& g : factor.generators()) gens.push_back(g.shifted(offset, total_degree));
  return PermGroup(total_degree, std::move(gens));
}

}  // namespace cgt
