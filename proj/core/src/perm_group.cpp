#include "pclose/perm_group.hpp"

#include <algorithm>
#include <unordered_set>

#include "pclose/errors.hpp"

namespace cgt {

ChainLevel::ChainLevel(Point beta, int degree)
    : beta_(beta),
      degree_(degree),
      where_(size_t(degree), -1),
      parent_gen_(size_t(degree), -1),
      parent_pt_(size_t(degree), -1) {
  orbit_.push_back(beta);
  where_[size_t(beta)] = 0;
  if (degree_ <= kExplicitTransversalMaxDegree) explicit_trans_.push_back(Permutation(degree_));
}

Permutation ChainLevel::transversal(Point p) const {
  int pos = where_[size_t(p)];
  if (pos < 0) throw InternalError("transversal: point outside basic orbit");
  if (!explicit_trans_.empty()) return explicit_trans_[size_t(pos)];
  // Walk parent pointers: u(beta) = p.
  Permutation u(degree_);
  Point cur = p;
  std::vector<int> edges;
  while (cur != beta_) {
    edges.push_back(parent_gen_[size_t(cur)]);
    cur = parent_pt_[size_t(cur)];
  }
  for (auto it = edges.rbegin(); it != edges.rend(); ++it) u = u * gens_[size_t(*it)];
  return u;
}

void ChainLevel::add_gen(const Permutation& g) { gens_.push_back(g); }

bool ChainLevel::extend_orbit() {
  size_t before = orbit_.size();
  // BFS over all points already in the orbit with all generators; new points
  // get parent pointers (and explicit transversal elements for small degree).
  for (size_t pos = 0; pos < orbit_.size(); ++pos) {
    Point p = orbit_[pos];
    for (size_t gi = 0; gi < gens_.size(); ++gi) {
      Point q = gens_[gi][p];
      if (where_[size_t(q)] < 0) {
        where_[size_t(q)] = int(orbit_.size());
        orbit_.push_back(q);
        parent_gen_[size_t(q)] = int(gi);
        parent_pt_[size_t(q)] = p;
        if (!explicit_trans_.empty())
          explicit_trans_.push_back(explicit_trans_[size_t(where_[size_t(p)])] * gens_[gi]);
      }
    }
  }
  return orbit_.size() != before;
}

std::vector<std::pair<int, int>> ChainLevel::take_unprocessed() {
  std::vector<std::pair<int, int>> out;
  int norb = int(orbit_.size());
  int ngen = int(gens_.size());
  for (int pos = 0; pos < norb; ++pos)
    for (int gi = 0; gi < ngen; ++gi)
      if (pos >= processed_orbit_ || gi >= processed_gens_) out.emplace_back(pos, gi);
  processed_orbit_ = norb;
  processed_gens_ = ngen;
  return out;
}

StabilizerChain::StabilizerChain(int degree, const std::vector<Permutation>& gens,
                                 std::vector<Point> preferred_base, std::vector<Point> forced_base)
    : degree_(degree), preferred_base_(std::move(preferred_base)) {
  if (degree < 1) throw PreconditionError("group degree must be at least 1");
  for (Point b : forced_base) levels_.emplace_back(b, degree_);
  for (const Permutation& g : gens) {
    if (g.degree() != degree) throw PreconditionError("generator degree mismatch");
    insert_generator(g);
  }
  verify();
}

Point StabilizerChain::pick_base_point(const Permutation& g) const {
  for (Point p : preferred_base_)
    if (g[p] != p) return p;
  return g.smallest_moved_point();
}

std::pair<Permutation, size_t> StabilizerChain::sift(const Permutation& g) const {
  Permutation r = g;
  for (size_t i = 0; i < levels_.size(); ++i) {
    if (r.is_identity()) return {r, levels_.size()};
    Point p = r[levels_[i].beta()];
    if (p == levels_[i].beta()) continue;
    if (!levels_[i].in_orbit(p)) return {r, i};
    r = r * levels_[i].transversal(p).inverse();
  }
  return {r, levels_.size()};
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  auto [r, lvl] = sift(g);
  return lvl == levels_.size() && r.is_identity();
}

void StabilizerChain::insert_generator(const Permutation& g) {
  auto [h, j] = sift(g);
  if (h.is_identity()) return;
  if (j == levels_.size()) levels_.emplace_back(pick_base_point(h), degree_);
  strong_.push_back(h);
  for (size_t l = 0; l <= j && l < levels_.size(); ++l) {
    levels_[l].add_gen(h);
    levels_[l].extend_orbit();
  }
}

void StabilizerChain::verify() {
  if (levels_.empty()) return;
  // Classic deterministic Schreier-Sims verification sweep: make every
  // Schreier generator of every level sift to the identity through the
  // deeper levels. Already-verified (orbit point, generator) pairs stay
  // verified when the chain only grows, so each pair is handled once.
  int i = int(levels_.size()) - 1;
  while (i >= 0) {
    levels_[size_t(i)].extend_orbit();
    auto pairs = levels_[size_t(i)].take_unprocessed();
    bool clean = true;
    for (auto [pos, gi] : pairs) {
      Point p = levels_[size_t(i)].orbit()[size_t(pos)];
      const Permutation& x = levels_[size_t(i)].gens()[size_t(gi)];
      Permutation u = levels_[size_t(i)].transversal(p);
      Permutation s = u * x * levels_[size_t(i)].transversal(x[p]).inverse();
      if (s.is_identity()) continue;
      // Sift through deeper levels only: s already fixes base points <= i.
      Permutation r = s;
      size_t j = size_t(i) + 1;
      for (; j < levels_.size(); ++j) {
        if (r.is_identity()) break;
        Point q = r[levels_[j].beta()];
        if (q == levels_[j].beta()) continue;
        if (!levels_[j].in_orbit(q)) break;
        r = r * levels_[j].transversal(q).inverse();
      }
      if (r.is_identity()) continue;
      if (j == levels_.size()) levels_.emplace_back(pick_base_point(r), degree_);
      strong_.push_back(r);
      for (size_t l = 0; l <= j && l < levels_.size(); ++l) {
        levels_[l].add_gen(r);
        levels_[l].extend_orbit();
      }
      i = int(j);
      clean = false;
      break;
    }
    if (clean) --i;
  }
}

BigOrder StabilizerChain::order() const {
  BigOrder n = 1;
  for (const auto& lvl : levels_) n = order_mul(n, BigOrder(lvl.orbit_size()));
  return n;
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> b;
  for (const auto& lvl : levels_) b.push_back(lvl.beta());
  return b;
}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators, std::vector<Point> preferred_base)
    : degree_(degree) {
  // Drop identities and duplicates but keep the caller's order.
  std::unordered_set<Permutation, PermHash> seen;
  for (auto& g : generators) {
    if (g.degree() != degree) throw PreconditionError("generator degree mismatch");
    if (g.is_identity()) continue;
    if (seen.insert(g).second) gens_.push_back(g);
  }
  chain_ = std::make_shared<StabilizerChain>(degree, gens_, std::move(preferred_base));
}

PermGroup PermGroup::trivial(int degree) { return PermGroup(degree, {}); }

BigOrder PermGroup::order() const { return chain_ ? chain_->order() : 1; }

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  return chain_->contains(p);
}

bool PermGroup::contains(const PermGroup& h) const {
  if (h.degree() != degree_) return false;
  for (const auto& g : h.generators())
    if (!contains(g)) return false;
  return true;
}

bool PermGroup::same_group_as(const PermGroup& h) const {
  return degree_ == h.degree() && order() == h.order() && contains(h);
}

std::vector<std::vector<Point>> PermGroup::basic_orbits() const {
  std::vector<std::vector<Point>> out;
  for (const auto& lvl : chain_->levels()) out.push_back(lvl.orbit());
  return out;
}

std::vector<std::vector<Point>> PermGroup::orbits() const {
  std::vector<std::vector<Point>> out;
  std::vector<char> seen(size_t(degree_), 0);
  for (Point start = 0; start < degree_; ++start) {
    if (seen[size_t(start)]) continue;
    std::vector<Point> orb{start};
    seen[size_t(start)] = 1;
    for (size_t pos = 0; pos < orb.size(); ++pos)
      for (const auto& g : gens_) {
        Point q = g[orb[pos]];
        if (!seen[size_t(q)]) {
          seen[size_t(q)] = 1;
          orb.push_back(q);
        }
      }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

Permutation PermGroup::random_element(std::mt19937_64& rng) const {
  Permutation g(degree_);
  const auto& levels = chain_->levels();
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    std::uniform_int_distribution<size_t> dist(0, it->orbit().size() - 1);
    g = g * it->transversal(it->orbit()[dist(rng)]);
  }
  return g;
}

PermGroup PermGroup::conjugated_by(const Permutation& w) const {
  if (w.degree() != degree_) throw PreconditionError("conjugating permutation degree mismatch");
  std::vector<Permutation> gens;
  gens.reserve(gens_.size());
  for (const auto& g : gens_) gens.push_back(g.conjugated_by(w));
  return PermGroup(degree_, std::move(gens));
}

std::string PermGroup::identity_key() const {
  std::vector<std::string> cyc;
  for (const auto& g : gens_) cyc.push_back(g.to_cycles());
  std::sort(cyc.begin(), cyc.end());
  std::string s = std::to_string(degree_) + "|" + order_to_string(order());
  for (auto& c : cyc) s += "|" + c;
  return s;
}

}  // namespace cgt
