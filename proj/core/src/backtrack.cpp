// Backtrack search over the base-image tree of a stabilizer chain, with
// forced-image propagation for centralizer-type constraints and orbit
// pruning against the already-found part of the result subgroup.

#include <algorithm>

#include "pclose/errors.hpp"
#include "pclose/group_ops.hpp"

namespace cgt {

namespace {

class SubgroupSearch {
 public:
  SubgroupSearch(const PermGroup& g, std::vector<Permutation> commute_targets,
                 const PermGroup* normalized_target)
      : g_(g),
        n_(g.degree()),
        commute_(std::move(commute_targets)),
        norm_target_(normalized_target),
        fwd_(size_t(n_), -1),
        bwd_(size_t(n_), -1) {
    // Inverses participate in propagation; dedupe involutions.
    size_t m = commute_.size();
    for (size_t i = 0; i < m; ++i) {
      Permutation inv = commute_[i].inverse();
      if (!(inv == commute_[i])) commute_.push_back(std::move(inv));
    }
    if (norm_target_) {
      orbit_label_.assign(size_t(n_), -1);
      int next = 0;
      for (const auto& orb : norm_target_->orbits()) {
        for (Point p : orb) orbit_label_[size_t(p)] = next;
        orbit_sizes_.push_back(int(orb.size()));
        ++next;
      }
      label_map_.assign(orbit_sizes_.size(), -1);
      label_map_rev_.assign(orbit_sizes_.size(), -1);
    }
  }

  PermGroup run() {
    found_gens_.clear();
    recurse(0, Permutation(n_), Permutation(n_));
    return PermGroup(n_, found_gens_);
  }

 private:
  struct TrailMark {
    size_t assigns;
    size_t labels;
  };

  TrailMark mark() const { return {assign_trail_.size(), label_trail_.size()}; }

  void undo(TrailMark m) {
    while (assign_trail_.size() > m.assigns) {
      Point x = assign_trail_.back();
      assign_trail_.pop_back();
      bwd_[size_t(fwd_[size_t(x)])] = -1;
      fwd_[size_t(x)] = -1;
    }
    while (label_trail_.size() > m.labels) {
      int l = label_trail_.back();
      label_trail_.pop_back();
      label_map_rev_[size_t(label_map_[size_t(l)])] = -1;
      label_map_[size_t(l)] = -1;
    }
  }

  // Assign g(x) = y and propagate. Returns false on contradiction.
  bool assign(Point x, Point y) {
    std::vector<std::pair<Point, Point>> queue{{x, y}};
    while (!queue.empty()) {
      auto [a, b] = queue.back();
      queue.pop_back();
      if (fwd_[size_t(a)] >= 0) {
        if (fwd_[size_t(a)] != b) return false;
        continue;
      }
      if (bwd_[size_t(b)] >= 0) return false;
      if (norm_target_) {
        int la = orbit_label_[size_t(a)];
        int lb = orbit_label_[size_t(b)];
        if (orbit_sizes_[size_t(la)] != orbit_sizes_[size_t(lb)]) return false;
        if (label_map_[size_t(la)] == -1) {
          if (label_map_rev_[size_t(lb)] != -1) return false;
          label_map_[size_t(la)] = lb;
          label_map_rev_[size_t(lb)] = la;
          label_trail_.push_back(la);
        } else if (label_map_[size_t(la)] != lb) {
          return false;
        }
      }
      fwd_[size_t(a)] = b;
      bwd_[size_t(b)] = a;
      assign_trail_.push_back(a);
      for (const auto& t : commute_) queue.emplace_back(t[a], t[b]);
    }
    return true;
  }

  bool leaf_ok(const Permutation& g) const {
    for (const auto& t : commute_)
      if (!(t * g == g * t)) return false;
    if (norm_target_) {
      for (const auto& k : norm_target_->generators())
        if (!norm_target_->contains(k.conjugated_by(g))) return false;
    }
    return true;
  }

  void note_solution(const Permutation& g) {
    if (g.is_identity()) return;
    if (!found_gens_.empty() && found_group_.contains(g)) return;
    found_gens_.push_back(g);
    found_group_ = PermGroup(n_, found_gens_);
  }

  // outer/outer_inv: the partial product below this level; g = h * outer
  // with h in the level-i stabilizer subgroup.
  void recurse(size_t level, const Permutation& outer, const Permutation& outer_inv) {
    const auto& levels = g_.chain().levels();
    if (level == levels.size()) {
      if (leaf_ok(outer)) note_solution(outer);
      return;
    }
    const auto& lvl = levels[level];
    Point beta = lvl.beta();
    std::vector<Point> candidates;
    if (fwd_[size_t(beta)] >= 0) {
      Point p = outer_inv[fwd_[size_t(beta)]];
      if (!lvl.in_orbit(p)) return;
      candidates.push_back(p);
    } else {
      candidates = lvl.orbit();
    }
    for (Point p : candidates) {
      Point q = outer[p];
      // Prune against the found subgroup at the root: explore only the
      // minimal image in each orbit of the solutions found so far.
      if (level == 0 && !found_gens_.empty() && !is_min_in_found_orbit(q)) continue;
      TrailMark m = mark();
      if (assign(beta, q)) {
        Permutation t = lvl.transversal(p);
        recurse(level + 1, t * outer, outer_inv * t.inverse());
      }
      undo(m);
    }
  }

  bool is_min_in_found_orbit(Point q) const {
    // BFS orbit of q under found generators; q must be its minimum.
    std::vector<Point> orb{q};
    std::vector<char> seen(size_t(n_), 0);
    seen[size_t(q)] = 1;
    for (size_t pos = 0; pos < orb.size(); ++pos)
      for (const auto& g : found_gens_) {
        Point r = g[orb[pos]];
        if (!seen[size_t(r)]) {
          if (r < q) return false;
          seen[size_t(r)] = 1;
          orb.push_back(r);
        }
      }
    return true;
  }

  const PermGroup& g_;
  int n_;
  std::vector<Permutation> commute_;
  const PermGroup* norm_target_;
  std::vector<int> fwd_, bwd_;
  std::vector<Point> assign_trail_;
  std::vector<int> orbit_label_, orbit_sizes_, label_map_, label_map_rev_;
  std::vector<int> label_trail_;
  std::vector<Permutation> found_gens_;
  PermGroup found_group_;
};

}  // namespace

PermGroup centralizer(const PermGroup& g, const Permutation& t) {
  if (t.degree() != g.degree()) throw PreconditionError("centralizer: degree mismatch");
  SubgroupSearch search(g, {t}, nullptr);
  return search.run();
}

PermGroup centralizer(const PermGroup& g, const PermGroup& t) {
  if (t.degree() != g.degree()) throw PreconditionError("centralizer: degree mismatch");
  SubgroupSearch search(g, t.generators(), nullptr);
  return search.run();
}

PermGroup center(const PermGroup& g) { return centralizer(g, g); }

PermGroup normalizer(const PermGroup& g, const PermGroup& k) {
  if (k.degree() != g.degree()) throw PreconditionError("normalizer: degree mismatch");
  SubgroupSearch search(g, {}, &k);
  return search.run();
}

}  // namespace cgt
