#include "pclose/homomorphism.hpp"

#include <cstdlib>
#include <numeric>
#include <unordered_map>

#include "pclose/config.hpp"
#include "pclose/errors.hpp"
#include "pclose/group_ops.hpp"

namespace cgt {

const Config& config() {
  static Config cfg = [] {
    Config c;
    if (const char* s = std::getenv("PCLOSE_ORACLE_BOUND")) c.oracle_bound = std::strtoull(s, nullptr, 10);
    if (const char* s = std::getenv("PCLOSE_QUOTIENT_DEGREE_CAP")) c.quotient_degree_cap = int(std::strtol(s, nullptr, 10));
    return c;
  }();
  return cfg;
}

Permutation Homomorphism::combine(const Permutation& a, const Permutation& b) const {
  int n = source_.degree();
  std::vector<Point> img(static_cast<size_t>(n + target_degree_));
  for (Point x = 0; x < n; ++x) img[size_t(x)] = a[x];
  for (Point x = 0; x < target_degree_; ++x) img[size_t(n + x)] = b[x] + n;
  return Permutation(std::move(img));
}

Permutation Homomorphism::source_part(const Permutation& c) const {
  std::vector<Point> img(static_cast<size_t>(source_.degree()));
  for (Point x = 0; x < source_.degree(); ++x) img[size_t(x)] = c[x];
  return Permutation(std::move(img));
}

Permutation Homomorphism::target_part(const Permutation& c) const {
  int n = source_.degree();
  std::vector<Point> img(static_cast<size_t>(target_degree_));
  for (Point x = 0; x < target_degree_; ++x) img[size_t(x)] = c[n + x] - n;
  return Permutation(std::move(img));
}

Homomorphism::Homomorphism(PermGroup source, int target_degree,
                           std::vector<Permutation> generator_images)
    : source_(std::move(source)), target_degree_(target_degree), images_(std::move(generator_images)) {
  if (images_.size() != source_.generators().size())
    throw PreconditionError("homomorphism: one image per source generator required");
  image_ = PermGroup(target_degree_, images_);

  int n = source_.degree();
  std::vector<Permutation> graph_gens;
  for (size_t i = 0; i < images_.size(); ++i)
    graph_gens.push_back(combine(source_.generators()[i], images_[i]));

  // Forcing a base of the source group (resp. the image group) as the
  // leading chain levels keeps the walks in image()/preimage() exact: the
  // forced prefix stabilizes one whole side, so once it is consumed that
  // side of the residue is the identity for members.
  std::vector<Point> src_first(static_cast<size_t>(n + target_degree_));
  std::iota(src_first.begin(), src_first.end(), 0);
  std::vector<Point> tgt_first = src_first;
  std::rotate(tgt_first.begin(), tgt_first.begin() + n, tgt_first.end());

  std::vector<Point> src_base = source_.base();
  std::vector<Point> tgt_base;
  for (Point b : image_.base()) tgt_base.push_back(b + n);

  graph_src_first_ =
      std::make_shared<StabilizerChain>(n + target_degree_, graph_gens, src_first, src_base);
  graph_tgt_first_ =
      std::make_shared<StabilizerChain>(n + target_degree_, graph_gens, tgt_first, tgt_base);
  well_defined_ = graph_src_first_->order() == source_.order();
}

Permutation Homomorphism::image(const Permutation& g) const {
  if (!well_defined_) throw PreconditionError("homomorphism is not well-defined");
  size_t prefix = source_.base().size();
  const auto& levels = graph_src_first_->levels();
  Permutation h = combine(g, Permutation(target_degree_));
  for (size_t i = 0; i < prefix && i < levels.size(); ++i) {
    Point p = h[levels[i].beta()];
    if (p == levels[i].beta()) continue;
    if (!levels[i].in_orbit(p))
      throw PreconditionError("homomorphism image: element outside source group");
    h = h * levels[i].transversal(p).inverse();
  }
  if (!source_part(h).is_identity())
    throw PreconditionError("homomorphism image: element outside source group");
  return target_part(h).inverse();
}

std::optional<Permutation> Homomorphism::preimage(const Permutation& h) const {
  if (!well_defined_) throw PreconditionError("homomorphism is not well-defined");
  int n = source_.degree();
  size_t prefix = image_.base().size();
  const auto& levels = graph_tgt_first_->levels();
  Permutation x = combine(Permutation(n), h);
  for (size_t i = 0; i < prefix && i < levels.size(); ++i) {
    Point p = x[levels[i].beta()];
    if (p == levels[i].beta()) continue;
    if (!levels[i].in_orbit(p)) return std::nullopt;
    x = x * levels[i].transversal(p).inverse();
  }
  if (!target_part(x).is_identity()) return std::nullopt;
  return source_part(x).inverse();
}

PermGroup Homomorphism::kernel() const {
  if (!well_defined_) throw PreconditionError("homomorphism is not well-defined");
  int n = source_.degree();
  // With a target-first base, the strong generators whose target part is
  // trivial generate the pointwise stabilizer of the image base, i.e. the
  // kernel graph.
  std::vector<Permutation> gens;
  for (const auto& s : graph_tgt_first_->strong_gens())
    if (target_part(s).is_identity()) gens.push_back(source_part(s));
  PermGroup k(n, std::move(gens));
  if (order_mul(k.order(), image_.order()) != source_.order())
    throw InternalError("homomorphism kernel: order bookkeeping failed");
  return k;
}

namespace {

/// Canonical representative of the right coset N*g (apply-n-first products),
/// computed by minimizing base images down N's stabilizer chain.
Permutation canonical_coset_rep(const PermGroup& n_grp, Permutation g) {
  for (const auto& lvl : n_grp.chain().levels()) {
    Point best_p = -1;
    Point best_val = -1;
    for (Point p : lvl.orbit()) {
      Point v = g[p];
      if (best_p < 0 || v < best_val) {
        best_p = p;
        best_val = v;
      }
    }
    if (best_p != lvl.beta()) g = lvl.transversal(best_p) * g;
  }
  return g;
}

}  // namespace

QuotientResult quotient(const PermGroup& g, const PermGroup& n, int degree_cap) {
  if (degree_cap < 0) degree_cap = config().quotient_degree_cap;
  if (!g.contains(n)) throw PreconditionError("quotient: N not contained in G");
  if (!normalizes(g, n)) throw PreconditionError("quotient: N not normal in G");

  BigOrder index = g.order() / n.order();

  if (n.is_trivial()) {
    Homomorphism id_map(g, g.degree(), g.generators());
    return {g, std::move(id_map)};
  }
  if (index == 1) {
    std::vector<Permutation> ims(g.generators().size(), Permutation(1));
    Homomorphism to_triv(g, 1, std::move(ims));
    return {PermGroup::trivial(1), std::move(to_triv)};
  }

  // Attempt 1: action on the N-orbits. Faithful iff the kernel is exactly N,
  // which the order check below certifies.
  {
    std::vector<int> orbit_of(size_t(g.degree()), -1);
    std::vector<Point> orbit_rep;
    for (const auto& orb : n.orbits()) {
      for (Point p : orb) orbit_of[size_t(p)] = int(orbit_rep.size());
      orbit_rep.push_back(orb[0]);
    }
    int num_orbits = int(orbit_rep.size());
    if (num_orbits > 1) {
      std::vector<Permutation> images;
      for (const auto& gen : g.generators()) {
        std::vector<Point> img(static_cast<size_t>(num_orbits));
        for (int i = 0; i < num_orbits; ++i) img[size_t(i)] = orbit_of[size_t(gen[orbit_rep[size_t(i)]])];
        images.push_back(Permutation(std::move(img)));
      }
      PermGroup q(num_orbits, images);
      if (q.order() == index) {
        Homomorphism map(g, num_orbits, std::move(images));
        return {std::move(q), std::move(map)};
      }
    }
  }

  // Attempt 2: action on the cosets of N via canonical representatives.
  if (index > BigOrder(degree_cap))
    throw ResourceError("quotient: index " + order_to_string(index) + " exceeds degree cap " +
                        std::to_string(degree_cap));
  int num = int(index);
  std::vector<Permutation> reps;
  std::unordered_map<Permutation, int, PermHash> idx;
  reps.push_back(canonical_coset_rep(n, Permutation(g.degree())));
  idx.emplace(reps[0], 0);
  for (size_t pos = 0; pos < reps.size(); ++pos) {
    for (const auto& gen : g.generators()) {
      Permutation r = canonical_coset_rep(n, reps[pos] * gen);
      if (idx.emplace(r, int(reps.size())).second) reps.push_back(std::move(r));
    }
  }
  if (int(reps.size()) != num) throw InternalError("quotient: coset count mismatch");
  std::vector<Permutation> images;
  for (const auto& gen : g.generators()) {
    std::vector<Point> img(static_cast<size_t>(num));
    for (int i = 0; i < num; ++i) img[size_t(i)] = idx.at(canonical_coset_rep(n, reps[size_t(i)] * gen));
    images.push_back(Permutation(std::move(img)));
  }
  PermGroup q(num, images);
  if (q.order() != index) throw InternalError("quotient: coset action order mismatch");
  Homomorphism map(g, num, std::move(images));
  return {std::move(q), std::move(map)};
}

}  // namespace cgt
