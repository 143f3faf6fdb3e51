#include "pclose/structure.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "pclose/errors.hpp"
#include "pclose/homomorphism.hpp"
#include "pclose/oracles.hpp"

namespace cgt {

namespace {

/// Image of g's generators restricted to a point subset (re-indexed 0..k-1).
PermGroup restriction(const PermGroup& g, const std::vector<Point>& points) {
  std::vector<int> pos(size_t(g.degree()), -1);
  for (size_t i = 0; i < points.size(); ++i) pos[size_t(points[i])] = int(i);
  std::vector<Permutation> gens;
  for (const auto& gen : g.generators()) {
    std::vector<Point> img(points.size());
    for (size_t i = 0; i < points.size(); ++i) {
      int to = pos[size_t(gen[points[i]])];
      if (to < 0) throw InternalError("restriction: point set not invariant");
      img[i] = to;
    }
    gens.push_back(Permutation(std::move(img)));
  }
  return PermGroup(int(points.size()), std::move(gens));
}

/// Embed a restriction-degree permutation back into the full degree.
Permutation embed_points(const Permutation& p, const std::vector<Point>& points, int degree) {
  std::vector<Point> img(static_cast<size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  for (size_t i = 0; i < points.size(); ++i) img[size_t(points[i])] = points[size_t(p[int(i)])];
  return Permutation(std::move(img));
}

}  // namespace

std::optional<OrbitSplit> orbit_split(const PermGroup& g) {
  std::vector<std::vector<Point>> orbs;
  for (auto& o : g.orbits())
    if (o.size() > 1) orbs.push_back(std::move(o));  // fixed points carry nothing
  if (orbs.size() < 2) return std::nullopt;

  // Merge orbits that are entangled: the restriction to the pair is smaller
  // than the product of the single-orbit restrictions.
  std::vector<BigOrder> orb_order(orbs.size());
  for (size_t i = 0; i < orbs.size(); ++i) orb_order[i] = restriction(g, orbs[i]).order();

  std::vector<int> parent(orbs.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[size_t(x)] == x ? x : parent[size_t(x)] = find(parent[size_t(x)]); };

  for (size_t i = 0; i < orbs.size(); ++i)
    for (size_t j = i + 1; j < orbs.size(); ++j) {
      if (find(int(i)) == find(int(j))) continue;
      std::vector<Point> both = orbs[i];
      both.insert(both.end(), orbs[j].begin(), orbs[j].end());
      std::sort(both.begin(), both.end());
      if (restriction(g, both).order() != order_mul(orb_order[i], orb_order[j]))
        parent[size_t(find(int(i)))] = find(int(j));
    }

  std::map<int, std::vector<Point>> block_points;
  for (size_t i = 0; i < orbs.size(); ++i) {
    auto& blk = block_points[find(int(i))];
    blk.insert(blk.end(), orbs[i].begin(), orbs[i].end());
  }
  if (block_points.size() < 2) return std::nullopt;

  OrbitSplit split;
  BigOrder product = 1;
  for (auto& [root, pts] : block_points) {
    std::sort(pts.begin(), pts.end());
    PermGroup restr = restriction(g, pts);
    product = order_mul(product, restr.order());
    std::vector<Permutation> emb_gens;
    for (const auto& p : restr.generators()) emb_gens.push_back(embed_points(p, pts, g.degree()));
    split.blocks.push_back(pts);
    split.factors.push_back(PermGroup(g.degree(), std::move(emb_gens)));
  }
  // Pairwise independence does not rule out diagonal entanglement across
  // three or more blocks; certify by the order product before using.
  if (product != g.order()) return std::nullopt;
  for (const auto& f : split.factors)
    if (!g.contains(f)) throw InternalError("orbit_split: factor escaped the group");
  return split;
}

namespace {

/// Join of <c^G> over class representatives whose normal closure satisfies
/// `keep`. For any predicate closed under subgroups and normal products this
/// is the largest normal subgroup all of whose class closures qualify, i.e.
/// the P-core.
PermGroup class_closure_core(const PermGroup& g, const std::function<bool(const PermGroup&)>& keep) {
  std::vector<Permutation> acc;
  PermGroup current = PermGroup::trivial(g.degree());
  for (const auto& rep : conjugacy_class_reps(g)) {
    if (rep.is_identity() || current.contains(rep)) continue;
    PermGroup ncl = normal_closure(g, PermGroup(g.degree(), {rep}));
    if (keep(ncl)) {
      acc.insert(acc.end(), ncl.generators().begin(), ncl.generators().end());
      current = PermGroup(g.degree(), acc);
    }
  }
  return current;
}

PermGroup radical_via_blocks(const PermGroup& g);

PermGroup solvable_radical_impl(const PermGroup& g) {
  if (is_solvable(g)) return g;
  if (auto split = orbit_split(g)) {
    std::vector<PermGroup> parts;
    for (const auto& f : split->factors) parts.push_back(solvable_radical_impl(f));
    return join(g.degree(), parts);
  }
  if (g.order() <= BigOrder(kDefaultEnumBound))
    return class_closure_core(g, [](const PermGroup& n) { return is_solvable(n); });
  return radical_via_blocks(g);
}

/// Nontrivial block system of a transitive group found by Atkinson's
/// algorithm (finest congruence identifying 0 with another point); returns
/// block labels or nullopt when the group is primitive.
std::optional<std::vector<int>> nontrivial_blocks(const PermGroup& g) {
  if (g.orbits().size() != 1) return std::nullopt;
  int n = g.degree();
  for (Point second = 1; second < n; ++second) {
    std::vector<int> parent(static_cast<size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      return parent[size_t(x)] == x ? x : parent[size_t(x)] = find(parent[size_t(x)]);
    };
    std::vector<std::pair<Point, Point>> queue;
    parent[size_t(std::max<Point>(0, second))] = find(std::min<Point>(0, second));
    queue.emplace_back(0, second);
    while (!queue.empty()) {
      auto [a, b] = queue.back();
      queue.pop_back();
      for (const auto& gen : g.generators()) {
        int ra = find(gen[a]), rb = find(gen[b]);
        if (ra != rb) {
          parent[size_t(std::max(ra, rb))] = std::min(ra, rb);
          queue.emplace_back(gen[a], gen[b]);
        }
      }
    }
    std::vector<int> labels(static_cast<size_t>(n));
    std::map<int, int> remap;
    for (Point x = 0; x < n; ++x) {
      int r = find(x);
      auto [it, fresh] = remap.emplace(r, int(remap.size()));
      labels[size_t(x)] = it->second;
    }
    if (int(remap.size()) > 1 && int(remap.size()) < n) return labels;
  }
  return std::nullopt;
}

PermGroup radical_via_blocks(const PermGroup& g) {
  // Transitive, beyond the enumeration bound. Reduce through a minimal block
  // system: with K the kernel of the block action,
  //   Sol(K) != 1  ->  Sol(G) is the preimage of Sol(G / Sol(K)),
  //   Sol(K) == 1  ->  Sol(G) = Sol(C_G(K)) (they commute past K).
  auto labels = nontrivial_blocks(g);
  if (!labels)
    throw ResourceError("solvable radical: group too large for enumeration and not reducible");
  int nblocks = 1 + *std::max_element(labels->begin(), labels->end());
  std::vector<Permutation> images;
  for (const auto& gen : g.generators()) {
    std::vector<Point> img(static_cast<size_t>(nblocks), -1);
    for (Point x = 0; x < g.degree(); ++x) img[size_t((*labels)[size_t(x)])] = (*labels)[size_t(gen[x])];
    images.push_back(Permutation(std::move(img)));
  }
  Homomorphism to_blocks(g, nblocks, images);
  PermGroup kernel = to_blocks.kernel();
  if (kernel.is_trivial()) {
    // Faithful block action: recurse on the smaller-degree image.
    PermGroup image = to_blocks.image_group();
    PermGroup rad_img = solvable_radical_impl(image);
    std::vector<Permutation> gens;
    for (const auto& r : rad_img.generators()) {
      auto pre = to_blocks.preimage(r);
      if (!pre) throw InternalError("radical_via_blocks: missing preimage");
      gens.push_back(*pre);
    }
    // The preimages generate a subgroup mapping onto Sol(image) with trivial
    // kernel, so this is Sol(G) exactly.
    return PermGroup(g.degree(), std::move(gens));
  }
  PermGroup sol_k = solvable_radical_impl(kernel);
  if (!sol_k.is_trivial()) {
    auto [q, phi] = quotient(g, sol_k);
    PermGroup rad_q = solvable_radical_impl(q);
    std::vector<Permutation> gens = sol_k.generators();
    for (const auto& r : rad_q.generators()) {
      auto pre = phi.preimage(r);
      if (!pre) throw InternalError("radical_via_blocks: missing quotient preimage");
      gens.push_back(*pre);
    }
    return PermGroup(g.degree(), std::move(gens));
  }
  return solvable_radical_impl(centralizer(g, kernel));
}

}  // namespace

PermGroup solvable_radical(const PermGroup& g) { return solvable_radical_impl(g); }

PermGroup fitting_subgroup(const PermGroup& g) {
  if (is_nilpotent(g)) return g;
  if (auto split = orbit_split(g)) {
    std::vector<PermGroup> parts;
    for (const auto& f : split->factors) parts.push_back(fitting_subgroup(f));
    return join(g.degree(), parts);
  }
  if (g.order() <= BigOrder(kDefaultEnumBound))
    return class_closure_core(g, [](const PermGroup& n) { return is_nilpotent(n); });
  // F(G) = F(Sol(G)): the Fitting subgroup is characteristic in the radical.
  PermGroup rad = solvable_radical(g);
  if (rad.order() == g.order())
    throw ResourceError("fitting subgroup: solvable group too large for enumeration");
  return fitting_subgroup(rad);
}

PermGroup p_core(const PermGroup& g, std::uint64_t p) {
  auto is_p_group = [p](const PermGroup& n) {
    BigOrder o = n.order();
    while (o % p == 0) o /= p;
    return o == 1;
  };
  if (is_p_group(g)) return g;
  if (auto split = orbit_split(g)) {
    std::vector<PermGroup> parts;
    for (const auto& f : split->factors) parts.push_back(p_core(f, p));
    return join(g.degree(), parts);
  }
  if (g.order() <= BigOrder(kDefaultEnumBound)) return class_closure_core(g, is_p_group);
  PermGroup rad = solvable_radical(g);
  if (rad.order() == g.order()) throw ResourceError("p_core: solvable group too large");
  return p_core(rad, p);
}

bool is_simple(const PermGroup& g) {
  BigOrder o = g.order();
  if (o == 1) return false;
  auto f = factor_order(o);
  if (f.size() == 1 && f.begin()->second == 1) return true;  // prime order
  if (is_abelian(g)) return false;
  // normal-closure scan of class representatives
  for (const auto& rep : conjugacy_class_reps(g)) {
    if (rep.is_identity()) continue;
    if (normal_closure(g, PermGroup(g.degree(), {rep})).order() != o) return false;
  }
  return true;
}

bool is_quasisimple(const PermGroup& g) {
  if (g.is_trivial()) return false;
  if (!is_perfect(g)) return false;
  PermGroup z = center(g);
  if (z.order() == g.order()) return false;
  auto [q, phi] = quotient(g, z);
  return is_simple(q);
}

std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& g) {
  if (g.is_trivial()) return {};
  if (g.order() <= BigOrder(kDefaultEnumBound)) {
    // Minimal elements among the class closures are exactly the minimal
    // normal subgroups.
    std::vector<PermGroup> closures;
    for (const auto& rep : conjugacy_class_reps(g)) {
      if (rep.is_identity()) continue;
      PermGroup n = normal_closure(g, PermGroup(g.degree(), {rep}));
      bool dup = false;
      for (const auto& known : closures)
        if (known.same_group_as(n)) {
          dup = true;
          break;
        }
      if (!dup) closures.push_back(std::move(n));
    }
    std::vector<PermGroup> mins;
    for (size_t i = 0; i < closures.size(); ++i) {
      bool minimal = true;
      for (size_t j = 0; j < closures.size(); ++j)
        if (i != j && closures[i].contains(closures[j])) {
          minimal = false;
          break;
        }
      if (minimal) mins.push_back(closures[i]);
    }
    std::sort(mins.begin(), mins.end(),
              [](const PermGroup& a, const PermGroup& b) { return a.identity_key() < b.identity_key(); });
    return mins;
  }
  if (auto split = orbit_split(g)) {
    if (!solvable_radical(g).is_trivial())
      throw ResourceError("minimal normal subgroups: large non-semisimple group");
    // Radical-free products: no diagonal minimal normals across certified
    // direct factors, so the union of per-factor answers is exhaustive.
    std::vector<PermGroup> out;
    for (const auto& f : split->factors)
      for (auto& m : minimal_normal_subgroups(f)) out.push_back(std::move(m));
    return out;
  }
  throw ResourceError("minimal normal subgroups: group too large for enumeration");
}

namespace {

/// Simple direct factors of a minimal normal subgroup of a radical-free
/// group (a direct product of isomorphic nonabelian simples).
std::vector<PermGroup> simple_factors(const PermGroup& m) {
  if (is_simple(m)) return {m};
  return minimal_normal_subgroups(m);
}

}  // namespace

std::vector<PermGroup> components(const PermGroup& g) {
  PermGroup rad = solvable_radical(g);
  if (rad.order() == g.order()) return {};
  std::vector<PermGroup> out;
  if (rad.is_trivial()) {
    for (const auto& m : minimal_normal_subgroups(g)) {
      if (is_abelian(m)) continue;
      for (auto& s : simple_factors(m)) out.push_back(std::move(s));
    }
  } else {
    auto [q, phi] = quotient(g, rad);
    for (const auto& comp_bar : components(q)) {
      std::vector<Permutation> gens = rad.generators();
      for (const auto& c : comp_bar.generators()) {
        auto pre = phi.preimage(c);
        if (!pre) throw InternalError("components: missing preimage");
        gens.push_back(*pre);
      }
      PermGroup k = perfect_core(PermGroup(g.degree(), std::move(gens)));
      if (is_quasisimple(k) && is_subnormal(g, k)) out.push_back(std::move(k));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const PermGroup& a, const PermGroup& b) { return a.identity_key() < b.identity_key(); });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const PermGroup& a, const PermGroup& b) { return a.same_group_as(b); }),
            out.end());
  return out;
}

PermGroup layer_subgroup(const PermGroup& g) {
  auto comps = components(g);
  if (comps.empty()) return PermGroup::trivial(g.degree());
  return join(g.degree(), comps);
}

PermGroup generalized_fitting(const PermGroup& g) {
  return join(fitting_subgroup(g), layer_subgroup(g));
}

namespace {

struct SimpleOrderEntry {
  std::uint64_t order;
  const char* label;
};

// All nonabelian simple orders below 10^6. 20160 is the one genuine
// collision (A8 vs PSL(3,4)); it is resolved by element orders.
constexpr SimpleOrderEntry kSimpleOrders[] = {
    {60, "A5"},          {168, "PSL(2,7)"},   {360, "A6"},         {504, "PSL(2,8)"},
    {660, "PSL(2,11)"},  {1092, "PSL(2,13)"}, {2448, "PSL(2,17)"}, {2520, "A7"},
    {3420, "PSL(2,19)"}, {4080, "PSL(2,16)"}, {5616, "PSL(3,3)"},  {6048, "PSU(3,3)"},
    {6072, "PSL(2,23)"}, {7800, "PSL(2,25)"}, {7920, "M11"},       {9828, "PSL(2,27)"},
    {12180, "PSL(2,29)"},{14880, "PSL(2,31)"},{25308, "PSL(2,37)"},{25920, "PSU(4,2)"},
    {29120, "Sz(8)"},    {32736, "PSL(2,32)"},{34440, "PSL(2,41)"},{39732, "PSL(2,43)"},
    {51888, "PSL(2,47)"},{58800, "PSL(2,49)"},{62400, "PSU(3,4)"}, {74412, "PSL(2,53)"},
    {95040, "M12"},      {102660, "PSL(2,59)"},{113460, "PSL(2,61)"},{126000, "PSU(3,5)"},
    {150348, "PSL(2,67)"},{175560, "J1"},     {178920, "PSL(2,71)"},{181440, "A9"},
    {194472, "PSL(2,73)"},{246480, "PSL(2,79)"},{262080, "PSL(2,64)"},{265680, "PSL(2,81)"},
    {285852, "PSL(2,83)"},{352440, "PSL(2,89)"},{372000, "PSL(3,5)"},{443520, "M22"},
    {456288, "PSL(2,97)"},{515100, "PSL(2,101)"},{546312, "PSL(2,103)"},{604800, "J2"},
    {612468, "PSL(2,107)"},{647460, "PSL(2,109)"},{721392, "PSL(2,113)"},{885720, "PSL(2,121)"},
    {976500, "PSL(2,125)"},
};

bool has_element_of_order(const PermGroup& g, BigOrder target) {
  for (const auto& rep : conjugacy_class_reps(g))
    if (rep.order() == target) return true;
  return false;
}

}  // namespace

SimpleId identify_simple(const PermGroup& g) {
  BigOrder o = g.order();
  if (o == 20160) {
    // A8 and PSL(3,4) share this order; A8 has elements of order 15.
    return {has_element_of_order(g, 15) ? "A8" : "PSL(3,4)", true};
  }
  if (o <= 1000000) {
    for (const auto& e : kSimpleOrders)
      if (BigOrder(e.order) == o) return {e.label, true};
    return {"unknown[" + order_to_string(o) + "]", false};
  }
  // PSL(2,q) order formula for the constructed families.
  for (std::uint64_t q = 4; q <= 1 << 13; ++q) {
    BigOrder psl = BigOrder(q) * (BigOrder(q) * q - 1);
    if (q % 2 == 1) psl /= 2;
    if (psl == o) return {"PSL(2," + std::to_string(q) + ")", true};
  }
  // Alternating orders up to A16.
  BigOrder fact = 1;
  for (std::uint64_t n = 2; n <= 16; ++n) {
    fact = order_mul(fact, n);
    if (n >= 5 && fact / 2 == o) return {"A" + std::to_string(n), true};
  }
  return {"unknown[" + order_to_string(o) + "]", false};
}

namespace {

void factors_rec(const PermGroup& g, std::vector<std::string>& out, bool& ok) {
  if (g.is_trivial()) return;
  if (is_solvable(g)) {
    for (auto& [p, e] : factor_order(g.order()))
      for (int i = 0; i < e; ++i) out.push_back("C" + std::to_string(p));
    return;
  }
  PermGroup rad = solvable_radical(g);
  if (!rad.is_trivial()) {
    for (auto& [p, e] : factor_order(rad.order()))
      for (int i = 0; i < e; ++i) out.push_back("C" + std::to_string(p));
    auto [q, phi] = quotient(g, rad);
    factors_rec(q, out, ok);
    return;
  }
  auto comps = components(g);
  if (comps.empty()) throw InternalError("composition factors: radical-free group without components");
  for (const auto& k : comps) {
    SimpleId id = identify_simple(k);
    if (!id.identified) ok = false;
    out.push_back(id.label);
  }
  PermGroup e = join(g.degree(), comps);
  auto [q, phi] = quotient(g, e);
  factors_rec(q, out, ok);
}

}  // namespace

std::vector<std::string> composition_factors(const PermGroup& g, bool* all_identified) {
  std::vector<std::string> out;
  bool ok = true;
  factors_rec(g, out, ok);
  std::sort(out.begin(), out.end());
  if (all_identified) *all_identified = ok;
  return out;
}

StructureReport analyze(const PermGroup& g) {
  StructureReport r;
  r.order = g.order();
  r.solvable_radical = solvable_radical(g);
  r.fitting = fitting_subgroup(g);
  r.components = components(g);
  r.layer = r.components.empty() ? PermGroup::trivial(g.degree()) : join(g.degree(), r.components);
  r.generalized_fitting = join(r.fitting, r.layer);
  r.composition_factors = composition_factors(g, &r.is_kgroup);
  return r;
}

}  // namespace cgt
