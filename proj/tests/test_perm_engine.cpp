#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "pclose/errors.hpp"
#include "pclose/group_io.hpp"
#include "pclose/group_ops.hpp"
#include "pclose/homomorphism.hpp"
#include "pclose/perm_group.hpp"

using namespace cgt;

namespace {

Permutation pp(const std::string& cycles, int degree) { return parse_cycles(cycles, degree); }

PermGroup sym(int n) {
  std::vector<Permutation> gens;
  std::vector<Point> cycle(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) cycle[size_t(i)] = (i + 1) % n;
  gens.push_back(Permutation(cycle));
  if (n >= 2) gens.push_back(pp("(1 2)", n));
  return PermGroup(n, gens);
}

PermGroup alt(int n) {
  std::vector<Permutation> gens;
  if (n >= 3) gens.push_back(pp("(1 2 3)", n));
  for (int i = 4; i <= n; ++i)
    gens.push_back(pp("(1 2)(" + std::to_string(i - 1) + " " + std::to_string(i) + ")", n));
  return PermGroup(n, gens);
}

}  // namespace

TEST_CASE("permutation arithmetic basics") {
  Permutation a = pp("(1 2 3)", 5);
  Permutation b = pp("(3 4 5)", 5);
  // Left-to-right composition: (a*b) applies a first.
  CHECK((a * b)[0] == 1);
  // point index 2 (point "3"): a sends 3->1, b fixes 1, so 3->1 overall.
  CHECK((a * b)[2] == 0);
  CHECK((a * a * a).is_identity());
  CHECK(a.inverse() * a == Permutation(5));
  CHECK(a.order() == 3);
  CHECK(pp("(1 2)(3 4 5)", 5).order() == 6);
  CHECK(pp("(1 2)(3 4 5)", 5).to_cycles() == "(1 2)(3 4 5)");
  CHECK(Permutation(4).to_cycles() == "()");
  CHECK_THROWS_AS(pp("(1 2", 4), ParseError);
  CHECK_THROWS_AS(pp("(1 2)(2 3)", 4), ParseError);
  CHECK_THROWS_AS(pp("(1 9)", 4), ParseError);
}

TEST_CASE("permutation properties on random elements") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 3 + int(rng() % 10);
    std::vector<Point> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[size_t(i)] = i;
    std::shuffle(v.begin(), v.end(), rng);
    Permutation a(v);
    std::shuffle(v.begin(), v.end(), rng);
    Permutation b(v);
    std::shuffle(v.begin(), v.end(), rng);
    Permutation c(v);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * a.inverse() == Permutation(n));
    CHECK(parse_cycles(a.to_cycles(), n) == a);
    CHECK(a.conjugated_by(b).order() == a.order());
  }
}

TEST_CASE("build_group: order via BSGS matches enumeration oracle") {
  // degree 5, gens {(1 2 3 4 5), (3 4 5)} -> order 60
  std::vector<Permutation> gens{pp("(1 2 3 4 5)", 5), pp("(3 4 5)", 5)};
  CHECK(oracles::brute_elements(5, gens).size() == 60);
  PermGroup g(5, gens);
  CHECK(g.order() == 60);

  // trivial group from empty generating set
  PermGroup t(4, {});
  CHECK(t.order() == 1);
  CHECK(t.is_trivial());

  // single involution
  PermGroup c2(2, {pp("(1 2)", 2)});
  CHECK(c2.order() == 2);

  CHECK(sym(4).order() == 24);
  CHECK(sym(7).order() == 5040);
  CHECK(alt(7).order() == 2520);
}

TEST_CASE("membership agrees with enumeration on assorted groups") {
  std::mt19937_64 rng(99);
  for (const PermGroup& g : {sym(4), alt(5), PermGroup(6, {pp("(1 2 3 4 5 6)", 6)}),
                             PermGroup(7, {pp("(1 2 3)(4 5 6)", 7), pp("(2 3)(5 6)", 7)})}) {
    auto set = oracles::brute_element_set(g.degree(), g.generators());
    CHECK(g.order() == set.size());
    for (const auto& e : set) CHECK(g.contains(e));
    for (int i = 0; i < 30; ++i) {
      std::vector<Point> v(static_cast<size_t>(g.degree()));
      for (int j = 0; j < g.degree(); ++j) v[size_t(j)] = j;
      std::shuffle(v.begin(), v.end(), rng);
      Permutation p(v);
      CHECK(g.contains(p) == (set.count(p) > 0));
    }
  }
}

TEST_CASE("uniform random elements land in the group") {
  std::mt19937_64 rng(7);
  PermGroup g = alt(6);
  for (int i = 0; i < 50; ++i) CHECK(g.contains(g.random_element(rng)));
}

TEST_CASE("orbits") {
  PermGroup g(7, {pp("(1 2 3)(4 5 6)", 7), pp("(2 3)(5 6)", 7)});
  auto orbs = g.orbits();
  REQUIRE(orbs.size() == 3);
  CHECK(orbs[0] == std::vector<Point>{0, 1, 2});
  CHECK(orbs[1] == std::vector<Point>{3, 4, 5});
  CHECK(orbs[2] == std::vector<Point>{6});
}

TEST_CASE("centralizer vs brute-force filter") {
  PermGroup s4 = sym(4);
  auto all = oracles::brute_elements(4, s4.generators());

  // C_{S4}((1 2)(3 4)) has order 8
  Permutation t = pp("(1 2)(3 4)", 4);
  auto brute = oracles::brute_centralizer(all, {t});
  CHECK(brute.size() == 8);
  PermGroup c = centralizer(s4, t);
  CHECK(c.order() == 8);
  for (const auto& e : brute) CHECK(c.contains(e));

  // C_G(identity) = G
  CHECK(centralizer(s4, Permutation(4)).order() == 24);

  // C_{A5}((1 2 3 4 5)) is cyclic of order 5
  PermGroup a5 = alt(5);
  Permutation f = pp("(1 2 3 4 5)", 5);
  auto a5_elts = oracles::brute_elements(5, a5.generators());
  CHECK(oracles::brute_centralizer(a5_elts, {f}).size() == 5);
  CHECK(centralizer(a5, f).order() == 5);

  CHECK_THROWS_AS(centralizer(s4, pp("(1 2)", 5)), PreconditionError);
}

TEST_CASE("centralizer of a subgroup and center") {
  PermGroup s4 = sym(4);
  PermGroup v4(4, {pp("(1 2)(3 4)", 4), pp("(1 3)(2 4)", 4)});
  auto all = oracles::brute_elements(4, s4.generators());
  auto brute = oracles::brute_centralizer(all, v4.generators());
  PermGroup c = centralizer(s4, v4);
  CHECK(c.order() == brute.size());
  CHECK(c.order() == 4);  // C_{S4}(V4) = V4
  CHECK(center(s4).is_trivial());
  CHECK(center(v4).order() == 4);
}

TEST_CASE("normal closure vs brute closure") {
  PermGroup s4 = sym(4);
  auto all = oracles::brute_elements(4, s4.generators());

  PermGroup k(4, {pp("(1 2)", 4)});
  auto brute = oracles::brute_normal_closure(4, all, k.generators());
  CHECK(brute.size() == 24);  // ncl_{S4}(<(1 2)>) = S4
  PermGroup n = normal_closure(s4, k);
  CHECK(n.order() == 24);

  PermGroup k2(4, {pp("(1 2)(3 4)", 4)});
  auto brute2 = oracles::brute_normal_closure(4, all, k2.generators());
  CHECK(brute2.size() == 4);  // Klein four-group
  PermGroup n2 = normal_closure(s4, k2);
  CHECK(n2.order() == 4);
  for (const auto& e : brute2) CHECK(n2.contains(e));

  // ncl_G(G) = G
  CHECK(normal_closure(s4, s4).order() == 24);

  PermGroup a5 = alt(5);
  CHECK_THROWS_AS(normal_closure(a5, PermGroup(5, {pp("(1 2)", 5)})), PreconditionError);
}

TEST_CASE("subnormality chains") {
  PermGroup s4 = sym(4);
  PermGroup v4(4, {pp("(1 2)(3 4)", 4), pp("(1 3)(2 4)", 4)});
  CHECK(is_subnormal(s4, v4));
  CHECK_FALSE(is_subnormal(s4, PermGroup(4, {pp("(1 2)", 4)})));
  CHECK(is_subnormal(s4, s4));
  // <(1 2)(3 4)> is subnormal in S4 (normal in V4, V4 normal in A4 normal in S4)
  CHECK(is_subnormal(s4, PermGroup(4, {pp("(1 2)(3 4)", 4)})));
}

TEST_CASE("derived and lower central series, perfect core") {
  PermGroup s4 = sym(4);
  auto ds = derived_series(s4);
  REQUIRE(ds.size() == 4);  // S4 > A4 > V4 > 1
  CHECK(ds[0].order() == 24);
  CHECK(ds[1].order() == 12);
  CHECK(ds[2].order() == 4);
  CHECK(ds[3].order() == 1);
  CHECK(is_solvable(s4));
  CHECK_FALSE(is_nilpotent(s4));

  CHECK(perfect_core(sym(5)).order() == 60);  // A5
  PermGroup c6(6, {pp("(1 2 3 4 5 6)", 6)});
  CHECK(perfect_core(c6).is_trivial());
  CHECK(is_nilpotent(c6));
  CHECK(is_abelian(c6));
  CHECK(is_perfect(alt(5)));
  CHECK_FALSE(is_perfect(s4));
}

TEST_CASE("quotient: S4/V4 is isomorphic to S3") {
  PermGroup s4 = sym(4);
  PermGroup v4(4, {pp("(1 2)(3 4)", 4), pp("(1 3)(2 4)", 4)});
  auto [q, map] = quotient(s4, v4);
  CHECK(q.order() == 6);
  CHECK_FALSE(is_abelian(q));  // S3, not C6
  CHECK(map.well_defined());
  CHECK(map.kernel().same_group_as(v4));

  // projection is a homomorphism on random pairs
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    Permutation x = s4.random_element(rng);
    Permutation y = s4.random_element(rng);
    CHECK(map.image(x * y) == map.image(x) * map.image(y));
  }
  // preimages map back
  for (int i = 0; i < 20; ++i) {
    Permutation x = s4.random_element(rng);
    auto pre = map.preimage(map.image(x));
    REQUIRE(pre.has_value());
    CHECK(map.image(*pre) == map.image(x));
  }
}

TEST_CASE("quotient edge cases") {
  PermGroup s4 = sym(4);
  auto [q1, m1] = quotient(s4, s4);
  CHECK(q1.order() == 1);
  auto [q2, m2] = quotient(s4, PermGroup::trivial(4));
  CHECK(q2.order() == 24);
  CHECK(m2.image(pp("(1 2)", 4)) == pp("(1 2)", 4));

  CHECK_THROWS_AS(quotient(s4, PermGroup(4, {pp("(1 2)", 4)})), PreconditionError);

  // |G/N| * |N| = |G|
  PermGroup a4(4, {pp("(1 2 3)", 4), pp("(1 2)(3 4)", 4)});
  auto [q3, m3] = quotient(s4, a4);
  CHECK(q3.order() * a4.order() == s4.order());
}

TEST_CASE("quotient respects the degree cap") {
  // S4/V4 needs the coset action (V4 is transitive on the 4 points, so the
  // orbit action collapses); with a cap below 6 cosets it must refuse.
  PermGroup s4 = sym(4);
  PermGroup v4(4, {pp("(1 2)(3 4)", 4), pp("(1 3)(2 4)", 4)});
  CHECK_THROWS_AS(quotient(s4, v4, 3), ResourceError);
}

TEST_CASE("normalizer backtrack on small groups") {
  PermGroup s4 = sym(4);
  PermGroup k(4, {pp("(1 2)", 4)});
  PermGroup n = normalizer(s4, k);
  CHECK(n.order() == 4);  // <(1 2),(3 4)>
  PermGroup c3(4, {pp("(1 2 3)", 4)});
  CHECK(normalizer(s4, c3).order() == 6);  // S3 on {1,2,3}
  PermGroup v4(4, {pp("(1 2)(3 4)", 4), pp("(1 3)(2 4)", 4)});
  CHECK(normalizer(s4, v4).order() == 24);
}

TEST_CASE("intersection by enumeration") {
  PermGroup s4 = sym(4);
  PermGroup a4(4, {pp("(1 2 3)", 4), pp("(1 2)(3 4)", 4)});
  PermGroup d8(4, {pp("(1 2 3 4)", 4), pp("(1 3)", 4)});
  PermGroup meet = intersection_small(a4, d8);
  CHECK(meet.order() == 4);  // V4
  CHECK(a4.contains(meet));
  CHECK(d8.contains(meet));
}

TEST_CASE("direct products act on disjoint supports") {
  PermGroup a5 = alt(5);
  PermGroup prod = direct_product({a5, a5});
  CHECK(prod.degree() == 10);
  CHECK(prod.order() == BigOrder(3600));
  auto orbs = prod.orbits();
  CHECK(orbs.size() == 2);
}

TEST_CASE("group spec round trip") {
  std::string spec = "degree 5\n(1 2 3 4 5)\n(3 4 5)\n";
  PermGroup g = parse_group_spec_string(spec);
  CHECK(g.order() == 60);
  PermGroup g2 = parse_group_spec_string(format_group_spec(g));
  CHECK(g2.same_group_as(g));
  CHECK_THROWS_AS(parse_group_spec_string("degree x\n"), ParseError);
  CHECK_THROWS_AS(parse_group_spec_string("(1 2)\n"), ParseError);
}
