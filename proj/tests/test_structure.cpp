#include "doctest.h"
#include "pclose/errors.hpp"
#include "pclose/group_io.hpp"
#include "pclose/group_ops.hpp"
#include "pclose/homomorphism.hpp"
#include "pclose/oracles.hpp"
#include "pclose/structure.hpp"

using namespace cgt;

namespace {

Permutation pp(const std::string& s, int n) { return parse_cycles(s, n); }

PermGroup sym4() { return PermGroup(4, {pp("(1 2 3 4)", 4), pp("(1 2)", 4)}); }
PermGroup alt5() { return PermGroup(5, {pp("(1 2 3)", 5), pp("(3 4 5)", 5)}); }

PermGroup a5_cross_c6() {
  PermGroup a5 = alt5();
  PermGroup c6(6, {pp("(1 2 3 4 5 6)", 6)});
  return direct_product({a5, c6});
}

// SL(2,5) acting on the 24 nonzero vectors of F5^2.
PermGroup sl25() {
  auto idx = [](int a, int b) {  // (a,b) != (0,0) -> 0..23
    return a * 5 + b - 1;
  };
  auto act = [&](int m00, int m01, int m10, int m11) {
    std::vector<Point> img(24);
    for (int a = 0; a < 5; ++a)
      for (int b = 0; b < 5; ++b) {
        if (a == 0 && b == 0) continue;
        int x = (a * m00 + b * m10) % 5;
        int y = (a * m01 + b * m11) % 5;
        img[size_t(idx(a, b))] = idx(x, y);
      }
    return Permutation(img);
  };
  return PermGroup(24, {act(1, 1, 0, 1), act(0, 1, 4, 0)});
}

}  // namespace

TEST_CASE("element table oracles on S4") {
  PermGroup s4 = sym4();
  ElementTable tab(s4, 2000);
  CHECK(tab.size() == 24);
  CHECK(tab.all_subgroups().size() == 30);
  auto normals = tab.normal_subgroups();
  REQUIRE(normals.size() == 4);  // 1, V4, A4, S4
  CHECK(ElementTable::popcount(normals[0]) == 1);
  CHECK(ElementTable::popcount(normals[1]) == 4);
  CHECK(ElementTable::popcount(normals[2]) == 12);
  CHECK(ElementTable::popcount(normals[3]) == 24);
  CHECK(tab.subnormal_subgroups().size() == 7);
}

TEST_CASE("element table round trips subgroups") {
  PermGroup s4 = sym4();
  ElementTable tab(s4, 2000);
  for (const auto& bits : tab.all_subgroups()) {
    PermGroup h = tab.to_group(bits);
    CHECK(h.order() == BigOrder(ElementTable::popcount(bits)));
    CHECK(tab.bits_of_group(h) == bits);
  }
}

TEST_CASE("solvable radical") {
  CHECK(solvable_radical(sym4()).order() == 24);   // S4 solvable
  CHECK(solvable_radical(alt5()).is_trivial());    // A5 simple nonabelian

  // Sol(A5 x C6) is the C6 factor; cross-check against the normal lattice.
  PermGroup g = a5_cross_c6();
  PermGroup rad = solvable_radical(g);
  CHECK(rad.order() == 6);
  ElementTable tab(g, 2000);
  ElementTable::Bits best = tab.empty_bits();
  for (const auto& n : tab.normal_subgroups())
    if (is_solvable(tab.to_group(n)) && ElementTable::popcount(n) > ElementTable::popcount(best))
      best = n;
  CHECK(tab.to_group(best).same_group_as(rad));

  // Sol(G/Sol(G)) = 1
  auto [q, phi] = quotient(g, rad);
  CHECK(solvable_radical(q).is_trivial());
}

TEST_CASE("fitting subgroup and p-cores") {
  PermGroup s4 = sym4();
  PermGroup fit = fitting_subgroup(s4);
  CHECK(fit.order() == 4);  // V4
  CHECK(p_core(s4, 2).order() == 4);
  CHECK(p_core(s4, 3).is_trivial());
  PermGroup g = a5_cross_c6();
  CHECK(fitting_subgroup(g).order() == 6);
  CHECK(p_core(g, 3).order() == 3);
}

TEST_CASE("orbit split certifies direct products") {
  PermGroup prod = direct_product({alt5(), alt5()});
  auto split = orbit_split(prod);
  REQUIRE(split.has_value());
  CHECK(split->factors.size() == 2);
  CHECK(split->factors[0].order() == 60);

  // diagonal A5 in A5 x A5: two orbits but entangled, no split
  std::vector<Permutation> diag;
  PermGroup a5 = alt5();
  for (const auto& g : a5.generators()) {
    Permutation a = g.shifted(0, 10);
    Permutation b = g.shifted(5, 10);
    diag.push_back(a * b);
  }
  PermGroup d(10, diag);
  CHECK(d.order() == 60);
  CHECK_FALSE(orbit_split(d).has_value());
}

TEST_CASE("components") {
  // components(A5 x A5): the two factors; oracle = subnormal enumeration
  PermGroup prod = direct_product({alt5(), alt5()});
  auto comps = components(prod);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].order() == 60);
  CHECK(comps[1].order() == 60);
  {
    ElementTable tab(prod, 4000);
    int oracle_count = 0;
    for (const auto& bits : tab.subnormal_subgroups()) {
      PermGroup h = tab.to_group(bits);
      if (!h.is_trivial() && is_quasisimple(h)) ++oracle_count;
    }
    CHECK(oracle_count == 2);
  }

  CHECK(components(sym4()).empty());  // solvable

  // SL(2,5) acting on 24 points: quasisimple whole group
  PermGroup sl = sl25();
  REQUIRE(sl.order() == 120);
  CHECK(is_perfect(sl));
  auto c = components(sl);
  REQUIRE(c.size() == 1);
  CHECK(c[0].order() == 120);

  // A5 x C6: one component, the A5 factor
  auto c2 = components(a5_cross_c6());
  REQUIRE(c2.size() == 1);
  CHECK(c2[0].order() == 60);
}

TEST_CASE("quasisimple and simple tests") {
  CHECK(is_quasisimple(sl25()));
  CHECK_FALSE(is_quasisimple(sym4()));  // not perfect
  CHECK(is_simple(alt5()));
  CHECK_FALSE(is_simple(sym4()));
  CHECK(is_simple(PermGroup(3, {pp("(1 2 3)", 3)})));  // C3 simple
  CHECK_FALSE(is_simple(PermGroup(4, {pp("(1 2 3 4)", 4)})));
  // A5 x A5 is not simple, not quasisimple
  PermGroup prod = direct_product({alt5(), alt5()});
  CHECK_FALSE(is_simple(prod));
  CHECK_FALSE(is_quasisimple(prod));
}

TEST_CASE("generalized fitting is self-centralizing on small groups") {
  for (const PermGroup& g : {sym4(), alt5(), a5_cross_c6(), sl25()}) {
    PermGroup fstar = generalized_fitting(g);
    PermGroup c = centralizer(g, fstar);
    CHECK(fstar.contains(c));
  }
}

TEST_CASE("composition factors") {
  bool ok = true;
  auto f1 = composition_factors(sym4(), &ok);
  CHECK(f1 == std::vector<std::string>{"C2", "C2", "C2", "C3"});
  CHECK(ok);

  auto f2 = composition_factors(alt5(), &ok);
  CHECK(f2 == std::vector<std::string>{"A5"});
  CHECK(ok);

  auto f3 = composition_factors(a5_cross_c6(), &ok);
  CHECK(f3 == std::vector<std::string>{"A5", "C2", "C3"});

  auto f4 = composition_factors(sl25(), &ok);
  CHECK(f4 == std::vector<std::string>{"A5", "C2"});

  // product of factor orders equals |G|
  PermGroup g = a5_cross_c6();
  BigOrder prod = 1;
  for (const auto& label : composition_factors(g)) {
    if (label == "A5") prod = order_mul(prod, 60);
    if (label == "C2") prod = order_mul(prod, 2);
    if (label == "C3") prod = order_mul(prod, 3);
  }
  CHECK(prod == g.order());
}

TEST_CASE("simple group identification by order and element orders") {
  CHECK(identify_simple(alt5()).label == "A5");
  // A8 vs PSL(3,4): order 20160 with an element of order 15 is A8
  std::vector<Permutation> a8_gens{pp("(1 2 3)", 8), pp("(2 3 4 5 6 7 8)", 8)};
  PermGroup a8(8, a8_gens);
  REQUIRE(a8.order() == 20160);
  SimpleId id = identify_simple(a8);
  CHECK(id.identified);
  CHECK(id.label == "A8");
}

TEST_CASE("minimal normal subgroups") {
  auto mins = minimal_normal_subgroups(sym4());
  REQUIRE(mins.size() == 1);
  CHECK(mins[0].order() == 4);  // V4

  auto mins2 = minimal_normal_subgroups(direct_product({alt5(), alt5()}));
  CHECK(mins2.size() == 2);

  // C2 x C2 has three minimal normals (both factors and the diagonal)
  PermGroup v4(4, {pp("(1 2)", 4), pp("(3 4)", 4)});
  CHECK(minimal_normal_subgroups(v4).size() == 3);
}

TEST_CASE("structure report") {
  StructureReport r = analyze(a5_cross_c6());
  CHECK(r.order == 360);
  CHECK(r.solvable_radical.order() == 6);
  CHECK(r.fitting.order() == 6);
  CHECK(r.components.size() == 1);
  CHECK(r.layer.order() == 60);
  CHECK(r.generalized_fitting.order() == 360);
  CHECK(r.is_kgroup);
}
