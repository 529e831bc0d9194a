#include <doctest.h>

#include "prym/catalog.hpp"
#include "prym/class_text.hpp"
#include "prym/errors.hpp"
#include "prym/morphisms.hpp"

using namespace prym;

namespace {
DivisorClass cls(const std::string& text, const SpaceId& s) { return parse_class(text, s); }
}  // namespace

TEST_CASE("i_star rules") {
  PullbackMap m = map_i_star(13);
  SpaceId t = branched_prym2(13);
  CHECK(m.source() == prym_curves(14));
  CHECK(m.rule(GeneratorId::delta0pp()).empty());
  CHECK(m.rule(GeneratorId::lambda()) == cls("lambda", t));
  CHECK(m.rule(GeneratorId::delta0ram()) ==
        cls("-1/2*psi + d0ram + d{1,{}:12} + d{2,{}:11} + d{3,{}:10} + d{4,{}:9} + d{5,{}:8} + d{6,{}:7}", t));
}

TEST_CASE("pi_star rules") {
  PullbackMap p = map_pi_star_g2(13);
  SpaceId t = branched_prym2(13), src = pointed_curves_mod2(13);
  CHECK(p.apply(cls("-7/3*d0", src)) == cls("-7/3*d0p - 14/3*d0ram", t));
  for (int i = 1; i <= 12; ++i) CHECK(p.rule(GeneratorId::delta(i, make_set({1}))) == 2 * DivisorClass::single(t, canonicalize(GeneratorId::unordered(i), t)));
  CHECK(p.rule(GeneratorId::delta(3, make_set({1, 2}))) == cls("dO{3} + dEta{3}", t));
  CHECK(p.rule(GeneratorId::delta(3, 0)) == cls("dO{10} + dEta{10}", t));

  PullbackMap q = map_pi_star(9);
  CHECK(q.rule(GeneratorId::lambda()) == cls("lambda", prym_curves(9)));
  CHECK(q.rule(GeneratorId::delta0()).coeff(GeneratorId::delta0p()).value() == Rational(1));
  CHECK(q.rule(GeneratorId::delta0()).coeff(GeneratorId::delta0pp()).value() == Rational(1));
  CHECK(q.rule(GeneratorId::delta0()).coeff(GeneratorId::delta0ram()).value() == Rational(2));
}

TEST_CASE("chi_star_g2 rules") {
  int g = 6;
  PullbackMap c = map_chi_star_g2(g);
  SpaceId t = branched_prym2(g);
  CHECK(c.rule(GeneratorId::lambda()) ==
        cls("1/8*psi + 2*lambda - 1/4*d0ram - 1/4*d{1,{}:5} - 1/4*d{2,{}:4} - 1/4*d{3,{}:3}", t));
  CHECK(c.rule(GeneratorId::delta0()) ==
        cls("d0ram + 2*d0p + 2*dEta{0} + 2*dEta{1} + 2*dEta{2} + 2*dEta{3} + 2*dEta{4} + 2*dEta{5}", t));
  CHECK(c.rule(GeneratorId::delta(3)) == cls("2*dO{3}", t));
  CHECK(c.rule(GeneratorId::delta(4)) == cls("2*dO{2} + d{2,{}:4}", t));
}

TEST_CASE("chi_star_pointed rules and partiality") {
  int g = 6;
  PullbackMap c = map_chi_star_pointed(g);
  SpaceId t = branched_prym2(g);
  CHECK(c.rule(GeneratorId::delta(4, make_set({1}))) == cls("d{2,{}:4}", t));
  CHECK(c.rule(GeneratorId::delta(3, make_set({1}))).empty());
  for (int i = 0; i <= 5; ++i) {
    GeneratorId d = canonicalize(GeneratorId::delta(i, make_set({1, 2})), pointed_curves_mod2(2 * g));
    if (d == canonicalize(GeneratorId::delta(2 * g - i, 0), pointed_curves_mod2(2 * g))) continue;
    CHECK(c.rule(d).empty());
  }
  try {
    c.apply(cls("psi", pointed_curves_mod2(2 * g)));
    FAIL("psi must be outside the domain");
  } catch (const PartialityError& e) {
    CHECK(e.generator() == "psi");
  }
  // χ* after the forgetful pullback is χ*_{g,2}
  PullbackMap lhs = compose(c, map_forget_g2(2 * g));
  PullbackMap rhs = map_chi_star_g2(g);
  for (const auto& gen : generators(pointed_curves(2 * g, 0))) CHECK(lhs.rule(gen) == rhs.rule(gen));
}

TEST_CASE("pi1 pi2 pi3 spot values") {
  int g = 5, i = 2, n = 3, s = 2;
  MarkingSet T = make_set({2, 3});
  PullbackMap p1 = map_pi1(g, i, n, s);
  SpaceId t1 = pointed_curves(g - i, n + 1 - s);
  CHECK(p1.rule(GeneratorId::delta(i, T)) == -DivisorClass::single(t1, GeneratorId::psi(2)));
  CHECK(p1.rule(GeneratorId::delta0p()) == DivisorClass::single(t1, GeneratorId::delta0()));
  CHECK(p1.rule(GeneratorId::delta0pp()).empty());
  CHECK(p1.rule(GeneratorId::delta0ram()).empty());
  CHECK(p1.rule(GeneratorId::psi(1)) == DivisorClass::single(t1, GeneratorId::psi(1)));
  CHECK(p1.rule(GeneratorId::psi(3)).empty());
  for (const auto& gen : generators(pointed_prym(g, n)))
    if (gen.kind == GenKind::DeltaSplit) CHECK(p1.rule(gen).empty());

  SpaceId t2 = pointed_prym(g - i, n - s + 1);
  PullbackMap p2 = map_pi2(g, i, n, s);
  CHECK(p2.rule(GeneratorId::delta0p()) == cls("d0p + d0pp", t2));
  CHECK(p2.rule(canonicalize(GeneratorId::split(i, T), pointed_prym(g, n))) == -DivisorClass::single(t2, GeneratorId::psi(2)));

  PullbackMap p3 = map_pi3(g, i, n, s);
  MarkingSet Tc = full_set(n) & ~T;
  CHECK(p3.rule(canonicalize(GeneratorId::delta(g - i, Tc), pointed_prym(g, n))) ==
        -DivisorClass::single(t2, GeneratorId::psi(2)));

  PullbackMap gl = map_glue(g, i, n, s);
  CHECK(gl.rule(GeneratorId::lambda()) == DivisorClass::single(t1, GeneratorId::lambda()));
  CHECK(gl.rule(GeneratorId::delta(i, T)) == -DivisorClass::single(t1, GeneratorId::psi(2)));
}

TEST_CASE("composition oracle: pi1 after the forgetful pullback is the gluing map") {
  int checked = 0;
  for (int g = 2; g <= 7; ++g)
    for (int n = 1; n <= 3; ++n)
      for (int i = 1; i <= g - 1; ++i)
        for (int s = 1; s <= n; ++s) {
          PullbackMap lhs = compose(map_pi1(g, i, n, s), map_pi_star_pointed(g, n));
          PullbackMap rhs = map_glue(g, i, n, s);
          for (const auto& gen : generators(pointed_curves(g, n))) {
            CHECK(lhs.rule(gen) == rhs.rule(gen));
            ++checked;
          }
        }
  CHECK(checked > 1000);
}

TEST_CASE("kappa1 consistency under chi_star_g2") {
  for (int g = 2; g <= 12; ++g) {
    SpaceId t = branched_prym2(g);
    DivisorClass lhs = map_chi_star_g2(g).apply(kappa1(pointed_curves(2 * g, 0)));
    DivisorClass rhs = 2 * kappa1(t) + Rational(3, 2) * DivisorClass::single(t, GeneratorId::psi());
    CHECK(lhs == rhs);
  }
}

TEST_CASE("compose") {
  PullbackMap m = map_i_star(16);
  PullbackMap id = compose(m, identity_map(m.source()));
  CHECK(id.rules() == m.rules());
  CHECK(compose(identity_map(m.target()), m).rules() == m.rules());
  CHECK_THROWS_AS(compose(map_i_star(16), map_pi_star_g2(13)), SpaceMismatchError);

  Catalog cat = Catalog::builtin();
  PullbackMap c = compose(map_i_star(16), map_pi_star(17));
  DivisorClass img = c.apply(cat.entry("BN_17_1_9").cls);
  SpaceId t = branched_prym2(16);
  CHECK(img.exact(GeneratorId::psi()) == Rational(3));
  CHECK(img.exact(GeneratorId::lambda()) == Rational(20));
  CHECK(img.exact(GeneratorId::delta0ram()) == Rational(-6));
  CHECK(img.exact(GeneratorId::delta0p()) == Rational(-3));
  CHECK(img.exact(GeneratorId::marked_eta(0)) == Rational(-16));
  CHECK(img.space() == t);
  CHECK(c.name() == map_from_name("i_star:16\xE2\x88\x98pi_star:17").name());
}

TEST_CASE("map names") {
  CHECK(map_from_name("i_star:16.pi_star:17").rules() == compose(map_i_star(16), map_pi_star(17)).rules());
  CHECK(map_from_name("pi1:5,2,3,2").rules() == map_pi1(5, 2, 3, 2).rules());
  CHECK_THROWS_AS(map_from_name("nope:3"), ParseError);
  CHECK_THROWS_AS(map_from_name("pi1:5,2"), ParseError);
  CHECK_THROWS_AS(map_from_name("i_star"), ParseError);
  CHECK_THROWS_AS(map_from_name("pi1:5,9,3,2"), ParameterError);
}

TEST_CASE("canonical classes") {
  DivisorClass k13 = canonical_class(branched_prym2(13));
  CHECK(k13.exact(GeneratorId::delta0p()) == Rational(-2));
  CHECK(k13.exact(GeneratorId::delta0ram()) == Rational(-3));
  CHECK(k13.exact(GeneratorId::psi()) == Rational(1));
  CHECK(k13.exact(GeneratorId::lambda()) == Rational(13));
  for (int g = 3; g <= 9; ++g) {
    SpaceId t = branched_prym2(g);
    CHECK(canonical_class(t).exact(canonicalize(GeneratorId::unordered(1), t)) == Rational(-4));
    CHECK(canonical_class(t).exact(GeneratorId::marked_o(0)) == Rational(-3));
    CHECK(canonical_class(pointed_curves_mod2(g)).exact(GeneratorId::lambda()) == Rational(13));
  }
  CHECK_THROWS_AS(canonical_class(prym_curves(5)), UnsupportedSpaceError);
}
