#include <doctest.h>

#include "prym/catalog.hpp"
#include "prym/class_text.hpp"
#include "prym/errors.hpp"
#include "prym/morphisms.hpp"
#include "prym/published.hpp"

using namespace prym;

TEST_CASE("Brill-Noether number and classes") {
  CHECK(brill_noether_number(13, 1, 7) == -1);
  CHECK(brill_noether_number(26, 2, 19) == -1);
  CHECK(brill_noether_number(9, 1, 6) == 1);

  DivisorClass b13 = bn_class(13, 1, 7);
  CHECK(b13.exact(GeneratorId::lambda()) == Rational(48));
  CHECK(b13.exact(GeneratorId::delta0()) == Rational(-7));
  CHECK(b13.exact(GeneratorId::delta(1)) == Rational(-36));
  CHECK(b13.exact(GeneratorId::delta(6)) == Rational(-3 * 42));

  DivisorClass b17 = bn_class(17, 1, 9);
  CHECK(b17.exact(GeneratorId::lambda()) == Rational(20));
  CHECK(b17.exact(GeneratorId::delta0()) == Rational(-3));
  CHECK(b17.exact(GeneratorId::delta(1)) == Rational(-16));

  // primitive: 232λ - 36δ0 - 200δ1 is four times this
  DivisorClass b26 = bn_class(26, 2, 19);
  CHECK(b26.exact(GeneratorId::lambda()) == Rational(58));
  CHECK(b26.exact(GeneratorId::delta0()) == Rational(-9));
  CHECK(b26.exact(GeneratorId::delta(1)) == Rational(-50));

  CHECK_THROWS_AS(bn_class(9, 1, 6), NotADivisorError);
  CHECK(brill_noether_number(2, 2, 3) == -1);
  CHECK_THROWS_AS(bn_class(2, 2, 3), NotADivisorError);
}

TEST_CASE("builtin entries") {
  Catalog cat = Catalog::builtin();
  CatalogEntry b26 = cat.entry("BN_26_2_19");
  CHECK(b26.cls.exact(GeneratorId::lambda()) == Rational(232));
  CHECK(b26.cls.exact(GeneratorId::delta0()) == Rational(-36));
  CHECK(b26.cls.exact(GeneratorId::delta(1)) == Rational(-200));
  CHECK(b26.scale == Rational(4));
  CHECK(b26.unknowns().empty());

  CatalogEntry z = cat.entry("Z_16_1");
  CHECK(z.cls.exact(GeneratorId::lambda()) == Rational(407));
  CHECK(z.cls.exact(GeneratorId::delta0()) == Rational(-61));
  CHECK(z.cls.coeff(GeneratorId::delta(1)).from_unknown());
  CHECK(z.unknowns().size() == 8);

  CatalogEntry u = cat.entry("U_14_4");
  CHECK(u.cls.exact(GeneratorId::lambda()) == Rational(180));
  CHECK(u.cls.exact(GeneratorId::delta0ram()) == Rational(-42));
  CHECK(u.cls.exact(GeneratorId::delta0p()) == Rational(-28));
  CHECK(u.cls.coeff(GeneratorId::split(1)).at_least_value() == Rational(100));
  CHECK_FALSE(u.cls.coeff(GeneratorId::split(1)).from_unknown());

  CHECK(cat.entry("GP_5_18_20").cls.exact(GeneratorId::delta(1)) == Rational(-408));

  // unregistered BN names resolve to the primitive class
  CHECK(Catalog().entry("BN_13_1_7").cls == bn_class(13, 1, 7));
  CHECK_THROWS_AS(cat.entry("BN_9_1_6"), CatalogError);
  CHECK_THROWS_AS(cat.entry("nothing"), CatalogError);
}

TEST_CASE("printed pullback vectors are reproduced") {
  Catalog cat = Catalog::builtin();
  CHECK(printed_pullbacks().size() == 8);
  for (const auto& pv : printed_pullbacks()) {
    Term t = term_from_spec(cat, pv.term);
    for (const auto& [name, want] : pv.coeffs) {
      INFO(pv.term << " on " << name);
      CHECK(t.cls.coeff(parse_generator(name, t.cls.space())) == want);
    }
  }
  Term t = term_from_spec(cat, "BN_26_2_19@chi_star_g2:13");
  SpaceId s = branched_prym2(13);
  CHECK(t.cls.exact(GeneratorId::psi()) == Rational(29));
  CHECK(t.cls.exact(GeneratorId::lambda()) == Rational(464));
  CHECK(t.cls.exact(GeneratorId::delta0ram()) == Rational(-94));
  CHECK(t.cls.exact(GeneratorId::delta0p()) == Rational(-72));
  CHECK(t.cls.exact(GeneratorId::marked_eta(0)) == Rational(-72));
  CHECK(t.cls.space() == s);
  CHECK_THROWS_AS(term_from_spec(cat, "BN_26_2_19"), ParseError);
}

TEST_CASE("catalog JSON") {
  Catalog cat;
  auto names = cat.load_json(Json::parse(R"({
    "name": "U_test", "space": {"family": "PrymCurves", "g": 14},
    "coeffs": {"lambda": "93", "d0p": "-14", "d{1,{}:13}": {"atLeast": "100"}, "d0ram": "unknown"},
    "provenance": "test"})"));
  CHECK(names == std::vector<std::string>{"U_test"});
  CatalogEntry e = cat.entry("U_test");
  CHECK(e.cls.coeff(GeneratorId::split(1)).at_least_value() == Rational(100));
  CHECK(e.cls.coeff(GeneratorId::delta0ram()) == CoeffBound::unknown_nonpositive());
  CHECK(e.cls.coeff(GeneratorId::delta0pp()).from_unknown());  // not complete
  CHECK(entry_from_json(entry_to_json(e)).cls == e.cls);

  try {
    cat.load_json(Json::parse(R"({"name": "bad", "space": {"family": "PointedCurves", "g": 5, "n": 0},
                                  "coeffs": {"lambda": "1", "d0ram": "-1"}})"));
    FAIL("expected rejection");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("d0ram") != std::string::npos);
  }
  // not primitive
  CHECK_THROWS_AS(cat.load_json(Json::parse(R"({"name": "np", "space": {"family": "PointedCurves", "g": 5, "n": 0},
                                                "coeffs": {"lambda": "16", "d0": "-2"}, "complete": true})")),
                  CatalogError);
  CHECK_NOTHROW(cat.load_json(Json::parse(R"({"name": "sc", "space": {"family": "PointedCurves", "g": 5, "n": 0},
                                              "coeffs": {"lambda": "16", "d0": "-2"}, "complete": true, "scale": "2"})")));
  CHECK_THROWS_AS(cat.load_json(Json::parse(R"({"space": {"family": "PointedCurves", "g": 5, "n": 0}})")), CatalogError);

  Catalog f;
  auto loaded = f.load_file(std::string(PRYM_DATA_DIR) + "/example_catalog.json");
  CHECK(loaded.size() == 2);
  CHECK(f.entry("BN_9_1_5").cls == bn_class(9, 1, 5));
  CHECK(f.entry("U_14_4_primitive").cls.coeff(GeneratorId::split(1)).at_least_value() == Rational(50));
  CHECK_THROWS_AS(f.load_file("/nonexistent.json"), CatalogError);
}
