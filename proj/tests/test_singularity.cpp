#include <doctest.h>

#include <fstream>

#include "prym/errors.hpp"
#include "prym/singularity.hpp"

using namespace prym;

namespace {

Json load(const std::string& name) {
  std::ifstream in(std::string(PRYM_DATA_DIR) + "/sketches/" + name + ".json");
  REQUIRE(in.good());
  return Json::parse(in);
}

ComponentDatum D(ComponentKind k, int ord, JSpecial j = JSpecial::None) { return {k, ord, j}; }

}  // namespace

TEST_CASE("age table") {
  const auto& t = age_table();
  CHECK(t.size() == 17);
  CHECK(t.front().datum.kind == ComponentKind::Identity);
  using K = ComponentKind;
  using J = JSpecial;
  CHECK(age_lower_bound(D(K::Identity, 1)) == Rational(0));
  CHECK(age_lower_bound(D(K::EllipticTail, 2)) == Rational(0));
  CHECK(age_lower_bound(D(K::EllipticTail, 4, J::J1728)) == Rational(1, 2));
  CHECK(age_lower_bound(D(K::EllipticTail, 3, J::J0)) == Rational(1, 3));
  CHECK(age_lower_bound(D(K::EllipticTail, 6, J::J0)) == Rational(1, 3));
  CHECK(age_lower_bound(D(K::EllipticLadder, 2)) == Rational(1, 2));
  CHECK(age_lower_bound(D(K::EllipticLadder, 4, J::J1728)) == Rational(3, 4));
  CHECK(age_lower_bound(D(K::EllipticLadder, 3, J::J0)) == Rational(2, 3));
  CHECK(age_lower_bound(D(K::HyperellipticTail, 2)) == Rational(1, 2));
  CHECK(age_lower_bound(D(K::RationalTail, 2)) == Rational(0));
  CHECK(age_lower_bound(D(K::RationalLadder, 2)) == Rational(1, 2));
  CHECK(age_lower_bound(D(K::PointedEllipticTail1, 2)) == Rational(1, 2));
  CHECK(age_lower_bound(D(K::PointedEllipticTail1, 4, J::J1728)) == Rational(3, 4));
  CHECK(age_lower_bound(D(K::PointedEllipticTail1, 3, J::J0)) == Rational(2, 3));
  CHECK(age_lower_bound(D(K::PointedEllipticTail1, 6, J::J0)) == Rational(2, 3));
  CHECK(age_lower_bound(D(K::PointedEllipticTail2, 2)) == Rational(1, 2));
  CHECK(age_lower_bound(D(K::PointedEllipticTail2, 6, J::J0)) == Rational(5, 6));
  // order-2 rows hold for any j
  CHECK(age_lower_bound(D(K::EllipticLadder, 2, J::J0)) == Rational(1, 2));
  CHECK_THROWS_AS(age_lower_bound(D(K::EllipticLadder, 4)), ParameterError);
  CHECK_THROWS_AS(age_lower_bound(D(K::EllipticLadder, 6, J::J0)), ParameterError);
  CHECK_THROWS_AS(age_lower_bound(D(K::EllipticTail, 3, J::J1728)), ParameterError);
  for (const auto& row : t) {
    CHECK(age_lower_bound(row.datum) == row.w);
    CHECK(datum_from_json(datum_to_json(row.datum)) == row.datum);
  }
}

TEST_CASE("star admissibility") {
  using K = ComponentKind;
  StarReport a = star_admissible({D(K::EllipticTail, 3, JSpecial::J0)});
  CHECK(a.excluded.empty());
  CHECK(a.total == Rational(1, 3));
  CHECK_FALSE(a.all_zero);
  StarReport b = star_admissible({D(K::EllipticLadder, 2)});
  CHECK(b.excluded == std::vector<std::size_t>{0});
  StarReport c = star_admissible({});
  CHECK(c.all_zero);
  CHECK(c.total.is_zero());
}

TEST_CASE("noncanonical verdicts on the sketch corpus") {
  struct Case {
    const char* file;
    bool noncanonical;
    int genus;
  };
  for (const Case& c : {Case{"tail_j0_eta_trivial", true, 4}, Case{"tail_j0_eta_nontrivial", false, 4},
                        Case{"no_tail", false, 4}, Case{"mixed_1728_rational_tail", false, 4},
                        Case{"mixed_two_tails", true, 4}, Case{"mixed_ladder_exceptional", false, 5}}) {
    INFO(c.file);
    CurveSketch s = sketch_from_json(load(c.file));
    CHECK_NOTHROW(s.validate());
    CHECK(is_noncanonical(s) == c.noncanonical);
    CHECK(s.arithmetic_genus() == c.genus);
  }
  CurveSketch m = sketch_from_json(load("mixed_1728_rational_tail"));
  CHECK(m.elliptic_tails() == std::vector<std::string>{"T"});
  CHECK(m.rational_tails() == std::vector<std::string>{"R"});
  CurveSketch l = sketch_from_json(load("mixed_ladder_exceptional"));
  CHECK(l.elliptic_tails().empty());
  CHECK(l.is_disconnecting_exceptional("E"));
}

TEST_CASE("smooth point classification") {
  CurveSketch s = sketch_from_json(load("mixed_ladder_exceptional"));
  using A = AutKind;
  AutGenerator gamma{A::GammaE, "E", std::nullopt};
  AutGenerator hyp{A::Other, "", ComponentDatum{ComponentKind::HyperellipticTail, 2, JSpecial::None}};
  AutGenerator rt{A::RationalTailInvolution, "", std::nullopt};
  AutGenerator et{A::EllipticTailInvolution, "", std::nullopt};
  AutGenerator et3{A::Other, "", ComponentDatum{ComponentKind::EllipticTail, 3, JSpecial::J0}};
  CHECK(is_smooth_point({gamma}, s));
  CHECK_FALSE(is_smooth_point({hyp}, s));
  CHECK(is_smooth_point({}, s));
  CHECK(is_smooth_point({rt, et}, s));
  CHECK_FALSE(is_smooth_point({gamma, et3}, s));
  CHECK_THROWS_AS(is_smooth_point({AutGenerator{A::GammaE, "A", std::nullopt}}, s), ValidityError);
  CHECK_THROWS_AS(is_smooth_point({AutGenerator{A::GammaE, "Q", std::nullopt}}, s), ValidityError);
}

TEST_CASE("sketch validation") {
  CHECK_THROWS_AS(sketch_from_json(Json::parse(R"({"components": [{"id": "C", "genus": 4, "markedPoints": ["x"]}],
                                                   "nodes": []})")).validate(),
                  ValidityError);
  CHECK_THROWS_AS(sketch_from_json(Json::parse(R"({"components": [{"id": "C", "genus": 4, "markedPoints": ["x", "y"]},
                                                                  {"id": "D", "genus": 1}], "nodes": []})")).validate(),
                  ValidityError);
  CHECK_THROWS_AS(sketch_from_json(Json::parse(R"({"components": [{"id": "C", "genus": 4, "markedPoints": ["x", "y"]}],
                                                   "nodes": [["C", "Z"]]})")).validate(),
                  ValidityError);
}

TEST_CASE("audit report") {
  Json r = audit_report(load("tail_j0_eta_trivial"));
  CHECK(r["nonCanonical"] == true);
  CHECK(r["arithmeticGenus"] == 4);
  CHECK(r["smooth"] == false);
  Json e = audit_report(load("mixed_ladder_exceptional"));
  CHECK(e["smooth"] == true);
  CHECK(e["nonCanonical"] == false);
}
