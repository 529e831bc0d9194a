#include <doctest.h>

#include <algorithm>

#include "prym/catalog.hpp"
#include "prym/certificates.hpp"
#include "prym/class_text.hpp"
#include "prym/errors.hpp"
#include "prym/morphisms.hpp"
#include "prym/published.hpp"

using namespace prym;

namespace {

const std::vector<GeneratorId> kPinned = {GeneratorId::psi(), GeneratorId::lambda(), GeneratorId::delta0p()};

std::vector<Term> scenario(int g, const std::vector<Rational>& coeffs = {}) {
  Catalog cat = Catalog::builtin();
  std::vector<Term> out;
  auto specs = scenario_terms(g);
  for (std::size_t k = 0; k < specs.size(); ++k)
    out.push_back(term_from_spec(cat, specs[k], k < coeffs.size() ? coeffs[k] : Rational(0)));
  return out;
}

const SignEntry* ledger_line(const Certificate& c, const GeneratorId& g) {
  auto it = std::find_if(c.ledger.begin(), c.ledger.end(), [&](const SignEntry& e) { return e.gen == g; });
  return it == c.ledger.end() ? nullptr : &*it;
}

}  // namespace

TEST_CASE("g=13 combination is an effective witness") {
  SpaceId s = branched_prym2(13);
  DivisorClass k = canonical_class(s);
  auto terms = scenario(13, published_g13_coefficients());
  CHECK(published_g13_coefficients() == std::vector<Rational>{Rational(1, 92), Rational(1, 23), Rational(3, 92)});
  Certificate c = verify_combination(k, terms, Rational(0));
  CHECK(c.verdict == Verdict::EffectiveWitness);
  CHECK(c.failing.empty());

  DivisorClass comb(s);
  for (const auto& t : terms) comb += t.cls.scaled(t.coeff);
  for (auto g : {GeneratorId::psi(), GeneratorId::lambda(), GeneratorId::delta0p(), GeneratorId::delta0ram()})
    CHECK(comb.coeff(g) == k.coeff(g));
  CHECK(comb.exact(GeneratorId::psi()) == Rational(1));
  CHECK(comb.exact(GeneratorId::lambda()) == Rational(13));
  CHECK(comb.exact(GeneratorId::delta0p()) == Rational(-2));
  CHECK(comb.exact(GeneratorId::delta0ram()) == Rational(-3));

  // dEta{0}: 72/92 + 3·100/92 removed against 3 needed
  CHECK(comb.coeff(GeneratorId::marked_eta(0)).hi() == Rational(-372, 92));
  // dO{0} comes from d13 of BN_26_2_19: 2·1352/92
  CHECK(comb.coeff(GeneratorId::marked_o(0)).hi() == Rational(-2704, 92));
  const SignEntry* eta = ledger_line(c, GeneratorId::marked_eta(0));
  REQUIRE(eta != nullptr);
  CHECK(eta->ok);
  CHECK(eta->residual.lo() == Rational(372, 92) - Rational(3));
  const SignEntry* o = ledger_line(c, GeneratorId::marked_o(0));
  REQUIRE(o != nullptr);
  CHECK(o->ok);
  for (const auto& e : c.ledger) CHECK(e.ok);
}

TEST_CASE("g=13 solver reproduces the coefficients but leaves no room for psi") {
  SpaceId s = branched_prym2(13);
  Certificate c = bigness_certificate(canonical_class(s), scenario(13), kPinned);
  CHECK(c.verdict == Verdict::EffectiveWitness);
  CHECK(c.epsilon == Rational(0));
  REQUIRE(c.solution.size() == 3);
  CHECK(c.solution[0].at(Rational(0)) == Rational(1, 92));
  CHECK(c.solution[1].at(Rational(0)) == Rational(1, 23));
  CHECK(c.solution[2].at(Rational(0)) == Rational(3, 92));
  CHECK(c.solution[2].b.sign() < 0);
}

TEST_CASE("trivial and failing combinations") {
  SpaceId s = branched_prym2(13);
  Certificate z = verify_combination(DivisorClass(s), {}, Rational(0));
  CHECK(z.verdict == Verdict::EffectiveWitness);
  CHECK(z.residual.empty());

  Certificate c = verify_combination(canonical_class(s), scenario(13, {Rational(1, 92), Rational(1, 23), Rational(0)}),
                                     Rational(0));
  CHECK((c.verdict == Verdict::Inconclusive || c.verdict == Verdict::Infeasible));
  CHECK(std::find(c.failing.begin(), c.failing.end(), GeneratorId::psi()) != c.failing.end());
  CHECK(c.residual.exact(GeneratorId::psi()) == Rational(1) - Rational(29, 92));

  CHECK_THROWS_AS(verify_combination(canonical_class(s), scenario(13, {Rational(-1), Rational(0), Rational(0)}),
                                     Rational(0)),
                  ParameterError);
  CHECK_THROWS_AS(verify_combination(canonical_class(s), {}, Rational(-1)), ParameterError);
}

TEST_CASE("g=16 bigness") {
  SpaceId s = branched_prym2(16);
  auto terms = scenario(16);
  std::vector<DivisorClass> cls;
  for (const auto& t : terms) cls.push_back(t.cls);
  SolveResult sol = solve_coefficients(canonical_class(s), cls, kPinned);
  REQUIRE(sol.feasible);
  CHECK(sol.coeffs[0] == Affine{Rational(62, 4933), Rational(1, 4933)});
  CHECK(sol.coeffs[1] == Affine{Rational(27, 4933), Rational(80, 4933)});
  CHECK(sol.coeffs[2] == Affine{Rational(921, 4933), Rational(-1656, 4933)});

  Certificate c = bigness_certificate(canonical_class(s), terms, kPinned);
  CHECK(c.verdict == Verdict::BigWitness);
  REQUIRE(c.epsilon_max.has_value());
  CHECK(*c.epsilon_max == Rational(5393, 26408));
  CHECK(c.epsilon == Rational(5393, 52816));
  CHECK(c.residual.coeff(GeneratorId::delta0ram()) ==
        CoeffBound::exact(Rational(15888, 4933) - Rational(62, 4933) * c.epsilon) + CoeffBound::exact(Rational(-3)));

  auto cmp = published_comparison(16, c.terms, c.solution);
  CHECK_FALSE(cmp.empty());
  bool any_mismatch = false, any_match = false;
  for (const auto& p : cmp) (p.match() ? any_match : any_mismatch) = true;
  CHECK(any_match);
  CHECK(any_mismatch);

  // two of the three classes cannot meet three pinned equations
  Certificate two = bigness_certificate(canonical_class(s), {terms[0], terms[1]}, kPinned);
  CHECK(two.verdict == Verdict::Infeasible);
}

TEST_CASE("g=17 bigness") {
  SpaceId s = branched_prym2(17);
  Certificate c = bigness_certificate(canonical_class(s), scenario(17), kPinned);
  CHECK(c.verdict == Verdict::BigWitness);
  REQUIRE(c.epsilon_max.has_value());
  CHECK(*c.epsilon_max == Rational(2999, 14152));
  CHECK(c.epsilon > Rational(0));
  for (const auto& p : published_comparison(17, c.terms, c.solution)) {
    INFO(p.label);
    CHECK(p.match());
  }
  // explicit epsilon above the bound breaks a sign
  Certificate over = bigness_certificate(canonical_class(s), scenario(17), kPinned, Rational(1, 2));
  CHECK(over.verdict != Verdict::BigWitness);
}

TEST_CASE("contradictory pinned system") {
  SpaceId s = branched_prym2(5);
  DivisorClass target = parse_class("lambda + d0p", s);
  std::vector<DivisorClass> cls = {parse_class("lambda + psi", s)};
  SolveResult r = solve_coefficients(target, cls, {GeneratorId::lambda(), GeneratorId::delta0p()});
  CHECK_FALSE(r.feasible);
  REQUIRE(r.certificate_row.size() == 2);
  // y·M = 0 and y·rhs != 0
  Rational yM = r.certificate_row[0] * Rational(1) + r.certificate_row[1] * Rational(0);
  Rational yb = r.certificate_row[0] * Rational(1) + r.certificate_row[1] * Rational(1);
  CHECK(yM.is_zero());
  CHECK_FALSE(yb.is_zero());

  CHECK_THROWS_AS(solve_coefficients(target, {parse_class("lambda", s), parse_class("2*lambda", s)},
                                     {GeneratorId::lambda()}),
                  ParameterError);
  DivisorClass vague = parse_class("[?]*lambda", s);
  CHECK_THROWS_AS(solve_coefficients(target, {vague}, {GeneratorId::lambda()}), UnknownCoefficientError);
}

TEST_CASE("tightening a bound never breaks a certificate") {
  SpaceId s = branched_prym2(13);
  auto terms = scenario(13, published_g13_coefficients());
  terms[2].cls.set(GeneratorId::marked_eta(0), CoeffBound::at_least(Rational(200)));
  CHECK(verify_combination(canonical_class(s), terms, Rational(0)).verdict == Verdict::EffectiveWitness);
  // loosening it to nothing leaves dEta{0} uncertified
  terms[2].cls.set(GeneratorId::marked_eta(0), CoeffBound::unknown_nonpositive());
  Certificate c = verify_combination(canonical_class(s), terms, Rational(0));
  CHECK(c.verdict == Verdict::Inconclusive);
  CHECK(std::find(c.failing.begin(), c.failing.end(), GeneratorId::marked_eta(0)) != c.failing.end());
}
