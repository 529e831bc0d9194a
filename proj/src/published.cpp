#include "prym/published.hpp"

#include "prym/errors.hpp"
#include "prym/morphisms.hpp"

namespace prym {

using G = GeneratorId;

Term term_from_spec(const Catalog& cat, const std::string& spec, const Rational& coeff) {
  std::size_t at = spec.find('@');
  if (at == std::string::npos) throw ParseError("term '" + spec + "' must look like ENTRY@MAP", 0);
  CatalogEntry e = cat.entry(spec.substr(0, at));
  PullbackMap m = map_from_name(spec.substr(at + 1));
  if (m.source() != e.space())
    throw SpaceMismatchError("entry " + e.name + " lives on " + to_string(e.space()) + " but map " + m.name() +
                             " starts from " + to_string(m.source()));
  return Term{e.name + "@" + m.name(), m.apply(e.cls), coeff};
}

std::vector<std::string> scenario_terms(int g) {
  const std::string ring = "\xE2\x88\x98";
  switch (g) {
    case 13:
      return {"BN_26_2_19@chi_star_g2:13", "BN_13_1_7@pi_star_g2:13" + ring + "forget_g2:13", "U_14_4@i_star:13"};
    case 16:
      return {"BN_32_2_23@chi_star_g2:16", "Z_16_1@pi_star_g2:16" + ring + "forget_g2:16",
              "BN_17_1_9@i_star:16" + ring + "pi_star:17"};
    case 17:
      return {"BN_34_4_31@chi_star_g2:17", "BN_17_1_9@pi_star_g2:17" + ring + "forget_g2:17",
              "GP_5_18_20@i_star:17" + ring + "pi_star:18"};
  }
  return {};
}

bool has_scenario(int g) { return !scenario_terms(g).empty(); }

const std::vector<PrintedVector>& printed_pullbacks() {
  auto ex = [](long v) { return CoeffBound::exact(Rational(v)); };
  const std::vector<std::string> t13 = scenario_terms(13), t16 = scenario_terms(16), t17 = scenario_terms(17);
  static const std::vector<PrintedVector> rows = {
      {t13[0], {{"psi", ex(29)}, {"lambda", ex(464)}, {"d0ram", ex(-94)}, {"d0p", ex(-72)}, {"dEta{0}", ex(-72)}}},
      {t13[1], {{"lambda", ex(48)}, {"d0ram", ex(-14)}, {"d0p", ex(-7)}}},
      {t16[2],
       {{"psi", ex(3)}, {"lambda", ex(20)}, {"d0ram", ex(-6)}, {"d0p", ex(-3)}, {"dEta{0}", ex(-16)}}},
      {t17[2],
       {{"psi", ex(77)}, {"lambda", ex(516)}, {"d0ram", ex(-154)}, {"d0p", ex(-77)}, {"dEta{0}", ex(-408)}}},
      {t16[1], {{"lambda", ex(407)}, {"d0ram", ex(-122)}, {"d0p", ex(-61)}}},
      {t13[2],
       {{"psi", ex(21)},
        {"lambda", ex(180)},
        {"d0ram", ex(-42)},
        {"d0p", ex(-28)},
        {"dEta{0}", CoeffBound::at_least(Rational(100))}}},
      {t16[0],
       {{"psi", ex(35)}, {"lambda", ex(560)}, {"d0ram", ex(-114)}, {"d0p", ex(-88)}, {"dEta{0}", ex(-88)}}},
      {t17[0],
       {{"psi", ex(111)}, {"lambda", ex(1776)}, {"d0ram", ex(-362)}, {"d0p", ex(-280)}, {"dEta{0}", ex(-280)}}},
  };
  return rows;
}

std::vector<Rational> published_g13_coefficients() { return {Rational(1, 92), Rational(1, 23), Rational(3, 92)}; }

Affine combination_weight(const std::vector<Term>& terms, const std::vector<Affine>& coeffs, const GeneratorId& gen) {
  if (terms.size() != coeffs.size()) throw ParameterError("one coefficient per term expected");
  Affine w;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (coeffs[k].a.is_zero() && coeffs[k].b.is_zero()) continue;
    CoeffBound d = terms[k].cls.coeff(gen);
    if (!d.hi()) throw UnknownCoefficientError("term " + terms[k].label + " has no upper bound on the generator");
    w.a -= coeffs[k].a * *d.hi();
    w.b -= coeffs[k].b * *d.hi();
  }
  return w;
}

std::vector<PublishedCheck> published_comparison(int g, const std::vector<Term>& terms,
                                                 const std::vector<Affine>& coeffs) {
  std::vector<std::string> want = scenario_terms(g);
  if (want.empty() || terms.size() != want.size()) return {};
  for (std::size_t k = 0; k < want.size(); ++k)
    if (terms[k].label != want[k]) return {};

  std::vector<PublishedCheck> out;
  auto pair_checks = [&](const std::string& label, const Affine& computed, const Rational& a, const Rational& b) {
    out.push_back({label + " (constant)", a, computed.a});
    out.push_back({label + " (eps)", b, computed.b});
  };

  if (g == 13) {
    std::vector<Rational> pub = published_g13_coefficients();
    for (std::size_t k = 0; k < 3; ++k)
      out.push_back({"coefficient of " + terms[k].label, pub[k], coeffs[k].a});
    // printed bounds: 72/92 + 3·100/92 on dEta{0}, 2·200/92 on dO{0}
    out.push_back({"weight on dEta{0}", Rational(72, 92) + Rational(300, 92),
                   combination_weight(terms, coeffs, G::marked_eta(0)).a});
    out.push_back({"weight on dO{0}", Rational(400, 92), combination_weight(terms, coeffs, G::marked_o(0)).a});
  } else if (g == 16) {
    pair_checks("coefficient of " + terms[0].label, coeffs[0], Rational(62, 4933), Rational(1, 4993));
    pair_checks("coefficient of " + terms[1].label, coeffs[1], Rational(27, 4993), Rational(80, 4993));
    pair_checks("coefficient of " + terms[2].label, coeffs[2], Rational(921, 4933), Rational(-1656, 4933));
    pair_checks("weight on d0ram", combination_weight(terms, coeffs, G::delta0ram()), Rational(15888, 4933),
                Rational(-62, 4933));
    pair_checks("weight on dEta{0}", combination_weight(terms, coeffs, G::marked_eta(0)), Rational(20192, 4933),
                Rational(-26408, 4933));
  } else if (g == 17) {
    pair_checks("coefficient of " + terms[0].label, coeffs[0], Rational(85, 21832), Rational(-1, 2729));
    pair_checks("coefficient of " + terms[1].label, coeffs[1], Rational(2489, 21832), Rational(966, 2729));
    pair_checks("coefficient of " + terms[2].label, coeffs[2], Rational(161, 21832), Rational(-34, 2729));
    pair_checks("weight on d0ram", combination_weight(terms, coeffs, G::delta0ram()), Rational(70498, 21832),
                Rational(198, 2729));
  }
  return out;
}

}  // namespace prym
