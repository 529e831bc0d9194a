#pragma once

#include <map>
#include <string>

#include "prym/divisor_class.hpp"

namespace prym {

enum class CurveFamily { A1i, Aeta };

// A one-parameter family of Prym curves given by its intersection numbers
// with the generators of its space (unlisted generators: 0).
struct TestCurve {
  CurveFamily family;
  int i;
  SpaceId space;
  std::map<GeneratorId, Rational> numbers;

  std::string name() const;
  Rational number(const GeneratorId& g) const;
};

// A1i: i >= 2, on PrymCurves(i+1). Aeta: i >= 2, on BranchedPrym2(i).
TestCurve test_curve(CurveFamily f, int i);
// "A1i:5", "Aeta:7"
TestCurve parse_test_curve(const std::string& spec);

// Σ coeff · number; an interval when a coefficient meeting the curve is not exact.
CoeffBound intersect(const TestCurve& c, const DivisorClass& cls);

// c0 + c1·s
struct LinearInS {
  Rational c0, c1;
  Rational at(const Rational& s) const { return c0 + c1 * s; }
  friend bool operator==(const LinearInS&, const LinearInS&) = default;
};

// s - 10; negative when a slope-s divisor must contain the Prym locus.
Rational slope_locus_margin(const Rational& s);
LinearInS slope_margin_poly();
// 2s - 4(2 + 1 + s/4) + 2, the expression obtained from the test curve.
LinearInS test_curve_margin_poly();

// Intersection of the curve with the pullback of sλ - δ: through
// chi_star:(i+1) for A1i (δ = δ0 there) and chi_star_g2:i for Aeta.
LinearInS pulled_slope_intersection(const TestCurve& c);

// 6 + 12/(g+1)
Rational bn_slope(int g);

}  // namespace prym
