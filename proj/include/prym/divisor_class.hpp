#pragma once

#include <map>
#include <utility>
#include <vector>

#include "prym/coeff_bound.hpp"
#include "prym/space.hpp"

namespace prym {

// Sparse rational divisor class. Keys are canonical, valid generators of
// space(); exact zeros are never stored.
class DivisorClass {
 public:
  using Map = std::map<GeneratorId, CoeffBound>;

  explicit DivisorClass(SpaceId space) : space_(space) {}
  static DivisorClass zero(const SpaceId& space) { return DivisorClass(space); }
  static DivisorClass single(const SpaceId& space, const GeneratorId& gen, const Rational& c = Rational(1));

  const SpaceId& space() const { return space_; }
  const Map& terms() const { return coeffs_; }
  bool empty() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }

  // Coefficient on gen (canonicalized first); exact zero when absent.
  CoeffBound coeff(const GeneratorId& gen) const;
  // Exact value on gen; throws UnknownCoefficientError otherwise.
  Rational exact(const GeneratorId& gen) const { return coeff(gen).value(); }
  bool is_exact() const;

  // Adds c to the coefficient of gen, canonicalizing gen and dropping exact zeros.
  DivisorClass& add(const GeneratorId& gen, const CoeffBound& c);
  DivisorClass& add(const GeneratorId& gen, const Rational& c) { return add(gen, CoeffBound::exact(c)); }
  // Overwrites the coefficient of gen.
  DivisorClass& set(const GeneratorId& gen, const CoeffBound& c);

  DivisorClass& operator+=(const DivisorClass& o);
  DivisorClass& operator-=(const DivisorClass& o);
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(const Rational& k, const DivisorClass& c) { return c.scaled(k); }
  DivisorClass scaled(const Rational& k) const;
  DivisorClass operator-() const { return scaled(Rational(-1)); }

  // The part on non-boundary generators (λ, ψ).
  DivisorClass interior_part() const;

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

 private:
  SpaceId space_;
  Map coeffs_;
};

// Σ c_i D_i. All classes must share a space; `space` is used when terms is empty.
DivisorClass linear_combine(const std::vector<std::pair<Rational, DivisorClass>>& terms, const SpaceId& space);
DivisorClass linear_combine(const std::vector<std::pair<Rational, DivisorClass>>& terms);

// Sum of every boundary generator of the inventory, each once.
DivisorClass total_boundary(const SpaceId& space);

// κ1 = 12λ - δ on PointedCurves(g,0); 12λ - π*δ on BranchedPrym2(g), where
// π*δ counts δ0ram and each δ_{i:g-i} twice.
DivisorClass kappa1(const SpaceId& space);

}  // namespace prym
