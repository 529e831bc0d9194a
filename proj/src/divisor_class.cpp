#include "prym/divisor_class.hpp"

#include "prym/errors.hpp"

namespace prym {

DivisorClass DivisorClass::single(const SpaceId& space, const GeneratorId& gen, const Rational& c) {
  DivisorClass d(space);
  d.add(gen, c);
  return d;
}

CoeffBound DivisorClass::coeff(const GeneratorId& gen) const {
  auto it = coeffs_.find(canonicalize(gen, space_));
  return it == coeffs_.end() ? CoeffBound::exact(Rational(0)) : it->second;
}

bool DivisorClass::is_exact() const {
  for (const auto& [g, c] : coeffs_)
    if (!c.is_exact()) return false;
  return true;
}

DivisorClass& DivisorClass::add(const GeneratorId& gen, const CoeffBound& c) {
  GeneratorId key = canonicalize(gen, space_);
  auto it = coeffs_.find(key);
  if (it == coeffs_.end()) {
    if (!c.is_zero()) coeffs_.emplace(key, c);
    return *this;
  }
  it->second += c;
  if (it->second.is_zero()) coeffs_.erase(it);
  return *this;
}

DivisorClass& DivisorClass::set(const GeneratorId& gen, const CoeffBound& c) {
  GeneratorId key = canonicalize(gen, space_);
  if (c.is_zero())
    coeffs_.erase(key);
  else
    coeffs_[key] = c;
  return *this;
}

static void require_same(const SpaceId& a, const SpaceId& b) {
  if (a != b) throw SpaceMismatchError("classes live on " + to_string(a) + " and " + to_string(b));
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
  require_same(space_, o.space_);
  for (const auto& [g, c] : o.coeffs_) add(g, c);
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
  require_same(space_, o.space_);
  for (const auto& [g, c] : o.coeffs_) add(g, c * Rational(-1));
  return *this;
}

DivisorClass DivisorClass::scaled(const Rational& k) const {
  DivisorClass out(space_);
  if (k.is_zero()) return out;
  for (const auto& [g, c] : coeffs_) out.coeffs_.emplace(g, c * k);
  return out;
}

DivisorClass DivisorClass::interior_part() const {
  DivisorClass out(space_);
  for (const auto& [g, c] : coeffs_)
    if (!g.is_boundary()) out.coeffs_.emplace(g, c);
  return out;
}

DivisorClass linear_combine(const std::vector<std::pair<Rational, DivisorClass>>& terms, const SpaceId& space) {
  DivisorClass out(space);
  for (const auto& [k, d] : terms) out += d.scaled(k);
  return out;
}

DivisorClass linear_combine(const std::vector<std::pair<Rational, DivisorClass>>& terms) {
  if (terms.empty()) throw ParameterError("linear_combine of no terms needs an explicit space");
  return linear_combine(terms, terms.front().second.space());
}

DivisorClass total_boundary(const SpaceId& space) {
  DivisorClass out(space);
  for (const auto& g : generators(space))
    if (g.is_boundary()) out.add(g, Rational(1));
  return out;
}

DivisorClass kappa1(const SpaceId& space) {
  if (space.family == Family::PointedCurves && space.n == 0) {
    DivisorClass k = DivisorClass::single(space, GeneratorId::lambda(), Rational(12));
    return k -= total_boundary(space);
  }
  if (space.family == Family::BranchedPrym2) {
    DivisorClass k = DivisorClass::single(space, GeneratorId::lambda(), Rational(12));
    for (const auto& g : generators(space)) {
      if (!g.is_boundary()) continue;
      int mult = (g.kind == GenKind::Delta0Ram || g.kind == GenKind::DeltaUnordered) ? 2 : 1;
      k.add(g, Rational(-mult));
    }
    return k;
  }
  throw UnsupportedSpaceError("kappa1 is only provided on PointedCurves(g,0) and BranchedPrym2(g), not " +
                              to_string(space));
}

}  // namespace prym
