#include "prym/coeff_bound.hpp"

#include "prym/errors.hpp"

namespace prym {

CoeffBound CoeffBound::exact(Rational v) {
  CoeffBound c;
  c.lo_ = v;
  c.hi_ = std::move(v);
  return c;
}

CoeffBound CoeffBound::at_least(Rational b) { return interval(std::nullopt, -b); }

CoeffBound CoeffBound::lower(Rational lo) { return interval(std::move(lo), std::nullopt); }

CoeffBound CoeffBound::interval(std::optional<Rational> lo, std::optional<Rational> hi) {
  if (lo && hi && *lo > *hi) throw ParameterError("empty interval [" + lo->str() + ", " + hi->str() + "]");
  CoeffBound c;
  c.lo_ = std::move(lo);
  c.hi_ = std::move(hi);
  return c;
}

CoeffBound CoeffBound::unknown_nonpositive() {
  CoeffBound c = interval(std::nullopt, Rational(0));
  c.unknown_ = true;
  return c;
}

CoeffBound CoeffBound::unknown() {
  CoeffBound c = interval(std::nullopt, std::nullopt);
  c.unknown_ = true;
  return c;
}

const Rational& CoeffBound::value() const {
  if (!is_exact()) throw UnknownCoefficientError("coefficient " + str() + " is not exact");
  return *lo_;
}

std::optional<Rational> CoeffBound::at_least_value() const {
  if (!lo_ && hi_) return -*hi_;
  return std::nullopt;
}

static std::optional<Rational> add_end(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!a || !b) return std::nullopt;
  return *a + *b;
}

CoeffBound CoeffBound::operator+(const CoeffBound& o) const {
  CoeffBound c;
  c.lo_ = add_end(lo_, o.lo_);
  c.hi_ = add_end(hi_, o.hi_);
  c.unknown_ = unknown_ || o.unknown_;
  return c;
}

CoeffBound CoeffBound::operator*(const Rational& k) const {
  if (k.is_zero()) return exact(Rational(0));
  CoeffBound c;
  auto scale = [&](const std::optional<Rational>& e) -> std::optional<Rational> {
    if (!e) return std::nullopt;
    return *e * k;
  };
  if (k.sign() > 0) {
    c.lo_ = scale(lo_);
    c.hi_ = scale(hi_);
  } else {
    c.lo_ = scale(hi_);
    c.hi_ = scale(lo_);
  }
  c.unknown_ = unknown_;
  return c;
}

bool CoeffBound::contains(const CoeffBound& o) const {
  bool lo_ok = !lo_ || (o.lo_ && *o.lo_ >= *lo_);
  bool hi_ok = !hi_ || (o.hi_ && *o.hi_ <= *hi_);
  return lo_ok && hi_ok;
}

std::string CoeffBound::str() const {
  if (is_exact()) return lo_->str();
  return "[" + (lo_ ? lo_->str() : std::string("-inf")) + ", " + (hi_ ? hi_->str() : std::string("inf")) + "]";
}

}  // namespace prym
