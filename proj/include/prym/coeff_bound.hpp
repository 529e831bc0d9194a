#pragma once

#include <optional>
#include <string>

#include "prym/rational.hpp"

namespace prym {

// A coefficient known exactly or only up to a closed interval [lo, hi] whose
// ends may be infinite. AtLeast(b), a lower bound b on the negated
// coefficient, is the interval (-inf, -b].
//
// `from_unknown` marks bounds that trace back to an unprinted catalog
// coefficient; it survives addition and nonzero scaling.
class CoeffBound {
 public:
  CoeffBound() : lo_(Rational(0)), hi_(Rational(0)) {}
  static CoeffBound exact(Rational v);
  static CoeffBound at_least(Rational b);
  static CoeffBound lower(Rational lo);
  static CoeffBound interval(std::optional<Rational> lo, std::optional<Rational> hi);
  // An unprinted boundary coefficient of an effective class: sign known (<= 0), value not.
  static CoeffBound unknown_nonpositive();
  static CoeffBound unknown();
  // Same interval, marked as stemming from an unknown coefficient.
  CoeffBound flagged() const {
    CoeffBound c = *this;
    c.unknown_ = true;
    return c;
  }

  bool is_exact() const { return lo_ && hi_ && *lo_ == *hi_; }
  bool is_zero() const { return is_exact() && lo_->is_zero(); }
  // Exact value; throws UnknownCoefficientError if not exact.
  const Rational& value() const;
  const std::optional<Rational>& lo() const { return lo_; }
  const std::optional<Rational>& hi() const { return hi_; }
  bool from_unknown() const { return unknown_; }
  // b with coefficient in (-inf, -b], if this bound has that shape.
  std::optional<Rational> at_least_value() const;

  CoeffBound operator+(const CoeffBound& o) const;
  CoeffBound operator-(const CoeffBound& o) const { return *this + o * Rational(-1); }
  CoeffBound operator*(const Rational& k) const;
  CoeffBound& operator+=(const CoeffBound& o) { return *this = *this + o; }

  // Interval containment: every value allowed by `o` is allowed here.
  bool contains(const CoeffBound& o) const;

  friend bool operator==(const CoeffBound&, const CoeffBound&) = default;

  std::string str() const;

 private:
  std::optional<Rational> lo_, hi_;
  bool unknown_ = false;
};

}  // namespace prym
