#pragma once

#include <vector>

#include "prym/divisor_class.hpp"

namespace prym {

// Positive partition d_1..d_n of g-1.
struct Partition {
  int g;
  std::vector<int> d;

  // Throws ParameterError unless every entry is >= 1 and they sum to g-1.
  Partition(int g, std::vector<int> d);
  int n() const { return static_cast<int>(d.size()); }
  // d_S = Σ_{k in S} d_k
  int weight(MarkingSet s) const;
};

enum class BoundaryKind { Split, NonSplit };

// Negated coefficient of δ_{i,S:g-i} (Split) or δ_{i,S} (NonSplit):
//   split:    (d_S-i)(d_S-i+1)/2
//   nonsplit: (d_S-i+1)(d_S-i+2)/2 if d_S >= i-1, else (d_S-i)(d_S-i+1)/2
Rational b_coefficient(BoundaryKind kind, int i, MarkingSet s, const Partition& p);

// Σ d_j(d_j+1)/2 ψ_j - λ on PointedPrym(g,n)
DivisorClass pd_interior_class(const Partition& p);

// Full class: interior part + ¼δ0ram - Σ b δ over the canonical boundary
// generators of PointedPrym(g,n).
DivisorClass pd_class(const Partition& p);

// The same class summed as two binomial sums over all (i,S):
//   - Σ_{i<=g-1, d_S>=i-1} C(d_S-i+2,2) δ_{i,S}
//   - Σ_{i<=g,   d_S<=i-1} C(i-d_S,2) (δ_{i,S:g-i} + δ_{i,S})
// with δ_{g,S:0} = 0 and divisors outside the inventory skipped.
DivisorClass pd_class_binomial(const Partition& p);

}  // namespace prym
