#pragma once

#include "prym/rational.hpp"

namespace prym {

// C(n,k), zero for k < 0 or k > n.
BigInt binomial(long n, long k);

// C(2g,g)/(g+1)
BigInt catalan(long g);

// Number of g^1_d's with vanishing orders fixed at the node, as cited:
// (2d-g-1)·g!/(d!(g-d+1)!). Zero outside ceil((g+1)/2) <= d <= g+1.
BigInt vanishing_count(long g, long d);

// Σ_{d=ceil((g+1)/2)}^{g+1} ((2d-g-1)^2/(g+1)^2)·C(g+1,d)^2
Rational count_limit_g1(long g);
// One summand of count_limit_g1.
Rational count_limit_g1_term(long g, long d);

struct IdentityCheck {
  BigInt lhs, rhs;
  bool equal() const { return lhs == rhs; }
};

// Σ_{d=1}^g C(g,d)C(g,d-1) against (g/(g+1))·C(2g,g)
IdentityCheck narayana_identity(long g);
// Σ_{d=0}^g C(g,d)^2 against C(2g,g)
IdentityCheck central_binomial_identity(long g);
// (1/2)·Σ_{d=0}^{g+1} [C(g,d) - C(g,d-1)]^2 against catalan(g)
IdentityCheck square_difference_identity(long g);

}  // namespace prym
