#include "prym/series.hpp"

#include "prym/errors.hpp"

namespace prym {

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt catalan(long g) {
  if (g < 0) throw ParameterError("catalan needs g >= 0");
  BigInt c = binomial(2 * g, g);
  return c / (g + 1);
}

BigInt vanishing_count(long g, long d) {
  if (2 * d < g + 1 || d > g + 1) return 0;
  // g!/(d!(g-d+1)!) = C(g+1,d)/(g+1)
  BigInt num = BigInt(2 * d - g - 1) * binomial(g + 1, d);
  return num / (g + 1);
}

Rational count_limit_g1_term(long g, long d) {
  BigInt b = binomial(g + 1, d);
  BigInt t = BigInt(2 * d - g - 1) * b;
  return Rational(t * t, BigInt(g + 1) * BigInt(g + 1));
}

Rational count_limit_g1(long g) {
  if (g < 1) throw ParameterError("count needs g >= 1");
  Rational sum(0);
  for (long d = (g + 2) / 2; d <= g + 1; ++d) sum += count_limit_g1_term(g, d);
  return sum;
}

IdentityCheck narayana_identity(long g) {
  if (g < 1) throw ParameterError("identity needs g >= 1");
  BigInt lhs = 0;
  for (long d = 1; d <= g; ++d) lhs += binomial(g, d) * binomial(g, d - 1);
  BigInt rhs = BigInt(g) * binomial(2 * g, g) / (g + 1);
  return {lhs, rhs};
}

IdentityCheck central_binomial_identity(long g) {
  if (g < 0) throw ParameterError("identity needs g >= 0");
  BigInt lhs = 0;
  for (long d = 0; d <= g; ++d) lhs += binomial(g, d) * binomial(g, d);
  return {lhs, binomial(2 * g, g)};
}

IdentityCheck square_difference_identity(long g) {
  if (g < 1) throw ParameterError("identity needs g >= 1");
  BigInt twice = 0;
  for (long d = 0; d <= g + 1; ++d) {
    BigInt diff = binomial(g, d) - binomial(g, d - 1);
    twice += diff * diff;
  }
  if (twice % 2 != 0) return {twice, 2 * catalan(g)};
  return {twice / 2, catalan(g)};
}

}  // namespace prym
