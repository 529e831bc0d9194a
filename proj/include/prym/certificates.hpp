#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prym/divisor_class.hpp"

namespace prym {

enum class Verdict { BigWitness, EffectiveWitness, Inconclusive, Infeasible };
std::string verdict_name(Verdict v);

struct Term {
  std::string label;
  DivisorClass cls;
  Rational coeff;
};

// One line of the sign ledger: the residual coefficient of a generator and
// whether its required sign is certified.
struct SignEntry {
  GeneratorId gen;
  CoeffBound residual;
  bool ok = false;
  std::string note;
};

// a + b*ε
struct Affine {
  Rational a, b;
  Rational at(const Rational& eps) const { return a + b * eps; }
  friend bool operator==(const Affine&, const Affine&) = default;
};
std::string affine_str(const Affine& x);

struct Certificate {
  DivisorClass target;
  std::vector<Term> terms;
  Rational epsilon;
  DivisorClass residual;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<GeneratorId> failing;
  std::string reason;
  std::vector<SignEntry> ledger;

  // Filled by bigness_certificate.
  std::vector<Affine> solution;
  std::optional<Rational> epsilon_max;  // sup of admissible ε; absent if unbounded or none
  std::vector<std::string> binding;     // constraints attaining epsilon_max

  explicit Certificate(const SpaceId& s) : target(s), residual(s) {}
};

// residual = target - ε·ψ - Σ c_i D_i. λ/ψ residuals must vanish exactly,
// boundary residuals must have a lower bound >= 0.
Certificate verify_combination(const DivisorClass& target, const std::vector<Term>& terms, const Rational& eps);

struct SolveResult {
  bool feasible = false;
  std::vector<Affine> coeffs;  // one per class, affine in ε
  std::string reason;
  // On infeasibility: weights y on the pinned equations with y·M = 0 and
  // y·rhs != 0 (a row of the system that cannot hold).
  std::vector<Rational> certificate_row;
  Affine certificate_value;
};

// Solves Σ c_k D_k[p] = target[p] - ε·[p = ψ] for every pinned p, exactly and
// symbolically in ε. Throws UnknownCoefficientError if a pinned coefficient
// is not exact, ParameterError if the system is underdetermined.
SolveResult solve_coefficients(const DivisorClass& target, const std::vector<DivisorClass>& classes,
                               const std::vector<GeneratorId>& pinned);

// Solves with ε symbolic, finds the largest ε0 keeping every constraint
// (coefficients >= 0, boundary residuals >= 0) and verifies at ε = ε0/2, or
// at `eps` when given. Falls back to ε = 0 when no positive ε works.
Certificate bigness_certificate(const DivisorClass& target, const std::vector<Term>& classes,
                                const std::vector<GeneratorId>& pinned, std::optional<Rational> eps = std::nullopt);

}  // namespace prym
