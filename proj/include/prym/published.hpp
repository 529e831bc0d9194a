#pragma once

#include <string>
#include <vector>

#include "prym/catalog.hpp"
#include "prym/certificates.hpp"

namespace prym {

// "ENTRY@MAP": a catalog entry pushed through a named (possibly composed)
// map. The label is normalised to ENTRY@<map name>.
Term term_from_spec(const Catalog& cat, const std::string& spec, const Rational& coeff = Rational(0));

// Terms of the three shipped decompositions of the canonical class of
// BranchedPrym2(g), g in {13, 16, 17}.
std::vector<std::string> scenario_terms(int g);
bool has_scenario(int g);

// Printed coefficients of a pulled-back catalog entry on a few generators.
struct PrintedVector {
  std::string term;
  std::vector<std::pair<std::string, CoeffBound>> coeffs;
};
const std::vector<PrintedVector>& printed_pullbacks();

// Printed coefficients of the g = 13 combination.
std::vector<Rational> published_g13_coefficients();

struct PublishedCheck {
  std::string label;
  Rational published;
  Rational computed;
  bool match() const { return published == computed; }
};

// -Σ c_k(ε)·sup D_k[gen]: how much of gen the combination removes, as an
// affine function of ε (a lower bound when some D_k[gen] is only bounded).
Affine combination_weight(const std::vector<Term>& terms, const std::vector<Affine>& coeffs, const GeneratorId& gen);

// Published values for scenario g against computed ones. Empty unless the
// term labels are those of scenario_terms(g).
std::vector<PublishedCheck> published_comparison(int g, const std::vector<Term>& terms,
                                                 const std::vector<Affine>& coeffs);

}  // namespace prym
