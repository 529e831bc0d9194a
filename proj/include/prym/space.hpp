#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace prym {

enum class Family : std::uint8_t {
  PointedCurves,      // M̄_{g,n}
  PointedCurvesMod2,  // M̄_{g,2}/Z2
  PrymCurves,         // R̄_g
  BranchedPrym2,      // R̄_{g,2}
  PointedPrym,        // C̄^n R̄_g
};

struct SpaceId {
  Family family = Family::PointedCurves;
  int g = 2;
  int n = 0;
  friend auto operator<=>(const SpaceId&, const SpaceId&) = default;
};

// Validating constructors. n is forced to 2 for PointedCurvesMod2 and 0 for
// the unpointed Prym families.
SpaceId make_space(Family family, int g, int n = 0);
SpaceId pointed_curves(int g, int n = 0);
SpaceId pointed_curves_mod2(int g);
SpaceId prym_curves(int g);
SpaceId branched_prym2(int g);
SpaceId pointed_prym(int g, int n);

std::string family_name(Family f);
Family parse_family(const std::string& s);
std::string to_string(const SpaceId& s);

// Marking sets as bitmasks: bit k-1 is marking k.
using MarkingSet = std::uint32_t;
inline constexpr int kMaxMarkings = 16;
MarkingSet full_set(int n);
inline bool contains(MarkingSet s, int marking) { return (s >> (marking - 1)) & 1U; }
std::vector<int> members(MarkingSet s);
MarkingSet make_set(const std::vector<int>& marks);

enum class GenKind : std::uint8_t {
  Lambda,
  Psi,      // ψ = ψ1 + ψ2 on the Z2 quotients
  PsiJ,     // ψ_j, index = j
  Delta0,
  Delta0Prime,
  Delta0DoublePrime,
  Delta0Ram,
  DeltaIS,         // δ_{i,S}; on PrymCurves δ_i, on PointedCurvesMod2 the δ_{i,S} with S ⊆ {1,2}
  DeltaSplit,      // δ_{i,S:g-i} (η nontrivial on both sides)
  DeltaUnordered,  // δ_{i:g-i} on BranchedPrym2
  DeltaO,          // δ_{i:g-i,{O}}, i = genus of the side carrying both points
  DeltaEta,        // δ_{i:g-i,{η}}
};

struct GeneratorId {
  GenKind kind = GenKind::Lambda;
  int index = 0;
  MarkingSet set = 0;

  friend auto operator<=>(const GeneratorId&, const GeneratorId&) = default;

  static GeneratorId lambda() { return {GenKind::Lambda, 0, 0}; }
  static GeneratorId psi() { return {GenKind::Psi, 0, 0}; }
  static GeneratorId psi(int j) { return {GenKind::PsiJ, j, 0}; }
  static GeneratorId delta0() { return {GenKind::Delta0, 0, 0}; }
  static GeneratorId delta0p() { return {GenKind::Delta0Prime, 0, 0}; }
  static GeneratorId delta0pp() { return {GenKind::Delta0DoublePrime, 0, 0}; }
  static GeneratorId delta0ram() { return {GenKind::Delta0Ram, 0, 0}; }
  static GeneratorId delta(int i, MarkingSet s = 0) { return {GenKind::DeltaIS, i, s}; }
  static GeneratorId split(int i, MarkingSet s = 0) { return {GenKind::DeltaSplit, i, s}; }
  static GeneratorId unordered(int i) { return {GenKind::DeltaUnordered, i, 0}; }
  static GeneratorId marked_o(int i) { return {GenKind::DeltaO, i, 0}; }
  static GeneratorId marked_eta(int i) { return {GenKind::DeltaEta, i, 0}; }

  bool is_boundary() const { return kind >= GenKind::Delta0; }
};

// Complete generator inventory in canonical order.
std::vector<GeneratorId> generators(const SpaceId& space);

// Canonical representative of a divisor given in either representation.
// Throws ValidityError if `gen` names no divisor of `space`.
GeneratorId canonicalize(const GeneratorId& gen, const SpaceId& space);

// True iff gen is canonical and belongs to the inventory of space.
bool is_valid(const GeneratorId& gen, const SpaceId& space);

// Name in the class text grammar (lambda, psi[2], d{1,{1}:2}, dEta{0}, ...).
std::string generator_name(const GeneratorId& gen, const SpaceId& space);

}  // namespace prym
