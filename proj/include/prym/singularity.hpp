#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prym/json_io.hpp"
#include "prym/rational.hpp"

namespace prym {

enum class ComponentKind {
  Identity,
  EllipticTail,
  EllipticLadder,
  HyperellipticTail,
  RationalTail,
  RationalLadder,
  PointedEllipticTail1,
  PointedEllipticTail2,
};
enum class JSpecial { None, J0, J1728 };

std::string kind_name(ComponentKind k);
ComponentKind parse_kind(const std::string& s);
std::string j_name(JSpecial j);
JSpecial parse_j(const std::string& s);

// Restriction of an automorphism to one component of the normalization.
struct ComponentDatum {
  ComponentKind kind;
  int ord = 1;
  JSpecial j = JSpecial::None;
  friend bool operator==(const ComponentDatum&, const ComponentDatum&) = default;
};

struct AgeRow {
  ComponentDatum datum;
  Rational w;
};

// Every admissible (kind, ord, j) with its age lower bound. Order-2 rows
// hold for any j and are listed with j = None.
const std::vector<AgeRow>& age_table();

// Throws ParameterError for combinations outside the table.
Rational age_lower_bound(const ComponentDatum& c);

struct StarReport {
  std::vector<std::size_t> excluded;  // indices with w > 1/3
  bool all_zero = true;               // every w = 0: composition of quasi-reflections
  Rational total;                     // Σ w, a lower bound for the age
};
StarReport star_admissible(const std::vector<ComponentDatum>& comps);

// Dual graph of a quasistable two-pointed curve.
struct SketchComponent {
  std::string id;
  int genus = 0;
  JSpecial j = JSpecial::None;  // meaningful for genus 1
  bool eta_trivial = false;
  std::vector<std::string> marked;  // subset of {"x", "y"}
  bool exceptional = false;
};

struct CurveSketch {
  std::vector<SketchComponent> components;
  std::vector<std::pair<std::string, std::string>> nodes;

  // Throws ValidityError on inconsistent data.
  void validate() const;
  int arithmetic_genus() const;
  // Components of genus 1 with a single node and no markings.
  std::vector<std::string> elliptic_tails() const;
  // Rational components carrying x and y with a single node.
  std::vector<std::string> rational_tails() const;
  bool is_disconnecting_exceptional(const std::string& id) const;

 private:
  int degree(const std::string& id) const;
  const SketchComponent& find(const std::string& id) const;
};

enum class AutKind { RationalTailInvolution, EllipticTailInvolution, GammaE, Other };
std::string aut_kind_name(AutKind k);

struct AutGenerator {
  AutKind kind;
  std::string component;                // GammaE: the exceptional component
  std::optional<ComponentDatum> datum;  // Other: what it does
};

// True iff every generator is a rational or elliptic tail involution or a
// γ_E. Throws ValidityError if a γ_E names no disconnecting exceptional
// component of the sketch.
bool is_smooth_point(const std::vector<AutGenerator>& gens, const CurveSketch& sketch);

// Some elliptic tail has j-invariant 0 and η trivial on it.
bool is_noncanonical(const CurveSketch& sketch);

// JSON schema:
// {"components": [{"id", "genus", "jInvariant": "0"|"1728"|"generic",
//                  "etaTrivial", "markedPoints": ["x","y"], "exceptional"}],
//  "nodes": [["A","B"], ...],
//  "generators": [{"kind": "RationalTailInvolution" | "EllipticTailInvolution"
//                  | "GammaE" | "Other", "component": id, "datum": {...}}],
//  "automorphismData": [{"kind", "ord", "j": "j0"|"j1728"|"none"}]}
CurveSketch sketch_from_json(const Json& j);
std::vector<AutGenerator> generators_from_json(const Json& j);
std::vector<ComponentDatum> automorphism_data_from_json(const Json& j);
ComponentDatum datum_from_json(const Json& j);
Json datum_to_json(const ComponentDatum& d);

// {smooth, nonCanonical, ageLedger, ...} for a sketch document.
Json audit_report(const Json& doc);

}  // namespace prym
