#pragma once

#include <map>
#include <string>
#include <vector>

#include "prym/divisor_class.hpp"
#include "prym/json_io.hpp"

namespace prym {

struct CatalogEntry {
  std::string name;
  DivisorClass cls;
  std::string provenance;
  // gcd of the exact integral coefficients; 1 for a primitive class.
  Rational scale = Rational(1);

  const SpaceId& space() const { return cls.space(); }
  // Generators whose coefficient is not known exactly.
  std::vector<GeneratorId> unknowns() const;
};

// ρ(g,r,d) = g - (r+1)(g-d+r)
int brill_noether_number(int g, int r, int d);

// Primitive integral multiple of (g+3)λ - (g+1)/6 δ0 - Σ i(g-i) δ_i on
// PointedCurves(g,0). Throws NotADivisorError unless ρ(g,r,d) = -1.
DivisorClass bn_class(int g, int r, int d);

class Catalog {
 public:
  // Empty registry; BN_g_r_d names still resolve on the fly.
  Catalog() = default;
  // Registry with the shipped entries.
  static Catalog builtin();

  void add(CatalogEntry e);
  // Throws CatalogError for unknown names. BN_g_r_d resolves to the
  // primitive bn_class unless an entry of that name is registered.
  CatalogEntry entry(const std::string& name) const;
  bool contains(const std::string& name) const { return entries_.count(name) != 0; }
  std::vector<std::string> names() const;

  // Accepts a single entry object, an array of them, or {"entries": [...]}.
  // Returns the names registered.
  std::vector<std::string> load_json(const Json& doc);
  std::vector<std::string> load_file(const std::string& path);

 private:
  std::map<std::string, CatalogEntry> entries_;
};

// Entry object: {"name", "space": {...}, "coeffs": {...}, "provenance",
// "complete": bool = false, "scale": "k" = "1"}. Unlisted generators are
// unknown unless "complete" is true, in which case they are zero.
CatalogEntry entry_from_json(const Json& j);
Json entry_to_json(const CatalogEntry& e);

}  // namespace prym
