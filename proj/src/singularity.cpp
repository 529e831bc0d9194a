#include "prym/singularity.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "prym/errors.hpp"

namespace prym {

namespace {

const std::vector<std::pair<ComponentKind, std::string>> kKinds = {
    {ComponentKind::Identity, "Identity"},
    {ComponentKind::EllipticTail, "EllipticTail"},
    {ComponentKind::EllipticLadder, "EllipticLadder"},
    {ComponentKind::HyperellipticTail, "HyperellipticTail"},
    {ComponentKind::RationalTail, "RationalTail"},
    {ComponentKind::RationalLadder, "RationalLadder"},
    {ComponentKind::PointedEllipticTail1, "PointedEllipticTail1"},
    {ComponentKind::PointedEllipticTail2, "PointedEllipticTail2"},
};

}  // namespace

std::string kind_name(ComponentKind k) {
  for (const auto& [kk, n] : kKinds)
    if (kk == k) return n;
  return "?";
}

ComponentKind parse_kind(const std::string& s) {
  for (const auto& [kk, n] : kKinds)
    if (n == s) return kk;
  throw ParameterError("unknown component kind '" + s + "'");
}

std::string j_name(JSpecial j) {
  switch (j) {
    case JSpecial::J0: return "j0";
    case JSpecial::J1728: return "j1728";
    case JSpecial::None: break;
  }
  return "none";
}

JSpecial parse_j(const std::string& s) {
  if (s == "j0" || s == "0") return JSpecial::J0;
  if (s == "j1728" || s == "1728") return JSpecial::J1728;
  if (s == "none" || s == "generic" || s.empty()) return JSpecial::None;
  throw ParameterError("unknown j-invariant tag '" + s + "'");
}

const std::vector<AgeRow>& age_table() {
  using K = ComponentKind;
  using J = JSpecial;
  static const std::vector<AgeRow> rows = {
      {{K::Identity, 1, J::None}, Rational(0)},
      {{K::EllipticTail, 2, J::None}, Rational(0)},
      {{K::EllipticTail, 4, J::J1728}, Rational(1, 2)},
      {{K::EllipticTail, 3, J::J0}, Rational(1, 3)},
      {{K::EllipticTail, 6, J::J0}, Rational(1, 3)},
      {{K::EllipticLadder, 2, J::None}, Rational(1, 2)},
      {{K::EllipticLadder, 4, J::J1728}, Rational(3, 4)},
      {{K::EllipticLadder, 3, J::J0}, Rational(2, 3)},
      {{K::HyperellipticTail, 2, J::None}, Rational(1, 2)},
      {{K::RationalTail, 2, J::None}, Rational(0)},
      {{K::RationalLadder, 2, J::None}, Rational(1, 2)},
      {{K::PointedEllipticTail1, 2, J::None}, Rational(1, 2)},
      {{K::PointedEllipticTail1, 4, J::J1728}, Rational(3, 4)},
      {{K::PointedEllipticTail1, 3, J::J0}, Rational(2, 3)},
      {{K::PointedEllipticTail1, 6, J::J0}, Rational(2, 3)},
      {{K::PointedEllipticTail2, 2, J::None}, Rational(1, 2)},
      {{K::PointedEllipticTail2, 6, J::J0}, Rational(5, 6)},
  };
  return rows;
}

Rational age_lower_bound(const ComponentDatum& c) {
  for (const auto& row : age_table()) {
    if (row.datum.kind != c.kind || row.datum.ord != c.ord) continue;
    // identity and involution rows do not depend on the j-invariant
    if (row.datum.j == JSpecial::None || row.datum.j == c.j) return row.w;
  }
  throw ParameterError("no age row for " + kind_name(c.kind) + " of order " + std::to_string(c.ord) + " with " +
                       j_name(c.j));
}

StarReport star_admissible(const std::vector<ComponentDatum>& comps) {
  StarReport r;
  for (std::size_t k = 0; k < comps.size(); ++k) {
    Rational w = age_lower_bound(comps[k]);
    r.total += w;
    if (w > Rational(1, 3)) r.excluded.push_back(k);
    if (!w.is_zero()) r.all_zero = false;
  }
  return r;
}

const SketchComponent& CurveSketch::find(const std::string& id) const {
  for (const auto& c : components)
    if (c.id == id) return c;
  throw ValidityError("sketch has no component '" + id + "'");
}

int CurveSketch::degree(const std::string& id) const {
  int d = 0;
  for (const auto& [a, b] : nodes) d += (a == id) + (b == id);
  return d;
}

void CurveSketch::validate() const {
  if (components.empty()) throw ValidityError("sketch has no components");
  std::set<std::string> ids;
  std::map<std::string, int> marks;
  for (const auto& c : components) {
    if (!ids.insert(c.id).second) throw ValidityError("duplicate component id '" + c.id + "'");
    if (c.genus < 0) throw ValidityError("component " + c.id + " has negative genus");
    if (c.j != JSpecial::None && c.genus != 1) throw ValidityError("j-invariant given on non-elliptic " + c.id);
    for (const auto& m : c.marked) {
      if (m != "x" && m != "y") throw ValidityError("marked point must be x or y, got '" + m + "'");
      ++marks[m];
    }
  }
  if (marks["x"] != 1 || marks["y"] != 1) throw ValidityError("x and y must each lie on exactly one component");
  for (const auto& [a, b] : nodes) {
    find(a);
    find(b);
  }
  for (const auto& c : components) {
    if (!c.exceptional) continue;
    if (c.genus != 0 || !c.marked.empty() || degree(c.id) != 2)
      throw ValidityError("exceptional component " + c.id + " must be rational, unmarked and meet the rest twice");
  }
  // connectedness
  std::set<std::string> seen{components.front().id};
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& [a, b] : nodes) {
      if (seen.count(a) != seen.count(b)) {
        seen.insert(a);
        seen.insert(b);
        grew = true;
      }
    }
  }
  if (seen.size() != components.size()) throw ValidityError("sketch is not connected");
}

int CurveSketch::arithmetic_genus() const {
  int g = 0;
  for (const auto& c : components) g += c.genus;
  return g + static_cast<int>(nodes.size()) - static_cast<int>(components.size()) + 1;
}

std::vector<std::string> CurveSketch::elliptic_tails() const {
  std::vector<std::string> out;
  for (const auto& c : components)
    if (c.genus == 1 && !c.exceptional && c.marked.empty() && degree(c.id) == 1) out.push_back(c.id);
  return out;
}

std::vector<std::string> CurveSketch::rational_tails() const {
  std::vector<std::string> out;
  for (const auto& c : components)
    if (c.genus == 0 && !c.exceptional && c.marked.size() == 2 && degree(c.id) == 1) out.push_back(c.id);
  return out;
}

bool CurveSketch::is_disconnecting_exceptional(const std::string& id) const {
  const SketchComponent& e = find(id);
  if (!e.exceptional) return false;
  // Remove E and count connected pieces among the rest.
  std::vector<std::string> rest;
  for (const auto& c : components)
    if (c.id != id) rest.push_back(c.id);
  if (rest.empty()) return false;
  std::set<std::string> seen{rest.front()};
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& [a, b] : nodes) {
      if (a == id || b == id) continue;
      if (seen.count(a) != seen.count(b)) {
        seen.insert(a);
        seen.insert(b);
        grew = true;
      }
    }
  }
  return seen.size() < rest.size();
}

std::string aut_kind_name(AutKind k) {
  switch (k) {
    case AutKind::RationalTailInvolution: return "RationalTailInvolution";
    case AutKind::EllipticTailInvolution: return "EllipticTailInvolution";
    case AutKind::GammaE: return "GammaE";
    case AutKind::Other: return "Other";
  }
  return "?";
}

bool is_smooth_point(const std::vector<AutGenerator>& gens, const CurveSketch& sketch) {
  bool smooth = true;
  for (const auto& g : gens) {
    if (g.kind == AutKind::GammaE && !sketch.is_disconnecting_exceptional(g.component))
      throw ValidityError("gamma_E needs a disconnecting exceptional component, '" + g.component + "' is not one");
    if (g.kind == AutKind::Other) smooth = false;
  }
  return smooth;
}

bool is_noncanonical(const CurveSketch& sketch) {
  for (const auto& id : sketch.elliptic_tails()) {
    for (const auto& c : sketch.components)
      if (c.id == id && c.j == JSpecial::J0 && c.eta_trivial) return true;
  }
  return false;
}

ComponentDatum datum_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind")) throw ParseError("component datum needs \"kind\"", 0);
  ComponentDatum d{parse_kind(j.at("kind").get<std::string>()), j.value("ord", 1), JSpecial::None};
  if (j.contains("j")) d.j = parse_j(j.at("j").get<std::string>());
  return d;
}

Json datum_to_json(const ComponentDatum& d) {
  return Json{{"kind", kind_name(d.kind)}, {"ord", d.ord}, {"j", j_name(d.j)}};
}

CurveSketch sketch_from_json(const Json& j) {
  CurveSketch s;
  if (!j.contains("components") || !j.at("components").is_array()) throw ParseError("sketch needs \"components\"", 0);
  for (const auto& c : j.at("components")) {
    SketchComponent sc;
    sc.id = c.at("id").get<std::string>();
    sc.genus = c.value("genus", 0);
    if (c.contains("jInvariant")) {
      std::string jv = c.at("jInvariant").is_string() ? c.at("jInvariant").get<std::string>()
                                                      : std::to_string(c.at("jInvariant").get<long>());
      sc.j = parse_j(jv);
    }
    sc.eta_trivial = c.value("etaTrivial", false);
    if (c.contains("markedPoints")) sc.marked = c.at("markedPoints").get<std::vector<std::string>>();
    sc.exceptional = c.value("exceptional", false);
    s.components.push_back(sc);
  }
  if (j.contains("nodes")) {
    for (const auto& n : j.at("nodes")) {
      if (!n.is_array() || n.size() != 2) throw ParseError("each node is a pair of component ids", 0);
      s.nodes.emplace_back(n[0].get<std::string>(), n[1].get<std::string>());
    }
  }
  s.validate();
  return s;
}

std::vector<AutGenerator> generators_from_json(const Json& j) {
  std::vector<AutGenerator> out;
  if (!j.contains("generators")) return out;
  for (const auto& g : j.at("generators")) {
    std::string k = g.at("kind").get<std::string>();
    AutGenerator a{AutKind::Other, {}, std::nullopt};
    if (k == "RationalTailInvolution")
      a.kind = AutKind::RationalTailInvolution;
    else if (k == "EllipticTailInvolution")
      a.kind = AutKind::EllipticTailInvolution;
    else if (k == "GammaE")
      a.kind = AutKind::GammaE;
    else if (k != "Other")
      throw ParseError("unknown generator kind '" + k + "'", 0);
    a.component = g.value("component", std::string());
    if (g.contains("datum")) a.datum = datum_from_json(g.at("datum"));
    out.push_back(a);
  }
  return out;
}

std::vector<ComponentDatum> automorphism_data_from_json(const Json& j) {
  std::vector<ComponentDatum> out;
  if (!j.contains("automorphismData")) return out;
  for (const auto& d : j.at("automorphismData")) out.push_back(datum_from_json(d));
  return out;
}

Json audit_report(const Json& doc) {
  CurveSketch s = sketch_from_json(doc);
  std::vector<AutGenerator> gens = generators_from_json(doc);
  std::vector<ComponentDatum> data = automorphism_data_from_json(doc);
  StarReport star = star_admissible(data);

  Json ledger = Json::array();
  for (std::size_t k = 0; k < data.size(); ++k) {
    Json row = datum_to_json(data[k]);
    row["w"] = age_lower_bound(data[k]).str();
    row["excludedUnderStar"] = std::find(star.excluded.begin(), star.excluded.end(), k) != star.excluded.end();
    ledger.push_back(row);
  }
  bool nc = is_noncanonical(s);
  return Json{{"smooth", is_smooth_point(gens, s)},
              {"nonCanonical", nc},
              {"canonicalNote", nc ? "elliptic tail with j = 0 and trivial eta" : "no table row certifies non-canonicity"},
              {"arithmeticGenus", s.arithmetic_genus()},
              {"ellipticTails", s.elliptic_tails()},
              {"rationalTails", s.rational_tails()},
              {"ageLedger", ledger},
              {"ageLowerBound", star.total.str()},
              {"allZero", star.all_zero}};
}

}  // namespace prym
