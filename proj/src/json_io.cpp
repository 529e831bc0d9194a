#include "prym/json_io.hpp"

#include "prym/class_text.hpp"
#include "prym/errors.hpp"

namespace prym {

namespace {

Rational rational_from(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ParseError("expected a rational string at " + where, 0);
  return Rational::parse(j.get<std::string>());
}

Json end_json(const std::optional<Rational>& e) { return e ? Json(e->str()) : Json(nullptr); }

std::optional<Rational> end_from(const Json& j, const std::string& where) {
  if (j.is_null()) return std::nullopt;
  return rational_from(j, where);
}

}  // namespace

CoeffBound default_unknown(const GeneratorId& gen) {
  return gen.is_boundary() ? CoeffBound::unknown_nonpositive() : CoeffBound::unknown();
}

Json coeff_to_json(const CoeffBound& c, const GeneratorId& gen) {
  if (c.is_exact()) return c.value().str();
  if (c.from_unknown() && c == default_unknown(gen)) return "unknown";
  if (!c.from_unknown() && !c.lo() && c.hi()) return Json{{"atLeast", (-*c.hi()).str()}};
  return Json{{"lo", end_json(c.lo())}, {"hi", end_json(c.hi())}, {"unknown", c.from_unknown()}};
}

CoeffBound coeff_from_json(const Json& j, const GeneratorId& gen) {
  if (j.is_string() && j.get<std::string>() == "unknown") return default_unknown(gen);
  if (j.is_string() || j.is_number_integer()) return CoeffBound::exact(rational_from(j, "coefficient"));
  if (!j.is_object()) throw ParseError("coefficient must be a string or an object", 0);
  if (j.contains("atLeast")) {
    if (j.size() != 1) throw ParseError("atLeast bound takes no other keys", 0);
    return CoeffBound::at_least(rational_from(j.at("atLeast"), "atLeast"));
  }
  if (!j.contains("lo") || !j.contains("hi")) throw ParseError("interval bound needs lo and hi", 0);
  CoeffBound b = CoeffBound::interval(end_from(j.at("lo"), "lo"), end_from(j.at("hi"), "hi"));
  if (j.value("unknown", false)) b = b.flagged();
  return b;
}

Json space_to_json(const SpaceId& s) { return Json{{"family", family_name(s.family)}, {"g", s.g}, {"n", s.n}}; }

SpaceId space_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("family") || !j.contains("g"))
    throw ParseError("space needs \"family\" and \"g\"", 0);
  if (!j.at("family").is_string() || !j.at("g").is_number_integer())
    throw ParseError("space.family must be a string and space.g an integer", 0);
  int n = 0;
  if (j.contains("n")) {
    if (!j.at("n").is_number_integer()) throw ParseError("space.n must be an integer", 0);
    n = j.at("n").get<int>();
  }
  Family f = parse_family(j.at("family").get<std::string>());
  if (f == Family::PointedCurvesMod2) n = 2;
  if (f == Family::PrymCurves || f == Family::BranchedPrym2) n = 0;
  return make_space(f, j.at("g").get<int>(), n);
}

Json class_to_json(const DivisorClass& cls) {
  Json coeffs = Json::object();
  for (const auto& [g, c] : cls.terms()) coeffs[generator_name(g, cls.space())] = coeff_to_json(c, g);
  return Json{{"space", space_to_json(cls.space())}, {"text", format_class(cls)}, {"coeffs", coeffs}};
}

DivisorClass class_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("space")) throw ParseError("class needs \"space\"", 0);
  SpaceId s = space_from_json(j.at("space"));
  if (j.contains("coeffs")) {
    DivisorClass out(s);
    for (const auto& [name, v] : j.at("coeffs").items()) {
      GeneratorId g = parse_generator(name, s);
      out.add(g, coeff_from_json(v, g));
    }
    return out;
  }
  if (!j.contains("text") || !j.at("text").is_string()) throw ParseError("class needs \"coeffs\" or \"text\"", 0);
  return parse_class(j.at("text").get<std::string>(), s);
}

}  // namespace prym
