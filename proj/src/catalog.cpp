#include "prym/catalog.hpp"

#include <fstream>
#include <regex>

#include "prym/class_text.hpp"
#include "prym/errors.hpp"

namespace prym {

using G = GeneratorId;

std::vector<GeneratorId> CatalogEntry::unknowns() const {
  std::vector<GeneratorId> out;
  for (const auto& [g, c] : cls.terms())
    if (!c.is_exact()) out.push_back(g);
  return out;
}

int brill_noether_number(int g, int r, int d) { return g - (r + 1) * (g - d + r); }

namespace {

DivisorClass bn_base(int g) {
  SpaceId s = pointed_curves(g, 0);
  DivisorClass c(s);
  c.add(G::lambda(), Rational(g + 3)).add(G::delta0(), Rational(-(g + 1), 6));
  for (int i = 1; i <= g / 2; ++i) c.add(G::delta(i), Rational(-i * (g - i)));
  return c;
}

// The positive k with k*c integral and of content 1 (c exact).
Rational primitive_factor(const DivisorClass& c) {
  BigInt den = 1, num = 0;
  for (const auto& [g, v] : c.terms()) {
    den = lcm(den, v.value().den());
  }
  for (const auto& [g, v] : c.terms()) {
    Rational x = v.value() * Rational(den);
    num = gcd(num, x.num());
  }
  if (num == 0) return Rational(1);
  return Rational(den, num);
}

CatalogEntry bn_entry(int g, int r, int d, const Rational& scale, std::string provenance) {
  DivisorClass prim = bn_class(g, r, d);
  return CatalogEntry{"BN_" + std::to_string(g) + "_" + std::to_string(r) + "_" + std::to_string(d),
                      prim.scaled(scale), std::move(provenance), scale};
}

// Known leading coefficients; every other generator keeps the default
// unknown bound.
DivisorClass partial(const SpaceId& s, const std::map<GeneratorId, CoeffBound>& known) {
  DivisorClass c(s);
  for (const auto& g : generators(s)) {
    auto it = known.find(g);
    c.add(g, it != known.end() ? it->second : default_unknown(g));
  }
  return c;
}

CoeffBound ex(long v) { return CoeffBound::exact(Rational(v)); }

}  // namespace

DivisorClass bn_class(int g, int r, int d) {
  if (g < 2 || r < 1 || d < 1) throw ParameterError("bn_class needs g >= 2, r >= 1, d >= 1");
  int rho = brill_noether_number(g, r, d);
  if (rho != -1)
    throw NotADivisorError("rho(" + std::to_string(g) + "," + std::to_string(r) + "," + std::to_string(d) +
                           ") = " + std::to_string(rho) + ", not -1");
  // (r+1)(g-d+r) = g+1 with g-d+r = 1 forces r = g, a series that cannot exist
  if (g - d + r < 2)
    throw NotADivisorError("g^" + std::to_string(r) + "_" + std::to_string(d) + " on genus " + std::to_string(g) +
                           " has g-d+r < 2; no Brill-Noether divisor");
  DivisorClass base = bn_base(g);
  return base.scaled(primitive_factor(base));
}

Catalog Catalog::builtin() {
  Catalog c;
  const std::string bn_note = "Brill-Noether divisor class; scale fixed so the printed pullbacks are reproduced";
  c.add(bn_entry(26, 2, 19, Rational(4), bn_note));
  c.add(bn_entry(32, 2, 23, Rational(4), bn_note));
  c.add(bn_entry(34, 4, 31, Rational(4), bn_note));
  c.add(bn_entry(13, 1, 7, Rational(1), bn_note));
  c.add(bn_entry(17, 1, 9, Rational(1), bn_note));

  c.add(CatalogEntry{"Z_16_1",
                     partial(pointed_curves(16, 0), {{G::lambda(), ex(407)}, {G::delta0(), ex(-61)}}),
                     "Koszul divisor on M_16; only the lambda and delta0 coefficients are known", Rational(1)});

  DivisorClass u = partial(prym_curves(14), {{G::lambda(), ex(180)},
                                             {G::delta0p(), ex(-28)},
                                             {G::delta0ram(), ex(-42)},
                                             {G::split(1), CoeffBound::at_least(Rational(100))}});
  c.add(CatalogEntry{"U_14_4", u,
                     "Prym-Koszul divisor on R_14, taken with a factor 2; the d{1,{}:13} coefficient is only bounded",
                     Rational(2)});

  c.add(CatalogEntry{"GP_5_18_20",
                     partial(pointed_curves(18, 0),
                             {{G::lambda(), ex(516)}, {G::delta0(), ex(-77)}, {G::delta(1), ex(-408)}}),
                     "Gieseker-Petri divisor for g^5_20 on M_18; higher boundary coefficients unknown", Rational(1)});
  return c;
}

void Catalog::add(CatalogEntry e) {
  if (e.name.empty()) throw CatalogError("catalog entry without a name");
  std::string name = e.name;
  entries_.insert_or_assign(name, std::move(e));
}

CatalogEntry Catalog::entry(const std::string& name) const {
  auto it = entries_.find(name);
  if (it != entries_.end()) return it->second;
  static const std::regex bn(R"(BN_(\d{1,4})_(\d{1,4})_(\d{1,4}))");
  std::smatch m;
  if (std::regex_match(name, m, bn)) {
    int g = std::stoi(m[1]), r = std::stoi(m[2]), d = std::stoi(m[3]);
    try {
      return CatalogEntry{name, bn_class(g, r, d), "Brill-Noether divisor class, primitive", Rational(1)};
    } catch (const Error& e) {
      throw CatalogError("catalog entry " + name + ": " + e.what());
    }
  }
  throw CatalogError("no catalog entry named '" + name + "'");
}

std::vector<std::string> Catalog::names() const {
  std::vector<std::string> out;
  for (const auto& [n, e] : entries_) out.push_back(n);
  return out;
}

CatalogEntry entry_from_json(const Json& j) {
  auto where = [&](const std::string& key) {
    return "entry " + (j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : "?") +
           ": " + key;
  };
  if (!j.is_object()) throw CatalogError("catalog entry must be an object");
  for (const char* key : {"name", "space", "coeffs"})
    if (!j.contains(key)) throw CatalogError(where(key) + " missing");
  if (!j.at("name").is_string()) throw CatalogError(where("name") + " must be a string");
  if (!j.at("coeffs").is_object()) throw CatalogError(where("coeffs") + " must be an object");

  SpaceId s;
  try {
    s = space_from_json(j.at("space"));
  } catch (const Error& e) {
    throw CatalogError(where("space") + ": " + e.what());
  }
  bool complete = j.value("complete", false);
  Rational scale(1);
  if (j.contains("scale")) {
    try {
      scale = j.at("scale").is_number_integer() ? Rational(j.at("scale").get<long>())
                                                 : Rational::parse(j.at("scale").get<std::string>());
    } catch (const std::exception& e) {
      throw CatalogError(where("scale") + ": " + e.what());
    }
    if (!scale.is_integer() || scale.sign() <= 0) throw CatalogError(where("scale") + " must be a positive integer");
  }

  std::map<GeneratorId, CoeffBound> given;
  for (const auto& [name, v] : j.at("coeffs").items()) {
    GeneratorId g;
    try {
      g = parse_generator(name, s);
    } catch (const Error& e) {
      throw CatalogError(where("coeffs/" + name) + ": generator invalid for " + to_string(s) + " (" + e.what() + ")");
    }
    try {
      if (!given.emplace(g, coeff_from_json(v, g)).second)
        throw CatalogError("generator listed twice");
    } catch (const Error& e) {
      throw CatalogError(where("coeffs/" + name) + ": " + e.what());
    }
  }

  DivisorClass cls(s);
  for (const auto& g : generators(s)) {
    auto it = given.find(g);
    if (it != given.end())
      cls.add(g, it->second);
    else if (!complete)
      cls.add(g, default_unknown(g));
  }

  // Primitivity: the exact part is integral with content equal to `scale`.
  BigInt content = 0;
  for (const auto& [g, c] : cls.terms()) {
    if (!c.is_exact()) continue;
    if (!c.value().is_integer())
      throw CatalogError(where("coeffs/" + generator_name(g, s)) + ": coefficients must be integers (clear denominators)");
    content = gcd(content, c.value().num());
  }
  if (content != 0 && Rational(content) != scale)
    throw CatalogError(where("coeffs") + ": content " + content.get_str() + " differs from scale " + scale.str() +
                       " (store the primitive class or state \"scale\")");

  std::string prov = j.contains("provenance") && j.at("provenance").is_string() ? j.at("provenance").get<std::string>()
                                                                                : std::string();
  return CatalogEntry{j.at("name").get<std::string>(), cls, prov, scale};
}

Json entry_to_json(const CatalogEntry& e) {
  Json coeffs = Json::object();
  for (const auto& [g, c] : e.cls.terms()) coeffs[generator_name(g, e.space())] = coeff_to_json(c, g);
  return Json{{"name", e.name},          {"space", space_to_json(e.space())}, {"coeffs", coeffs},
              {"provenance", e.provenance}, {"complete", true},                  {"scale", e.scale.str()}};
}

std::vector<std::string> Catalog::load_json(const Json& doc) {
  const Json* list = &doc;
  Json single;
  if (doc.is_object() && doc.contains("entries")) {
    list = &doc.at("entries");
  } else if (doc.is_object()) {
    single = Json::array({doc});
    list = &single;
  }
  if (!list->is_array()) throw CatalogError("catalog must be an entry, an array of entries or {\"entries\": [...]}");
  std::vector<CatalogEntry> parsed;
  for (std::size_t k = 0; k < list->size(); ++k) {
    try {
      parsed.push_back(entry_from_json(list->at(k)));
    } catch (const CatalogError& e) {
      throw CatalogError("entries[" + std::to_string(k) + "]: " + e.what());
    }
  }
  std::vector<std::string> names;
  for (auto& e : parsed) {
    names.push_back(e.name);
    add(std::move(e));
  }
  return names;
}

std::vector<std::string> Catalog::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open catalog file " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw CatalogError(path + ": " + e.what());
  }
  return load_json(doc);
}

}  // namespace prym
