#include "prym/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <sstream>

#include "prym/catalog.hpp"
#include "prym/certificates.hpp"
#include "prym/class_text.hpp"
#include "prym/errors.hpp"
#include "prym/json_io.hpp"
#include "prym/morphisms.hpp"
#include "prym/pd_strata.hpp"
#include "prym/published.hpp"
#include "prym/series.hpp"
#include "prym/singularity.hpp"
#include "prym/test_curves.hpp"

namespace prym {

namespace {

struct SpaceOpts {
  std::string family;
  int g = 0;
  int n = 0;

  void add_to(CLI::App* app, bool need_family = true) {
    auto* f = app->add_option("--space", family, "space family: m_gn, m_g2_z2, r_g, r_g2, cnr_g or a full name");
    if (need_family) f->required();
    app->add_option("--g", g, "genus")->required();
    app->add_option("--n", n, "number of markings");
  }
  SpaceId get() const {
    Family f = parse_family(family);
    return make_space(f, g, n);
  }
};

std::vector<std::string> split_list(const std::string& s, char sep = ',') {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    auto a = cur.find_first_not_of(' ');
    auto b = cur.find_last_not_of(' ');
    if (a != std::string::npos) out.push_back(cur.substr(a, b - a + 1));
  }
  return out;
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

std::string coeff_text(const CoeffBound& c) { return c.is_exact() ? c.value().str() : c.str(); }

Catalog load_catalog(const std::string& path) {
  Catalog cat = Catalog::builtin();
  if (!path.empty()) cat.load_file(path);
  return cat;
}

// ---- subcommands ----

int cmd_generators(const SpaceOpts& so, bool json, std::ostream& out) {
  SpaceId s = so.get();
  std::vector<GeneratorId> gens = generators(s);
  if (json) {
    Json names = Json::array();
    for (const auto& g : gens) names.push_back(generator_name(g, s));
    print_json(out, Json{{"space", space_to_json(s)}, {"count", gens.size()}, {"generators", names}});
  } else {
    out << to_string(s) << ": " << gens.size() << " generators\n";
    for (const auto& g : gens) out << "  " << generator_name(g, s) << "\n";
  }
  return 0;
}

int cmd_parse(const SpaceOpts& so, const std::string& text, bool json, std::ostream& out) {
  DivisorClass c = parse_class(text, so.get());
  if (json)
    print_json(out, class_to_json(c));
  else
    out << format_class(c) << "\n";
  return 0;
}

int cmd_pullback(const std::string& map_expr, const std::string& cls_text, const std::string& entry,
                 const std::string& catalog, bool rules, bool json, std::ostream& out) {
  PullbackMap m = map_from_name(map_expr);
  if (rules) {
    Json table = Json::array();
    for (const auto& g : generators(m.source())) {
      std::string name = generator_name(g, m.source());
      std::string image;
      if (m.in_domain(g)) {
        image = format_class(m.rule(g));
      } else {
        auto it = m.excluded().find(g);
        image = "outside domain" + (it != m.excluded().end() ? " (" + it->second + ")" : std::string());
      }
      if (json)
        table.push_back(Json{{"generator", name}, {"image", image}});
      else
        out << name << " -> " << image << "\n";
    }
    if (json)
      print_json(out, Json{{"map", m.name()},
                           {"source", space_to_json(m.source())},
                           {"target", space_to_json(m.target())},
                           {"rules", table}});
    return 0;
  }
  DivisorClass src(m.source());
  std::string label;
  if (!entry.empty()) {
    CatalogEntry e = load_catalog(catalog).entry(entry);
    src = e.cls;
    label = e.name;
  } else if (!cls_text.empty()) {
    src = parse_class(cls_text, m.source());
  } else {
    throw ParameterError("pullback needs --class, --entry or --rules");
  }
  DivisorClass img = m.apply(src);
  if (json) {
    Json j{{"map", m.name()}, {"source", class_to_json(src)}, {"image", class_to_json(img)}};
    if (!label.empty()) j["entry"] = label;
    print_json(out, j);
  } else {
    out << format_class(img) << "\n";
  }
  return 0;
}

int cmd_canonical(const SpaceOpts& so, bool json, std::ostream& out) {
  DivisorClass k = canonical_class(so.get());
  if (json)
    print_json(out, class_to_json(k));
  else
    out << format_class(k) << "\n";
  return 0;
}

int cmd_pd_class(int g, int n, const std::string& partition, bool interior, bool json, std::ostream& out) {
  std::vector<int> d;
  for (const auto& tok : split_list(partition)) {
    if (tok.empty() || tok.size() > 6 || tok.find_first_not_of("0123456789-") != std::string::npos)
      throw ParseError("bad partition entry '" + tok + "'", 0);
    d.push_back(std::stoi(tok));
  }
  if (n != 0 && n != static_cast<int>(d.size()))
    throw ParameterError("--n " + std::to_string(n) + " but the partition has " + std::to_string(d.size()) +
                         " entries");
  Partition p(g, d);
  DivisorClass c = interior ? pd_interior_class(p) : pd_class(p);
  if (json) {
    Json j = class_to_json(c);
    j["partition"] = d;
    print_json(out, j);
  } else {
    out << format_class(c) << "\n";
  }
  return 0;
}

Json ledger_json(const Certificate& c) {
  Json rows = Json::array();
  for (const auto& e : c.ledger)
    rows.push_back(Json{{"generator", generator_name(e.gen, c.target.space())},
                        {"residual", coeff_to_json(e.residual, e.gen)},
                        {"ok", e.ok},
                        {"note", e.note}});
  return rows;
}

struct CertOpts {
  int g = 0;
  std::string space = "r_g2";
  std::string terms;
  std::string coeffs;
  std::string solve;
  std::string epsilon;
  std::string catalog;
  std::string target;
};

int cmd_certificate(const CertOpts& o, bool json, std::ostream& out) {
  Family f = parse_family(o.space);
  if (f != Family::BranchedPrym2 && f != Family::PointedCurvesMod2)
    throw UnsupportedSpaceError("certificates need r_g2 or m_g2_z2");
  SpaceId s = make_space(f, o.g);
  DivisorClass target = o.target.empty() ? canonical_class(s) : parse_class(o.target, s);
  Catalog cat = load_catalog(o.catalog);

  std::vector<std::string> specs = o.terms.empty() ? scenario_terms(o.g) : split_list(o.terms);
  if (specs.empty()) throw ParameterError("no --terms given and no shipped decomposition for g=" + std::to_string(o.g));
  std::vector<Term> terms;
  for (const auto& sp : specs) {
    Term t = term_from_spec(cat, sp);
    if (t.cls.space() != s)
      throw SpaceMismatchError("term " + t.label + " lands on " + to_string(t.cls.space()) + ", not " + to_string(s));
    terms.push_back(std::move(t));
  }

  bool solve_mode = o.coeffs.empty() || !o.solve.empty();
  std::optional<Rational> eps;
  if (!o.epsilon.empty() && o.epsilon != "auto") eps = Rational::parse(o.epsilon);

  Certificate cert(s);
  std::vector<Affine> affine;
  if (solve_mode) {
    std::vector<GeneratorId> pinned;
    std::string spec = o.solve.empty() ? "pinned=psi,lambda,d0p" : o.solve;
    if (spec.rfind("pinned=", 0) != 0) throw ParseError("--solve expects pinned=gen,gen,...", 0);
    for (const auto& name : split_list(spec.substr(7))) pinned.push_back(parse_generator(name, s));
    cert = bigness_certificate(target, terms, pinned, eps);
    affine = cert.solution;
  } else {
    std::vector<std::string> cs = split_list(o.coeffs);
    if (cs.size() != terms.size())
      throw ParameterError(std::to_string(cs.size()) + " coefficients for " + std::to_string(terms.size()) + " terms");
    for (std::size_t k = 0; k < cs.size(); ++k) {
      terms[k].coeff = Rational::parse(cs[k]);
      affine.push_back(Affine{terms[k].coeff, Rational(0)});
    }
    if (o.epsilon == "auto") throw ParameterError("--epsilon auto needs solve mode");
    cert = verify_combination(target, terms, eps.value_or(Rational(0)));
  }
  std::vector<PublishedCheck> cmp =
      cert.verdict == Verdict::Infeasible ? std::vector<PublishedCheck>{} : published_comparison(o.g, terms, affine);

  DivisorClass combination(s);
  for (const auto& t : cert.terms) combination += t.cls.scaled(t.coeff);

  if (json) {
    Json jt = Json::array();
    for (std::size_t k = 0; k < cert.terms.size(); ++k) {
      Json row{{"label", cert.terms[k].label}, {"coeff", cert.terms[k].coeff.str()}};
      if (k < cert.solution.size())
        row["coeffAffine"] = Json{{"constant", cert.solution[k].a.str()}, {"eps", cert.solution[k].b.str()}};
      row["class"] = class_to_json(cert.terms[k].cls);
      jt.push_back(row);
    }
    Json cmpj = Json::array();
    for (const auto& c : cmp)
      cmpj.push_back(Json{{"label", c.label},
                          {"published", c.published.str()},
                          {"computed", c.computed.str()},
                          {"status", c.match() ? "MATCH" : "MISMATCH"}});
    Json failing = Json::array();
    for (const auto& g : cert.failing) failing.push_back(generator_name(g, s));
    Json j{{"space", space_to_json(s)},
           {"mode", solve_mode ? "solve" : "verify"},
           {"verdict", verdict_name(cert.verdict)},
           {"epsilon", cert.epsilon.str()},
           {"epsilonMax", cert.epsilon_max ? Json(cert.epsilon_max->str()) : Json(nullptr)},
           {"binding", cert.binding},
           {"target", class_to_json(target)},
           {"terms", jt},
           {"combination", class_to_json(combination)},
           {"residual", class_to_json(cert.residual)},
           {"ledger", ledger_json(cert)},
           {"failing", failing},
           {"reason", cert.reason},
           {"publishedComparison", cmpj}};
    print_json(out, j);
  } else {
    out << "space: " << to_string(s) << "\n";
    out << "verdict: " << verdict_name(cert.verdict) << "\n";
    if (!cert.reason.empty()) out << "reason: " << cert.reason << "\n";
    out << "epsilon: " << cert.epsilon.str() << "\n";
    if (solve_mode) {
      out << "epsilon max: " << (cert.epsilon_max ? cert.epsilon_max->str() : std::string("unbounded"));
      if (!cert.binding.empty()) {
        out << " (binding:";
        for (const auto& b : cert.binding) out << " " << b;
        out << ")";
      }
      out << "\n";
    }
    out << "terms:\n";
    for (std::size_t k = 0; k < cert.terms.size(); ++k) {
      out << "  " << cert.terms[k].coeff.str();
      if (k < cert.solution.size()) out << "  [" << affine_str(cert.solution[k]) << "]";
      out << "  " << cert.terms[k].label << "\n";
    }
    out << "residual: " << format_class(cert.residual) << "\n";
    int ok = 0;
    for (const auto& e : cert.ledger) {
      if (e.ok) {
        ++ok;
        continue;
      }
      out << "  FAIL " << generator_name(e.gen, s) << ": " << coeff_text(e.residual) << " (" << e.note << ")\n";
    }
    out << "sign ledger: " << ok << "/" << cert.ledger.size() << " residual coefficients certified\n";
    if (!cmp.empty()) {
      out << "published comparison:\n";
      for (const auto& c : cmp)
        out << "  " << (c.match() ? "MATCH   " : "MISMATCH") << " " << c.label << ": published " << c.published.str()
            << ", computed " << c.computed.str() << "\n";
    }
  }
  return cert.verdict == Verdict::BigWitness || cert.verdict == Verdict::EffectiveWitness ? 0 : 1;
}

int cmd_count(long g, bool check, bool json, std::ostream& out) {
  Rational count = count_limit_g1(g);
  BigInt cat = catalan(g);
  bool ok = true;
  IdentityCheck nar{}, cen{}, sq{};
  if (check) {
    nar = narayana_identity(g);
    cen = central_binomial_identity(g);
    sq = square_difference_identity(g);
    ok = count == Rational(cat) && nar.equal() && cen.equal() && sq.equal();
  }
  if (json) {
    Json j{{"g", g}, {"count", count.str()}, {"catalan", cat.get_str()}};
    if (check) {
      j["identitiesOk"] = ok;
      j["narayana"] = Json{{"lhs", nar.lhs.get_str()}, {"rhs", nar.rhs.get_str()}};
      j["centralBinomial"] = Json{{"lhs", cen.lhs.get_str()}, {"rhs", cen.rhs.get_str()}};
      j["squareDifference"] = Json{{"value", sq.lhs.get_str()}, {"catalan", sq.rhs.get_str()}};
    }
    print_json(out, j);
  } else {
    out << "count: " << count.str() << "\ncatalan: " << cat.get_str() << "\n";
    if (check) out << "identities: " << (ok ? "ok" : "FAILED") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_audit(const std::string& path, bool json, std::ostream& out) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what(), 0);
  }
  Json r;
  try {
    r = audit_report(doc);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what(), 0);
  }
  if (json) {
    print_json(out, r);
  } else {
    out << "smooth: " << (r["smooth"].get<bool>() ? "yes" : "no") << "\n";
    out << "non-canonical: " << (r["nonCanonical"].get<bool>() ? "yes" : "no") << " ("
        << r["canonicalNote"].get<std::string>() << ")\n";
    out << "arithmetic genus: " << r["arithmeticGenus"].get<int>() << "\n";
    for (const auto& row : r["ageLedger"])
      out << "  " << row["kind"].get<std::string>() << " ord " << row["ord"].get<int>() << " "
          << row["j"].get<std::string>() << ": w >= " << row["w"].get<std::string>()
          << (row["excludedUnderStar"].get<bool>() ? " (excluded under (*))" : "") << "\n";
    out << "age lower bound: " << r["ageLowerBound"].get<std::string>() << "\n";
  }
  return 0;
}

int cmd_intersect(const std::string& curve, const std::string& cls_text, const std::string& map_expr, bool json,
                  std::ostream& out) {
  TestCurve c = parse_test_curve(curve);
  DivisorClass cls(c.space);
  if (!map_expr.empty()) {
    PullbackMap m = map_from_name(map_expr);
    cls = m.apply(parse_class(cls_text, m.source()));
  } else {
    cls = parse_class(cls_text, c.space);
  }
  CoeffBound v = intersect(c, cls);
  if (json)
    print_json(out, Json{{"curve", c.name()}, {"class", class_to_json(cls)}, {"value", coeff_to_json(v, GeneratorId::lambda())}});
  else
    out << coeff_text(v) << "\n";
  return 0;
}

int cmd_slope(const std::string& s_text, int bn_g, bool json, std::ostream& out) {
  Rational s = bn_g > 0 ? bn_slope(bn_g) : Rational::parse(s_text);
  Rational m = slope_locus_margin(s);
  if (json)
    print_json(out, Json{{"s", s.str()}, {"margin", m.str()}, {"containsLocus", m.sign() < 0}});
  else
    out << "s = " << s.str() << "\nmargin = " << m.str() << "\n";
  return 0;
}

int cmd_catalog(const std::string& path, const std::string& name, bool json, std::ostream& out) {
  Catalog cat = load_catalog(path);
  if (name.empty()) {
    std::vector<std::string> names = cat.names();
    if (json) {
      print_json(out, Json{{"entries", names}});
    } else {
      for (const auto& n : names) out << n << "\n";
    }
    return 0;
  }
  CatalogEntry e = cat.entry(name);
  if (json) {
    Json j = entry_to_json(e);
    j["text"] = format_class(e.cls);
    print_json(out, j);
  } else {
    out << e.name << " on " << to_string(e.space()) << " (scale " << e.scale.str() << ")\n";
    out << "  " << format_class(e.cls) << "\n";
    if (!e.provenance.empty()) out << "  " << e.provenance << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact divisor class calculus on moduli of Prym curves", "prymcalc"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "JSON output");

  SpaceOpts gen_space, parse_space, canon_space;
  std::string text, map_expr, entry, catalog, partition, curve, s_text, name, input;
  bool rules = false, interior = false, check = false;
  int pd_g = 0, pd_n = 0, bn_g = 0;
  long count_g = 0;
  CertOpts cert;

  auto* c_gen = app.add_subcommand("generators", "list the generator inventory of a space");
  gen_space.add_to(c_gen);
  c_gen->add_flag("--json", json);

  auto* c_parse = app.add_subcommand("parse", "parse and canonicalize a class");
  parse_space.add_to(c_parse);
  c_parse->add_option("--class", text, "class expression")->required();
  c_parse->add_flag("--json", json);

  auto* c_pull = app.add_subcommand("pullback", "apply a pullback map");
  c_pull->add_option("--map", map_expr, "map name, compositions joined by '.' or the ring operator")->required();
  c_pull->add_option("--class", text, "class on the source space");
  c_pull->add_option("--entry", entry, "catalog entry on the source space");
  c_pull->add_option("--catalog", catalog, "extra catalog file");
  c_pull->add_flag("--rules", rules, "print the rule table");
  c_pull->add_flag("--json", json);

  auto* c_can = app.add_subcommand("canonical", "canonical class");
  canon_space.add_to(c_can);
  c_can->add_flag("--json", json);

  auto* c_pd = app.add_subcommand("pd-class", "class of a Prym-canonical divisorial stratum");
  c_pd->add_option("--g", pd_g, "genus")->required();
  c_pd->add_option("--n", pd_n, "number of markings");
  c_pd->add_option("--partition", partition, "d1,d2,... summing to g-1")->required();
  c_pd->add_flag("--interior", interior, "only the interior part");
  c_pd->add_flag("--json", json);

  auto* c_cert = app.add_subcommand("certificate", "effectivity / bigness certificate for the canonical class");
  c_cert->add_option("--g", cert.g, "genus")->required();
  c_cert->add_option("--space", cert.space, "r_g2 (default) or m_g2_z2");
  c_cert->add_option("--terms", cert.terms, "ENTRY@MAP,... (default: the shipped decomposition for g)");
  c_cert->add_option("--coeffs", cert.coeffs, "fixed coefficients c1,c2,... (verify mode)");
  c_cert->add_option("--solve", cert.solve, "pinned=gen,gen,... (default pinned=psi,lambda,d0p)");
  c_cert->add_option("--epsilon", cert.epsilon, "p/q or auto");
  c_cert->add_option("--catalog", cert.catalog, "extra catalog file");
  c_cert->add_option("--target", cert.target, "target class (default: canonical class)");
  c_cert->add_flag("--json", json);

  auto* c_count = app.add_subcommand("count-g1", "limit linear series count against the Catalan number");
  c_count->add_option("--g", count_g, "genus")->required()->check(CLI::Range(1, 100000));
  c_count->add_flag("--check-identities", check, "also check the binomial identities");
  c_count->add_flag("--json", json);

  auto* c_audit = app.add_subcommand("audit", "singularity audit of a curve sketch");
  c_audit->add_option("--input", input, "sketch JSON file")->required();
  c_audit->add_flag("--json", json);

  auto* c_int = app.add_subcommand("intersect", "intersect a test curve with a class");
  c_int->add_option("--curve", curve, "A1i:i or Aeta:i")->required();
  c_int->add_option("--class", text, "class expression")->required();
  c_int->add_option("--map", map_expr, "pull the class back through this map first");
  c_int->add_flag("--json", json);

  auto* c_slope = app.add_subcommand("slope-margin", "margin s - 10 of a slope");
  auto* s_opt = c_slope->add_option("--s", s_text, "slope p/q");
  auto* bn_opt = c_slope->add_option("--bn", bn_g, "use the Brill-Noether slope of genus g");
  s_opt->excludes(bn_opt);
  c_slope->add_flag("--json", json);

  auto* c_cat = app.add_subcommand("catalog", "list or show catalog entries");
  c_cat->add_option("--catalog", catalog, "extra catalog file");
  c_cat->add_option("--name", name, "entry to show");
  c_cat->add_flag("--json", json);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*c_gen) return cmd_generators(gen_space, json, out);
    if (*c_parse) return cmd_parse(parse_space, text, json, out);
    if (*c_pull) return cmd_pullback(map_expr, text, entry, catalog, rules, json, out);
    if (*c_can) return cmd_canonical(canon_space, json, out);
    if (*c_pd) return cmd_pd_class(pd_g, pd_n, partition, interior, json, out);
    if (*c_cert) return cmd_certificate(cert, json, out);
    if (*c_count) return cmd_count(count_g, check, json, out);
    if (*c_audit) return cmd_audit(input, json, out);
    if (*c_int) return cmd_intersect(curve, text, map_expr, json, out);
    if (*c_slope) {
      if (s_text.empty() && bn_g == 0) throw ParameterError("slope-margin needs --s or --bn");
      return cmd_slope(s_text, bn_g, json, out);
    }
    if (*c_cat) return cmd_catalog(catalog, name, json, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace prym
