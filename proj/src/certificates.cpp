#include "prym/certificates.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "prym/errors.hpp"

namespace prym {

using G = GeneratorId;

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::BigWitness: return "BigWitness";
    case Verdict::EffectiveWitness: return "EffectiveWitness";
    case Verdict::Inconclusive: return "Inconclusive";
    case Verdict::Infeasible: return "Infeasible";
  }
  return "?";
}

std::string affine_str(const Affine& x) {
  if (x.b.is_zero()) return x.a.str();
  std::string eps = x.b == Rational(1) ? "eps" : x.b == Rational(-1) ? "-eps" : x.b.str() + "*eps";
  if (x.a.is_zero()) return eps;
  if (x.b.sign() < 0) return x.a.str() + " - " + (x.b == Rational(-1) ? "eps" : (-x.b).str() + "*eps");
  return x.a.str() + " + " + eps;
}

namespace {

bool has_total_psi(const SpaceId& s) {
  return s.family == Family::BranchedPrym2 || s.family == Family::PointedCurvesMod2;
}

}  // namespace

Certificate verify_combination(const DivisorClass& target, const std::vector<Term>& terms, const Rational& eps) {
  const SpaceId& s = target.space();
  if (eps.sign() < 0) throw ParameterError("epsilon must be >= 0");
  Certificate cert(s);
  cert.target = target;
  cert.terms = terms;
  cert.epsilon = eps;

  DivisorClass res = target;
  if (!eps.is_zero()) {
    if (!has_total_psi(s)) throw ParameterError("a psi weight needs a space with a total psi class, not " + to_string(s));
    res.add(G::psi(), -eps);
  }
  for (const auto& t : terms) {
    if (t.cls.space() != s)
      throw SpaceMismatchError("term " + t.label + " lives on " + to_string(t.cls.space()) + ", target on " +
                               to_string(s));
    if (t.coeff.sign() < 0) throw ParameterError("term " + t.label + " has negative coefficient " + t.coeff.str());
    res -= t.cls.scaled(t.coeff);
  }
  cert.residual = res;

  for (const auto& [g, c] : res.terms()) {
    SignEntry e{g, c, false, {}};
    if (!g.is_boundary()) {
      e.note = "must vanish";
    } else if (c.lo() && c.lo()->sign() >= 0) {
      e.ok = true;
      e.note = c.is_exact() ? "nonnegative" : "lower bound " + c.lo()->str();
    } else if (c.lo()) {
      e.note = "can be negative";
    } else {
      e.note = c.from_unknown() ? "depends on an unknown coefficient" : "no lower bound";
    }
    if (!e.ok) cert.failing.push_back(g);
    cert.ledger.push_back(std::move(e));
  }

  if (cert.failing.empty()) {
    cert.verdict = eps.sign() > 0 ? Verdict::BigWitness : Verdict::EffectiveWitness;
  } else {
    cert.verdict = Verdict::Inconclusive;
    cert.reason = "uncertified residual sign on";
    for (const auto& g : cert.failing) cert.reason += " " + generator_name(g, s);
  }
  return cert;
}

SolveResult solve_coefficients(const DivisorClass& target, const std::vector<DivisorClass>& classes,
                               const std::vector<GeneratorId>& pinned) {
  const SpaceId& s = target.space();
  const std::size_t m = pinned.size(), k = classes.size();
  for (const auto& c : classes)
    if (c.space() != s) throw SpaceMismatchError("class on " + to_string(c.space()) + ", target on " + to_string(s));

  // Augmented rows [M | a | b | Y]: M c = a + b ε, Y tracks row operations.
  const std::size_t w = k + 2 + m;
  std::vector<std::vector<Rational>> rows(m, std::vector<Rational>(w));
  for (std::size_t i = 0; i < m; ++i) {
    GeneratorId p = canonicalize(pinned[i], s);
    for (std::size_t j = 0; j < k; ++j) {
      CoeffBound c = classes[j].coeff(p);
      if (!c.is_exact())
        throw UnknownCoefficientError("pinned generator " + generator_name(p, s) + " has non-exact coefficient " +
                                      c.str() + " in class " + std::to_string(j + 1));
      rows[i][j] = c.value();
    }
    rows[i][k] = target.coeff(p).value();
    rows[i][k + 1] = p == G::psi() ? Rational(-1) : Rational(0);
    rows[i][k + 2 + i] = Rational(1);
  }

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < k && r < m; ++col) {
    std::size_t piv = r;
    while (piv < m && rows[piv][col].is_zero()) ++piv;
    if (piv == m) continue;
    std::swap(rows[r], rows[piv]);
    Rational inv = Rational(1) / rows[r][col];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || rows[i][col].is_zero()) continue;
      Rational f = rows[i][col];
      for (std::size_t j = 0; j < w; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivot_col.push_back(col);
    ++r;
  }

  SolveResult out;
  for (std::size_t i = r; i < m; ++i) {
    Affine v{rows[i][k], rows[i][k + 1]};
    if (v.a.is_zero() && v.b.is_zero()) continue;
    out.feasible = false;
    out.certificate_row.assign(rows[i].begin() + static_cast<long>(k + 2), rows[i].end());
    out.certificate_value = v;
    out.reason = v.a.is_zero() ? "pinned equations force eps = 0"
                               : "pinned equations are inconsistent (a combination of them reads 0 = " +
                                     affine_str(v) + ")";
    return out;
  }
  if (r < k)
    throw ParameterError("underdetermined: " + std::to_string(k) + " classes but only rank " + std::to_string(r) +
                         " on the pinned generators");

  out.feasible = true;
  out.coeffs.assign(k, Affine{});
  for (std::size_t i = 0; i < r; ++i) out.coeffs[pivot_col[i]] = Affine{rows[i][k], rows[i][k + 1]};
  return out;
}

Certificate bigness_certificate(const DivisorClass& target, const std::vector<Term>& classes,
                                const std::vector<GeneratorId>& pinned, std::optional<Rational> eps) {
  const SpaceId& s = target.space();
  std::vector<DivisorClass> cls;
  for (const auto& t : classes) cls.push_back(t.cls);
  SolveResult sol = solve_coefficients(target, cls, pinned);

  auto with_coeffs = [&](const Rational& e) {
    std::vector<Term> terms = classes;
    for (std::size_t j = 0; j < terms.size(); ++j) terms[j].coeff = sol.coeffs[j].at(e);
    return terms;
  };

  if (!sol.feasible) {
    Certificate cert(s);
    cert.target = target;
    cert.terms = classes;
    for (auto& t : cert.terms) t.coeff = Rational(0);
    cert.residual = target;
    cert.verdict = Verdict::Infeasible;
    cert.reason = sol.reason;
    return cert;
  }

  // Constraints α + βε >= 0 with a name each; `blocked` ones admit no ε.
  struct Constraint {
    std::string name;
    Affine f;
    bool blocked = false;
  };
  std::vector<Constraint> cons;
  for (std::size_t j = 0; j < classes.size(); ++j) cons.push_back({"coefficient of " + classes[j].label, sol.coeffs[j]});

  std::set<GeneratorId> pinned_set;
  for (const auto& p : pinned) pinned_set.insert(canonicalize(p, s));
  std::set<GeneratorId> support;
  for (const auto& [g, c] : target.terms()) support.insert(g);
  for (const auto& d : cls)
    for (const auto& [g, c] : d.terms()) support.insert(g);
  if (has_total_psi(s)) support.insert(G::psi());

  for (const auto& g : support) {
    if (pinned_set.count(g)) continue;
    Constraint c{generator_name(g, s), {}};
    CoeffBound t = target.coeff(g);
    if (!t.lo()) {
      c.blocked = true;
    } else {
      c.f.a = *t.lo();
    }
    if (g == G::psi()) c.f.b -= Rational(1);
    for (std::size_t j = 0; j < cls.size() && !c.blocked; ++j) {
      const Affine& x = sol.coeffs[j];
      if (x.a.is_zero() && x.b.is_zero()) continue;
      CoeffBound d = cls[j].coeff(g);
      if (!d.hi()) {
        c.blocked = true;
        break;
      }
      c.f.a -= x.a * *d.hi();
      c.f.b -= x.b * *d.hi();
    }
    // λ and ψ must cancel identically, not just be nonnegative.
    if (!g.is_boundary() && !c.blocked) {
      bool exact = t.is_exact();
      for (const auto& d : cls) exact = exact && d.coeff(g).is_exact();
      if (!exact || !c.f.a.is_zero() || !c.f.b.is_zero()) c.blocked = true;
      continue;
    }
    cons.push_back(std::move(c));
  }

  Rational chosen(0);
  std::optional<Rational> eps_max;
  std::vector<std::string> binding;
  std::vector<std::string> zero_only;
  for (const auto& c : cons)
    if (c.blocked || c.f.a.sign() < 0 || (c.f.a.is_zero() && c.f.b.sign() < 0)) zero_only.push_back(c.name);
  if (zero_only.empty()) {
    for (const auto& c : cons) {
      if (c.f.b.sign() >= 0) continue;
      Rational lim = c.f.a / (-c.f.b);
      if (!eps_max || lim < *eps_max) {
        eps_max = lim;
        binding.clear();
      }
      if (lim == *eps_max) binding.push_back(c.name);
    }
    chosen = eps_max ? *eps_max / Rational(2) : Rational(1);
  } else {
    eps_max = Rational(0);
    binding = zero_only;
  }
  if (eps) chosen = *eps;
  if (!has_total_psi(s)) chosen = Rational(0);

  std::vector<Term> terms = with_coeffs(chosen);
  for (const auto& t : terms) {
    if (t.coeff.sign() < 0) {
      Certificate cert(s);
      cert.target = target;
      cert.terms = terms;
      cert.epsilon = chosen;
      cert.residual = target;
      cert.verdict = Verdict::Infeasible;
      cert.reason = "solved coefficient of " + t.label + " is negative (" + t.coeff.str() + ") at eps = " + chosen.str();
      cert.solution = sol.coeffs;
      cert.epsilon_max = eps_max;
      cert.binding = binding;
      return cert;
    }
  }
  Certificate cert = verify_combination(target, terms, chosen);
  cert.solution = sol.coeffs;
  cert.epsilon_max = eps_max;
  cert.binding = binding;
  return cert;
}

}  // namespace prym
