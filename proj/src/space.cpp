#include "prym/space.hpp"

#include <bit>
#include <set>

#include "prym/errors.hpp"

namespace prym {

namespace {

int popcount(MarkingSet s) { return std::popcount(s); }

}  // namespace

SpaceId make_space(Family family, int g, int n) {
  switch (family) {
    case Family::PointedCurves:
    case Family::PointedPrym:
      if (n < 0 || n > kMaxMarkings) throw ParameterError("marking count out of range: " + std::to_string(n));
      if (g < 1 || (g == 1 && n < 1))
        throw ParameterError(family_name(family) + " needs g >= 2, or g = 1 with n >= 1 (got g=" + std::to_string(g) +
                             ", n=" + std::to_string(n) + ")");
      return {family, g, n};
    case Family::PointedCurvesMod2:
      if (g < 2) throw ParameterError("PointedCurvesMod2 needs g >= 2");
      return {family, g, 2};
    case Family::PrymCurves:
    case Family::BranchedPrym2:
      if (g < 2) throw ParameterError(family_name(family) + " needs g >= 2");
      return {family, g, 0};
  }
  throw ParameterError("unknown family");
}

SpaceId pointed_curves(int g, int n) { return make_space(Family::PointedCurves, g, n); }
SpaceId pointed_curves_mod2(int g) { return make_space(Family::PointedCurvesMod2, g, 2); }
SpaceId prym_curves(int g) { return make_space(Family::PrymCurves, g, 0); }
SpaceId branched_prym2(int g) { return make_space(Family::BranchedPrym2, g, 0); }
SpaceId pointed_prym(int g, int n) { return make_space(Family::PointedPrym, g, n); }

std::string family_name(Family f) {
  switch (f) {
    case Family::PointedCurves: return "PointedCurves";
    case Family::PointedCurvesMod2: return "PointedCurvesMod2";
    case Family::PrymCurves: return "PrymCurves";
    case Family::BranchedPrym2: return "BranchedPrym2";
    case Family::PointedPrym: return "PointedPrym";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  if (s == "PointedCurves" || s == "m_gn" || s == "m_g") return Family::PointedCurves;
  if (s == "PointedCurvesMod2" || s == "m_g2_z2") return Family::PointedCurvesMod2;
  if (s == "PrymCurves" || s == "r_g") return Family::PrymCurves;
  if (s == "BranchedPrym2" || s == "r_g2") return Family::BranchedPrym2;
  if (s == "PointedPrym" || s == "cnr_g") return Family::PointedPrym;
  throw ParameterError("unknown space family '" + s + "'");
}

std::string to_string(const SpaceId& s) {
  std::string out = family_name(s.family) + "(" + std::to_string(s.g);
  if (s.family == Family::PointedCurves || s.family == Family::PointedPrym) out += "," + std::to_string(s.n);
  return out + ")";
}

MarkingSet full_set(int n) { return n >= 32 ? ~0U : ((1U << n) - 1U); }

std::vector<int> members(MarkingSet s) {
  std::vector<int> out;
  for (int k = 1; k <= 32 && s; ++k, s >>= 1)
    if (s & 1U) out.push_back(k);
  return out;
}

MarkingSet make_set(const std::vector<int>& marks) {
  MarkingSet s = 0;
  for (int m : marks) {
    if (m < 1 || m > kMaxMarkings) throw ValidityError("marking " + std::to_string(m) + " out of range");
    s |= 1U << (m - 1);
  }
  return s;
}

namespace {

[[noreturn]] void invalid(const GeneratorId& gen, const SpaceId& space, const std::string& why = {}) {
  std::string name;
  try {
    name = generator_name(gen, space);
  } catch (...) {
    name = "<generator>";
  }
  throw ValidityError(name + " is not a generator of " + to_string(space) + (why.empty() ? "" : ": " + why));
}

// (i,S) ~ (g-i, S^c): keep smaller i, ties broken by S containing marking 1.
GeneratorId pick_symmetric(GenKind kind, int i, MarkingSet s, const SpaceId& space) {
  int j = space.g - i;
  MarkingSet sc = full_set(space.n) & ~s;
  if (i < j) return {kind, i, s};
  if (j < i) return {kind, j, sc};
  if (space.n == 0 || contains(s, 1)) return {kind, i, s};
  return {kind, j, sc};
}

GeneratorId canon_pointed_curves(const GeneratorId& gen, const SpaceId& sp) {
  switch (gen.kind) {
    case GenKind::Lambda:
    case GenKind::Delta0: return gen;
    case GenKind::PsiJ:
      if (gen.index < 1 || gen.index > sp.n) invalid(gen, sp, "marking index out of range");
      return gen;
    case GenKind::DeltaIS: {
      int i = gen.index;
      MarkingSet s = gen.set;
      if (i < 0 || i > sp.g || (s & ~full_set(sp.n))) invalid(gen, sp);
      int sz = popcount(s), szc = sp.n - sz;
      if ((i == 0 && sz < 2) || (i == sp.g && szc < 2)) invalid(gen, sp, "unstable splitting");
      return pick_symmetric(GenKind::DeltaIS, i, s, sp);
    }
    default: invalid(gen, sp);
  }
}

GeneratorId canon_mod2(const GeneratorId& gen, const SpaceId& sp) {
  const int g = sp.g;
  switch (gen.kind) {
    case GenKind::Lambda:
    case GenKind::Psi:
    case GenKind::Delta0: return gen;
    case GenKind::DeltaIS: {
      int i = gen.index;
      MarkingSet s = gen.set;
      if (s > 3U || i < 0 || i > g) invalid(gen, sp);
      if (s == 1U || s == 2U) {
        if (i < 1 || i > g - 1) invalid(gen, sp, "unstable splitting");
        return GeneratorId::delta(std::min(i, g - i), 1U);
      }
      // (i,{1,2}) ~ (g-i, {})
      int i12 = s == 3U ? i : g - i;
      if (i12 < 0 || i12 > g - 1) invalid(gen, sp, "unstable splitting");
      if (i12 <= g - i12) return GeneratorId::delta(i12, 3U);
      return GeneratorId::delta(g - i12, 0U);
    }
    default: invalid(gen, sp);
  }
}

// Shared by PrymCurves (n = 0) and PointedPrym.
GeneratorId canon_prym(const GeneratorId& gen, const SpaceId& sp) {
  const int g = sp.g;
  switch (gen.kind) {
    case GenKind::Lambda:
    case GenKind::Delta0Prime:
    case GenKind::Delta0DoublePrime:
    case GenKind::Delta0Ram: return gen;
    case GenKind::PsiJ:
      if (sp.family != Family::PointedPrym || gen.index < 1 || gen.index > sp.n) invalid(gen, sp);
      return gen;
    case GenKind::DeltaIS: {
      if (gen.set & ~full_set(sp.n)) invalid(gen, sp);
      if (gen.index < 1 || gen.index > g) invalid(gen, sp, "η is trivial on a rational side");
      if (gen.index == g && sp.n - popcount(gen.set) < 2) invalid(gen, sp, "unstable splitting");
      return gen;
    }
    case GenKind::DeltaSplit: {
      if (gen.set & ~full_set(sp.n)) invalid(gen, sp);
      if (gen.index < 1 || gen.index > g - 1) invalid(gen, sp, "both sides need positive genus");
      return pick_symmetric(GenKind::DeltaSplit, gen.index, gen.set, sp);
    }
    default: invalid(gen, sp);
  }
}

GeneratorId canon_branched(const GeneratorId& gen, const SpaceId& sp) {
  const int g = sp.g;
  switch (gen.kind) {
    case GenKind::Lambda:
    case GenKind::Psi:
    case GenKind::Delta0Prime:
    case GenKind::Delta0Ram: return gen;
    case GenKind::DeltaUnordered:
      if (gen.index < 1 || gen.index > g - 1) invalid(gen, sp);
      return GeneratorId::unordered(std::min(gen.index, g - gen.index));
    case GenKind::DeltaO:
    case GenKind::DeltaEta:
      if (gen.index < 0 || gen.index > g - 1) invalid(gen, sp);
      return gen;
    default: invalid(gen, sp);
  }
}

}  // namespace

GeneratorId canonicalize(const GeneratorId& gen, const SpaceId& space) {
  switch (space.family) {
    case Family::PointedCurves: return canon_pointed_curves(gen, space);
    case Family::PointedCurvesMod2: return canon_mod2(gen, space);
    case Family::PrymCurves:
    case Family::PointedPrym: return canon_prym(gen, space);
    case Family::BranchedPrym2: return canon_branched(gen, space);
  }
  invalid(gen, space);
}

bool is_valid(const GeneratorId& gen, const SpaceId& space) {
  try {
    return canonicalize(gen, space) == gen;
  } catch (const ValidityError&) {
    return false;
  }
}

std::vector<GeneratorId> generators(const SpaceId& sp) {
  std::set<GeneratorId> out;
  auto add = [&](const GeneratorId& g) { out.insert(canonicalize(g, sp)); };
  auto try_add = [&](const GeneratorId& g) {
    try {
      add(g);
    } catch (const ValidityError&) {
    }
  };
  const int g = sp.g;
  const MarkingSet all = full_set(sp.n);
  add(GeneratorId::lambda());
  switch (sp.family) {
    case Family::PointedCurves:
      for (int j = 1; j <= sp.n; ++j) add(GeneratorId::psi(j));
      add(GeneratorId::delta0());
      for (int i = 0; i <= g; ++i)
        for (MarkingSet s = 0; s <= all; ++s) try_add(GeneratorId::delta(i, s));
      break;
    case Family::PointedCurvesMod2:
      add(GeneratorId::psi());
      add(GeneratorId::delta0());
      for (int i = 0; i <= g; ++i)
        for (MarkingSet s : {0U, 1U, 3U}) try_add(GeneratorId::delta(i, s));
      break;
    case Family::PrymCurves:
    case Family::PointedPrym:
      for (int j = 1; j <= sp.n; ++j) add(GeneratorId::psi(j));
      add(GeneratorId::delta0p());
      add(GeneratorId::delta0pp());
      add(GeneratorId::delta0ram());
      for (int i = 1; i <= g; ++i)
        for (MarkingSet s = 0; s <= all; ++s) {
          try_add(GeneratorId::delta(i, s));
          try_add(GeneratorId::split(i, s));
        }
      break;
    case Family::BranchedPrym2:
      add(GeneratorId::psi());
      add(GeneratorId::delta0p());
      add(GeneratorId::delta0ram());
      for (int i = 1; i <= g / 2; ++i) add(GeneratorId::unordered(i));
      for (int i = 0; i < g; ++i) {
        add(GeneratorId::marked_o(i));
        add(GeneratorId::marked_eta(i));
      }
      break;
  }
  return {out.begin(), out.end()};
}

namespace {

std::string set_text(MarkingSet s) {
  std::string out = "{";
  bool first = true;
  for (int m : members(s)) {
    if (!first) out += ",";
    out += std::to_string(m);
    first = false;
  }
  return out + "}";
}

}  // namespace

std::string generator_name(const GeneratorId& gen, const SpaceId& space) {
  const std::string i = std::to_string(gen.index);
  switch (gen.kind) {
    case GenKind::Lambda: return "lambda";
    case GenKind::Psi: return "psi";
    case GenKind::PsiJ: return "psi[" + i + "]";
    case GenKind::Delta0: return "d0";
    case GenKind::Delta0Prime: return "d0p";
    case GenKind::Delta0DoublePrime: return "d0pp";
    case GenKind::Delta0Ram: return "d0ram";
    case GenKind::DeltaIS: return "d{" + i + "," + set_text(gen.set) + "}";
    case GenKind::DeltaSplit:
      return "d{" + i + "," + set_text(gen.set) + ":" + std::to_string(space.g - gen.index) + "}";
    case GenKind::DeltaUnordered: return "d{" + i + ",{}:" + std::to_string(space.g - gen.index) + "}";
    case GenKind::DeltaO: return "dO{" + i + "}";
    case GenKind::DeltaEta: return "dEta{" + i + "}";
  }
  return "?";
}

}  // namespace prym
