#include "prym/morphisms.hpp"

#include <set>

#include "prym/errors.hpp"

namespace prym {

void PullbackMap::set_rule(const GeneratorId& gen, DivisorClass image) {
  if (image.space() != target_)
    throw SpaceMismatchError("rule image for map " + name_ + " lives on " + to_string(image.space()));
  if (!image.is_exact()) throw ParameterError("map rules must be exact");
  GeneratorId key = canonicalize(gen, source_);
  excluded_.erase(key);
  rules_.insert_or_assign(key, std::move(image));
}

void PullbackMap::exclude(const GeneratorId& gen, std::string reason) {
  GeneratorId key = canonicalize(gen, source_);
  rules_.erase(key);
  excluded_.insert_or_assign(key, std::move(reason));
}

const DivisorClass& PullbackMap::rule(const GeneratorId& gen) const {
  GeneratorId key = canonicalize(gen, source_);
  auto it = rules_.find(key);
  if (it != rules_.end()) return it->second;
  auto ex = excluded_.find(key);
  throw PartialityError(name_, generator_name(key, source_), ex == excluded_.end() ? std::string() : ex->second);
}

DivisorClass PullbackMap::apply(const DivisorClass& cls) const {
  if (cls.space() != source_)
    throw SpaceMismatchError("map " + name_ + " expects a class on " + to_string(source_) + ", got " +
                             to_string(cls.space()));
  DivisorClass out(target_);
  for (const auto& [g, c] : cls.terms()) {
    const DivisorClass& img = rule(g);
    for (const auto& [tg, r] : img.terms()) out.add(tg, c * r.value());
  }
  return out;
}

PullbackMap compose(const PullbackMap& outer, const PullbackMap& inner) {
  if (inner.target() != outer.source())
    throw SpaceMismatchError("cannot compose " + outer.name() + " (from " + to_string(outer.source()) + ") after " +
                             inner.name() + " (to " + to_string(inner.target()) + ")");
  PullbackMap out(outer.name() + "\xE2\x88\x98" + inner.name(), inner.source(), outer.target());
  for (const auto& [g, img] : inner.rules()) {
    try {
      out.set_rule(g, outer.apply(img));
    } catch (const PartialityError& e) {
      out.exclude(g, "its image needs " + e.generator() + ", outside " + outer.name());
    }
  }
  for (const auto& [g, why] : inner.excluded()) out.exclude(g, why);
  return out;
}

PullbackMap identity_map(const SpaceId& space) {
  PullbackMap m("id", space, space);
  for (const auto& g : generators(space)) m.set_rule(g, DivisorClass::single(space, g));
  return m;
}

namespace {

using G = GeneratorId;

// Builds a rule image; add() canonicalizes, once() implements set semantics
// (each distinct divisor counted once however many descriptions hit it).
struct Image {
  DivisorClass cls;
  std::set<GeneratorId> seen;
  explicit Image(const SpaceId& s) : cls(s) {}
  Image& add(const GeneratorId& g, const Rational& c) {
    cls.add(g, c);
    return *this;
  }
  Image& once(const GeneratorId& g) {
    GeneratorId key = canonicalize(g, cls.space());
    if (seen.insert(key).second) cls.add(key, Rational(1));
    return *this;
  }
};

void check_g(int g, int min, const char* what) {
  if (g < min) throw ParameterError(std::string(what) + " needs g >= " + std::to_string(min));
}

// Markings T = {n-s+1..n} of a gluing; the new marking is n-s+1.
struct Gluing {
  int g, i, n, s;
  MarkingSet T, rest;  // rest = {1..n-s}
  int x;
  Gluing(int g_, int i_, int n_, int s_) : g(g_), i(i_), n(n_), s(s_) {
    if (n < 1 || s < 1 || s > n) throw ParameterError("gluing needs 1 <= s <= n");
    if (i < 1 || i > g - 1) throw ParameterError("gluing needs 1 <= i <= g-1");
    rest = full_set(n - s);
    T = full_set(n) & ~rest;
    x = n - s + 1;
  }
  MarkingSet with_x(MarkingSet a) const { return (a & rest) | (1U << (x - 1)); }
  bool subset_T(MarkingSet a) const { return (a & T) == T; }
  bool avoids_T(MarkingSet a) const { return (a & T) == 0; }
  void psi_rules(PullbackMap& m) const {
    for (int j = 1; j <= n; ++j) {
      DivisorClass img(m.target());
      if (j <= n - s) img.add(G::psi(j), Rational(1));
      m.set_rule(G::psi(j), img);
    }
  }
};

std::string args(std::initializer_list<int> xs) {
  std::string out;
  for (int v : xs) out += (out.empty() ? "" : ",") + std::to_string(v);
  return out;
}

}  // namespace

PullbackMap map_i_star(int g) {
  check_g(g, 2, "i_star");
  SpaceId src = prym_curves(g + 1), tgt = branched_prym2(g);
  PullbackMap m("i_star:" + std::to_string(g), src, tgt);
  m.set_rule(G::lambda(), DivisorClass::single(tgt, G::lambda()));
  m.set_rule(G::delta0pp(), DivisorClass(tgt));
  m.set_rule(G::delta0p(), DivisorClass::single(tgt, G::delta0p()));
  Image ram(tgt);
  ram.add(G::psi(), Rational(-1, 2)).add(G::delta0ram(), Rational(1));
  for (int i = 1; i <= g / 2; ++i) ram.add(G::unordered(i), Rational(1));
  m.set_rule(G::delta0ram(), ram.cls);
  for (const auto& sg : generators(src)) {
    if (sg.kind == GenKind::DeltaIS) {
      m.set_rule(sg, DivisorClass::single(tgt, G::marked_o(sg.index - 1)));
    } else if (sg.kind == GenKind::DeltaSplit) {
      Image img(tgt);
      img.once(G::marked_eta(sg.index - 1)).once(G::marked_eta(g - sg.index));
      m.set_rule(sg, img.cls);
    }
  }
  return m;
}

PullbackMap map_pi_star_g2(int g) {
  check_g(g, 2, "pi_star_g2");
  SpaceId src = pointed_curves_mod2(g), tgt = branched_prym2(g);
  PullbackMap m("pi_star_g2:" + std::to_string(g), src, tgt);
  m.set_rule(G::lambda(), DivisorClass::single(tgt, G::lambda()));
  m.set_rule(G::psi(), DivisorClass::single(tgt, G::psi()));
  m.set_rule(G::delta0(), Image(tgt).add(G::delta0p(), 1).add(G::delta0ram(), 2).cls);
  for (const auto& sg : generators(src)) {
    if (sg.kind != GenKind::DeltaIS) continue;
    if (sg.set == 1U) {
      m.set_rule(sg, DivisorClass::single(tgt, G::unordered(sg.index), Rational(2)));
    } else {
      // δ_{i,{1,2}} = δ_{g-i,∅}: both points on the genus-i12 side.
      int i12 = sg.set == 3U ? sg.index : g - sg.index;
      m.set_rule(sg, Image(tgt).add(G::marked_o(i12), 1).add(G::marked_eta(i12), 1).cls);
    }
  }
  return m;
}

PullbackMap map_pi_star(int g) {
  check_g(g, 2, "pi_star");
  SpaceId src = pointed_curves(g, 0), tgt = prym_curves(g);
  PullbackMap m("pi_star:" + std::to_string(g), src, tgt);
  m.set_rule(G::lambda(), DivisorClass::single(tgt, G::lambda()));
  m.set_rule(G::delta0(), Image(tgt).add(G::delta0p(), 1).add(G::delta0pp(), 1).add(G::delta0ram(), 2).cls);
  for (int i = 1; i <= g / 2; ++i) {
    Image img(tgt);
    img.once(G::delta(i)).once(G::delta(g - i)).once(G::split(i));
    m.set_rule(G::delta(i), img.cls);
  }
  return m;
}

PullbackMap map_pi_star_pointed(int g, int n) {
  SpaceId src = pointed_curves(g, n), tgt = pointed_prym(g, n);
  PullbackMap m("pi_star_n:" + args({g, n}), src, tgt);
  m.set_rule(G::lambda(), DivisorClass::single(tgt, G::lambda()));
  for (int j = 1; j <= n; ++j) m.set_rule(G::psi(j), DivisorClass::single(tgt, G::psi(j)));
  m.set_rule(G::delta0(), Image(tgt).add(G::delta0p(), 1).add(G::delta0pp(), 1).add(G::delta0ram(), 2).cls);
  const MarkingSet all = full_set(n);
  for (const auto& sg : generators(src)) {
    if (sg.kind != GenKind::DeltaIS) continue;
    Image img(tgt);
    // η must be nontrivial on some side of positive genus.
    for (auto [j, a] : {std::pair{sg.index, sg.set}, std::pair{g - sg.index, all & ~sg.set}}) {
      if (j >= 1) img.once(G::delta(j, a));
    }
    if (sg.index >= 1 && sg.index <= g - 1) img.once(G::split(sg.index, sg.set));
    m.set_rule(sg, img.cls);
  }
  return m;
}

PullbackMap map_forget_g2(int g) {
  check_g(g, 2, "forget_g2");
  SpaceId src = pointed_curves(g, 0), tgt = pointed_curves_mod2(g);
  PullbackMap m("forget_g2:" + std::to_string(g), src, tgt);
  m.set_rule(G::lambda(), DivisorClass::single(tgt, G::lambda()));
  m.set_rule(G::delta0(), DivisorClass::single(tgt, G::delta0()));
  for (int i = 1; i <= g / 2; ++i) {
    Image img(tgt);
    img.once(G::delta(i, 0U)).once(G::delta(i, 1U)).once(G::delta(i, 3U));
    m.set_rule(G::delta(i), img.cls);
  }
  return m;
}

namespace {

DivisorClass chi_lambda(const SpaceId& tgt) {
  Image img(tgt);
  img.add(G::lambda(), 2).add(G::delta0ram(), Rational(-1, 4)).add(G::psi(), Rational(1, 8));
  for (int i = 1; i <= tgt.g / 2; ++i) img.add(G::unordered(i), Rational(-1, 4));
  return img.cls;
}

DivisorClass chi_delta0(const SpaceId& tgt) {
  Image img(tgt);
  img.add(G::delta0ram(), 1).add(G::delta0p(), 2);
  for (int k = 0; k < tgt.g; ++k) img.add(G::marked_eta(k), 2);
  return img.cls;
}

}  // namespace

PullbackMap map_chi_star_g2(int g) {
  check_g(g, 2, "chi_star_g2");
  SpaceId src = pointed_curves(2 * g, 0), tgt = branched_prym2(g);
  PullbackMap m("chi_star_g2:" + std::to_string(g), src, tgt);
  m.set_rule(G::lambda(), chi_lambda(tgt));
  m.set_rule(G::delta0(), chi_delta0(tgt));
  for (int i = 1; i <= g; ++i) {
    Image img(tgt);
    img.add(G::marked_o(g - i), 2);
    if (i % 2 == 0) img.add(G::unordered(i / 2), 1);
    m.set_rule(G::delta(i), img.cls);
  }
  return m;
}

PullbackMap map_chi_star_pointed(int g) {
  check_g(g, 2, "chi_star_pointed");
  SpaceId src = pointed_curves_mod2(2 * g), tgt = branched_prym2(g);
  PullbackMap m("chi_star_pointed:" + std::to_string(g), src, tgt);
  m.set_rule(G::lambda(), chi_lambda(tgt));
  m.set_rule(G::delta0(), chi_delta0(tgt));
  m.exclude(G::psi(), "no pullback of psi is stated for this map");
  for (const auto& sg : generators(src)) {
    if (sg.kind != GenKind::DeltaIS) continue;
    DivisorClass img(tgt);
    if (sg.set == 1U) {
      if (sg.index % 2 == 0) img.add(G::unordered(sg.index / 2), 1);
    } else if (sg.set == 0U) {
      img.add(G::marked_o(g - sg.index), 2);
    } else if (sg.index == g) {
      // δ_{g,{1,2}} is also δ_{g,∅}: the ∅ description wins.
      img.add(G::marked_o(0), 2);
    }
    m.set_rule(sg, img);
  }
  return m;
}

PullbackMap map_chi_star(int h) {
  check_g(h, 2, "chi_star");
  SpaceId src = pointed_curves(2 * h - 1, 0), tgt = prym_curves(h);
  PullbackMap m("chi_star:" + std::to_string(h), src, tgt);
  m.set_rule(G::lambda(), Image(tgt).add(G::lambda(), 2).add(G::delta0ram(), Rational(-1, 4)).cls);
  Image d0(tgt);
  d0.add(G::delta0p(), 2).add(G::delta0pp(), 2).add(G::delta0ram(), 1);
  for (int j = 1; j <= h / 2; ++j) d0.add(G::split(j), 2);
  m.set_rule(G::delta0(), d0.cls);
  for (int i = 1; i <= (2 * h - 1) / 2; ++i) m.exclude(G::delta(i), "only lambda and d0 are modelled for this map");
  return m;
}

PullbackMap map_pi1(int g, int i, int n, int s) {
  Gluing gl(g, i, n, s);
  SpaceId src = pointed_prym(g, n), tgt = pointed_curves(g - i, n + 1 - s);
  PullbackMap m("pi1:" + args({g, i, n, s}), src, tgt);
  m.set_rule(G::lambda(), DivisorClass::single(tgt, G::lambda()));
  m.set_rule(G::delta0pp(), DivisorClass(tgt));
  m.set_rule(G::delta0ram(), DivisorClass(tgt));
  m.set_rule(G::delta0p(), DivisorClass::single(tgt, G::delta0()));
  gl.psi_rules(m);
  for (const auto& sg : generators(src)) {
    DivisorClass img(tgt);
    if (sg.kind == GenKind::DeltaIS) {
      int j = sg.index;
      MarkingSet S = sg.set;
      if (j == i && S == gl.T)
        img.add(G::psi(gl.x), -1);
      else if (j >= i && gl.subset_T(S))
        img.add(G::delta(j - i, gl.with_x(S)), 1);
    } else if (sg.kind != GenKind::DeltaSplit) {
      continue;
    }
    m.set_rule(sg, img);
  }
  return m;
}

PullbackMap map_pi2(int g, int i, int n, int s) {
  Gluing gl(g, i, n, s);
  SpaceId src = pointed_prym(g, n), tgt = pointed_prym(g - i, n - s + 1);
  PullbackMap m("pi2:" + args({g, i, n, s}), src, tgt);
  m.set_rule(G::lambda(), DivisorClass::single(tgt, G::lambda()));
  m.set_rule(G::delta0pp(), DivisorClass(tgt));
  m.set_rule(G::delta0p(), Image(tgt).add(G::delta0p(), 1).add(G::delta0pp(), 1).cls);
  m.set_rule(G::delta0ram(), DivisorClass::single(tgt, G::delta0ram()));
  gl.psi_rules(m);
  const MarkingSet all = full_set(n);
  for (const auto& sg : generators(src)) {
    DivisorClass img(tgt);
    if (sg.kind == GenKind::DeltaIS) {
      if (sg.index >= i + 1 && gl.subset_T(sg.set)) img.add(G::delta(sg.index - i, gl.with_x(sg.set)), 1);
    } else if (sg.kind == GenKind::DeltaSplit) {
      // Use the representation whose marking set contains T.
      int j = sg.index;
      MarkingSet S = sg.set;
      if (!gl.subset_T(S)) {
        j = g - sg.index;
        S = all & ~sg.set;
      }
      if (gl.subset_T(S)) {
        if (j == i && S == gl.T) {
          img.add(G::psi(gl.x), -1);
        } else if (j >= i && j <= g - 1) {
          MarkingSet a = gl.with_x(S);
          if (j - i >= 1) img.add(G::split(j - i, a), 1);
          img.add(G::delta(g - j, gl.rest & ~a), 1);
        }
      }
    } else {
      continue;
    }
    m.set_rule(sg, img);
  }
  return m;
}

PullbackMap map_pi3(int g, int i, int n, int s) {
  Gluing gl(g, i, n, s);
  SpaceId src = pointed_prym(g, n), tgt = pointed_prym(g - i, n - s + 1);
  PullbackMap m("pi3:" + args({g, i, n, s}), src, tgt);
  m.set_rule(G::lambda(), DivisorClass::single(tgt, G::lambda()));
  m.set_rule(G::delta0pp(), DivisorClass::single(tgt, G::delta0pp()));
  m.set_rule(G::delta0p(), DivisorClass::single(tgt, G::delta0p()));
  m.set_rule(G::delta0ram(), DivisorClass::single(tgt, G::delta0ram()));
  gl.psi_rules(m);
  const MarkingSet all = full_set(n);
  for (const auto& sg : generators(src)) {
    DivisorClass img(tgt);
    int j = sg.index;
    MarkingSet S = sg.set;
    if (sg.kind == GenKind::DeltaIS) {
      if (j >= i + 1 && gl.subset_T(S))
        img.add(G::delta(j - i, gl.with_x(S)), 1);
      else if (j == g - i && S == gl.rest)
        img.add(G::psi(gl.x), -1);
      else if (i + j <= g && gl.avoids_T(S))
        img.add(G::delta(j, S), 1);
    } else if (sg.kind == GenKind::DeltaSplit) {
      if (!gl.subset_T(S)) {
        j = g - sg.index;
        S = all & ~sg.set;
      }
      if (gl.subset_T(S) && j >= i + 1) img.add(G::split(j - i, gl.with_x(S)), 1);
    } else {
      continue;
    }
    m.set_rule(sg, img);
  }
  return m;
}

PullbackMap map_glue(int g, int i, int n, int s) {
  Gluing gl(g, i, n, s);
  SpaceId src = pointed_curves(g, n), tgt = pointed_curves(g - i, n + 1 - s);
  PullbackMap m("glue:" + args({g, i, n, s}), src, tgt);
  m.set_rule(G::lambda(), DivisorClass::single(tgt, G::lambda()));
  m.set_rule(G::delta0(), DivisorClass::single(tgt, G::delta0()));
  gl.psi_rules(m);
  const MarkingSet all = full_set(n);
  for (const auto& sg : generators(src)) {
    if (sg.kind != GenKind::DeltaIS) continue;
    DivisorClass img(tgt);
    std::pair<int, MarkingSet> reps[2] = {{sg.index, sg.set}, {g - sg.index, all & ~sg.set}};
    bool is_glue_node = false;
    for (auto [k, b] : reps)
      if (k == i && b == gl.T) is_glue_node = true;
    if (is_glue_node) {
      // The attaching node itself: normal bundle gives -ψ at the new point.
      img.add(G::psi(gl.x), -1);
    } else {
      // The side away from the fixed tail lies inside the moving curve.
      for (auto [k, b] : reps)
        if (gl.avoids_T(b) && k <= g - i) img.add(G::delta(k, b), 1);
    }
    m.set_rule(sg, img);
  }
  return m;
}

DivisorClass canonical_class(const SpaceId& space) {
  DivisorClass k(space);
  if (space.family == Family::PointedCurvesMod2) {
    k.add(G::psi(), 1).add(G::lambda(), 13);
    k -= total_boundary(space).scaled(2);
    k.add(G::delta(0, 3U), -1).add(G::delta(1, 0U), -1);
    return k;
  }
  if (space.family == Family::BranchedPrym2) {
    const int g = space.g;
    k.add(G::psi(), 1).add(G::lambda(), 13);
    k -= total_boundary(space).scaled(2);
    k.add(G::delta0ram(), -1).add(G::marked_o(0), -1).add(G::marked_eta(0), -1);
    for (int i = 1; i <= g / 2; ++i) k.add(G::unordered(i), -2);
    k.add(G::marked_eta(g - 1), -1).add(G::marked_o(g - 1), -1);
    return k;
  }
  throw UnsupportedSpaceError("canonical class is only provided on PointedCurvesMod2 and BranchedPrym2, not " +
                              to_string(space));
}

}  // namespace prym
