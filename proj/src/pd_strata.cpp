#include "prym/pd_strata.hpp"

#include <numeric>

#include "prym/errors.hpp"

namespace prym {

using G = GeneratorId;

Partition::Partition(int g_, std::vector<int> d_) : g(g_), d(std::move(d_)) {
  if (d.empty() || static_cast<int>(d.size()) > kMaxMarkings)
    throw ParameterError("partition needs between 1 and " + std::to_string(kMaxMarkings) + " entries");
  for (int x : d)
    if (x < 1) throw ParameterError("partition entries must be positive");
  if (std::accumulate(d.begin(), d.end(), 0) != g - 1)
    throw ParameterError("partition must sum to g-1 = " + std::to_string(g - 1));
}

int Partition::weight(MarkingSet s) const {
  int w = 0;
  for (int k = 1; k <= n(); ++k)
    if (contains(s, k)) w += d[k - 1];
  return w;
}

namespace {

Rational half_product(long a, long b) { return Rational(a * b, 2); }

// C(x,2) for integer x, zero when x < 2
Rational choose2(long x) { return x < 2 ? Rational(0) : Rational(x * (x - 1), 2); }

}  // namespace

Rational b_coefficient(BoundaryKind kind, int i, MarkingSet s, const Partition& p) {
  if (s & ~full_set(p.n())) throw ParameterError("marking set outside 1..n");
  const long ds = p.weight(s);
  if (kind == BoundaryKind::Split) {
    if (i < 1 || i > p.g - 1) throw ParameterError("split index must lie in 1..g-1");
    return half_product(ds - i, ds - i + 1);
  }
  if (i < 1 || i > p.g) throw ParameterError("nonsplit index must lie in 1..g");
  if (ds >= i - 1) return half_product(ds - i + 1, ds - i + 2);
  return half_product(ds - i, ds - i + 1);
}

DivisorClass pd_interior_class(const Partition& p) {
  DivisorClass c(pointed_prym(p.g, p.n()));
  c.add(G::lambda(), Rational(-1));
  for (int j = 1; j <= p.n(); ++j) c.add(G::psi(j), half_product(p.d[j - 1], p.d[j - 1] + 1));
  return c;
}

DivisorClass pd_class(const Partition& p) {
  DivisorClass c = pd_interior_class(p);
  c.add(G::delta0ram(), Rational(1, 4));
  for (const auto& gen : generators(c.space())) {
    if (gen.kind == GenKind::DeltaIS)
      c.add(gen, -b_coefficient(BoundaryKind::NonSplit, gen.index, gen.set, p));
    else if (gen.kind == GenKind::DeltaSplit)
      c.add(gen, -b_coefficient(BoundaryKind::Split, gen.index, gen.set, p));
  }
  return c;
}

DivisorClass pd_class_binomial(const Partition& p) {
  DivisorClass c = pd_interior_class(p);
  c.add(G::delta0ram(), Rational(1, 4));
  auto put = [&](const GeneratorId& gen, const Rational& v) {
    if (v.is_zero()) return;
    try {
      c.add(gen, -v);
    } catch (const ValidityError&) {
      // e.g. δ_{g,S} with |S| > n-2: not a divisor of the space
    }
  };
  const MarkingSet all = full_set(p.n());
  for (MarkingSet set = 0;; ++set) {
    const long ds = p.weight(set);
    for (int i = 1; i <= p.g; ++i) {
      if (i <= p.g - 1 && ds >= i - 1) put(G::delta(i, set), choose2(ds - i + 2));
      if (ds <= i - 1) {
        Rational v = choose2(i - ds);
        if (i <= p.g - 1) put(G::split(i, set), v);
        put(G::delta(i, set), v);
      }
    }
    if (set == all) break;
  }
  return c;
}

}  // namespace prym
