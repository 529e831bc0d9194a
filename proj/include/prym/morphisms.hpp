#pragma once

#include <map>
#include <string>

#include "prym/divisor_class.hpp"

namespace prym {

// A pullback homomorphism, stored extensionally: one rule per source
// generator, sending classes on `source` to classes on `target`. Source
// generators without a rule are outside the domain.
class PullbackMap {
 public:
  PullbackMap(std::string name, SpaceId source, SpaceId target)
      : name_(std::move(name)), source_(source), target_(target) {}

  const std::string& name() const { return name_; }
  const SpaceId& source() const { return source_; }
  const SpaceId& target() const { return target_; }
  const std::map<GeneratorId, DivisorClass>& rules() const { return rules_; }
  const std::map<GeneratorId, std::string>& excluded() const { return excluded_; }
  bool in_domain(const GeneratorId& gen) const { return rules_.count(canonicalize(gen, source_)) != 0; }

  // Sets the rule for a source generator; `image` must live on target.
  void set_rule(const GeneratorId& gen, DivisorClass image);
  // Marks a generator as deliberately outside the domain, with a reason
  // reported by apply().
  void exclude(const GeneratorId& gen, std::string reason);

  const DivisorClass& rule(const GeneratorId& gen) const;
  // Linear extension with interval arithmetic on non-exact coefficients.
  DivisorClass apply(const DivisorClass& cls) const;

 private:
  std::string name_;
  SpaceId source_, target_;
  std::map<GeneratorId, DivisorClass> rules_;
  std::map<GeneratorId, std::string> excluded_;
};

// composite(c) = outer(inner(c)). Source generators whose image leaves
// outer's domain drop out of the domain, remembering why.
PullbackMap compose(const PullbackMap& outer, const PullbackMap& inner);
PullbackMap identity_map(const SpaceId& space);

// i*: PrymCurves(g+1) -> BranchedPrym2(g)
PullbackMap map_i_star(int g);
// π_{g,2}*: PointedCurvesMod2(g) -> BranchedPrym2(g)
PullbackMap map_pi_star_g2(int g);
// π_g*: PointedCurves(g,0) -> PrymCurves(g)
PullbackMap map_pi_star(int g);
// Forgetful pullback PointedCurves(g,n) -> PointedPrym(g,n)
PullbackMap map_pi_star_pointed(int g, int n);
// Forgetful pullback PointedCurves(g,0) -> PointedCurvesMod2(g)
PullbackMap map_forget_g2(int g);
// χ_{g,2}*: PointedCurves(2g,0) -> BranchedPrym2(g)
PullbackMap map_chi_star_g2(int g);
// χ*: PointedCurvesMod2(2g) -> BranchedPrym2(g); ψ is outside the domain
PullbackMap map_chi_star_pointed(int g);
// χ_h*: PointedCurves(2h-1,0) -> PrymCurves(h), on λ and δ0 only
PullbackMap map_chi_star(int h);

// Boundary maps of C̄^nR̄_g, gluing a fixed genus-i curve carrying the
// markings T = {n-s+1..n} to a new marking n-s+1.
PullbackMap map_pi1(int g, int i, int n, int s);
PullbackMap map_pi2(int g, int i, int n, int s);
PullbackMap map_pi3(int g, int i, int n, int s);
// The same gluing on M̄_{g,n} directly.
PullbackMap map_glue(int g, int i, int n, int s);

// Canonical class of PointedCurvesMod2(g) or BranchedPrym2(g).
DivisorClass canonical_class(const SpaceId& space);

// Parses "i_star:13", "pi1:5,2,3,1", and compositions joined by "∘" or "."
// (leftmost applied last, as in i_star:16∘pi_star:17).
PullbackMap map_from_name(const std::string& expr);

}  // namespace prym
