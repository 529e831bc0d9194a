#pragma once

#include <string>
#include <string_view>

#include "prym/divisor_class.hpp"

namespace prym {

// Grammar:
//   class := "0" | [sign] term (sign term)*
//   term  := [coeff "*"] gen | bound "*" gen
//   coeff := int ["/" int]
//   gen   := lambda | kappa1 | psi | psi[j] | d0 | d0p | d0pp | d0ram
//          | d{i,S} | d{i,S:j} | dO{i} | dEta{i}
//   S     := "{" [int ("," int)*] "}" | "∅"
// Non-exact coefficients use a bracketed bound on the signed coefficient:
//   "- [>=100]*g" means -c >= 100;  "+ [1/2..3]*g" an interval;
//   a leading "?" inside the brackets flags a bound that stems from an
//   unknown coefficient ("- [?>=0]*g", "+ [?]*g").
DivisorClass parse_class(std::string_view text, const SpaceId& space);
std::string format_class(const DivisorClass& cls);

GeneratorId parse_generator(std::string_view text, const SpaceId& space);

}  // namespace prym
