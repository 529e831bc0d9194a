#include <functional>
#include <map>
#include <vector>

#include "prym/errors.hpp"
#include "prym/morphisms.hpp"

namespace prym {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  std::size_t b = s.find_last_not_of(" \t");
  return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
}

std::vector<std::string> split_composition(const std::string& expr) {
  static const std::string ring = "\xE2\x88\x98";
  std::vector<std::string> parts;
  std::string cur;
  for (std::size_t k = 0; k < expr.size();) {
    if (expr.compare(k, ring.size(), ring) == 0) {
      parts.push_back(cur);
      cur.clear();
      k += ring.size();
    } else if (expr[k] == '.') {
      parts.push_back(cur);
      cur.clear();
      ++k;
    } else {
      cur += expr[k++];
    }
  }
  parts.push_back(cur);
  return parts;
}

std::vector<int> parse_args(const std::string& text, const std::string& name) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string tok = trim(text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
    if (tok.empty() || tok.size() > 6 || tok.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad argument '" + tok + "' for map " + name, pos);
    out.push_back(std::stoi(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

using Builder = std::function<PullbackMap(const std::vector<int>&)>;

const std::map<std::string, std::pair<std::size_t, Builder>>& builders() {
  static const std::map<std::string, std::pair<std::size_t, Builder>> table = {
      {"i_star", {1, [](const auto& a) { return map_i_star(a[0]); }}},
      {"pi_star_g2", {1, [](const auto& a) { return map_pi_star_g2(a[0]); }}},
      {"pi_star", {1, [](const auto& a) { return map_pi_star(a[0]); }}},
      {"pi_star_n", {2, [](const auto& a) { return map_pi_star_pointed(a[0], a[1]); }}},
      {"forget_g2", {1, [](const auto& a) { return map_forget_g2(a[0]); }}},
      {"chi_star_g2", {1, [](const auto& a) { return map_chi_star_g2(a[0]); }}},
      {"chi_star_pointed", {1, [](const auto& a) { return map_chi_star_pointed(a[0]); }}},
      {"chi_star", {1, [](const auto& a) { return map_chi_star(a[0]); }}},
      {"pi1", {4, [](const auto& a) { return map_pi1(a[0], a[1], a[2], a[3]); }}},
      {"pi2", {4, [](const auto& a) { return map_pi2(a[0], a[1], a[2], a[3]); }}},
      {"pi3", {4, [](const auto& a) { return map_pi3(a[0], a[1], a[2], a[3]); }}},
      {"glue", {4, [](const auto& a) { return map_glue(a[0], a[1], a[2], a[3]); }}},
  };
  return table;
}

PullbackMap single_map(const std::string& token) {
  std::string t = trim(token);
  std::size_t colon = t.find(':');
  if (colon == std::string::npos) throw ParseError("map '" + t + "' needs arguments after ':'", 0);
  std::string name = t.substr(0, colon);
  auto it = builders().find(name);
  if (it == builders().end()) throw ParseError("unknown map '" + name + "'", 0);
  std::vector<int> args = parse_args(t.substr(colon + 1), name);
  if (args.size() != it->second.first)
    throw ParseError("map " + name + " takes " + std::to_string(it->second.first) + " argument(s)", colon + 1);
  return it->second.second(args);
}

}  // namespace

PullbackMap map_from_name(const std::string& expr) {
  std::vector<std::string> parts = split_composition(expr);
  PullbackMap m = single_map(parts.back());
  for (std::size_t k = parts.size() - 1; k-- > 0;) m = compose(single_map(parts[k]), m);
  return m;
}

}  // namespace prym
