#include <doctest.h>

#include <sstream>

#include "prym/cli.hpp"
#include "prym/json_io.hpp"

using namespace prym;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& rel) { return std::string(PRYM_DATA_DIR) + "/" + rel; }

}  // namespace

TEST_CASE("pd-class") {
  Run r = run({"pd-class", "--g", "3", "--n", "1", "--partition", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("-lambda + 3*psi[1] + 1/4*d0ram - 3*d{1,{1}} - ", 0) == 0);
  Run i = run({"pd-class", "--g", "3", "--n", "2", "--partition", "1,1", "--interior"});
  CHECK(i.out == "-lambda + psi[1] + psi[2]\n");
  CHECK(run({"pd-class", "--g", "3", "--n", "1", "--partition", "3"}).code == 2);
}

TEST_CASE("count-g1") {
  Run r = run({"count-g1", "--g", "3", "--check-identities", "--json"});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["count"] == "5");
  CHECK(j["catalan"] == "5");
  CHECK(j["identitiesOk"] == true);
}

TEST_CASE("certificates") {
  Run g13 = run({"certificate", "--g", "13", "--coeffs", "1/92,1/23,3/92"});
  CHECK(g13.code == 0);
  CHECK(g13.out.find("EffectiveWitness") != std::string::npos);

  Run g16 = run({"certificate", "--g", "16", "--json"});
  CHECK(g16.code == 0);
  Json j = Json::parse(g16.out);
  CHECK(j["verdict"] == "BigWitness");
  CHECK(j["epsilonMax"] == "5393/26408");
  bool mismatch = false;
  for (const auto& p : j["publishedComparison"]) mismatch = mismatch || p["status"] == "MISMATCH";
  CHECK(mismatch);

  Run bad = run({"certificate", "--g", "13", "--coeffs", "1/92,1/23,0"});
  CHECK(bad.code == 1);
  Run two = run({"certificate", "--g", "16", "--terms", "BN_32_2_23@chi_star_g2:16,Z_16_1@pi_star_g2:16.forget_g2:16"});
  CHECK(two.code == 1);
  CHECK(two.out.find("Infeasible") != std::string::npos);
}

TEST_CASE("pullback, parse, canonical, intersect, slope-margin") {
  Run p = run({"pullback", "--map", "i_star:16.pi_star:17", "--entry", "BN_17_1_9"});
  CHECK(p.code == 0);
  CHECK(p.out.find("3*psi") != std::string::npos);
  CHECK(p.out.find("20*lambda") != std::string::npos);
  CHECK(p.out.find("- 16*dEta{0}") != std::string::npos);

  Run partial = run({"pullback", "--map", "chi_star_pointed:6", "--class", "psi"});
  CHECK(partial.code == 2);
  CHECK(partial.err.find("psi") != std::string::npos);

  Run c = run({"canonical", "--space", "BranchedPrym2", "--g", "13"});
  CHECK(c.out.rfind("13*lambda + psi - 2*d0p - 3*d0ram", 0) == 0);

  Run parse = run({"parse", "--space", "PointedPrym", "--g", "3", "--n", "1", "--class", "-lambda + 3*psi[1] + 1/4*d0ram"});
  CHECK(parse.out == "-lambda + 3*psi[1] + 1/4*d0ram\n");
  Run perr = run({"parse", "--space", "BranchedPrym2", "--g", "13", "--class", "1/0*lambda"});
  CHECK(perr.code == 2);

  CHECK(run({"intersect", "--curve", "A1i:5", "--class", "lambda - d0p"}).out == "-9\n");
  CHECK(run({"slope-margin", "--s", "10"}).out.find("margin = 0") != std::string::npos);
}

TEST_CASE("audit and catalog") {
  Run a = run({"audit", "--input", data("sketches/tail_j0_eta_trivial.json"), "--json"});
  CHECK(a.code == 0);
  CHECK(Json::parse(a.out)["nonCanonical"] == true);
  CHECK(run({"audit", "--input", "/nonexistent.json"}).code == 2);

  Run cat = run({"catalog", "--catalog", data("example_catalog.json")});
  CHECK(cat.out.find("BN_9_1_5") != std::string::npos);
  CHECK(cat.out.find("U_14_4") != std::string::npos);
  Run one = run({"catalog", "--name", "Z_16_1", "--json"});
  CHECK(Json::parse(one.out)["name"] == "Z_16_1");
}

TEST_CASE("usage errors and determinism") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"pd-class", "--g", "x"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  std::vector<std::string> args = {"certificate", "--g", "17", "--json"};
  CHECK(run(args).out == run(args).out);
}
