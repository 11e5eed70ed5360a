#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <sys/wait.h>

using nlohmann::json;

namespace {

struct Run {
  std::string out;
  int status = -1;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string command = env + " " + MONO_CLI + " " + args + " 2>/dev/null";
  Run result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  size_t n = 0;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, n);
  const int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(MONO_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Pairs keyed by sorted subgroup, each holding the sorted value tables.
std::map<std::vector<int>, std::set<std::vector<int>>> pairs_by_subgroup(const json& poset) {
  std::map<std::vector<int>, std::set<std::vector<int>>> out;
  for (const auto& p : poset.at("pairs")) out[p.at("subgroup").get<std::vector<int>>()].insert(p.at("powers").get<std::vector<int>>());
  return out;
}

// Element layout: x^i is i and x^i y is 4 + i; powers of i = sqrt(-1).
const std::vector<int> kD8{0, 1, 2, 3, 4, 5, 6, 7};
const std::vector<int> kRotations{0, 1, 2, 3};
const std::vector<int> kKleinY{0, 2, 4, 6};
const std::vector<int> kKleinXY{0, 2, 5, 7};
const std::vector<int> kCentre{0, 2};

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("D8 posets and their value tables") {
    const auto trivial = run("poset --group d8 --central-char trivial");
    CHECK(trivial.status == 0);
    CHECK(trivial.out == golden("poset_d8_trivial.json"));
    const auto report = json::parse(trivial.out).at("results").at(0);
    CHECK(report.at("pair_count") == 11);
    const auto pairs = pairs_by_subgroup(report);
    // D8: 1, chi1 (x -> -1, y -> 1), chi2 (x -> 1, y -> -1), chi1 chi2.
    CHECK(pairs.at(kD8) == std::set<std::vector<int>>{{0, 0, 0, 0, 0, 0, 0, 0},
                                                      {0, 2, 0, 2, 0, 2, 0, 2},
                                                      {0, 0, 0, 0, 2, 2, 2, 2},
                                                      {0, 2, 0, 2, 2, 0, 2, 0}});
    // <x>: 1 and phi^2 with phi(x) = i.
    CHECK(pairs.at(kRotations) == std::set<std::vector<int>>{{0, 0, 0, 0}, {0, 2, 0, 2}});
    CHECK(pairs.at(kKleinY) == std::set<std::vector<int>>{{0, 0, 0, 0}, {0, 0, 2, 2}});
    CHECK(pairs.at(kKleinXY) == std::set<std::vector<int>>{{0, 0, 0, 0}, {0, 0, 2, 2}});
    CHECK(pairs.at(kCentre) == std::set<std::vector<int>>{{0, 0}});
    CHECK(pairs.size() == 5);

    const auto chi = run("poset --group d8 --central-char 1");
    CHECK(chi.status == 0);
    CHECK(chi.out == golden("poset_d8_chi.json"));
    const auto chi_report = json::parse(chi.out).at("results").at(0);
    CHECK(chi_report.at("pair_count") == 7);
    const auto chi_pairs = pairs_by_subgroup(chi_report);
    CHECK(chi_pairs.at(kRotations) == std::set<std::vector<int>>{{0, 1, 2, 3}, {0, 3, 2, 1}});
    CHECK(chi_pairs.at(kKleinY) == std::set<std::vector<int>>{{0, 2, 0, 2}, {0, 2, 2, 0}});
    CHECK(chi_pairs.at(kKleinXY) == std::set<std::vector<int>>{{0, 2, 0, 2}, {0, 2, 2, 0}});
    CHECK(chi_pairs.at(kCentre) == std::set<std::vector<int>>{{0, 2}});
    CHECK(chi_pairs.size() == 4);
  }

  TEST_CASE("commands") {
    const auto c2 = json::parse(run("poset --group c2 --central-char all").out);
    REQUIRE(c2.at("results").size() == 2);
    for (const auto& r : c2.at("results")) CHECK(r.at("pair_count") == 1);

    const auto hh = run("hyperhecke --group c2");
    CHECK(hh.out == golden("hyperhecke_c2.json"));
    const auto d8 = json::parse(run("hyperhecke --group d8 --central-char trivial").out).at("results").at(0);
    CHECK(d8.at("closed") == true);
    CHECK(d8.at("idempotent_laws") == true);
    CHECK(d8.at("dimension") == 48);

    const auto mc = json::parse(run("monocentre --group d8 --exhaustive").out).at("results");
    CHECK(mc.at(0).at("order") == 4);
    CHECK(mc.at(1).at("order") == 2);
    for (const auto& r : mc) {
      CHECK(r.at("exhaustive_agrees") == true);
      CHECK(r.at("commutes_with_all_triples") == true);
    }

    const auto resolve = run("resolve --group c2 --rep trivial --degree 2");
    CHECK(resolve.status == 0);
    const auto rr = json::parse(resolve.out).at("result");
    CHECK(rr.at("exact") == true);
    CHECK(rr.at("dims") == json::array({1, 1, 1}));

    const auto chained = json::parse(run("resolve --group d8 --rep char:2 --chain-maps", "MONO_MAX_DIM=10000").out).at("result");
    CHECK(chained.at("exact") == true);
    CHECK(chained.at("chain_maps").size() == 4);
    for (const auto& m : chained.at("chain_maps")) CHECK(m.at("commutes") == true);

    const auto conv = json::parse(run("convolve-check --group d8 --exhaustive").out).at("results");
    for (const auto& r : conv) CHECK(r.at("pass") == true);
    const auto dc = json::parse(run("doublecoset-check --group s3").out).at("result");
    CHECK(dc.at("pass") == true);

    const auto text = run("monocentre --group d8 --text");
    CHECK(text.status == 0);
    CHECK(text.out.find("order: 4") != std::string::npos);
  }

  TEST_CASE("determinism") {
    for (const char* args : {"poset --group s4", "hyperhecke --group s3", "monocentre --group q8",
                             "resolve --group s3 --rep irrep:2", "convolve-check --group q8"}) {
      const auto first = run(args), second = run(args);
      CHECK(first.status == 0);
      CHECK(first.out == second.out);
    }
  }

  TEST_CASE("errors") {
    auto error_code = [](const Run& r) { return json::parse(r.out).at("error").at("code").get<std::string>(); };
    const auto unknown = run("poset --group nope");
    CHECK(unknown.status == 2);
    CHECK(error_code(unknown) == "UnknownGroup");
    const auto flag = run("resolve --group c2 --s-mode sideways");
    CHECK(flag.status == 2);
    CHECK(error_code(flag) == "ParseError");
    const auto central = run("poset --group d8 --central-char 7");
    CHECK(central.status != 0);
    const auto guard = run("resolve --group d8 --rep trivial --degree 2");
    CHECK(guard.status == 3);
    CHECK(error_code(guard) == "TooLarge");
    const auto exhaustive = run("monocentre --group a4 --exhaustive");
    CHECK(exhaustive.status == 3);
    const auto mismatch = run("resolve --group d8 --central-char 1 --rep trivial");
    CHECK(mismatch.status == 1);
    CHECK(error_code(mismatch) == "CentralCharacterMismatch");
    CHECK(run("resolve --group d8 --rep trivial", "MONO_MAX_DIM=10000").status == 0);
    const auto bad_env = run("resolve --group c2", "MONO_MAX_DIM=zero");
    CHECK(bad_env.status == 2);
    CHECK(error_code(bad_env) == "ParseError");
  }
}
