#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "wpgap/semigroup.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = wpgap::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) v.push_back(line);
  return v;
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(call({}).code == wpgap::cli::kExitUsage);
  CHECK(call({"frobnicate"}).code == wpgap::cli::kExitUsage);
  CHECK(call({"enumerate", "--genus", "3", "--bogus"}).code == wpgap::cli::kExitUsage);
  CHECK(call({"enumerate", "--genus", "40"}).code == wpgap::cli::kExitResourceCap);
  CHECK(call({"enumerate", "--genus", "3", "--require-interval", "5:2"}).code == wpgap::cli::kExitUsage);
  CHECK(call({"weight", "--gaps", "1,3,4"}).code == wpgap::cli::kExitUsage);
  CHECK(call({"--help"}).code == wpgap::cli::kExitOk);
}

TEST_CASE("enumerate lines") {
  const Result r = call({"enumerate", "--genus", "3", "--sorted"});
  CHECK(r.code == 0);
  CHECK(r.out == "1,2,3\n1,2,4\n1,2,5\n1,3,5\n");
  CHECK(call({"enumerate", "--genus", "0"}).out == "\n");
  CHECK(call({"enumerate", "--genus", "4", "--min-mult", "4", "--sorted"}).out ==
        "1,2,3,4\n1,2,3,5\n1,2,3,6\n1,2,3,7\n");
}

TEST_CASE("enumerate csv and json") {
  const Result csv = call({"enumerate", "--genus", "2", "--format", "csv"});
  CHECK(csv.out == "genus,multiplicity,conductor,weight,even_gaps,gaps\n2,3,3,0,1,1;2\n2,2,4,1,0,1;3\n");
  const auto j = nlohmann::json::parse(call({"enumerate", "--genus", "5", "--format", "json"}).out);
  CHECK(j["wpgap_report"] == 1);
  CHECK(j["count"] == 12);
  CHECK(j["semigroups"].size() == 12);
}

TEST_CASE("weight agrees with enumerate") {
  const Result r = call({"enumerate", "--genus", "7", "--sorted"});
  for (const std::string& line : lines_of(r.out)) {
    const Result w = call({"weight", "--gaps", line});
    REQUIRE(w.code == 0);
    const auto j = nlohmann::json::parse(w.out);
    CHECK(j["weight"] == wpgap::weight(wpgap::NumericalSemigroup::from_gaps(wpgap::parse_gaps(line))));
    CHECK(j["genus"] == 7);
  }
}

TEST_CASE("classify") {
  const auto j = nlohmann::json::parse(call({"classify", "--gaps", "1,2,3,5", "--gamma", "1"}).out);
  CHECK(j["ramified_class"] == "II");
  CHECK(j["unramified_case"] == "a");
  const auto off = nlohmann::json::parse(call({"classify", "--gaps", "1,2,3,5", "--gamma", "3"}).out);
  CHECK(off["ramified_class"].is_null());
  CHECK(off["unramified_case"].is_null());
}

TEST_CASE("verify theorem") {
  const Result ok = call({"verify", "theorem", "--gamma", "3", "--genus", "16", "--t-policy", "paper"});
  CHECK(ok.code == 0);
  const auto j = nlohmann::json::parse(ok.out);
  CHECK(j["results"][0]["W1_lower"] == 63);
  CHECK(j["results"][0]["N"] == 60);
  CHECK(j["all_hold"] == true);

  const Result bad = call({"verify", "theorem", "--gamma", "3", "--genus", "12"});
  CHECK(bad.code == wpgap::cli::kExitCheckFailed);
  CHECK(nlohmann::json::parse(bad.out)["all_hold"] == false);
  CHECK(call({"verify", "theorem", "--gamma", "3", "--genus", "16", "--t-policy", "max"}).code ==
        wpgap::cli::kExitUsage);
}

TEST_CASE("verify lemma") {
  const Result r = call({"verify", "lemma", "--gamma", "3", "--genus-range", "12:14", "--class", "II"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["results"].size() == 3);
  CHECK(j["results"][0]["bound"] == 23);
  CHECK(call({"verify", "lemma", "--gamma", "3", "--genus-range", "12:12", "--class", "V"}).code ==
        wpgap::cli::kExitUsage);
}

TEST_CASE("tables") {
  CHECK(call({"table", "bounds", "--gamma", "3", "--genus-range", "16:16"}).out ==
        "g,c1,c2,c3,N,omega1\n16,63,53,66,60,4080\n");
  CHECK(call({"table", "pflaum-n2", "--genus-range", "3:3", "--n", "2"}).out ==
        "g,n,omega_n,W_lower,N,holds\n3,2,108,18,16,true\n");
  CHECK(call({"table", "thresholds", "--gamma-range", "3:4"}).out ==
        "gamma,closed_form_threshold,exact_min_genus\n3,16,15\n4,24,22\n");
}

TEST_CASE("output independent of --jobs") {
  for (const std::vector<std::string>& base :
       {std::vector<std::string>{"enumerate", "--genus", "12", "--even-gaps", "3"},
        std::vector<std::string>{"verify", "lemma", "--gamma", "3", "--genus-range", "12:14", "--class", "III"},
        std::vector<std::string>{"verify", "theorem", "--gamma", "4", "--genus-range", "10:30"}}) {
    auto one = base, eight = base;
    one.insert(one.end(), {"--jobs", "1"});
    eight.insert(eight.end(), {"--jobs", "8"});
    const Result a = call(one), b = call(eight);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("cache directory") {
  const auto dir = std::filesystem::temp_directory_path() / "wpgap_cli_cache_test";
  std::filesystem::remove_all(dir);
  const Result cold = call({"enumerate", "--genus", "9", "--cache-dir", dir.string()});
  const Result warm = call({"enumerate", "--genus", "9", "--cache-dir", dir.string()});
  CHECK(cold.out == warm.out);
  CHECK(cold.out == call({"enumerate", "--genus", "9"}).out);
  CHECK_FALSE(std::filesystem::is_empty(dir));
  std::filesystem::remove_all(dir);
}
