#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "filicenter/cli.hpp"

using filicenter::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(std::vector<std::string> args) {
  args.insert(args.end(), {"--format", "json"});
  Result r = call(args);
  REQUIRE(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == filicenter::cli::kSchema);
  return j;
}

const std::vector<std::vector<std::string>> kSmoke = {
    {"delta", "--n", "3", "--d", "4"},
    {"delta-table", "--n", "3", "--dmax", "12"},
    {"hilbert", "--n", "4"},
    {"zgen", "--i", "4", "--n", "6"},
    {"wgen", "--i", "5"},
    {"circ", "--n", "3", "--recipe", "y0 o_2 y0 o_1 y0"},
    {"basis", "--n", "3", "--k", "4", "--method", "span"},
    {"mingens", "--n", "4", "--maxdeg", "6"},
    {"rewrite", "--n", "3", "--recipe", "y0 o_2 y0"},
    {"indep", "--n", "3", "--zgen", "1", "--zgen", "2", "--zgen", "3"},
    {"verify", "--n", "3", "--poly", "2*y0*y2 - y1^2"},
    {"charp", "--n", "3", "--p", "5", "--jacobian"},
};

}  // namespace

TEST_CASE("dispatch table coverage") {
  const auto& routes = filicenter::cli::operation_routes();
  std::vector<std::string> subs = filicenter::cli::subcommand_names();
  std::set<std::string> ops, routed;
  for (const auto& r : routes) {
    CHECK_MESSAGE(ops.insert(r.operation).second, "operation routed twice: " << r.operation);
    CHECK_MESSAGE(std::find(subs.begin(), subs.end(), r.subcommand) != subs.end(), r.subcommand);
    routed.insert(r.subcommand);
  }
  for (const auto& s : subs) CHECK_MESSAGE(routed.count(s) == 1, "subcommand without operation: " << s);
  std::set<std::string> smoked;
  for (const auto& args : kSmoke) smoked.insert(args[0]);
  CHECK(smoked == std::set<std::string>(subs.begin(), subs.end()));
}

TEST_CASE("every subcommand runs in every format") {
  for (const auto& args : kSmoke)
    for (const char* fmt : {"text", "json", "latex"}) {
      std::vector<std::string> a = args;
      a.insert(a.end(), {"--format", fmt});
      CAPTURE(a[0]);
      CAPTURE(fmt);
      Result r = call(a);
      CHECK(r.code == 0);
      CHECK_FALSE(r.out.empty());
      if (std::string(fmt) == "json") {
        nlohmann::json j = nlohmann::json::parse(r.out);
        CHECK(j["schema"] == "filicenter/1");
        CHECK(j["command"] == a[0]);
      }
    }
}

TEST_CASE("documented invocations") {
  CHECK(call({"delta", "--n", "3", "--d", "4"}).out == "5\n");
  CHECK(call({"delta", "--n", "3", "--d", "4", "--method", "weight"}).out == "5\n");
  CHECK(call({"zgen", "--i", "4", "--n", "6"}).out == "2*y0*y4 - 2*y1*y3 + y2^2\n");
  CHECK(call({"hilbert", "--n", "4", "--rational"}).out == "(1 - t + t^2) / ((1 - t)^2*(1 - t^2)*(1 - t^3))\n");
  Result v = call({"verify", "--n", "3", "--poly", "y1"});
  CHECK(v.code == 1);
  CHECK(v.out.find("not invariant") != std::string::npos);
  Result j = call({"charp", "--n", "3", "--p", "5", "--jacobian"});
  CHECK(j.code == 0);
  CHECK(j.out.find("triangular yes det 1*u2^15") != std::string::npos);
}

TEST_CASE("json payloads") {
  CHECK(json_of({"delta", "--n", "5", "--d", "18"})["delta"] == 967);
  nlohmann::json t = json_of({"delta-table", "--n", "2", "--dmax", "5"});
  CHECK(t["delta"] == nlohmann::json({1, 1, 2, 2, 3, 3}));
  CHECK(json_of({"hilbert", "--n", "3", "--terms", "6"})["terms"] == nlohmann::json({1, 1, 2, 3, 5, 6}));
  nlohmann::json m = json_of({"mingens", "--n", "4", "--maxdeg", "6"});
  CHECK(m["generators"].size() == 5);
  nlohmann::json c = json_of({"charp", "--n", "3", "--p", "5", "--jacobian"});
  CHECK(c.dump().find("1*u2^15") != std::string::npos);
  nlohmann::json g = json_of({"charp", "--grid", "--nmax", "4", "--pmax", "11"});
  CHECK(g["all_passed"] == true);
}

TEST_CASE("verification failures exit 1") {
  CHECK(call({"delta-table", "--n", "2", "--dmax", "5", "--recurrence", "1"}).code == 1);
  CHECK(call({"delta-table", "--n", "2", "--dmax", "40", "--recurrence", "1,1,-1"}).code == 0);
  CHECK(call({"delta-table", "--n", "3", "--dmax", "40", "--recurrence", "2,-1,0,1,-2,1"}).code == 0);
  CHECK(call({"indep", "--n", "1", "--poly", "y0", "--poly", "y0^2"}).code == 0);
  CHECK(call({"charp", "--n", "4", "--p", "3", "--central"}).code == 0);
}

TEST_CASE("usage errors exit 2") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"bogus"},
           {"delta", "--n", "x", "--d", "1"},
           {"zgen", "--i", "4"},
           {"zgen", "--i", "9", "--n", "4"},
           {"verify", "--n", "3", "--poly", "y0 +"},
           {"rewrite", "--n", "3"},
           {"rewrite", "--n", "3", "--poly", "y1", "--recipe", "y0"},
           {"hilbert", "--n", "3", "--terms", "3", "--rational"},
           {"hilbert", "--n", "40"},
           {"basis", "--n", "8", "--k", "8", "--bound", "100"},
           {"charp", "--n", "4", "--p", "3", "--jacobian"},
           {"charp", "--n", "3", "--p", "9", "--central"},
           {"delta", "--n", "3", "--d", "4", "--format", "xml"},
       }) {
    Result r = call(args);
    CAPTURE(args.empty() ? std::string("<none>") : args[0]);
    CHECK(r.code == 2);
    CHECK(r.err.rfind("error: ", 0) == 0);
  }
  CHECK(call({"bogus"}).err.find("unknown subcommand 'bogus'") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  std::vector<std::vector<std::string>> cases = kSmoke;
  cases.push_back({"indep", "--n", "3", "--recipe", "y0", "--recipe", "y0 o_2 y0", "--poly", "y0^2", "--seed", "7"});
  cases.push_back({"charp", "--grid", "--nmax", "5", "--pmax", "13", "--threads", "4", "--format", "json"});
  for (const auto& args : cases) {
    Result a = call(args), b = call(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK(a.err == b.err);
  }
  std::vector<std::string> grid{"charp", "--grid", "--nmax", "6", "--pmax", "13", "--format", "json"};
  std::vector<std::string> one = grid, many = grid;
  one.insert(one.end(), {"--threads", "1"});
  many.insert(many.end(), {"--threads", "8"});
  CHECK(call(one).out == call(many).out);
}
