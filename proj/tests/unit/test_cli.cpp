#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oracles.hpp"
#include "simstat/cli.hpp"

using nlohmann::json;
using namespace simstat::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::ostringstream out;
  std::ostringstream err;
  std::istringstream in(stdin_text);
  const int code = run(args, out, err, in);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(SIMSTAT_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("gen") {
  const auto r = invoke({"gen", "--dist", "deterministic:7", "--n", "3"});
  CHECK(r.code == kOk);
  CHECK(r.out == "7\n7\n7\n");
  const auto a = invoke({"gen", "--dist", "uniform:0,1", "--n", "2", "--seed", "1"});
  const auto b = invoke({"gen", "--dist", "uniform:0,1", "--n", "2", "--seed", "1"});
  CHECK(a.out == b.out);
  CHECK(a.out != invoke({"gen", "--dist", "uniform:0,1", "--n", "2", "--seed", "2"}).out);
  const auto bad = invoke({"gen", "--dist", "normal:0"});
  CHECK(bad.code == kUsage);
  CHECK(bad.err.rfind("error:", 0) == 0);
  CHECK(bad.err.find("normal") != std::string::npos);
}

TEST_CASE("gen json") {
  const auto r = invoke({"gen", "--dist", "exponential:2", "--n", "5", "--json"});
  const auto j = json::parse(r.out);
  CHECK(j.is_array());
  CHECK(j.size() == 5);
}

TEST_CASE("seed from the environment") {
  ::setenv("SIMSTAT_SEED", "77", 1);
  const auto env_run = invoke({"gen", "--dist", "random", "--n", "3"});
  ::unsetenv("SIMSTAT_SEED");
  CHECK(env_run.out == invoke({"gen", "--dist", "random", "--n", "3", "--seed", "77"}).out);
  CHECK(env_run.out != invoke({"gen", "--dist", "random", "--n", "3"}).out);
}

TEST_CASE("stats") {
  const auto r = invoke({"stats", "--input", "-"}, "1\n2\n3\n4\n");
  CHECK(r.code == kOk);
  CHECK(r.out.find("mean             2.5\n") != std::string::npos);
  CHECK(r.out.find("pop_variance     1.25\n") != std::string::npos);
  CHECK(r.out.find("sample_variance  1.66666666666667\n") != std::string::npos);

  const auto j = json::parse(invoke({"stats", "--input", "-", "--json"}, "1\n2\n3\n4\n").out);
  CHECK(j["mean"] == 2.5);
  CHECK(j["pop_variance"] == oracle::deviation_variance(std::vector<double>{1, 2, 3, 4}).value);
  CHECK(j["n"] == 4);
}

TEST_CASE("stats undefined entries") {
  const auto r = invoke({"stats", "--input", "-"}, "5\n5\n");
  CHECK(r.code == kOk);
  CHECK(r.out.find("pop_variance     0\n") != std::string::npos);
  CHECK(r.out.find("skewness         n/a (zero variance)\n") != std::string::npos);
  const auto j = json::parse(invoke({"stats", "--input", "-", "--json"}, "5\n5\n").out);
  CHECK(j["skewness"].is_null());
  CHECK(j["notes"]["skewness"] == "zero variance");
}

TEST_CASE("stats input errors") {
  const auto r = invoke({"stats", "--input", "-"}, "1\nabc\n");
  CHECK(r.code == kUsage);
  CHECK(r.err.find("line 2") != std::string::npos);
  CHECK(invoke({"stats", "--input", "-"}, "").code == kUsage);
  CHECK(invoke({"stats", "--input", data("missing.csv")}).code == kUsage);
}

TEST_CASE("batch on a constant file") {
  const auto r = invoke({"batch", "--input", data("constant.csv"), "--json"});
  CHECK(r.code == kOk);
  const auto j = json::parse(r.out);
  CHECK(j["grandMean"] == 5.0);
  CHECK(j["halfWidth"] == 0.0);
  CHECK(j["status"] == "converged");
}

TEST_CASE("batch with the M/M/1 model") {
  const auto r = invoke({"batch", "--model", "mm1", "--lambda", "0.5", "--mu", "1", "--warmup", "1000", "--seed", "42",
                         "--json"});
  CHECK(r.code == kOk);
  const auto j = json::parse(r.out);
  CHECK(j["relativePrecision"].get<double>() <= 0.2);
  CHECK(j["grandMean"].get<double>() > 0.0);
  CHECK(j["batchCount"] == j["batchMeans"].size());
}

TEST_CASE("batch errors") {
  CHECK(invoke({"batch", "--model", "mm1", "--lambda", "2", "--mu", "1"}).code == kUsage);
  CHECK(invoke({"batch"}).code == kUsage);
  CHECK(invoke({"batch", "--model", "mm1", "--input", data("constant.csv")}).code == kUsage);
  const auto short_run = invoke({"batch", "--input", "-"}, "1\n2\n3\n");
  CHECK(short_run.code == kNoConvergence);
  CHECK(short_run.err.rfind("error:", 0) == 0);
  CHECK(short_run.out.find("insufficient data") != std::string::npos);
}

TEST_CASE("anova") {
  const auto r = invoke({"anova", "--input", "-"}, "1,2,3\n4,5,6\n");
  CHECK(r.code == kOk);
  CHECK(r.out.find("between  13.5") != std::string::npos);
  CHECK(r.out.find("significant at alpha = 0.05") != std::string::npos);
  const auto j = json::parse(invoke({"anova", "--input", "-", "--json"}, "1,2,3\n4,5,6\n").out);
  CHECK(j["f"] == 13.5);
  CHECK(j["dfBetween"] == 1);
  CHECK(j["dfWithin"] == 4);
  CHECK(j["significant"] == true);
}

TEST_CASE("anova without an effect") {
  const auto r = invoke({"anova", "--input", "-", "--json"}, "1,5,9\n1,5,9\n");
  const auto j = json::parse(r.out);
  CHECK(std::abs(j["f"].get<double>()) < 1e-12);
  CHECK(j["significant"] == false);
  CHECK(invoke({"anova", "--input", "-"}, "1,5,9\n1,5,9\n").out.find("not significant") != std::string::npos);
}

TEST_CASE("anova input errors") {
  CHECK(invoke({"anova", "--input", "-"}, "1,2,3\n").code == kUsage);
  const auto ragged = invoke({"anova", "--input", "-"}, "1,2,3\n4,5\n");
  CHECK(ragged.code == kUsage);
  CHECK(ragged.err.find("row 2") != std::string::npos);
}

TEST_CASE("eval") {
  CHECK(invoke({"eval", "Σ(1 to 3, i ⇒ i↑2)"}).out == "14\n");
  const auto dp = invoke({"eval", "v ⋅ w", "--define", "v=@" + data("v.csv"), "--define", "w=@" + data("w.csv")});
  CHECK(dp.code == kOk);
  CHECK(dp.out == "16\n");
  CHECK(invoke({"eval", "x * 2", "--define", "x=1 + 2"}).out == "6\n");
  CHECK(invoke({"eval", "{3, 1, 2}"}).out == "{1,2,3}\n");
  CHECK(invoke({"eval", "¬true"}).out == "false\n");
}

TEST_CASE("eval errors") {
  const auto parse = invoke({"eval", "2↑"});
  CHECK(parse.code == kUsage);
  CHECK(parse.err.find("offset 2") != std::string::npos);
  CHECK(invoke({"eval", "1 / 0"}).code == kEvaluation);
  CHECK(invoke({"eval", "q + 1"}).code == kEvaluation);
  CHECK(invoke({"eval", "1", "--define", "bad"}).code == kUsage);
}

TEST_CASE("repl") {
  const auto r = invoke({"repl"}, "x = 2\nx↑3\nx + 1\n");
  CHECK(r.code == kOk);
  CHECK(r.out == "8\n3\n");
  const auto script = invoke({"repl", "--input", data("script.txt")});
  CHECK(script.out == "8\n14\n");
  CHECK(script.code == kUsage);
  CHECK(script.err.find("line 3") != std::string::npos);
  CHECK(script.err.find("line 4") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(invoke({}).code == kUsage);
  CHECK(invoke({"frobnicate"}).code == kUsage);
  CHECK(invoke({"gen", "--n", "3"}).code == kUsage);
  CHECK(invoke({"--help"}).code == kOk);
}
