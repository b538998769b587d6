#include "simstat/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <utility>

#include "simstat/anova.hpp"
#include "simstat/batch.hpp"
#include "simstat/csv.hpp"
#include "simstat/format.hpp"
#include "simstat/notation/evaluator.hpp"
#include "simstat/notation/parser.hpp"
#include "simstat/stats.hpp"
#include "simstat/variate.hpp"

namespace simstat::cli {

namespace {

using nlohmann::json;

constexpr std::uint64_t kDefaultSeed = 12345;

/// Failure carrying its exit code; the message becomes the "error:" line.
struct Failure {
  int code;
  std::string message;
};

// JSON numbers carry exactly the digits the table shows.
json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return std::strtod(format_real(x).c_str(), nullptr);
}

// Two-column "name  value" table.
class Table {
 public:
  void row(const std::string& name, const std::string& value) { rows_.emplace_back(name, value); }
  void row(const std::string& name, double value) { row(name, format_real(value)); }
  void row(const std::string& name, std::size_t value) { row(name, std::to_string(value)); }

  void print(std::ostream& out) const {
    std::size_t width = 0;
    for (const auto& r : rows_) width = std::max(width, r.first.size());
    for (const auto& [name, value] : rows_) {
      out << std::left << std::setw(static_cast<int>(width + 2)) << name << value << '\n';
    }
  }

 private:
  std::vector<std::pair<std::string, std::string>> rows_;
};

std::uint64_t parse_seed(const std::string& text, const std::string& origin) {
  std::uint64_t v = 0;
  std::istringstream in(text);
  if (text.empty() || text.front() == '-' || !(in >> v) || !in.eof()) {
    throw Failure{kUsage, origin + ": invalid seed '" + text + "'"};
  }
  return v;
}

// --seed flag, then SIMSTAT_SEED, then the default.
std::uint64_t resolve_seed(const std::optional<std::string>& flag) {
  if (flag) return parse_seed(*flag, "--seed");
  if (const char* env = std::getenv("SIMSTAT_SEED"); env && *env) return parse_seed(env, "SIMSTAT_SEED");
  return kDefaultSeed;
}

NumVector read_values(const std::string& path, std::istream& in) {
  try {
    return path == "-" ? read_csv_values(in) : read_csv_values_file(path);
  } catch (const Error& e) {
    throw Failure{kUsage, e.what()};
  }
}

std::vector<std::vector<double>> read_rows(const std::string& path, std::istream& in) {
  try {
    return path == "-" ? read_csv_rows(in) : read_csv_rows_file(path);
  } catch (const Error& e) {
    throw Failure{kUsage, e.what()};
  }
}

// ---- gen --------------------------------------------------------------------

struct GenOptions {
  std::string dist;
  std::size_t n = 1;
  std::optional<std::string> seed;
  std::uint64_t stream = 0;
  bool json = false;
};

int cmd_gen(const GenOptions& o, std::ostream& out) {
  std::optional<Distribution> d;
  try {
    d = parse_distribution(o.dist);
  } catch (const Error& e) {
    throw Failure{kUsage, e.what()};
  }
  RandomStream stream(resolve_seed(o.seed), o.stream);
  const auto xs = random_vector(*d, o.n, stream);
  if (o.json) {
    json arr = json::array();
    for (double x : xs) arr.push_back(number(x));
    out << arr.dump() << '\n';
  } else {
    for (double x : xs) out << format_real(x) << '\n';
  }
  return kOk;
}

// ---- stats ------------------------------------------------------------------

struct StatsOptions {
  std::string input;
  bool json = false;
};

struct Entry {
  std::string name;
  std::optional<double> value;
  std::string reason;  // why value is missing
};

template <typename F>
Entry entry(const std::string& name, F&& compute) {
  try {
    return {name, compute(), ""};
  } catch (const DegenerateInputError& e) {
    std::string why = e.what();
    if (why.find("variance") != std::string::npos || why.find("constant") != std::string::npos) {
      why = "zero variance";
    }
    return {name, std::nullopt, why};
  }
}

int cmd_stats(const StatsOptions& o, std::ostream& out, std::istream& in) {
  const auto x = read_values(o.input, in);
  if (x.empty()) throw Failure{kUsage, "input contains no values"};

  const auto n = x.size();
  auto need = [&](std::size_t k) { return "needs at least " + std::to_string(k) + " values"; };
  std::vector<Entry> entries;
  entries.push_back({"mean", mean(x), ""});
  entries.push_back({"mean_square", mean_square(x), ""});
  entries.push_back({"pop_variance", pop_variance(x), ""});
  if (n >= 2) {
    entries.push_back({"sample_variance", sample_variance(x), ""});
  } else {
    entries.push_back({"sample_variance", std::nullopt, need(2)});
  }
  entries.push_back({"std_dev", std_dev(x), ""});
  if (pop_variance(x) == 0.0) {
    entries.push_back({"skewness", std::nullopt, "zero variance"});
  } else {
    entries.push_back(entry("skewness", [&] { return skewness(x); }));
  }
  if (n >= 3) {
    entries.push_back(entry("autocorrelation", [&] { return autocorrelation(x); }));
  } else {
    entries.push_back({"autocorrelation", std::nullopt, need(3)});
  }
  if (n >= 2) {
    entries.push_back({"half_width_95", interval_half_width(x, 0.95), ""});
  } else {
    entries.push_back({"half_width_95", std::nullopt, need(2)});
  }

  if (o.json) {
    json j;
    j["n"] = n;
    json notes = json::object();
    for (const auto& e : entries) {
      j[e.name] = e.value ? number(*e.value) : json(nullptr);
      if (!e.value) notes[e.name] = e.reason;
    }
    j["notes"] = notes;
    out << j.dump() << '\n';
  } else {
    Table t;
    t.row("n", n);
    for (const auto& e : entries) t.row(e.name, e.value ? format_real(*e.value) : "n/a (" + e.reason + ")");
    t.print(out);
  }
  return kOk;
}

// ---- batch ------------------------------------------------------------------

struct BatchOptions {
  std::string input;
  std::string model;
  std::string dist;
  double lambda = 0.0;
  double mu = 0.0;
  std::size_t warmup = 0;
  double phi = 0.95;
  double ar_mean = 10.0;
  double innovation_variance = 1.0;
  BatchConfig config;
  std::optional<std::string> seed;
  bool json = false;
};

void print_report(const BatchReport& r, bool as_json, std::ostream& out, const std::string& status) {
  if (as_json) {
    json j;
    j["status"] = status;
    j["batchSize"] = r.batch_size;
    j["batchCount"] = r.batch_means.size();
    j["grandMean"] = number(r.grand_mean);
    j["halfWidth"] = number(r.half_width);
    j["relativePrecision"] = number(r.relative_precision);
    j["finalAcf"] = number(r.final_acf);
    j["totalObservations"] = r.total_observations;
    j["iterationsDoubling"] = r.iterations_doubling;
    j["iterationsPrecision"] = r.iterations_precision;
    json means = json::array();
    for (double x : r.batch_means) means.push_back(number(x));
    j["batchMeans"] = std::move(means);
    out << j.dump() << '\n';
    return;
  }
  Table t;
  t.row("status", status);
  t.row("batch_size", r.batch_size);
  t.row("batch_count", r.batch_means.size());
  t.row("grand_mean", r.grand_mean);
  t.row("half_width", r.half_width);
  t.row("relative_precision", r.relative_precision);
  t.row("final_acf", r.final_acf);
  t.row("total_observations", r.total_observations);
  t.row("iterations_doubling", r.iterations_doubling);
  t.row("iterations_precision", r.iterations_precision);
  t.print(out);
}

std::unique_ptr<SampleSource> make_source(const BatchOptions& o, std::istream& in) {
  const int chosen = int(!o.input.empty()) + int(!o.model.empty()) + int(!o.dist.empty());
  if (chosen != 1) throw Failure{kUsage, "batch: give exactly one of --input, --model or --dist"};
  try {
    if (!o.input.empty()) return std::make_unique<VectorSource>(read_values(o.input, in));
    const auto seed = resolve_seed(o.seed);
    if (!o.dist.empty()) return std::make_unique<DistributionSource>(parse_distribution(o.dist), seed);
    if (o.model == "mm1") return std::make_unique<Mm1WaitingTimeSource>(o.lambda, o.mu, seed, o.warmup);
    if (o.model == "ar1") return std::make_unique<Ar1Source>(o.phi, o.ar_mean, o.innovation_variance, seed);
  } catch (const Error& e) {
    throw Failure{kUsage, e.what()};
  }
  throw Failure{kUsage, "batch: unknown model '" + o.model + "' (expected mm1 or ar1)"};
}

int cmd_batch(const BatchOptions& o, std::ostream& out, std::ostream& err, std::istream& in) {
  try {
    o.config.validate();
  } catch (const Error& e) {
    throw Failure{kUsage, e.what()};
  }
  auto source = make_source(o, in);
  try {
    print_report(run_batch_means(*source, o.config), o.json, out, "converged");
    return kOk;
  } catch (const NonConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    const bool insufficient = dynamic_cast<const InsufficientDataError*>(&e) != nullptr;
    print_report(e.partial(), o.json, out, insufficient ? "insufficient data" : "not converged");
    return kNoConvergence;
  } catch (const DegenerateInputError& e) {
    throw Failure{kNoConvergence, std::string("insufficient data: ") + e.what()};
  }
}

// ---- anova ------------------------------------------------------------------

struct AnovaOptions {
  std::string input;
  double alpha = 0.05;
  bool json = false;
};

int cmd_anova(const AnovaOptions& o, std::ostream& out, std::istream& in) {
  if (!(o.alpha > 0.0 && o.alpha < 1.0)) throw Failure{kUsage, "anova: --alpha must lie in (0, 1)"};
  std::vector<NumVector> rows;
  for (auto& r : read_rows(o.input, in)) rows.emplace_back(std::move(r));
  std::optional<TreatmentMatrix> x;
  try {
    x.emplace(std::move(rows));
  } catch (const Error& e) {
    throw Failure{kUsage, e.what()};
  }
  const auto t = anova(*x);
  const bool significant = t.p_value < o.alpha;
  const std::string verdict = std::string(significant ? "significant" : "not significant") +
                              " at alpha = " + format_real(o.alpha);
  if (o.json) {
    json j;
    j["m"] = t.m;
    j["n"] = t.n;
    j["grandMean"] = number(t.grand_mean);
    j["sst"] = number(t.sst);
    j["ssb"] = number(t.ssb);
    j["ssw"] = number(t.ssw);
    j["dfBetween"] = t.df_between;
    j["dfWithin"] = t.df_within;
    j["msBetween"] = number(t.ms_between);
    j["msWithin"] = number(t.ms_within);
    j["f"] = number(t.f_statistic);
    j["pValue"] = number(t.p_value);
    j["alpha"] = number(o.alpha);
    j["significant"] = significant;
    out << j.dump() << '\n';
  } else {
    const auto f = [](double v) { return format_real(v); };
    const auto z = [](std::size_t v) { return std::to_string(v); };
    const std::vector<std::vector<std::string>> grid{
        {"source", "SS", "df", "MS", "F", "p"},
        {"between", f(t.ssb), z(t.df_between), f(t.ms_between), f(t.f_statistic), f(t.p_value)},
        {"within", f(t.ssw), z(t.df_within), f(t.ms_within), "", ""},
        {"total", f(t.sst), z(t.df_between + t.df_within), "", "", ""},
    };
    std::vector<std::size_t> width(grid.front().size(), 0);
    for (const auto& row : grid) {
      for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    for (const auto& row : grid) {
      std::string line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        line += row[c];
        if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out << line << '\n';
    }
    out << '\n';
    Table tab;
    tab.row("treatments", t.m);
    tab.row("replicates", t.n);
    tab.row("grand_mean", t.grand_mean);
    tab.row("verdict", verdict);
    tab.print(out);
  }
  return kOk;
}

// ---- eval / repl ------------------------------------------------------------

struct EvalOptions {
  std::string expr;
  std::vector<std::string> defines;
  std::string input = "-";
};

notation::Environment definitions(const std::vector<std::string>& defines, std::istream& in) {
  notation::Environment env;
  for (const auto& d : defines) {
    const auto eq = d.find('=');
    if (eq == std::string::npos || eq == 0) throw Failure{kUsage, "--define expects name=value, got '" + d + "'"};
    const std::string name = d.substr(0, eq);
    const std::string value = d.substr(eq + 1);
    if (!value.empty() && value.front() == '@') {
      env = env.bind(name, read_values(value.substr(1), in));
      continue;
    }
    try {
      env = env.bind(name, notation::evaluate(value, env));
    } catch (const notation::ParseError& e) {
      throw Failure{kUsage, "--define " + name + ": offset " + std::to_string(e.offset()) + ": " + e.what()};
    } catch (const Error& e) {
      throw Failure{kEvaluation, "--define " + name + ": " + e.what()};
    }
  }
  return env;
}

int cmd_eval(const EvalOptions& o, std::ostream& out, std::istream& in) {
  const auto env = definitions(o.defines, in);
  try {
    out << notation::format_value(notation::evaluate(o.expr, env)) << '\n';
  } catch (const notation::ParseError& e) {
    throw Failure{kUsage, "parse error at offset " + std::to_string(e.offset()) + ": " + e.what()};
  } catch (const Error& e) {
    throw Failure{kEvaluation, e.what()};
  }
  return kOk;
}

// Reads statements line by line; errors are reported and the session goes on.
// The exit status is that of the first failing line.
int cmd_repl(const EvalOptions& o, std::ostream& out, std::ostream& err, std::istream& in) {
  std::ifstream file;
  std::istream* src = &in;
  if (o.input != "-") {
    file.open(o.input);
    if (!file) throw Failure{kUsage, "cannot open '" + o.input + "'"};
    src = &file;
  }
  auto env = definitions(o.defines, in);
  int status = kOk;
  std::string line;
  for (std::size_t line_no = 1; std::getline(*src, line); ++line_no) {
    try {
      auto result = notation::eval_program(line, env);
      env = std::move(result.env);
      for (const auto& s : result.outputs) out << s << '\n';
    } catch (const notation::ProgramError& e) {
      std::string msg = e.what();
      msg.replace(0, msg.find(':'), "line " + std::to_string(line_no));
      err << "error: " << msg << '\n';
      if (status == kOk) status = e.parse_failure() ? kUsage : kEvaluation;
    }
  }
  return status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"simstat: simulation statistics toolkit", "simstat"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Sample variates from a distribution");
  gen_cmd->add_option("--dist", gen.dist, "Distribution spec, e.g. normal:0,1")->required();
  gen_cmd->add_option("--n", gen.n, "Number of variates")->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--seed", gen.seed, "Seed (default: SIMSTAT_SEED or 12345)");
  gen_cmd->add_option("--stream", gen.stream, "Stream id");
  gen_cmd->add_flag("--json", gen.json, "Emit a JSON array");

  StatsOptions stats;
  auto* stats_cmd = app.add_subcommand("stats", "Descriptive statistics of a CSV column set");
  stats_cmd->add_option("--input", stats.input, "CSV file or - for stdin")->required();
  stats_cmd->add_flag("--json", stats.json, "Emit JSON");

  BatchOptions batch;
  auto* batch_cmd = app.add_subcommand("batch", "Batch-means output analysis");
  batch_cmd->add_option("--input", batch.input, "CSV file or - for stdin");
  batch_cmd->add_option("--model", batch.model, "Built-in source: mm1 or ar1");
  batch_cmd->add_option("--dist", batch.dist, "i.i.d. source from a distribution spec");
  batch_cmd->add_option("--lambda", batch.lambda, "M/M/1 arrival rate");
  batch_cmd->add_option("--mu", batch.mu, "M/M/1 service rate");
  batch_cmd->add_option("--warmup", batch.warmup, "M/M/1 customers discarded before observing");
  batch_cmd->add_option("--phi", batch.phi, "AR(1) coefficient");
  batch_cmd->add_option("--mean", batch.ar_mean, "AR(1) mean");
  batch_cmd->add_option("--innovation-variance", batch.innovation_variance, "AR(1) noise variance");
  batch_cmd->add_option("--b0", batch.config.initial_batch_size, "Initial batch size");
  batch_cmd->add_option("--n0", batch.config.initial_batch_count, "Initial batch count");
  batch_cmd->add_option("--acf-threshold", batch.config.acf_threshold, "Lag-1 autocorrelation bound");
  batch_cmd->add_option("--precision-threshold", batch.config.precision_threshold, "Relative precision target");
  batch_cmd->add_option("--confidence", batch.config.confidence, "Confidence level");
  batch_cmd->add_option("--max-obs", batch.config.max_observations, "Observation budget");
  batch_cmd->add_option("--seed", batch.seed, "Seed (default: SIMSTAT_SEED or 12345)");
  batch_cmd->add_flag("--json", batch.json, "Emit JSON");

  AnovaOptions an;
  auto* anova_cmd = app.add_subcommand("anova", "One-way ANOVA; one treatment per CSV row");
  anova_cmd->add_option("--input", an.input, "CSV file or - for stdin")->required();
  anova_cmd->add_option("--alpha", an.alpha, "Significance level");
  anova_cmd->add_flag("--json", an.json, "Emit JSON");

  EvalOptions ev;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a notation expression");
  eval_cmd->add_option("expr", ev.expr, "Expression")->required();
  eval_cmd->add_option("--define", ev.defines, "name=expr or name=@file.csv");

  EvalOptions rp;
  auto* repl_cmd = app.add_subcommand("repl", "Evaluate notation statements line by line");
  repl_cmd->add_option("--input", rp.input, "Script file or - for stdin");
  repl_cmd->add_option("--define", rp.defines, "name=expr or name=@file.csv");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*stats_cmd) return cmd_stats(stats, out, in);
    if (*batch_cmd) return cmd_batch(batch, out, err, in);
    if (*anova_cmd) return cmd_anova(an, out, in);
    if (*eval_cmd) return cmd_eval(ev, out, in);
    if (*repl_cmd) return cmd_repl(rp, out, err, in);
  } catch (const Failure& f) {
    err << "error: " << f.message << '\n';
    return f.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kEvaluation;
  }
  return kUsage;
}

}  // namespace simstat::cli
