// Copyright 2026 The pauliprobe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "pauliprobe/bounds.hpp"
#include "pauliprobe/channel.hpp"
#include "pauliprobe/covering.hpp"
#include "pauliprobe/errors.hpp"
#include "pauliprobe/game.hpp"
#include "pauliprobe/oracle.hpp"
#include "pauliprobe/probe.hpp"
#include "pauliprobe/rng.hpp"
#include "pauliprobe/syndrome.hpp"
#include "pauliprobe/uniform_family.hpp"

namespace pauliprobe::cli {
namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Settings {
  std::optional<int> n;
  std::optional<int> k;
  std::optional<int> w;
  std::optional<double> alpha;
  std::optional<double> lam_w;
  std::optional<double> x;
  double eps = 0.1;
  double delta = 0.05;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> trials;
  std::string out;
  std::string format = "csv";
  std::string channel;
  std::string covering_out;
  std::string strategy = "alpha";
  int steps = 11;
  std::optional<double> regime_c;
  bool dry_run = false;
  bool greedy_argmax = false;
  bool oracle_check = false;
};

// Shortest round-trip decimal, independent of the global locale.
std::string num(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

template <class T>
T field(const json& doc, const char* key) {
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception&) {
    throw UsageError(std::string("config field '") + key + "' has the wrong type");
  }
}

void apply_config(const std::string& path, Settings& s, const std::function<bool(const char*)>& on_command_line) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  if (!doc.is_object()) throw UsageError("config file must hold a JSON object");
  // Command-line flags win over the file.
  const std::map<std::string, std::function<void()>> setters = {
      {"n", [&] { s.n = field<int>(doc, "n"); }},
      {"k", [&] { s.k = field<int>(doc, "k"); }},
      {"w", [&] { s.w = field<int>(doc, "w"); }},
      {"alpha", [&] { s.alpha = field<double>(doc, "alpha"); }},
      {"lam_w", [&] { s.lam_w = field<double>(doc, "lam_w"); }},
      {"x", [&] { s.x = field<double>(doc, "x"); }},
      {"eps", [&] { s.eps = field<double>(doc, "eps"); }},
      {"delta", [&] { s.delta = field<double>(doc, "delta"); }},
      {"seed", [&] { s.seed = field<std::uint64_t>(doc, "seed"); }},
      {"trials", [&] { s.trials = field<std::uint64_t>(doc, "trials"); }},
      {"output_path", [&] { s.out = field<std::string>(doc, "output_path"); }},
      {"format", [&] { s.format = field<std::string>(doc, "format"); }},
      {"channel", [&] { s.channel = field<std::string>(doc, "channel"); }},
      {"covering_out", [&] { s.covering_out = field<std::string>(doc, "covering_out"); }},
      {"strategy", [&] { s.strategy = field<std::string>(doc, "strategy"); }},
      {"steps", [&] { s.steps = field<int>(doc, "steps"); }},
      {"regime_c", [&] { s.regime_c = field<double>(doc, "regime_c"); }},
      {"greedy_argmax", [&] { s.greedy_argmax = field<bool>(doc, "greedy_argmax"); }},
  };
  const std::map<std::string, std::string> flag_of = {{"lam_w", "--lam-w"},         {"output_path", "--out"},
                                                      {"covering_out", "--covering-out"}, {"regime_c", "--regime-c"},
                                                      {"greedy_argmax", "--greedy-argmax"}};
  for (const auto& [key, value] : doc.items()) {
    const auto it = setters.find(key);
    if (it == setters.end()) throw UsageError("unknown config field '" + key + "'");
    const auto f = flag_of.find(key);
    const std::string flag = f != flag_of.end() ? f->second : "--" + key;
    if (!on_command_line(flag.c_str())) it->second();
  }
}

void require(bool ok, const char* name, const std::string& rule) {
  if (!ok) throw UsageError(std::string("invalid value for '") + name + "': " + rule);
}

void validate_common(const Settings& s) {
  require(s.format == "csv" || s.format == "json", "format", "must be csv or json");
  require(s.eps > 0.0 && s.eps < 1.0, "eps", "must lie in (0, 1)");
  require(s.delta > 0.0 && s.delta < 0.5, "delta", "must lie in (0, 1/2)");
  if (s.alpha) require(*s.alpha >= 0.0 && *s.alpha <= 1.0, "alpha", "must lie in [0, 1]");
  if (s.lam_w) require(*s.lam_w >= 0.0 && *s.lam_w <= 1.0, "lam_w", "must lie in [0, 1]");
  if (s.x) require(*s.x > 0.0 && *s.x <= 1.0, "x", "must lie in (0, 1]");
  if (s.trials) require(*s.trials >= 1, "trials", "must be at least 1");
  if (s.k) require(*s.k >= 0, "k", "must be non-negative");
}

int checked_n(const Settings& s, int fallback, int max_n) {
  const int n = s.n.value_or(fallback);
  require(n >= 1 && n <= max_n, "n", "must lie in [1, " + std::to_string(max_n) + "]");
  return n;
}

int checked_w(const Settings& s, int n, int fallback) {
  const int w = s.w.value_or(fallback);
  require(w >= 0 && w <= n, "w", "must lie in [0, n]");
  return w;
}

// Accumulates one table; renders CSV with a single header or a JSON array.
class Table {
 public:
  explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  void add(std::vector<json> row) { rows_.push_back(std::move(row)); }
  void note(const std::string& key, json value) { summary_[key] = std::move(value); }

  void render(std::ostream& os, const std::string& format) const {
    if (format == "json") {
      json doc;
      doc["rows"] = json::array();
      for (const auto& row : rows_) {
        json obj;
        for (std::size_t i = 0; i < columns_.size(); ++i) obj[columns_[i]] = row[i];
        doc["rows"].push_back(obj);
      }
      if (!summary_.empty()) doc["summary"] = summary_;
      os << doc.dump(2) << '\n';
      return;
    }
    for (std::size_t i = 0; i < columns_.size(); ++i) os << (i ? "," : "") << columns_[i];
    os << '\n';
    for (const auto& row : rows_) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell(row[i]);
      os << '\n';
    }
    if (!summary_.empty()) {
      os << "# summary";
      for (const auto& [key, value] : summary_.items()) os << ' ' << key << '=' << cell(value);
      os << '\n';
    }
  }

 private:
  static std::string cell(const json& v) {
    if (v.is_number_float()) return num(v.get<double>());
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "";
    return v.dump();
  }

  std::vector<std::string> columns_;
  std::vector<std::vector<json>> rows_;
  json summary_ = json::object();
};

class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (path.empty()) {
      os_ = &fallback;
      return;
    }
    file_.open(path);
    if (!file_) throw UsageError("cannot open output file '" + path + "'");
    os_ = &file_;
  }
  std::ostream& stream() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_ = nullptr;
};

Probe probe_from(const Settings& s, int n) {
  require(!(s.alpha && s.lam_w), "lam_w", "give either alpha or lam_w, not both");
  if (s.lam_w) return make_werner_probe(n, *s.lam_w);
  return make_alpha_probe(n, s.alpha.value_or(1.0));
}

double max_abs_diff(const RealFunctionOnPaulis& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

int cmd_estimate(const Settings& s, std::ostream& out, std::ostream& err) {
  const int n = checked_n(s, 3, 8);
  const int w = checked_w(s, n, n);
  const Probe probe = probe_from(s, n);
  PauliChannel channel = identity_channel(n);
  std::string channel_id;
  if (!s.channel.empty()) {
    std::ifstream in(s.channel);
    if (!in) throw UsageError("cannot open channel file '" + s.channel + "'");
    channel = channel_from_json(nlohmann::json::parse(in));
    require(channel.num_qubits() == n, "channel", "file holds a channel on a different number of qubits");
    channel_id = s.channel;
  } else {
    channel = random_channel(n, s.seed);
    channel_id = "random:" + std::to_string(s.seed);
  }
  const std::uint64_t shots = plan_samples(probe, s.eps, s.delta, w);
  Sink sink(s.out, out);
  if (s.dry_run) {
    if (s.format == "json") {
      sink.stream() << json{{"N_used", shots}}.dump(2) << '\n';
    } else {
      sink.stream() << shots << '\n';
    }
    return kExitOk;
  }
  bool oracle_ok = true;
  std::optional<double> oracle_dev;
  if (s.oracle_check) {
    if (2 * n <= 6) {
      oracle_dev = max_abs_diff(bell_outcome_distribution(channel, probe),
                                oracle::dense_outcome_distribution(channel, probe));
      oracle_ok = *oracle_dev <= 1e-9;
    } else {
      err << "oracle check skipped: n=" << n << " exceeds the dense cap\n";
    }
  }
  const auto record = sample_outcomes(channel, probe, shots, derive_seed(s.seed, 1), channel_id);
  const auto est = estimate_all(record);
  Table table({"b", "weight", "lambda_true", "lambda_hat", "abs_err"});
  double max_err = 0.0;
  std::uint64_t failures = 0;
  for (std::uint64_t b = 0; b < est.size(); ++b) {
    const int wt = weight_index(b);
    if (wt > w) continue;
    const double truth = channel.eigenvalues()[b];
    const double e = std::abs(est[b] - truth);
    max_err = std::max(max_err, e);
    if (e > s.eps) ++failures;
    table.add({PauliString::from_index(n, b).to_string(), wt, truth, est[b], e});
  }
  table.note("max_err", max_err);
  table.note("N_used", shots);
  table.note("failures", failures);
  if (oracle_dev) table.note("oracle_max_dev", *oracle_dev);
  table.render(sink.stream(), s.format);
  if (!oracle_ok) throw CheckFailed("dense oracle disagrees with the fast outcome distribution");
  return kExitOk;
}

int cmd_entropy_sweep(const Settings& s, std::ostream& out, std::ostream&) {
  const int n_max = checked_n(s, 12, 60);
  require(s.steps >= 2, "steps", "must be at least 2");
  std::vector<std::string> cols = {"n", "alpha", "entropy_bits", "ratio_to_n_alpha"};
  if (s.oracle_check) cols.push_back("oracle_match");
  Table table(cols);
  bool all_match = true;
  for (int n = 1; n <= n_max; ++n) {
    for (int i = 0; i < s.steps; ++i) {
      const double alpha = static_cast<double>(i) / (s.steps - 1);
      const AlphaProbe probe = make_alpha_probe(n, alpha);
      const double entropy = entanglement_entropy(probe);
      std::vector<json> row = {n, alpha, entropy, alpha > 0.0 ? json(entropy / (n * alpha)) : json(nullptr)};
      if (s.oracle_check) {
        if (n <= 3) {
          const double dense =
              oracle::dense_partial_trace_entropy(oracle::dense_probe_density(probe), n, oracle::Keep::kAncilla);
          const bool match = std::abs(dense - entropy) <= 1e-9;
          all_match = all_match && match;
          row.emplace_back(match ? 1 : 0);
        } else {
          row.emplace_back(nullptr);
        }
      }
      table.add(std::move(row));
    }
  }
  Sink sink(s.out, out);
  table.render(sink.stream(), s.format);
  if (!all_match) throw CheckFailed("dense oracle entropy mismatch");
  return kExitOk;
}

int cmd_cover(const Settings& s, std::ostream& out, std::ostream& err) {
  const int n = checked_n(s, 4, 10);
  const int k = s.k.value_or(0);
  require(k <= n, "k", "must lie in [0, n]");
  const int w = checked_w(s, n, std::min(n, 2));
  const auto res = greedy_cover(n, k, w, GreedyOptions{s.greedy_argmax, s.seed});
  const auto report = verify_covering(res.covering);
  json rep = {{"n", n},
              {"k", k},
              {"w", w},
              {"family", to_string(res.family)},
              {"family_size", res.family_size},
              {"size", res.covering.groups.size()},
              {"bound", res.bound},
              {"sigma_formula", res.sigma_formula.value},
              {"sigma_formula_exact", res.sigma_formula.exact},
              {"sigma_measured", res.sigma_measured},
              {"covered_fraction", report.covered_fraction},
              {"fallback_used", res.fallback_used}};
  bool oracle_ok = true;
  if (s.oracle_check) {
    if (k + n <= 6) {
      const PauliChannel channel = random_channel(n, derive_seed(s.seed, 2));
      double dev = 0.0;
      for (const auto& g : res.covering.groups) {
        const auto fast = syndrome_distribution(g, channel);
        const auto dense = oracle::dense_syndrome_distribution(g, channel);
        for (std::size_t i = 0; i < fast.size(); ++i) dev = std::max(dev, std::abs(fast[i] - dense[i]));
      }
      rep["oracle_max_dev"] = dev;
      oracle_ok = dev <= 1e-9;
    } else {
      err << "oracle check skipped: k+n=" << k + n << " exceeds the dense cap\n";
    }
  }
  const nlohmann::json cov = covering_to_json(res.covering);
  if (!s.covering_out.empty()) {
    std::ofstream f(s.covering_out);
    if (!f) throw UsageError("cannot open covering output '" + s.covering_out + "'");
    f << cov.dump(2) << '\n';
  }
  Sink sink(s.out, out);
  if (s.format == "json") {
    json doc;
    doc["report"] = rep;
    doc["covering"] = json::parse(cov.dump());
    sink.stream() << doc.dump(2) << '\n';
  } else {
    std::vector<std::string> cols;
    std::vector<json> row;
    for (const auto& [key, value] : rep.items()) {
      cols.push_back(key);
      row.push_back(value);
    }
    Table table(cols);
    table.add(row);
    table.render(sink.stream(), "csv");
  }
  if (report.uncovered_count > 0) throw CheckFailed("covering leaves " + std::to_string(report.uncovered_count) + " strings uncovered");
  if (!oracle_ok) throw CheckFailed("dense oracle disagrees with the syndrome distribution");
  return kExitOk;
}

int cmd_bound_table(const Settings& s, std::ostream& out, std::ostream&) {
  const int n_max = checked_n(s, 8, 60);
  std::vector<std::string> cols = {"n", "k", "w", "eps", "delta", "lower_N", "upper_N", "sigma_used", "optimal_x"};
  if (s.regime_c) {
    require(*s.regime_c > 0.0, "regime_c", "must be positive");
    cols.emplace_back("regime");
  }
  Table table(cols);
  const int n_min = s.n && (s.k || s.w) ? n_max : 1;
  for (int n = n_min; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      if (s.k && *s.k != k) continue;
      for (int w = 0; w <= n; ++w) {
        if (s.w && *s.w != w) continue;
        const BoundQuery q{n, k, w, s.eps, s.delta};
        const double lower = lower_bound_N(q);
        std::vector<json> row = {n, k, w, s.eps, s.delta, lower, upper_bound_N(q), sigma_formula(n, k, w).value,
                                 optimal_x(n, w).x};
        if (s.regime_c) row.emplace_back(std::log2(lower) >= *s.regime_c * n ? "exponential" : "polynomial");
        table.add(std::move(row));
      }
    }
  }
  Sink sink(s.out, out);
  table.render(sink.stream(), s.format);
  return kExitOk;
}

int cmd_game(const Settings& s, std::ostream& out, std::ostream&) {
  const int n = checked_n(s, 2, 8);
  const int w = checked_w(s, n, n);
  GameConfig cfg;
  cfg.n = n;
  cfg.w = w;
  cfg.x = s.x.value_or(1.0);
  cfg.eps = s.eps;
  cfg.delta = s.delta;
  cfg.trials = s.trials.value_or(200);
  cfg.seed = s.seed;
  require(cfg.eps <= 0.5, "eps", "must lie in (0, 1/2] for the game");
  Strategy strategy = AlphaStrategy{s.alpha.value_or(1.0)};
  std::string label = "alpha=" + num(s.alpha.value_or(1.0));
  if (s.strategy == "stabilizer") {
    const int k = s.k.value_or(0);
    require(k <= n, "k", "must lie in [0, n]");
    const UniformFamily family(n, k, w);
    strategy = StabilizerStrategy{family.member(s.seed % family.size())};
    label = "stabilizer:k=" + std::to_string(k);
  } else {
    require(s.strategy == "alpha", "strategy", "must be alpha or stabilizer");
  }
  const auto res = run_game(cfg, strategy);
  Table table({"n", "w", "x", "eps", "delta", "strategy", "trials", "wins", "win_rate", "ci_low", "ci_high", "sigma",
               "floor", "shots_per_trial"});
  table.add({n, w, cfg.x, cfg.eps, cfg.delta, label, res.trials, res.wins, res.win_rate, res.ci_low, res.ci_high,
             res.sigma, res.floor, res.shots_per_trial});
  Sink sink(s.out, out);
  table.render(sink.stream(), s.format);
  return kExitOk;
}

int cmd_oracle_check(const Settings& s, std::ostream& out, std::ostream&) {
  const auto seeds = s.trials.value_or(20);
  require(seeds <= 10000, "trials", "must be at most 10000 for oracle-check");
  const auto checks = oracle::run_oracle_checks(static_cast<int>(seeds), s.seed);
  Table table({"check", "max_deviation", "tolerance", "passed"});
  bool ok = true;
  for (const auto& c : checks) {
    table.add({c.name, c.max_deviation, c.tolerance, c.passed() ? 1 : 0});
    ok = ok && c.passed();
  }
  Sink sink(s.out, out);
  table.render(sink.stream(), s.format);
  if (!ok) throw CheckFailed("oracle deviation above tolerance");
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pauli channel learning experiments", "pauliprobe"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  std::string config_path;
  int n = 0, k = 0, w = 0, steps = 0;
  double alpha = 0, lam_w = 0, x = 0, regime_c = 0;
  std::uint64_t trials = 0;
  app.add_option("--config", config_path, "JSON config file; flags override its fields");
  app.add_option("--seed", s.seed, "64-bit seed");
  app.add_option("--out", s.out, "output path (default stdout)");
  app.add_option("--format", s.format, "csv or json");
  app.add_flag("--dry-run", s.dry_run, "estimate: print the planned sample count only");
  app.add_flag("--greedy-argmax", s.greedy_argmax, "cover: always take the best group");
  app.add_flag("--oracle-check", s.oracle_check, "cross-check against the dense oracle");
  app.add_option("--n", n, "number of system qubits (max n for sweeps)");
  app.add_option("--k", k, "number of ancilla qubits");
  app.add_option("--w", w, "maximum Pauli weight");
  app.add_option("--alpha", alpha, "alpha-family probe parameter");
  app.add_option("--lam-w", lam_w, "Werner probe parameter");
  app.add_option("--x", x, "game prior parameter");
  app.add_option("--eps", s.eps, "accuracy");
  app.add_option("--delta", s.delta, "failure probability");
  app.add_option("--trials", trials, "game trials or oracle seeds");
  app.add_option("--steps", steps, "entropy-sweep: alpha grid points");
  app.add_option("--regime-c", regime_c, "bound-table: add regime column, exponential iff log2(lower_N) >= c n");
  app.add_option("--channel", s.channel, "estimate: channel JSON file");
  app.add_option("--covering-out", s.covering_out, "cover: also write the covering JSON here");
  app.add_option("--strategy", s.strategy, "game: alpha or stabilizer");

  const std::map<std::string, std::function<int(const Settings&, std::ostream&, std::ostream&)>> commands = {
      {"estimate", cmd_estimate},       {"entropy-sweep", cmd_entropy_sweep}, {"cover", cmd_cover},
      {"bound-table", cmd_bound_table}, {"game", cmd_game},                   {"oracle-check", cmd_oracle_check},
  };
  const std::map<std::string, std::string> help = {
      {"estimate", "sample a probe through a channel and estimate its eigenvalues"},
      {"entropy-sweep", "entanglement entropy over an alpha grid"},
      {"cover", "greedy stabilizer covering and its report"},
      {"bound-table", "lower and upper sample-complexity bounds over (n, k, w)"},
      {"game", "hypothesis-testing game win rate"},
      {"oracle-check", "compare closed forms with dense linear algebra"},
  };
  for (const auto& [name, description] : help) app.add_subcommand(name, description);

  try {
    std::vector<std::string> rest(args.rbegin(), args.rend() - 1);
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  const auto given = [&](const char* flag) { return app.get_option(flag)->count() > 0; };
  try {
    if (!config_path.empty()) apply_config(config_path, s, given);
    if (given("--n")) s.n = n;
    if (given("--k")) s.k = k;
    if (given("--w")) s.w = w;
    if (given("--alpha")) s.alpha = alpha;
    if (given("--lam-w")) s.lam_w = lam_w;
    if (given("--x")) s.x = x;
    if (given("--trials")) s.trials = trials;
    if (given("--steps")) s.steps = steps;
    if (given("--regime-c")) s.regime_c = regime_c;
    validate_common(s);
    const std::string name = app.get_subcommands().front()->get_name();
    return commands.at(name)(s, out, err);
  } catch (const CheckFailed& e) {
    err << "check failed: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace pauliprobe::cli
