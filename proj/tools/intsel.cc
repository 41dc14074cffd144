// Copyright 2026 The intsel Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Command-line driver: run algorithms on stream files, generate streams and
// gadgets, verify gadgets, and report statistics.
//
// Exit codes: 0 ok, 1 violation found, 2 usage or input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "intsel/adversary.h"
#include "intsel/evaluate.h"
#include "intsel/multipass.h"
#include "intsel/proper.h"
#include "intsel/random.h"
#include "intsel/stream_io.h"

namespace {

using namespace intsel;  // NOLINT(build/namespaces)

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Re-reads the file on every replay, one interval at a time.
ReplayableStream FileStream(const std::string& path) {
  {
    std::ifstream probe(path);
    if (!probe) throw UsageError("cannot open " + path);
  }
  return [path](const std::function<void(const Interval&)>& visit) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    StreamReader reader(in);
    while (auto iv = reader.Next()) visit(*iv);
  };
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

struct RunFlags {
  std::string alg = "general";
  std::optional<int> passes;
  std::optional<std::string> mode;
  std::optional<uint64_t> seed;
  std::string input;
  std::string stats;
  bool check_invariants = false;
  std::optional<int> trials;
};

void AddRunFlags(CLI::App* cmd, RunFlags& flags) {
  cmd->add_option("--alg", flags.alg, "general|proper|multipass|online|greedy")
      ->check(CLI::IsMember({"general", "proper", "multipass", "online",
                             "greedy"}));
  cmd->add_option("--passes", flags.passes, "number of passes (multipass)");
  cmd->add_option("--mode", flags.mode, "first-pass algorithm (multipass)")
      ->check(CLI::IsMember({"general", "proper"}));
  cmd->add_option("--seed", flags.seed, "color seed (online)");
  cmd->add_option("--input", flags.input, "stream file")->required();
  cmd->add_option("--stats", flags.stats, "append the stats record here");
  cmd->add_flag("--check-invariants", flags.check_invariants,
                "check invariants after every arrival");
}

EvalConfig ConfigFrom(const RunFlags& flags) {
  EvalConfig config;
  config.algorithm = *ParseAlgorithm(flags.alg);
  config.passes = flags.passes;
  if (flags.mode) config.mode = ParseSelectionMode(*flags.mode);
  config.seed = flags.seed;
  config.check_invariants = flags.check_invariants;
  validate(config);
  return config;
}

void AppendStats(const std::string& path, const std::string& line) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::app);
  if (!out) throw UsageError("cannot write " + path);
  out << line << '\n';
}

int Report(const StreamStats& stats) {
  for (const Violation& v : stats.sample_violations) {
    std::cerr << "violation " << v.rule << ": " << v.detail << '\n';
  }
  return stats.invariant_violations == 0 ? kOk : kViolation;
}

int Run(const RunFlags& flags) {
  EvalConfig config = ConfigFrom(flags);
  EvalResult result = evaluate(FileStream(flags.input), config);
  std::cout << emit_stream(result.output);
  AppendStats(flags.stats, result.stats.ToString());
  return Report(result.stats);
}

int Eval(const RunFlags& flags) {
  EvalConfig config = ConfigFrom(flags);
  ReplayableStream stream = FileStream(flags.input);
  if (flags.trials && config.algorithm != Algorithm::kOnline) {
    throw ConfigError("--trials needs --alg online");
  }
  const int trials = flags.trials.value_or(1);
  if (trials < 1) throw ConfigError("--trials must be at least 1");
  int code = kOk;
  for (int trial = 0; trial < trials; ++trial) {
    if (config.algorithm == Algorithm::kOnline) {
      config.seed = flags.seed.value_or(0) + trial;
    }
    EvalResult result = evaluate(stream, config);
    const std::string line = result.stats.ToString();
    std::cout << line << '\n';
    AppendStats(flags.stats, line);
    code = std::max(code, Report(result.stats));
  }
  return code;
}

struct GenFlags {
  std::string kind = "uniform";
  std::size_t count = 20;
  int n = 4;
  int blocks = 2;
  int depth = 2;
  uint64_t seed = 0;
  std::string openness = "closed-open";
  int64_t grid = 0;
  std::string output;
  std::string secret;
};

int Gen(const GenFlags& flags) {
  std::vector<Interval> stream;
  std::optional<GadgetSecret> secret;
  if (flags.kind == "stack") {
    std::vector<int> pi(flags.n);
    std::iota(pi.begin(), pi.end(), 1);
    Rng(flags.seed).Shuffle(pi);
    stream = make_stack({flags.n, pi, Rational(0), Rational(1)});
  } else if (flags.kind == "unit-gadget" || flags.kind == "tree-gadget") {
    Gadget g = flags.kind == "unit-gadget"
                   ? gen_unit_gadget(flags.blocks, flags.n, flags.seed)
                   : gen_tree_gadget(flags.depth, flags.n, flags.seed);
    stream = std::move(g.stream);
    secret = std::move(g.secret);
  } else {
    RandomStreamOptions options;
    options.family = flags.kind == "uniform"
                         ? StreamFamily::kUniformGeneral
                         : *ParseStreamFamily(flags.kind);
    options.openness = *ParseOpennessMix(flags.openness);
    options.grid = flags.grid;
    stream = gen_random(flags.count, options, flags.seed);
  }
  if (!flags.secret.empty()) {
    if (!secret) throw UsageError("--secret needs a gadget kind");
    WriteFile(flags.secret, emit_secret(*secret));
  }
  WriteFile(flags.output, emit_stream(stream));
  return kOk;
}

int Verify(const std::string& input, const std::string& secret_path) {
  std::vector<Interval> stream = parse_stream(ReadFile(input));
  GadgetSecret secret = parse_secret(ReadFile(secret_path));
  ViolationReport report = verify_gadget(stream, secret);
  for (const Violation& v : report) {
    std::cout << "violation " << v.rule << ": " << v.detail << '\n';
  }
  std::cout << "violations=" << report.size() << '\n';
  return report.empty() ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Streaming interval selection"};
  app.require_subcommand(1);

  RunFlags run_flags;
  AddRunFlags(app.add_subcommand("run", "run an algorithm, print its output"),
              run_flags);
  RunFlags eval_flags;
  CLI::App* eval = app.add_subcommand("eval", "print the stats record");
  AddRunFlags(eval, eval_flags);
  eval->add_option("--trials", eval_flags.trials,
                   "online only: seeds seed, seed+1, ...");

  GenFlags gen_flags;
  CLI::App* gen = app.add_subcommand("gen", "generate a stream");
  gen->add_option("--kind", gen_flags.kind)
      ->check(CLI::IsMember({"stack", "unit-gadget", "tree-gadget", "uniform",
                             "nested", "proper-shifted", "unit"}));
  gen->add_option("--count", gen_flags.count, "intervals (random kinds)");
  gen->add_option("--n", gen_flags.n, "stack size");
  gen->add_option("--blocks", gen_flags.blocks, "unit-gadget blocks");
  gen->add_option("--depth", gen_flags.depth, "tree-gadget depth");
  gen->add_option("--seed", gen_flags.seed);
  gen->add_option("--openness", gen_flags.openness)
      ->check(CLI::IsMember({"closed", "open", "closed-open", "open-closed",
                             "mixed"}));
  gen->add_option("--grid", gen_flags.grid, "coordinate grid size");
  gen->add_option("--output", gen_flags.output, "stream file (default stdout)");
  gen->add_option("--secret", gen_flags.secret, "gadget secret file");

  std::string verify_input, verify_secret;
  CLI::App* verify = app.add_subcommand("verify", "check a gadget stream");
  verify->add_option("--input", verify_input)->required();
  verify->add_option("--secret", verify_secret)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (app.got_subcommand("run")) return Run(run_flags);
    if (app.got_subcommand("eval")) return Eval(eval_flags);
    if (app.got_subcommand("gen")) return Gen(gen_flags);
    return Verify(verify_input, verify_secret);
  } catch (const ProperViolation& e) {
    std::cerr << "error: input is not proper: " << e.what() << '\n';
    return kViolation;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
  } catch (const RangeError& e) {
    std::cerr << "range error: " << e.what() << '\n';
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kUsage;
}
