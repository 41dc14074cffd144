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


#include "intsel/evaluate.h"

#include <map>
#include <numeric>
#include <sstream>

#include "intsel/offline.h"
#include "intsel/online.h"
#include "intsel/proper.h"

namespace intsel {
namespace {

constexpr std::size_t kSampleLimit = 5;

class Recorder {
 public:
  explicit Recorder(StreamStats& stats) : stats_(stats) {}

  void Add(const ViolationReport& report, uint64_t arrival) {
    for (const Violation& v : report) {
      Add(v.rule, "after arrival " + std::to_string(arrival) + ": " + v.detail);
    }
  }
  void Add(const std::string& rule, const std::string& detail) {
    ++stats_.invariant_violations;
    if (stats_.sample_violations.size() < kSampleLimit) {
      stats_.sample_violations.push_back({rule, detail});
    }
  }

 private:
  StreamStats& stats_;
};

std::vector<Interval> Collect(const ReplayableStream& stream) {
  std::vector<Interval> out;
  stream([&](const Interval& iv) { out.push_back(iv); });
  return out;
}

// Streaming baseline: keep an arrival iff it misses everything kept.
class GreedySelector {
 public:
  void Process(const Interval& iv) {
    auto next = kept_.lower_bound(iv.lo);
    if (next != kept_.end() && intersects(next->second, iv)) return;
    if (next != kept_.begin() && intersects(std::prev(next)->second, iv)) {
      return;
    }
    kept_.emplace(iv.lo, iv);
  }
  std::vector<Interval> Output() const {
    std::vector<Interval> out;
    for (const auto& [key, iv] : kept_) out.push_back(iv);
    return out;
  }
  std::size_t size() const { return kept_.size(); }

 private:
  std::map<EndpointKey, Interval, CPrimeLess> kept_;
};

void RunGeneral(const ReplayableStream& stream, const EvalConfig& config,
                EvalResult& result) {
  GeneralState state;
  Recorder recorder(result.stats);
  std::vector<Interval> seen;
  stream([&](const Interval& iv) {
    state.process(iv);
    if (!config.check_invariants) return;
    seen.push_back(iv);
    recorder.Add(check_invariants(state, seen), iv.id);
    if (2 * state.finalize().size() < offline_optimum_size(seen)) {
      recorder.Add("ratio", "after arrival " + std::to_string(iv.id));
    }
  });
  result.output = state.finalize();
  result.stats.peak_actual = state.peak_actual();
  result.stats.peak_virtual = state.peak_virtual();
}

void RunProper(const ReplayableStream& stream, const EvalConfig& config,
               EvalResult& result) {
  ZoneTable table;
  Recorder recorder(result.stats);
  std::vector<Interval> seen;
  std::vector<ProperCase> cases;
  stream([&](const Interval& iv) {
    ProperCase c = table.process(iv);
    if (!config.check_invariants) return;
    seen.push_back(iv);
    cases.push_back(c);
    recorder.Add(zone_invariants(table, seen, cases), iv.id);
  });
  result.output = finalize_proper(table);
  result.stats.peak_zones = table.peak_zones();
}

void RunMultipass(const ReplayableStream& stream, const EvalConfig& config,
                  EvalResult& result) {
  const int passes = config.passes.value_or(1);
  const SelectionMode mode = config.mode.value_or(SelectionMode::kGeneral);
  MultipassResult run = run_multipass(stream, passes, mode);
  result.output = run.output;
  result.stats.passes = passes;
  result.stats.mode = mode;
  result.stats.peak_actual = run.stats.peak_actual;
  result.stats.peak_virtual = run.stats.peak_virtual;
  result.stats.peak_zones = run.stats.peak_zones;
  if (!config.check_invariants) return;
  // The first pass is the one-pass algorithm; check it the same way.
  EvalConfig first = config;
  first.algorithm =
      mode == SelectionMode::kGeneral ? Algorithm::kGeneral : Algorithm::kProper;
  EvalResult single;
  if (mode == SelectionMode::kGeneral) {
    RunGeneral(stream, first, single);
  } else {
    RunProper(stream, first, single);
  }
  result.stats.invariant_violations = single.stats.invariant_violations;
  result.stats.sample_violations = single.stats.sample_violations;
  Recorder recorder(result.stats);
  const std::size_t opt = offline_optimum_size(Collect(stream));
  for (std::size_t p = 1; p <= run.output_sizes.size(); ++p) {
    const std::size_t out = run.output_sizes[p - 1];
    const bool ratio_ok = mode == SelectionMode::kGeneral
                              ? 2 * p * out >= (2 * p - 1) * opt
                              : (2 * p + 1) * out >= 2 * p * opt;
    if (!ratio_ok) recorder.Add("pass-ratio", "pass " + std::to_string(p));
    if (run.accumulated_sizes[p - 1] > (2 * p - 1) * run.base.size()) {
      recorder.Add("pass-space", "pass " + std::to_string(p));
    }
  }
}

void RunOnline(const ReplayableStream& stream, const EvalConfig& config,
               EvalResult& result) {
  OnlineState state(config.seed.value_or(0));
  Recorder recorder(result.stats);
  std::vector<Interval> seen;
  stream([&](const Interval& iv) {
    auto events = state.arrive(iv);
    if (!config.check_invariants) return;
    seen.push_back(iv);
    for (const OnlineEvent& e : events) {
      if (e.type == OnlineEventType::kAccept && e.neighbors > 2) {
        recorder.Add("neighbors", e.ToString() + " met " +
                                      std::to_string(e.neighbors));
      }
    }
    recorder.Add(check_coloring(state), iv.id);
    recorder.Add(check_invariants(state.inner(), seen), iv.id);
    if (2 * state.inner().actual_size() < offline_optimum_size(seen)) {
      recorder.Add("ratio", "after arrival " + std::to_string(iv.id));
    }
  });
  result.output = state.solution();
  result.stats.seed = state.seed();
  result.stats.classes = state.class_sizes();
  result.stats.peak_actual = state.inner().peak_actual();
  result.stats.peak_virtual = state.inner().peak_virtual();
}

void RunGreedy(const ReplayableStream& stream, EvalResult& result) {
  GreedySelector greedy;
  std::size_t peak = 0;
  stream([&](const Interval& iv) {
    greedy.Process(iv);
    peak = std::max(peak, greedy.size());
  });
  result.output = greedy.Output();
  result.stats.peak_actual = peak;
}

}  // namespace

std::optional<Algorithm> ParseAlgorithm(std::string_view name) {
  if (name == "general") return Algorithm::kGeneral;
  if (name == "proper") return Algorithm::kProper;
  if (name == "multipass") return Algorithm::kMultipass;
  if (name == "online") return Algorithm::kOnline;
  if (name == "greedy") return Algorithm::kGreedy;
  return std::nullopt;
}

std::string_view ToString(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kGeneral:
      return "general";
    case Algorithm::kProper:
      return "proper";
    case Algorithm::kMultipass:
      return "multipass";
    case Algorithm::kOnline:
      return "online";
    case Algorithm::kGreedy:
      return "greedy";
  }
  return "?";
}

void validate(const EvalConfig& config) {
  const bool multipass = config.algorithm == Algorithm::kMultipass;
  if (config.passes && !multipass) {
    throw ConfigError("--passes needs --alg multipass");
  }
  if (config.mode && !multipass) {
    throw ConfigError("--mode needs --alg multipass");
  }
  if (config.passes && *config.passes < 1) {
    throw ConfigError("--passes must be at least 1");
  }
  if (config.seed && config.algorithm != Algorithm::kOnline) {
    throw ConfigError("--seed needs --alg online");
  }
}

std::string StreamStats::ToString() const {
  std::ostringstream out;
  out << "algorithm=" << algorithm << " n=" << n << " opt=" << opt
      << " alg_out=" << alg_out << " ratio=" << ratio_num << "/" << ratio_den
      << " peak_actual=" << peak_actual << " peak_virtual=" << peak_virtual
      << " peak_zones=" << peak_zones << " passes=" << passes;
  if (mode) out << " mode=" << intsel::ToString(*mode);
  out << " seed=";
  if (seed) {
    out << *seed;
  } else {
    out << "-";
  }
  if (classes) {
    out << " classes=" << (*classes)[0] << "," << (*classes)[1] << ","
        << (*classes)[2];
  }
  out << " invariant_violations=" << invariant_violations;
  return out.str();
}

EvalResult evaluate(const ReplayableStream& stream, const EvalConfig& config) {
  validate(config);
  EvalResult result;
  result.stats.algorithm = std::string(ToString(config.algorithm));
  switch (config.algorithm) {
    case Algorithm::kGeneral:
      RunGeneral(stream, config, result);
      break;
    case Algorithm::kProper:
      RunProper(stream, config, result);
      break;
    case Algorithm::kMultipass:
      RunMultipass(stream, config, result);
      break;
    case Algorithm::kOnline:
      RunOnline(stream, config, result);
      break;
    case Algorithm::kGreedy:
      RunGreedy(stream, result);
      break;
  }
  // The optimum needs the whole input.
  const std::vector<Interval> all = Collect(stream);
  StreamStats& stats = result.stats;
  stats.n = all.size();
  stats.opt = offline_optimum_size(all);
  if (all.size() <= kBruteForceLimit && brute_force_optimum(all) != stats.opt) {
    Recorder(stats).Add("oracle", "greedy optimum disagrees with brute force");
  }
  stats.alg_out = result.output.size();
  if (stats.opt == 0 && stats.alg_out == 0) {
    stats.ratio_num = stats.ratio_den = 1;
  } else {
    const uint64_t g = std::gcd(stats.opt, stats.alg_out);
    stats.ratio_num = stats.opt / g;
    stats.ratio_den = stats.alg_out / g;
  }
  if (config.check_invariants && load(result.output) > 1) {
    Recorder(stats).Add("output", "output is not pairwise disjoint");
  }
  return result;
}

EvalResult evaluate(std::span<const Interval> stream, const EvalConfig& config) {
  return evaluate(Replay(stream), config);
}

}  // namespace intsel
