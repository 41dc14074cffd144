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


#ifndef INTSEL_EVALUATE_H_
#define INTSEL_EVALUATE_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "intsel/general.h"
#include "intsel/interval.h"
#include "intsel/multipass.h"

namespace intsel {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Algorithm { kGeneral, kProper, kMultipass, kOnline, kGreedy };

std::optional<Algorithm> ParseAlgorithm(std::string_view name);
std::string_view ToString(Algorithm algorithm);

struct EvalConfig {
  Algorithm algorithm = Algorithm::kGeneral;
  std::optional<int> passes;                // multipass only
  std::optional<SelectionMode> mode;        // multipass only
  std::optional<uint64_t> seed;             // online only
  bool check_invariants = false;
};

// Throws ConfigError when flags do not fit the algorithm.
void validate(const EvalConfig& config);

// One run, printed as a single line of key=value fields; see ToString.
struct StreamStats {
  std::string algorithm;
  std::size_t n = 0;
  std::size_t opt = 0;
  std::size_t alg_out = 0;
  // opt / alg_out in lowest terms; 1/1 for an empty stream and 1/0 when the
  // algorithm returned nothing for a non-empty optimum.
  uint64_t ratio_num = 1;
  uint64_t ratio_den = 1;
  std::size_t peak_actual = 0;
  std::size_t peak_virtual = 0;
  std::size_t peak_zones = 0;
  int passes = 1;
  std::optional<uint64_t> seed;
  std::optional<SelectionMode> mode;
  // Online only: sizes of the three color classes.
  std::optional<std::array<std::size_t, 3>> classes;
  std::size_t invariant_violations = 0;
  // First few violations, for humans.
  std::vector<Violation> sample_violations;

  std::string ToString() const;
};

struct EvalResult {
  StreamStats stats;
  std::vector<Interval> output;
};

// Runs the configured algorithm over the stream, computes the optimum, and
// optionally checks invariants after every arrival. The stream is replayed
// for the optimum; algorithms themselves see it one interval at a time
// unless invariants are checked.
EvalResult evaluate(const ReplayableStream& stream, const EvalConfig& config);
EvalResult evaluate(std::span<const Interval> stream, const EvalConfig& config);

}  // namespace intsel

#endif  // INTSEL_EVALUATE_H_
