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

#ifndef INTSEL_RANDOM_H_
#define INTSEL_RANDOM_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "intsel/interval.h"

namespace intsel {

// Seeded generator with portable derived draws. The engine is the standard
// 64-bit Mersenne Twister, whose output sequence is fixed by the language
// standard; the standard distributions are not, so bounded draws and
// shuffles are done here.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t Next() { return engine_(); }
  // Uniform on [0, bound); bound must be positive. Rejection sampling, so
  // unbiased.
  uint64_t Below(uint64_t bound);
  // Uniform on [lo, hi].
  int64_t Between(int64_t lo, int64_t hi);
  bool Coin() { return (Next() >> 63) != 0; }

  template <typename T>
  void Shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[Below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

enum class StreamFamily { kUniformGeneral, kNested, kProperShifted, kUnit };

// Openness of generated endpoints. kMixed draws each endpoint independently
// for the general families; the proper families need one shape per stream
// and pick one of the four fixed shapes instead.
enum class OpennessMix { kClosed, kOpen, kClosedOpen, kOpenClosed, kMixed };

struct RandomStreamOptions {
  StreamFamily family = StreamFamily::kUniformGeneral;
  OpennessMix openness = OpennessMix::kClosedOpen;
  // Coordinates are drawn from a grid of about this many unit cells, so small
  // grids force shared endpoints. 0 picks a size from the count.
  int64_t grid = 0;
};

std::optional<StreamFamily> ParseStreamFamily(std::string_view name);
std::string_view ToString(StreamFamily family);
std::optional<OpennessMix> ParseOpennessMix(std::string_view name);
std::string_view ToString(OpennessMix mix);

// Deterministic stream of `count` input intervals with arrivals 0..count-1.
// kProperShifted and kUnit streams are proper.
std::vector<Interval> gen_random(std::size_t count,
                                 const RandomStreamOptions& options,
                                 uint64_t seed);
std::vector<Interval> gen_random(std::size_t count, StreamFamily family,
                                 uint64_t seed);

}  // namespace intsel

#endif  // INTSEL_RANDOM_H_
