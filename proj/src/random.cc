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

#include "intsel/random.h"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>

namespace intsel {

uint64_t Rng::Below(uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::Below(0)");
  // Values below `threshold` would over-represent small residues.
  const uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    uint64_t r = Next();
    if (r >= threshold) return r % bound;
  }
}

int64_t Rng::Between(int64_t lo, int64_t hi) {
  if (lo > hi) throw std::invalid_argument("Rng::Between: empty range");
  uint64_t width = static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo);
  if (width == std::numeric_limits<uint64_t>::max()) {
    return static_cast<int64_t>(Next());
  }
  return static_cast<int64_t>(static_cast<uint64_t>(lo) + Below(width + 1));
}

namespace {

constexpr std::array<std::pair<StreamFamily, std::string_view>, 4>
    kFamilyNames = {{{StreamFamily::kUniformGeneral, "uniform-general"},
                     {StreamFamily::kNested, "nested"},
                     {StreamFamily::kProperShifted, "proper-shifted"},
                     {StreamFamily::kUnit, "unit"}}};

constexpr std::array<std::pair<OpennessMix, std::string_view>, 5> kMixNames =
    {{{OpennessMix::kClosed, "closed"},
      {OpennessMix::kOpen, "open"},
      {OpennessMix::kClosedOpen, "closed-open"},
      {OpennessMix::kOpenClosed, "open-closed"},
      {OpennessMix::kMixed, "mixed"}}};

struct Shape {
  Openness left;
  Openness right;
};

Shape FixedShape(OpennessMix mix) {
  switch (mix) {
    case OpennessMix::kClosed:
      return {Openness::kClosed, Openness::kClosed};
    case OpennessMix::kOpen:
      return {Openness::kOpen, Openness::kOpen};
    case OpennessMix::kOpenClosed:
      return {Openness::kOpen, Openness::kClosed};
    case OpennessMix::kClosedOpen:
    case OpennessMix::kMixed:
      break;
  }
  return {Openness::kClosed, Openness::kOpen};
}

Openness RandomOpenness(Rng& rng) {
  return rng.Coin() ? Openness::kOpen : Openness::kClosed;
}

// Coordinates live on a half-unit lattice.
Rational Half(int64_t k) { return Rational(k, 2); }

}  // namespace

std::optional<StreamFamily> ParseStreamFamily(std::string_view name) {
  for (const auto& [family, text] : kFamilyNames) {
    if (text == name) return family;
  }
  return std::nullopt;
}

std::string_view ToString(StreamFamily family) {
  for (const auto& [f, text] : kFamilyNames) {
    if (f == family) return text;
  }
  return "?";
}

std::optional<OpennessMix> ParseOpennessMix(std::string_view name) {
  for (const auto& [mix, text] : kMixNames) {
    if (text == name) return mix;
  }
  return std::nullopt;
}

std::string_view ToString(OpennessMix mix) {
  for (const auto& [m, text] : kMixNames) {
    if (m == mix) return text;
  }
  return "?";
}

std::vector<Interval> gen_random(std::size_t count,
                                 const RandomStreamOptions& options,
                                 uint64_t seed) {
  Rng rng(seed);
  const int64_t grid =
      options.grid > 0 ? options.grid
                       : std::max<int64_t>(4, static_cast<int64_t>(count));
  const bool proper = options.family == StreamFamily::kProperShifted ||
                      options.family == StreamFamily::kUnit;
  Shape stream_shape = FixedShape(options.openness);
  if (proper && options.openness == OpennessMix::kMixed) {
    stream_shape = FixedShape(static_cast<OpennessMix>(rng.Below(4)));
  }
  auto make = [&](int64_t lo2, int64_t hi2, uint64_t arrival) {
    Shape s = stream_shape;
    if (!proper && options.openness == OpennessMix::kMixed) {
      s = {RandomOpenness(rng), RandomOpenness(rng)};
    }
    return Interval::Make(Half(lo2), s.left, Half(hi2), s.right, arrival);
  };

  // Endpoints as doubled coordinates (half-unit lattice).
  std::vector<std::pair<int64_t, int64_t>> spans;
  spans.reserve(count);
  switch (options.family) {
    case StreamFamily::kUniformGeneral: {
      const int64_t max_len = std::max<int64_t>(2, grid / 2);
      for (std::size_t i = 0; i < count; ++i) {
        int64_t lo = rng.Between(0, 2 * grid);
        spans.emplace_back(lo, lo + rng.Between(1, max_len));
      }
      break;
    }
    case StreamFamily::kNested: {
      // A few centers with widths spread over the grid give long chains of
      // nested and overlapping intervals.
      const int64_t centers = 1 + static_cast<int64_t>(rng.Below(3));
      std::vector<int64_t> center(centers);
      for (int64_t& c : center) c = rng.Between(0, 2 * grid);
      for (std::size_t i = 0; i < count; ++i) {
        int64_t c = center[rng.Below(centers)] + rng.Between(-2, 2);
        int64_t w = rng.Between(1, std::max<int64_t>(1, grid));
        spans.emplace_back(c - w, c + rng.Between(1, w + 1));
      }
      break;
    }
    case StreamFamily::kProperShifted: {
      // Lefts and rights both strictly increasing in sorted order, then
      // shuffled into arrival order. Some intervals are repeated verbatim.
      std::vector<int64_t> lefts;
      for (std::size_t i = 0; i < count; ++i) {
        lefts.push_back(rng.Between(0, 2 * grid));
      }
      std::sort(lefts.begin(), lefts.end());
      lefts.erase(std::unique(lefts.begin(), lefts.end()), lefts.end());
      const int64_t max_len = std::max<int64_t>(2, grid / 2);
      int64_t prev_right = std::numeric_limits<int64_t>::min();
      std::vector<std::pair<int64_t, int64_t>> base;
      for (int64_t lo : lefts) {
        int64_t hi = std::max(prev_right + 1, lo + rng.Between(1, max_len));
        base.emplace_back(lo, hi);
        prev_right = hi;
      }
      for (std::size_t i = 0; i < count; ++i) {
        spans.push_back(i < base.size() && rng.Below(8) != 0
                            ? base[i]
                            : base[rng.Below(base.size())]);
      }
      rng.Shuffle(spans);
      break;
    }
    case StreamFamily::kUnit: {
      for (std::size_t i = 0; i < count; ++i) {
        int64_t lo = rng.Between(0, 2 * grid);
        spans.emplace_back(lo, lo + 2);
      }
      break;
    }
  }

  std::vector<Interval> out;
  out.reserve(count);
  for (std::size_t i = 0; i < spans.size(); ++i) {
    out.push_back(make(spans[i].first, spans[i].second, i));
  }
  return out;
}

std::vector<Interval> gen_random(std::size_t count, StreamFamily family,
                                 uint64_t seed) {
  RandomStreamOptions options;
  options.family = family;
  return gen_random(count, options, seed);
}

}  // namespace intsel
