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

#ifndef INTSEL_MULTIPASS_H_
#define INTSEL_MULTIPASS_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "intsel/interval.h"

namespace intsel {

enum class SelectionMode { kGeneral, kProper };

std::optional<SelectionMode> ParseSelectionMode(std::string_view name);
std::string_view ToString(SelectionMode mode);

// A stream that can be read more than once. Each call feeds every interval,
// in arrival order, to the visitor.
using ReplayableStream =
    std::function<void(const std::function<void(const Interval&)>&)>;

ReplayableStream Replay(std::span<const Interval> stream);

struct PassStats {
  std::size_t peak_actual = 0;
  std::size_t peak_virtual = 0;
  std::size_t peak_zones = 0;
};

// One-pass base set: the actual set of the general algorithm, or the zone
// records of the proper one. Propagates ProperViolation.
std::vector<Interval> first_pass(const ReplayableStream& stream,
                                 SelectionMode mode, PassStats* stats = nullptr);
std::vector<Interval> first_pass(std::span<const Interval> stream,
                                 SelectionMode mode, PassStats* stats = nullptr);

// For each tracked interval I, the nearest disjoint neighbours in the stream:
// next(I) starts after I ends and ends earliest; prev(I) ends before I
// starts and starts latest. Parallel to `tracked`.
struct NeighborMaps {
  std::vector<std::optional<Interval>> next;
  std::vector<std::optional<Interval>> prev;
};

// One scan with O(|tracked|) memory.
NeighborMaps neighbor_pass(const ReplayableStream& stream,
                           std::span<const Interval> tracked);
NeighborMaps neighbor_pass(std::span<const Interval> stream,
                           std::span<const Interval> tracked);

struct MultipassResult {
  std::vector<Interval> base;         // the first-pass set
  std::vector<Interval> accumulated;  // after the last pass
  std::vector<Interval> output;       // maximum disjoint subset of accumulated
  // Indexed by pass - 1.
  std::vector<std::size_t> accumulated_sizes;
  std::vector<std::size_t> output_sizes;
  PassStats stats;
};

// First pass, then passes - 1 neighbour passes that add next^i and prev^i of
// every base interval. Requires passes >= 1.
MultipassResult run_multipass(const ReplayableStream& stream, int passes,
                              SelectionMode mode);
MultipassResult run_multipass(std::span<const Interval> stream, int passes,
                              SelectionMode mode);

}  // namespace intsel

#endif  // INTSEL_MULTIPASS_H_
