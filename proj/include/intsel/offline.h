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

#ifndef INTSEL_OFFLINE_H_
#define INTSEL_OFFLINE_H_

#include <cstddef>
#include <span>
#include <vector>

#include "intsel/interval.h"

namespace intsel {

// Maximum set of pairwise disjoint intervals: earliest-right-endpoint greedy.
// The result is sorted left to right.
std::vector<Interval> offline_optimum(std::span<const Interval> items);

// Size of offline_optimum without materializing it.
std::size_t offline_optimum_size(std::span<const Interval> items);

inline constexpr std::size_t kBruteForceLimit = 20;

// Exact maximum independent set size by subset enumeration. Throws
// std::invalid_argument for more than kBruteForceLimit intervals.
std::size_t brute_force_optimum(std::span<const Interval> items);

// Largest number of intervals sharing a point.
std::size_t load(std::span<const Interval> items);

// No member properly contains another as a point set. Identical intervals do
// not count as proper containment.
bool is_proper(std::span<const Interval> items);

}  // namespace intsel

#endif  // INTSEL_OFFLINE_H_
