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

#include "intsel/offline.h"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace intsel {

std::vector<Interval> offline_optimum(std::span<const Interval> items) {
  std::vector<Interval> sorted(items.begin(), items.end());
  std::sort(sorted.begin(), sorted.end(), ByHi());
  std::vector<Interval> chosen;
  for (const Interval& iv : sorted) {
    if (chosen.empty() || !intersects(chosen.back(), iv)) chosen.push_back(iv);
  }
  return chosen;
}

std::size_t offline_optimum_size(std::span<const Interval> items) {
  std::vector<const Interval*> sorted;
  sorted.reserve(items.size());
  for (const Interval& iv : items) sorted.push_back(&iv);
  std::sort(sorted.begin(), sorted.end(),
            [](const Interval* a, const Interval* b) { return ByHi()(*a, *b); });
  std::size_t count = 0;
  const Interval* last = nullptr;
  for (const Interval* iv : sorted) {
    if (last == nullptr || !intersects(*last, *iv)) {
      last = iv;
      ++count;
    }
  }
  return count;
}

std::size_t brute_force_optimum(std::span<const Interval> items) {
  const std::size_t n = items.size();
  if (n > kBruteForceLimit) {
    throw std::invalid_argument("brute_force_optimum: " + std::to_string(n) +
                                " intervals exceeds the limit of " +
                                std::to_string(kBruteForceLimit));
  }
  std::vector<uint32_t> conflicts(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && intersects(items[i], items[j])) conflicts[i] |= 1u << j;
    }
  }
  // independent[mask] is derived from mask minus its lowest member.
  const uint32_t subsets = 1u << n;
  std::vector<uint8_t> independent(subsets, 0);
  independent[0] = 1;
  std::size_t best = 0;
  for (uint32_t mask = 1; mask < subsets; ++mask) {
    int low = __builtin_ctz(mask);
    uint32_t rest = mask & (mask - 1);
    if (independent[rest] && (conflicts[low] & rest) == 0) {
      independent[mask] = 1;
      best = std::max<std::size_t>(best, __builtin_popcount(mask));
    }
  }
  return best;
}

std::size_t load(std::span<const Interval> items) {
  struct Event {
    const EndpointKey* key;
    int delta;
  };
  std::vector<Event> events;
  events.reserve(2 * items.size());
  for (const Interval& iv : items) {
    events.push_back({&iv.lo, +1});
    events.push_back({&iv.hi, -1});
  }
  // Segments are closed, so at a shared key every start is counted before
  // any end.
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    int c = cprime_compare(*a.key, *b.key);
    if (c != 0) return c < 0;
    return a.delta > b.delta;
  });
  std::size_t current = 0;
  std::size_t best = 0;
  for (const Event& e : events) {
    if (e.delta > 0) {
      best = std::max(best, ++current);
    } else {
      --current;
    }
  }
  return best;
}

bool is_proper(std::span<const Interval> items) {
  // Sorted by point-set start, a strictly later start needs a strictly later
  // end, and equal starts need equal ends.
  std::vector<const Interval*> sorted;
  sorted.reserve(items.size());
  for (const Interval& iv : items) sorted.push_back(&iv);
  std::sort(sorted.begin(), sorted.end(),
            [](const Interval* a, const Interval* b) {
              if (int c = cut_compare(a->lo, b->lo); c != 0) return c < 0;
              return cut_compare(a->hi, b->hi) < 0;
            });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    const Interval& prev = *sorted[i - 1];
    const Interval& cur = *sorted[i];
    bool same_start = cut_compare(prev.lo, cur.lo) == 0;
    int hi = cut_compare(prev.hi, cur.hi);
    if (same_start ? hi != 0 : hi >= 0) return false;
  }
  return true;
}

}  // namespace intsel
