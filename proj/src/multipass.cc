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

#include "intsel/multipass.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "intsel/general.h"
#include "intsel/offline.h"
#include "intsel/proper.h"

namespace intsel {
namespace {

// Candidates pushed onto index ranges of a fixed array, keeping per slot the
// best one seen. Range updates tag O(log n) nodes; a slot's answer is the
// best tag on its root path.
class RangeBest {
 public:
  using Better = bool (*)(const Interval&, const Interval&);

  RangeBest(std::size_t n, Better better)
      : n_(n), better_(better), tags_(2 * n) {}

  void Offer(std::size_t begin, std::size_t end, const Interval& candidate) {
    for (begin += n_, end += n_; begin < end; begin >>= 1, end >>= 1) {
      if (begin & 1) Apply(begin++, candidate);
      if (end & 1) Apply(--end, candidate);
    }
  }

  std::optional<Interval> Best(std::size_t slot) const {
    std::optional<Interval> best;
    for (std::size_t node = slot + n_; node >= 1; node >>= 1) {
      const auto& tag = tags_[node];
      if (tag && (!best || better_(*tag, *best))) best = tag;
    }
    return best;
  }

 private:
  void Apply(std::size_t node, const Interval& candidate) {
    auto& tag = tags_[node];
    if (!tag || better_(candidate, *tag)) tag = candidate;
  }

  std::size_t n_;
  Better better_;
  std::vector<std::optional<Interval>> tags_;
};

bool EndsEarlier(const Interval& a, const Interval& b) {
  return cprime_compare(a.hi, b.hi) < 0;
}

bool StartsLater(const Interval& a, const Interval& b) {
  return cprime_compare(a.lo, b.lo) > 0;
}

std::vector<Interval> Dedupe(std::span<const Interval> items) {
  IntervalSet set(items);
  return {set.begin(), set.end()};
}

}  // namespace

std::optional<SelectionMode> ParseSelectionMode(std::string_view name) {
  if (name == "general") return SelectionMode::kGeneral;
  if (name == "proper") return SelectionMode::kProper;
  return std::nullopt;
}

std::string_view ToString(SelectionMode mode) {
  return mode == SelectionMode::kGeneral ? "general" : "proper";
}

ReplayableStream Replay(std::span<const Interval> stream) {
  return [stream](const std::function<void(const Interval&)>& visit) {
    for (const Interval& iv : stream) visit(iv);
  };
}

std::vector<Interval> first_pass(const ReplayableStream& stream,
                                 SelectionMode mode, PassStats* stats) {
  if (mode == SelectionMode::kGeneral) {
    GeneralState state;
    stream([&](const Interval& iv) { state.process(iv); });
    if (stats != nullptr) {
      stats->peak_actual = state.peak_actual();
      stats->peak_virtual = state.peak_virtual();
    }
    return state.actual();
  }
  ZoneTable table;
  stream([&](const Interval& iv) { table.process(iv); });
  if (stats != nullptr) stats->peak_zones = table.peak_zones();
  return table.stored();
}

std::vector<Interval> first_pass(std::span<const Interval> stream,
                                 SelectionMode mode, PassStats* stats) {
  return first_pass(Replay(stream), mode, stats);
}

NeighborMaps neighbor_pass(const ReplayableStream& stream,
                           std::span<const Interval> tracked) {
  const std::size_t n = tracked.size();
  // Slots sorted by hi for next (a candidate serves a prefix) and by lo for
  // prev (a candidate serves a suffix).
  std::vector<std::size_t> by_hi(n), by_lo(n);
  std::iota(by_hi.begin(), by_hi.end(), 0);
  std::iota(by_lo.begin(), by_lo.end(), 0);
  std::sort(by_hi.begin(), by_hi.end(), [&](std::size_t a, std::size_t b) {
    return cprime_compare(tracked[a].hi, tracked[b].hi) < 0;
  });
  std::sort(by_lo.begin(), by_lo.end(), [&](std::size_t a, std::size_t b) {
    return cprime_compare(tracked[a].lo, tracked[b].lo) < 0;
  });
  RangeBest next(n, EndsEarlier);
  RangeBest prev(n, StartsLater);
  stream([&](const Interval& j) {
    // Tracked intervals ending before j starts.
    auto ends_before = std::partition_point(
        by_hi.begin(), by_hi.end(), [&](std::size_t i) {
          return cprime_compare(tracked[i].hi, j.lo) < 0;
        });
    next.Offer(0, ends_before - by_hi.begin(), j);
    // Tracked intervals starting after j ends.
    auto starts_after = std::partition_point(
        by_lo.begin(), by_lo.end(), [&](std::size_t i) {
          return cprime_compare(tracked[i].lo, j.hi) <= 0;
        });
    prev.Offer(starts_after - by_lo.begin(), n, j);
  });
  NeighborMaps maps;
  maps.next.resize(n);
  maps.prev.resize(n);
  for (std::size_t slot = 0; slot < n; ++slot) {
    maps.next[by_hi[slot]] = next.Best(slot);
    maps.prev[by_lo[slot]] = prev.Best(slot);
  }
  return maps;
}

NeighborMaps neighbor_pass(std::span<const Interval> stream,
                           std::span<const Interval> tracked) {
  return neighbor_pass(Replay(stream), tracked);
}

MultipassResult run_multipass(const ReplayableStream& stream, int passes,
                              SelectionMode mode) {
  if (passes < 1) throw std::invalid_argument("passes must be at least 1");
  MultipassResult result;
  result.base = first_pass(stream, mode, &result.stats);
  IntervalSet accumulated(result.base);
  auto record = [&]() {
    result.accumulated_sizes.push_back(accumulated.size());
    result.output_sizes.push_back(offline_optimum_size(accumulated.view()));
  };
  record();
  std::vector<Interval> frontier_next = result.base;
  std::vector<Interval> frontier_prev = result.base;
  for (int pass = 2; pass <= passes; ++pass) {
    std::vector<Interval> tracked = frontier_next;
    tracked.insert(tracked.end(), frontier_prev.begin(), frontier_prev.end());
    NeighborMaps maps = neighbor_pass(stream, tracked);
    std::vector<Interval> next_found, prev_found;
    for (std::size_t i = 0; i < frontier_next.size(); ++i) {
      if (maps.next[i]) next_found.push_back(*maps.next[i]);
    }
    for (std::size_t i = frontier_next.size(); i < tracked.size(); ++i) {
      if (maps.prev[i]) prev_found.push_back(*maps.prev[i]);
    }
    frontier_next = Dedupe(next_found);
    frontier_prev = Dedupe(prev_found);
    for (const Interval& iv : frontier_next) accumulated.insert(iv);
    for (const Interval& iv : frontier_prev) accumulated.insert(iv);
    record();
  }
  result.accumulated.assign(accumulated.begin(), accumulated.end());
  result.output = offline_optimum(result.accumulated);
  return result;
}

MultipassResult run_multipass(std::span<const Interval> stream, int passes,
                              SelectionMode mode) {
  return run_multipass(Replay(stream), passes, mode);
}

}  // namespace intsel
