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

#include <algorithm>
#include <string>
#include <unordered_map>
#include <vector>

#include "intsel/general.h"
#include "intsel/offline.h"

namespace intsel {
namespace {

// Uncollapsed scan: gap, key, gap, key, ..., gap over the distinct keys.
std::vector<PortionType> Scan(std::span<const Interval> actual,
                              std::span<const Interval> virtuals) {
  struct Event {
    const EndpointKey* key;
    bool is_actual;
    bool is_start;
  };
  std::vector<Event> events;
  for (const Interval& iv : actual) {
    events.push_back({&iv.lo, true, true});
    events.push_back({&iv.hi, true, false});
  }
  for (const Interval& iv : virtuals) {
    events.push_back({&iv.lo, false, true});
    events.push_back({&iv.hi, false, false});
  }
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    return cprime_compare(*a.key, *b.key) < 0;
  });
  std::vector<PortionType> out;
  PortionType running;
  out.push_back(running);
  for (std::size_t i = 0; i < events.size();) {
    std::size_t j = i;
    PortionType starts, ends;
    while (j < events.size() && cprime_compare(*events[j].key, *events[i].key) == 0) {
      const Event& e = events[j];
      PortionType& bucket = e.is_start ? starts : ends;
      (e.is_actual ? bucket.actual : bucket.virtuals) += 1;
      ++j;
    }
    out.push_back({running.actual + starts.actual,
                   running.virtuals + starts.virtuals});
    running.actual += starts.actual - ends.actual;
    running.virtuals += starts.virtuals - ends.virtuals;
    out.push_back(running);
    i = j;
  }
  return out;
}

PortionString Collapse(std::span<const PortionType> raw) {
  PortionString out;
  for (const PortionType& p : raw) {
    if (out.empty() || !(out.back() == p)) out.push_back(p);
  }
  return out;
}

bool Is(const PortionType& p, int actual, int virtuals) {
  return p.actual == actual && p.virtuals == virtuals;
}

// Sorted by lo with strictly increasing hi.
bool Monotone(std::span<const Interval> sorted) {
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (cprime_compare(sorted[i - 1].hi, sorted[i].hi) >= 0) return false;
  }
  return true;
}

// Calls fn(i) for every member of `sorted` (sorted by lo) that intersects q.
// With monotone members the hits form a contiguous range.
template <typename Fn>
void ForEachIntersecting(std::span<const Interval> sorted, bool monotone,
                         const Interval& q, Fn fn) {
  if (!monotone) {
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (intersects(sorted[i], q)) fn(i);
    }
    return;
  }
  auto first = std::partition_point(
      sorted.begin(), sorted.end(), [&](const Interval& iv) {
        return cprime_compare(iv.hi, q.lo) < 0;
      });
  auto last = std::partition_point(
      sorted.begin(), sorted.end(), [&](const Interval& iv) {
        return cprime_compare(iv.lo, q.hi) <= 0;
      });
  for (auto it = first; it < last; ++it) fn(it - sorted.begin());
}

}  // namespace

PortionString portion_string(std::span<const Interval> actual,
                             std::span<const Interval> virtuals) {
  return Collapse(Scan(actual, virtuals));
}

PortionString portion_string(const GeneralState& state) {
  return portion_string(state.actual(), state.virtuals());
}

std::string ToString(const PortionString& s) {
  std::string out;
  for (const PortionType& p : s) {
    out += "<" + std::to_string(p.actual) + "," + std::to_string(p.virtuals) +
           ">";
  }
  return out;
}

PortionRuns portion_runs(std::span<const Interval> actual,
                         std::span<const Interval> virtuals) {
  std::vector<PortionType> raw = Scan(actual, virtuals);
  PortionRuns runs;
  std::size_t i = 0;
  while (i < raw.size()) {
    bool covered = raw[i].actual > 0;
    std::size_t j = i;
    while (j < raw.size() && (raw[j].actual > 0) == covered) ++j;
    PortionString run = Collapse(std::span(raw).subspan(i, j - i));
    (covered ? runs.components : runs.gaps).push_back(std::move(run));
    i = j;
  }
  return runs;
}

bool MatchesComponentPattern(const PortionString& s) {
  std::size_t i = 0;
  if (i < s.size() && Is(s[i], 1, 1)) ++i;
  if (i >= s.size() || !Is(s[i], 1, 0)) return false;
  ++i;
  while (i + 1 < s.size() && Is(s[i], 2, 1) && Is(s[i + 1], 1, 0)) i += 2;
  if (i < s.size() && Is(s[i], 1, 1)) ++i;
  return i == s.size();
}

bool MatchesGapPattern(const PortionString& s) {
  if (s.empty() || !Is(s[0], 0, 0)) return false;
  std::size_t i = 1;
  while (i + 1 < s.size() && Is(s[i], 0, 1) && Is(s[i + 1], 0, 0)) i += 2;
  return i == s.size();
}

ViolationReport check_invariants(const GeneralState& state,
                                 std::span<const Interval> seen) {
  ViolationReport report;
  auto fail = [&](const char* rule, std::string detail) {
    report.push_back({rule, std::move(detail)});
  };
  const std::vector<Interval> actual = state.actual();
  const std::vector<Interval> virtuals = state.virtuals();
  const bool actual_monotone = Monotone(actual);

  // No actual interval contains another.
  if (!actual_monotone) {
    for (std::size_t i = 0; i < actual.size(); ++i) {
      for (std::size_t j = 0; j < actual.size(); ++j) {
        if (i != j && contains_weakly(actual[i], actual[j])) {
          fail("nested-actual", actual[i].ToString() + " contains " + actual[j].ToString());
        }
      }
    }
  }

  // An actual and a virtual interval that meet are nested, the virtual
  // one strictly inside with a shared endpoint.
  for (const Interval& sigma : virtuals) {
    ForEachIntersecting(actual, actual_monotone, sigma, [&](std::size_t i) {
      const Interval& rho = actual[i];
      bool shares = rho.lo == sigma.lo || rho.hi == sigma.hi;
      if (!contains_weakly(rho, sigma) || rho.SameKeys(sigma) || !shares) {
        fail("virtual-shape", rho.ToString() + " vs " + sigma.ToString());
      }
    });
  }

  // The overlap of two actual intervals is stored as a virtual one.
  IntervalSet virtual_set(virtuals);
  for (std::size_t i = 0; i < actual.size(); ++i) {
    ForEachIntersecting(actual, actual_monotone, actual[i], [&](std::size_t j) {
      if (j <= i) return;
      Interval v = overlap(actual[i], actual[j]);
      if (!virtual_set.contains_keys(v)) {
        fail("overlap-stored", actual[i].ToString() + " and " + actual[j].ToString() +
                       " overlap in unstored " + v.ToString());
      }
    });
  }

  // Loads.
  if (std::size_t l = load(virtuals); l > 1) {
    fail("virtual-load", "virtual load " + std::to_string(l));
  }
  if (std::size_t l = load(actual); l > 2) {
    fail("actual-load", "actual load " + std::to_string(l));
  }

  if (virtuals.size() > actual.size()) {
    fail("space", std::to_string(virtuals.size()) + " virtual vs " +
                      std::to_string(actual.size()) + " actual");
  }

  // Trace: every seen interval contains a stored one. Stored intervals are
  // sorted by lo with suffix minima of hi.
  std::vector<const Interval*> stored;
  for (const Interval& iv : actual) stored.push_back(&iv);
  for (const Interval& iv : virtuals) stored.push_back(&iv);
  std::sort(stored.begin(), stored.end(),
            [](const Interval* a, const Interval* b) { return ByLo()(*a, *b); });
  std::vector<const EndpointKey*> suffix_min(stored.size() + 1, nullptr);
  for (std::size_t i = stored.size(); i-- > 0;) {
    const EndpointKey* next = suffix_min[i + 1];
    suffix_min[i] = next != nullptr && cprime_compare(*next, stored[i]->hi) < 0
                        ? next
                        : &stored[i]->hi;
  }
  for (const Interval& iv : seen) {
    auto it = std::partition_point(
        stored.begin(), stored.end(), [&](const Interval* s) {
          return cprime_compare(s->lo, iv.lo) < 0;
        });
    const EndpointKey* best = suffix_min[it - stored.begin()];
    if (best == nullptr || cprime_compare(*best, iv.hi) > 0) {
      fail("trace", iv.ToString() + " contains no stored interval");
    }
  }

  // Provenance: stored keys are keys of seen inputs, actual intervals are
  // seen inputs.
  std::unordered_map<uint64_t, const Interval*> by_id;
  for (const Interval& iv : seen) by_id[iv.id] = &iv;
  auto key_seen = [&](const EndpointKey& k) {
    auto it = by_id.find(k.arrival);
    if (it == by_id.end()) return false;
    return k == (k.side == Side::kLeft ? it->second->lo : it->second->hi);
  };
  for (const Interval& iv : actual) {
    auto it = by_id.find(iv.id);
    if (iv.is_virtual() || it == by_id.end() || !it->second->SameKeys(iv)) {
      fail("provenance", iv.ToString() + " is not a seen input");
    }
  }
  for (const Interval& iv : virtuals) {
    if (!key_seen(iv.lo) || !key_seen(iv.hi)) {
      fail("provenance", iv.ToString() + " has an unseen endpoint");
    }
  }

  // Portion patterns.
  PortionRuns runs = portion_runs(actual, virtuals);
  for (const PortionString& c : runs.components) {
    if (!MatchesComponentPattern(c)) fail("component-pattern", ToString(c));
  }
  for (const PortionString& g : runs.gaps) {
    if (!MatchesGapPattern(g)) fail("gap-pattern", ToString(g));
  }
  if (state.arrivals() >= 1 || !actual.empty()) {
    PortionString phi = portion_string(actual, virtuals);
    for (std::size_t i = 0; i < phi.size(); ++i) {
      if (!Is(phi[i], 0, 0)) continue;
      bool left = i > 0 && Is(phi[i - 1], 1, 0);
      bool right = i + 1 < phi.size() && Is(phi[i + 1], 1, 0);
      if (!left && !right) {
        fail("empty-adjacency", ToString(phi) + " at " + std::to_string(i));
      }
    }
  }
  return report;
}

}  // namespace intsel
