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


#include "intsel/online.h"

#include <algorithm>
#include <sstream>

#include "intsel/random.h"

namespace intsel {

std::string OnlineEvent::ToString() const {
  std::ostringstream out;
  switch (type) {
    case OnlineEventType::kAccept:
      out << "accept " << id << " color=" << color;
      break;
    case OnlineEventType::kPreempt:
      out << "preempt " << id << " color=" << color;
      break;
    case OnlineEventType::kReject:
      out << "reject " << id;
      break;
  }
  return out.str();
}

OnlineState::OnlineState(uint64_t seed)
    : chosen_(static_cast<int>(Rng(seed).Below(3)) + 1), seed_(seed) {}

std::vector<OnlineEvent> OnlineState::arrive(const Interval& iv) {
  std::vector<OnlineEvent> round;
  const ArrivalOutcome outcome = inner_.process(iv);
  for (auto it = members_.begin(); it != members_.end();) {
    if (inner_.in_actual(it->second.iv)) {
      ++it;
      continue;
    }
    round.push_back({OnlineEventType::kPreempt, it->first, it->second.color, 0});
    it = members_.erase(it);
  }
  if (outcome == ArrivalOutcome::kRejected || !inner_.in_actual(iv)) {
    round.push_back({OnlineEventType::kReject, iv.id, 0, 0});
  } else {
    std::array<bool, 4> used = {};
    std::size_t neighbors = 0;
    for (const auto& [id, member] : members_) {
      if (intersects(member.iv, iv)) {
        used[member.color] = true;
        ++neighbors;
      }
    }
    int color = 1;
    while (color <= 3 && used[color]) ++color;
    if (color > 3) {
      throw ColorExhaustion("no free color for " + iv.ToString());
    }
    members_.emplace(iv.id, Member{iv, color});
    round.push_back({OnlineEventType::kAccept, iv.id, color, neighbors});
  }
  events_.insert(events_.end(), round.begin(), round.end());
  return round;
}

std::vector<Interval> OnlineState::solution() const {
  std::vector<Interval> out;
  for (const auto& [id, member] : members_) {
    if (member.color == chosen_) out.push_back(member.iv);
  }
  std::sort(out.begin(), out.end(), ByLo());
  return out;
}

std::array<std::size_t, 3> OnlineState::class_sizes() const {
  std::array<std::size_t, 3> sizes = {};
  for (const auto& [id, member] : members_) ++sizes[member.color - 1];
  return sizes;
}

int OnlineState::color_of(uint64_t id) const {
  auto it = members_.find(id);
  return it == members_.end() ? 0 : it->second.color;
}

OnlineState online_init(uint64_t seed) { return OnlineState(seed); }

std::vector<OnlineEvent> online_arrive(OnlineState& state, const Interval& iv) {
  return state.arrive(iv);
}

std::vector<Interval> online_solution(const OnlineState& state) {
  return state.solution();
}

ViolationReport check_coloring(const OnlineState& state) {
  ViolationReport report;
  std::vector<Interval> actual = state.inner().actual();
  std::size_t colored = 0;
  for (const Interval& a : actual) {
    if (state.color_of(a.id) == 0) {
      report.push_back({"uncolored", a.ToString()});
    } else {
      ++colored;
    }
  }
  const auto sizes = state.class_sizes();
  if (sizes[0] + sizes[1] + sizes[2] != colored) {
    report.push_back({"stale-color", "colored members outside A"});
  }
  // actual() is sorted by lo: once a later member misses actual[i], so do
  // all after it.
  for (std::size_t i = 0; i < actual.size(); ++i) {
    for (std::size_t j = i + 1; j < actual.size(); ++j) {
      if (!intersects(actual[i], actual[j])) break;
      if (state.color_of(actual[i].id) == state.color_of(actual[j].id)) {
        report.push_back({"coloring", actual[i].ToString() + " and " +
                                          actual[j].ToString() + " share a color"});
      }
    }
  }
  return report;
}

}  // namespace intsel
