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


#ifndef INTSEL_ONLINE_H_
#define INTSEL_ONLINE_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "intsel/general.h"
#include "intsel/interval.h"

namespace intsel {

// No free color for an interval entering A. Cannot happen while the streaming
// algorithm keeps its invariants.
class ColorExhaustion : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class OnlineEventType { kAccept, kPreempt, kReject };

struct OnlineEvent {
  OnlineEventType type = OnlineEventType::kReject;
  uint64_t id = kNoId;
  int color = 0;  // 0 for rejections.
  // Members of A met by an accepted interval when its color was picked.
  std::size_t neighbors = 0;

  std::string ToString() const;
};

// Randomized preemptive online selection: the actual set of the streaming
// algorithm, colored first-fit with three colors, of which one class chosen
// up front is the output.
class OnlineState {
 public:
  explicit OnlineState(uint64_t seed);

  // Runs one round of the streaming algorithm, then colors the arrival if it
  // is still in A. Returns the events of this round: preemptions first, then
  // the accept or reject of the arrival.
  std::vector<OnlineEvent> arrive(const Interval& iv);

  // Current members of the chosen class, left to right.
  std::vector<Interval> solution() const;
  // Sizes of classes 1, 2, 3.
  std::array<std::size_t, 3> class_sizes() const;
  // Color of a current member of A, 0 if absent.
  int color_of(uint64_t id) const;

  int chosen() const { return chosen_; }
  uint64_t seed() const { return seed_; }
  const GeneralState& inner() const { return inner_; }
  const std::vector<OnlineEvent>& events() const { return events_; }

 private:
  struct Member {
    Interval iv;
    int color;
  };

  GeneralState inner_;
  std::map<uint64_t, Member> members_;  // by id; mirrors A
  int chosen_;
  uint64_t seed_;
  std::vector<OnlineEvent> events_;
};

OnlineState online_init(uint64_t seed);
std::vector<OnlineEvent> online_arrive(OnlineState& state, const Interval& iv);
std::vector<Interval> online_solution(const OnlineState& state);

// Checks that intersecting members of A have different colors and that the
// colored members are exactly A.
ViolationReport check_coloring(const OnlineState& state);

}  // namespace intsel

#endif  // INTSEL_ONLINE_H_
