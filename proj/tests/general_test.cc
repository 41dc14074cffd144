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

#include "intsel/general.h"

#include <algorithm>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "intsel/offline.h"
#include "intsel/random.h"
#include "test_support.h"

namespace intsel {
namespace {

using ::intsel::testing::Iv;
using ::intsel::testing::Stream;

// Line-by-line transcription of the arrival policy over plain vectors, with
// every quantifier evaluated by a full scan.
class NaiveGeneral {
 public:
  bool Process(const Interval& iv) {
    for (const auto* set : {&actual_, &virtual_}) {
      for (const Interval& j : *set) {
        if (contains_weakly(iv, j)) return false;
      }
    }
    actual_.push_back(iv);
    std::erase_if(actual_, [&](const Interval& j) {
      return !j.SameKeys(iv) && contains_weakly(j, iv);
    });
    std::erase_if(virtual_,
                  [&](const Interval& j) { return contains_weakly(j, iv); });
    for (const EndpointKey* p : {&iv.lo, &iv.hi}) {
      auto holds = [&](const Interval& j) {
        return cprime_compare(j.lo, *p) <= 0 && cprime_compare(*p, j.hi) <= 0;
      };
      auto v = std::find_if(virtual_.begin(), virtual_.end(), holds);
      if (v != virtual_.end()) {
        Interval trimmed = overlap(iv, *v);
        virtual_.erase(v);
        virtual_.push_back(trimmed);
        continue;
      }
      auto a = std::find_if(actual_.begin(), actual_.end(), [&](const Interval& j) {
        return !j.SameKeys(iv) && holds(j);
      });
      if (a != actual_.end()) virtual_.push_back(overlap(iv, *a));
    }
    std::erase_if(actual_, [&](const Interval& j) {
      return std::any_of(virtual_.begin(), virtual_.end(), [&](const Interval& k) {
        return cprime_compare(j.lo, k.lo) < 0 && cprime_compare(k.hi, j.hi) < 0;
      });
    });
    return true;
  }

  std::vector<Interval> actual() const { return Sorted(actual_); }
  std::vector<Interval> virtuals() const { return Sorted(virtual_); }

 private:
  static std::vector<Interval> Sorted(std::vector<Interval> v) {
    std::sort(v.begin(), v.end(), ByLo());
    return v;
  }

  std::vector<Interval> actual_;
  std::vector<Interval> virtual_;
};

std::string Keys(const std::vector<Interval>& v) {
  std::string s;
  for (const Interval& iv : v) s += iv.ToString() + " ";
  return s;
}

Interval Virtual(const EndpointKey& lo, const EndpointKey& hi) {
  Interval v;
  v.lo = lo;
  v.hi = hi;
  v.kind = IntervalKind::kVirtual;
  return v;
}

GeneralState RunAll(const std::vector<Interval>& stream) {
  GeneralState state;
  for (const Interval& iv : stream) state.process(iv);
  return state;
}

TEST(GeneralTest, StaircaseTrace) {
  auto s = Stream({"[0 10]", "[2 12]", "[4 14]"});
  GeneralState state = RunAll(s);
  EXPECT_EQ(Keys(state.actual()), Keys({s[0], s[2]}));
  EXPECT_EQ(Keys(state.virtuals()), Keys({overlap(s[0], s[2])}));
  EXPECT_EQ(state.virtuals()[0].lo.coord, Rational(4));
  EXPECT_EQ(state.virtuals()[0].hi.coord, Rational(10));
  EXPECT_EQ(state.finalize().size(), 1u);
  EXPECT_EQ(state.arrivals(), 3u);
  EXPECT_EQ(state.peak_actual(), 2u);
}

TEST(GeneralTest, ArrivalContainingVirtualIsRejected) {
  auto a = Stream({"[0 10]", "[2 12]"});
  std::vector<Interval> v = {overlap(a[0], a[1])};
  GeneralState state = GeneralState::FromSets(a, v, 2);
  EXPECT_EQ(state.process(Iv("[1 11]", 2)), ArrivalOutcome::kRejected);
  EXPECT_EQ(Keys(state.actual()), Keys(a));
  EXPECT_EQ(Keys(state.virtuals()), Keys(v));
  EXPECT_EQ(state.arrivals(), 3u);
}

TEST(GeneralTest, DisjointArrivalsAreAllKept) {
  auto s = Stream({"[0 1)", "[1 2)", "[5 6]", "[3 4]"});
  GeneralState state = RunAll(s);
  EXPECT_EQ(state.actual_size(), 4u);
  EXPECT_EQ(state.virtual_size(), 0u);
  EXPECT_EQ(state.finalize().size(), 4u);
}

TEST(GeneralTest, PreemptionByLaterVirtual) {
  // [5,15] loses to the overlap [9,10] of its neighbours.
  auto s = Stream({"[0 10]", "[5 15]", "[9 20]"});
  GeneralState state = RunAll(s);
  EXPECT_EQ(Keys(state.actual()), Keys({s[0], s[2]}));
  ASSERT_EQ(state.virtual_size(), 1u);
  EXPECT_EQ(state.virtuals()[0].lo.coord, Rational(9));
  EXPECT_EQ(state.virtuals()[0].hi.coord, Rational(10));
}

TEST(GeneralTest, RejectsMisnumberedArrival) {
  GeneralState state;
  EXPECT_THROW(state.process(Iv("[0 1]", 3)), std::invalid_argument);
}

TEST(GeneralTest, EmptyState) {
  GeneralState state;
  EXPECT_TRUE(state.finalize().empty());
  EXPECT_EQ(ToString(portion_string(state)), "<0,0>");
  EXPECT_TRUE(check_invariants(state, {}).empty());
}

TEST(PortionStringTest, SingleInterval) {
  auto s = Stream({"[0 1]"});
  EXPECT_EQ(ToString(portion_string(RunAll(s))), "<0,0><1,0><0,0>");
}

// Five actual intervals in a chain, each neighbouring overlap stored, plus a
// leftover virtual interval at the right end of the last one.
TEST(PortionStringTest, FiveIntervalComponent) {
  auto a = Stream({"[0 3]", "[2 5]", "[4 7]", "[6 9]", "[8 11]"});
  std::vector<Interval> v;
  for (int i = 0; i + 1 < 5; ++i) v.push_back(overlap(a[i], a[i + 1]));
  EndpointKey ten{Rational(10), Openness::kClosed, Side::kLeft, 5};
  v.push_back(Virtual(ten, a[4].hi));
  PortionRuns runs = portion_runs(a, v);
  ASSERT_EQ(runs.components.size(), 1u);
  EXPECT_EQ(ToString(runs.components[0]),
            "<1,0><2,1><1,0><2,1><1,0><2,1><1,0><2,1><1,0><1,1>");
  EXPECT_TRUE(MatchesComponentPattern(runs.components[0]));
  EXPECT_EQ(ToString(portion_string(a, v)),
            "<0,0><1,0><2,1><1,0><2,1><1,0><2,1><1,0><2,1><1,0><1,1><0,0>");
}

TEST(PatternTest, ComponentAndGap) {
  auto p = [](std::vector<std::pair<int, int>> v) {
    PortionString s;
    for (auto [a, b] : v) s.push_back({a, b});
    return s;
  };
  EXPECT_TRUE(MatchesComponentPattern(p({{1, 0}})));
  EXPECT_TRUE(MatchesComponentPattern(p({{1, 1}, {1, 0}, {2, 1}, {1, 0}})));
  EXPECT_FALSE(MatchesComponentPattern(p({{1, 0}, {2, 1}})));
  EXPECT_FALSE(MatchesComponentPattern(p({{1, 0}, {2, 0}, {1, 0}})));
  EXPECT_FALSE(MatchesComponentPattern(p({{1, 1}})));
  EXPECT_TRUE(MatchesGapPattern(p({{0, 0}, {0, 1}, {0, 0}})));
  EXPECT_FALSE(MatchesGapPattern(p({{0, 1}, {0, 0}})));
}

bool HasRule(const ViolationReport& report, const std::string& rule) {
  return std::any_of(report.begin(), report.end(),
                     [&](const Violation& v) { return v.rule == rule; });
}

TEST(CheckInvariantsTest, TwoVirtualsInsideOneActual) {
  auto a = Stream({"[0 10]"});
  EndpointKey k2{Rational(2), Openness::kClosed, Side::kLeft, 1};
  EndpointKey k3{Rational(3), Openness::kClosed, Side::kRight, 1};
  EndpointKey k5{Rational(5), Openness::kClosed, Side::kLeft, 2};
  EndpointKey k6{Rational(6), Openness::kClosed, Side::kRight, 2};
  std::vector<Interval> v = {Virtual(k2, k3), Virtual(k5, k6)};
  GeneralState state = GeneralState::FromSets(a, v, 3);
  ViolationReport report = check_invariants(state, a);
  EXPECT_TRUE(HasRule(report, "virtual-shape"));
  EXPECT_TRUE(HasRule(report, "component-pattern"));
}

TEST(CheckInvariantsTest, NestedActualPair) {
  auto a = Stream({"[0 10]", "[2 8]"});
  GeneralState state = GeneralState::FromSets(a, std::vector<Interval>{}, 2);
  ViolationReport report = check_invariants(state, a);
  EXPECT_TRUE(HasRule(report, "nested-actual"));
  EXPECT_TRUE(HasRule(report, "overlap-stored"));
}

TEST(CheckInvariantsTest, MissingTraceAndProvenance) {
  auto seen = Stream({"[0 1]", "[5 6]"});
  GeneralState state =
      GeneralState::FromSets(std::span(seen).first(1), std::vector<Interval>{}, 2);
  EXPECT_TRUE(HasRule(check_invariants(state, seen), "trace"));
  auto stranger = Stream({"[0 1]", "[7 8]"});
  GeneralState bad =
      GeneralState::FromSets(stranger, std::vector<Interval>{}, 2);
  EXPECT_TRUE(HasRule(check_invariants(bad, seen), "provenance"));
}

TEST(CheckInvariantsTest, LoadViolations) {
  auto a = Stream({"[0 4]", "[1 5]", "[2 6]"});
  GeneralState state = GeneralState::FromSets(a, std::vector<Interval>{}, 3);
  EXPECT_TRUE(HasRule(check_invariants(state, a), "actual-load"));
}

// The ordered-map implementation against the literal transcription, arrival
// by arrival, with the full invariant check after every step.
TEST(GeneralTest, MatchesNaiveTranscriptionAndKeepsInvariants) {
  for (uint64_t seed = 0; seed < 400; ++seed) {
    RandomStreamOptions options;
    options.family = static_cast<StreamFamily>(seed % 4);
    options.openness = static_cast<OpennessMix>((seed / 4) % 5);
    options.grid = 2 + seed % 9;
    auto s = gen_random(10 + seed % 50, options, seed);
    GeneralState state;
    NaiveGeneral naive;
    for (std::size_t t = 0; t < s.size(); ++t) {
      bool accepted = state.process(s[t]) == ArrivalOutcome::kAccepted;
      ASSERT_EQ(accepted, naive.Process(s[t])) << "seed " << seed << " t " << t;
      ASSERT_EQ(Keys(state.actual()), Keys(naive.actual()))
          << "seed " << seed << " t " << t;
      ASSERT_EQ(Keys(state.virtuals()), Keys(naive.virtuals()))
          << "seed " << seed << " t " << t;
      if (accepted) EXPECT_TRUE(state.in_actual(s[t]));
      std::span<const Interval> prefix(s.data(), t + 1);
      ViolationReport report = check_invariants(state, prefix);
      ASSERT_TRUE(report.empty())
          << "seed " << seed << " t " << t << ": " << report[0].rule << " "
          << report[0].detail;
      ASSERT_GE(2 * state.finalize().size(), offline_optimum_size(prefix));
    }
  }
}

}  // namespace
}  // namespace intsel
