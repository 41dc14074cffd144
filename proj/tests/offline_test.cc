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

#include <vector>

#include <gtest/gtest.h>

#include "intsel/random.h"
#include "test_support.h"

namespace intsel {
namespace {

using ::intsel::testing::PointSampledLoad;
using ::intsel::testing::RawContains;
using ::intsel::testing::Stream;

bool PairwiseDisjoint(const std::vector<Interval>& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (intersects(s[i], s[j])) return false;
    }
  }
  return true;
}

TEST(OfflineTest, Examples) {
  EXPECT_EQ(offline_optimum(Stream({"[0 1]", "[2 3]", "[4 5]"})).size(), 3u);
  EXPECT_EQ(offline_optimum(Stream({"[0 10]", "[1 9]", "[2 8]"})).size(), 1u);
  EXPECT_EQ(brute_force_optimum({}), 0u);
  EXPECT_EQ(brute_force_optimum(Stream({"[0 2]", "[1 3]"})), 1u);
  EXPECT_EQ(load({}), 0u);
  EXPECT_EQ(load(Stream({"[0 1)", "[1 2)"})), 1u);
  EXPECT_EQ(load(Stream({"[0 1]", "[1 2]", "[1 5]"})), 3u);
}

TEST(OfflineTest, BruteForceRefusesLargeInputs) {
  auto s = gen_random(kBruteForceLimit + 1, StreamFamily::kUniformGeneral, 1);
  EXPECT_THROW(brute_force_optimum(s), std::invalid_argument);
}

TEST(OfflineTest, GreedyMatchesBruteForce) {
  for (uint64_t seed = 0; seed < 300; ++seed) {
    RandomStreamOptions options;
    options.family = static_cast<StreamFamily>(seed % 4);
    options.openness = static_cast<OpennessMix>(seed % 5);
    options.grid = 2 + seed % 6;
    auto s = gen_random(1 + seed % 12, options, seed);
    auto greedy = offline_optimum(s);
    EXPECT_TRUE(PairwiseDisjoint(greedy));
    EXPECT_LE(load(greedy), 1u);
    EXPECT_EQ(greedy.size(), brute_force_optimum(s));
    EXPECT_EQ(greedy.size(), offline_optimum_size(s));
  }
}

TEST(OfflineTest, LoadMatchesPointSampling) {
  for (uint64_t seed = 0; seed < 300; ++seed) {
    RandomStreamOptions options;
    options.openness = OpennessMix::kMixed;
    options.grid = 4;
    auto s = gen_random(10, options, seed);
    EXPECT_EQ(load(s), PointSampledLoad(s));
  }
}

TEST(OfflineTest, IsProperExamples) {
  EXPECT_TRUE(is_proper(Stream({"[0 1)", "[1/2 3/2)", "[3 4)"})));
  EXPECT_FALSE(is_proper(Stream({"[0 10]", "[2 8]"})));
  EXPECT_FALSE(is_proper(Stream({"[0 2]", "[1 2]"})));
  EXPECT_FALSE(is_proper(Stream({"[0 1]", "[0 1)"})));
  EXPECT_TRUE(is_proper(Stream({"[0 1]", "[0 1]"})));
}

TEST(OfflineTest, IsProperMatchesPairwiseRawCheck) {
  for (uint64_t seed = 0; seed < 400; ++seed) {
    RandomStreamOptions options;
    options.family = static_cast<StreamFamily>(seed % 4);
    options.openness = static_cast<OpennessMix>(seed % 5);
    options.grid = 3;
    auto s = gen_random(8, options, seed);
    bool expected = true;
    for (const Interval& a : s) {
      for (const Interval& b : s) {
        if (RawContains(a, b) && !RawContains(b, a)) expected = false;
      }
    }
    EXPECT_EQ(is_proper(s), expected);
    if (options.family == StreamFamily::kUnit ||
        options.family == StreamFamily::kProperShifted) {
      EXPECT_TRUE(is_proper(s));
    }
  }
}

}  // namespace
}  // namespace intsel
