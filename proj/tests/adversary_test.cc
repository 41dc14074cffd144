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


#include "intsel/adversary.h"

#include <algorithm>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "intsel/general.h"
#include "intsel/offline.h"
#include "intsel/random.h"
#include "test_support.h"

namespace intsel {
namespace {

bool HasRule(const ViolationReport& report, const std::string& rule) {
  return std::any_of(report.begin(), report.end(),
                     [&](const Violation& v) { return v.rule == rule; });
}

std::vector<int> Identity(int n) {
  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 1);
  return pi;
}

TEST(StackTest, FourIdentity) {
  StackSpec spec{4, Identity(4), Rational(0), Rational(1)};
  EXPECT_EQ(spec.lambda(), Rational(2, 15));
  EXPECT_EQ(spec.epsilon(), Rational(1, 60));
  auto stack = make_stack(spec);
  ASSERT_EQ(stack.size(), 4u);
  EXPECT_EQ(stack[0].lo.coord, Rational(1, 60));
  for (const Interval& iv : stack) {
    EXPECT_EQ(iv.hi.coord - iv.lo.coord, Rational(8, 15));
    EXPECT_EQ(iv.lo.openness, Openness::kClosed);
    EXPECT_EQ(iv.hi.openness, Openness::kOpen);
  }
}

TEST(StackTest, CommonSegmentAndBounds) {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng.Below(12));
    std::vector<int> pi = Identity(n);
    rng.Shuffle(pi);
    Rational x(rng.Between(-50, 50), 1 + rng.Below(7));
    Rational y = x + Rational(1 + rng.Below(40), 1 + rng.Below(9));
    auto stack = make_stack({n, pi, x, y}, 10);
    const Rational& common_lo = stack.back().lo.coord;
    const Rational& common_hi = stack.front().hi.coord;
    EXPECT_LT(common_lo, common_hi);
    for (const Interval& iv : stack) {
      EXPECT_LE(iv.lo.coord, common_lo);
      EXPECT_GE(iv.hi.coord, common_hi);
      EXPECT_GE(iv.lo.coord, x);
      EXPECT_LE(iv.hi.coord, y);
    }
    EXPECT_EQ(stack.front().id, 10u);
  }
}

TEST(StackTest, RejectsBadSpecs) {
  EXPECT_THROW(make_stack({3, {1, 1, 2}, Rational(0), Rational(1)}),
               std::invalid_argument);
  EXPECT_THROW(make_stack({2, {1, 2}, Rational(1), Rational(1)}),
               std::invalid_argument);
  EXPECT_THROW(make_stack({2, {1}, Rational(0), Rational(1)}),
               std::invalid_argument);
}

TEST(UnitGadgetTest, HandBuiltBlock) {
  GadgetSecret secret{GadgetKind::kUnit, 2, 1, {{1, 2}}, {1}};
  auto s = build_gadget(secret);
  ASSERT_EQ(s.size(), 4u);
  auto iv = [](const char* text) { return testing::Iv(text, 0); };
  EXPECT_TRUE(s[0].SamePointSet(iv("[1/8 9/8)")));
  EXPECT_TRUE(s[1].SamePointSet(iv("[3/4 7/4)")));
  EXPECT_TRUE(s[2].SamePointSet(iv("[-1 0)")));
  EXPECT_TRUE(s[3].SamePointSet(iv("[5/4 9/4)")));
  EXPECT_FALSE(intersects(s[0], s[2]));
  EXPECT_FALSE(intersects(s[0], s[3]));
  EXPECT_FALSE(intersects(s[1], s[2]));
  EXPECT_TRUE(intersects(s[1], s[3]));
  EXPECT_TRUE(verify_gadget(s, secret).empty());
  EXPECT_EQ(offline_optimum_size(s), 3u);
}

TEST(UnitGadgetTest, GeneratedInstances) {
  for (uint64_t seed = 0; seed < 100; ++seed) {
    int blocks = 1 + seed % 8;
    int n = 2 + seed % 7;
    Gadget g = gen_unit_gadget(blocks, n, seed);
    ASSERT_EQ(g.stream.size(), static_cast<std::size_t>(blocks * (n + 2)));
    EXPECT_TRUE(verify_gadget(g.stream, g.secret).empty()) << "seed " << seed;
    EXPECT_TRUE(is_proper(g.stream));
    EXPECT_EQ(offline_optimum_size(g.stream), gadget_planted_size(g.secret));
    auto decoded = decode_gadget(g.stream, g.secret);
    for (std::size_t t = 0; t < g.secret.phases(); ++t) {
      ASSERT_TRUE(decoded[t].has_value());
      EXPECT_EQ(*decoded[t], g.secret.pi[t][g.secret.index[t] - 1]);
    }
    Gadget again = gen_unit_gadget(blocks, n, seed);
    EXPECT_EQ(again.secret.index, g.secret.index);
    EXPECT_EQ(again.secret.pi, g.secret.pi);
  }
}

TEST(UnitGadgetTest, ShiftedAuxiliaryIsCaught) {
  Gadget g = gen_unit_gadget(3, 5, 11);
  const Rational half_eps = Rational(1, 5) / Rational(10) / Rational(2);
  std::size_t pos = g.secret.n + 1;  // R_1
  Interval& r = g.stream[pos];
  r = Interval::HalfOpen(r.lo.coord - half_eps, r.hi.coord - half_eps, pos);
  EXPECT_FALSE(verify_gadget(g.stream, g.secret).empty());
}

TEST(UnitGadgetTest, DecodeRejectsOffLatticeEndpoint) {
  Gadget g = gen_unit_gadget(1, 4, 2);
  std::size_t pos = good_positions(g.secret)[0];
  Interval& j = g.stream[pos];
  j = Interval::HalfOpen(j.lo.coord + Rational(1, 1000),
                         j.hi.coord + Rational(1, 1000), pos);
  EXPECT_FALSE(decode_gadget(g.stream, g.secret)[0].has_value());
}

TEST(TreeGadgetTest, DepthOne) {
  Gadget g = gen_tree_gadget(1, 4, 3);
  ASSERT_EQ(g.stream.size(), 6u);
  const int i = g.secret.index[0];
  StackSpec root{4, g.secret.pi[0], Rational(0), Rational(1)};
  const Rational lambda = root.lambda();
  EXPECT_EQ(g.stream[4].lo.coord, lambda * (Rational(i) - Rational(3, 2)));
  EXPECT_EQ(g.stream[4].hi.coord, lambda * Rational(i - 1));
  EXPECT_EQ(g.stream[5].lo.coord, lambda * (Rational(i + 4) - Rational(1, 2)));
  EXPECT_EQ(g.stream[5].hi.coord, lambda * Rational(i + 4));
  EXPECT_TRUE(verify_gadget(g.stream, g.secret).empty());
}

TEST(TreeGadgetTest, GeneratedInstances) {
  for (uint64_t seed = 0; seed < 100; ++seed) {
    int depth = 1 + seed % 4;
    int n = 3 + seed % 6;
    Gadget g = gen_tree_gadget(depth, n, seed);
    const std::size_t stacks = (std::size_t{1} << depth) - 1;
    ASSERT_EQ(g.stream.size(), stacks * n + stacks + 1);
    EXPECT_TRUE(verify_gadget(g.stream, g.secret).empty()) << "seed " << seed;
    for (int i : g.secret.index) {
      EXPECT_GE(i, 2);
      EXPECT_LE(i, n - 1);
    }
    // Every non-good stack interval contains one whole child subtree, so
    // besides the planted solution only smaller ones exist.
    EXPECT_EQ(offline_optimum_size(g.stream), gadget_planted_size(g.secret));
  }
}

TEST(TreeGadgetTest, OptimumConfirmedByBruteForce) {
  for (uint64_t seed = 0; seed < 40; ++seed) {
    int depth = 1 + seed % 2;
    int n = depth == 1 ? 3 + seed % 6 : 3 + seed % 3;
    Gadget g = gen_tree_gadget(depth, n, seed);
    ASSERT_LE(g.stream.size(), kBruteForceLimit);
    EXPECT_EQ(brute_force_optimum(g.stream),
              (std::size_t{1} << (depth + 1)) - 1);
  }
}

TEST(TreeGadgetTest, BoundaryIndexBreaksTheSplit) {
  // Root good index n with pi(n) = n puts the good interval's right end on
  // the right child's segment; a right child with index 1 then deploys its
  // left auxiliary just before that segment, inside the root's good interval.
  GadgetSecret secret{GadgetKind::kTree, 2, 2, {{1, 2}, {1, 2}, {1, 2}},
                      {2, 2, 1}};
  auto s = build_gadget(secret);
  EXPECT_TRUE(HasRule(verify_gadget(s, secret), "good-descendant"));
  EXPECT_THROW(gen_tree_gadget(2, 2, 0), std::invalid_argument);
}

TEST(TreeGadgetTest, SwappedStacksAreOutOfOrder) {
  Gadget g = gen_tree_gadget(2, 4, 9);
  const int n = g.secret.n;
  // Swap stacks 2 and 3 and renumber arrivals.
  std::vector<Interval> swapped;
  for (int block : {0, 2, 1}) {
    for (int j = 0; j < n; ++j) swapped.push_back(g.stream[block * n + j]);
  }
  for (std::size_t p = 3 * n; p < g.stream.size(); ++p) {
    swapped.push_back(g.stream[p]);
  }
  for (std::size_t p = 0; p < swapped.size(); ++p) {
    swapped[p] = Interval::HalfOpen(swapped[p].lo.coord, swapped[p].hi.coord, p);
  }
  EXPECT_TRUE(HasRule(verify_gadget(swapped, g.secret), "order"));
}

TEST(TreeGadgetTest, ShiftedAuxiliaryIsCaught) {
  Gadget g = gen_tree_gadget(2, 5, 4);
  Interval& aux = g.stream.back();
  StackSpec root{5, g.secret.pi[0], Rational(0), Rational(1)};
  const Rational shift = root.epsilon() / Rational(2);
  aux = Interval::HalfOpen(aux.lo.coord - shift, aux.hi.coord - shift, aux.id);
  EXPECT_FALSE(verify_gadget(g.stream, g.secret).empty());
}

TEST(GadgetTest, MalformedSecret) {
  GadgetSecret secret{GadgetKind::kUnit, 3, 1, {{1, 1, 2}}, {1}};
  EXPECT_THROW(build_gadget(secret), std::invalid_argument);
  EXPECT_TRUE(HasRule(verify_gadget({}, secret), "secret"));
}

TEST(GadgetTest, GeneralAlgorithmKeepsItsInvariants) {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Gadget g = seed % 2 ? gen_unit_gadget(1 + seed % 4, 2 + seed % 5, seed)
                        : gen_tree_gadget(1 + seed % 3, 3 + seed % 4, seed);
    GeneralState state;
    for (std::size_t t = 0; t < g.stream.size(); ++t) {
      state.process(g.stream[t]);
      std::span<const Interval> prefix(g.stream.data(), t + 1);
      ASSERT_TRUE(check_invariants(state, prefix).empty()) << "seed " << seed;
    }
  }
}

}  // namespace
}  // namespace intsel
