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


#ifndef INTSEL_ADVERSARY_H_
#define INTSEL_ADVERSARY_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "intsel/general.h"
#include "intsel/interval.h"
#include "intsel/rational.h"

namespace intsel {

// n half-open intervals of length lambda * n deployed in [x, y), where
// lambda = (y - x) / (2n - 1/2) and epsilon = lambda / (2n). Interval i
// (1-based) starts at x + lambda (i - 1) + epsilon pi(i).
struct StackSpec {
  int n = 1;
  std::vector<int> pi;  // pi[i - 1] = pi(i), a permutation of 1..n
  Rational x;
  Rational y;

  Rational lambda() const;
  Rational epsilon() const;
};

// Throws std::invalid_argument on a bad permutation or x >= y. Arrivals are
// first_arrival, first_arrival + 1, ...
std::vector<Interval> make_stack(const StackSpec& spec,
                                 uint64_t first_arrival = 0);

enum class GadgetKind { kUnit, kTree };

// The adversary's choices. Phase t (0-based here) uses permutation pi[t] and
// good index index[t] in 1..n. For the tree gadget phases follow the
// pre-order of the internal nodes.
struct GadgetSecret {
  GadgetKind kind = GadgetKind::kUnit;
  int n = 2;
  int size = 1;  // blocks for kUnit, depth for kTree
  std::vector<std::vector<int>> pi;
  std::vector<int> index;

  std::size_t phases() const { return index.size(); }
};

struct Gadget {
  std::vector<Interval> stream;
  GadgetSecret secret;
};

// Unit-interval gadget. Block t is a unit stack deployed from x = 4t
// followed by its auxiliaries L_t and R_t. Requires blocks >= 1, n >= 2.
Gadget gen_unit_gadget(int blocks, int n, uint64_t seed);

// Binary-tree gadget: 2^depth - 1 stacks in pre-order, root in [0, 1), then
// one auxiliary per leaf, left to right. Good indices are drawn from 2..n-1.
// Requires depth >= 1, n >= 3.
Gadget gen_tree_gadget(int depth, int n, uint64_t seed);

// Rebuilds the stream a secret describes, for any n >= 2 and any indices in
// 1..n. Throws std::invalid_argument on a malformed secret.
std::vector<Interval> build_gadget(const GadgetSecret& secret);

// Stream position of the good interval of each phase.
std::vector<std::size_t> good_positions(const GadgetSecret& secret);

// Geometric checks of a gadget stream against its secret, plus an exact
// comparison with the regenerated stream. Empty iff the stream is sound.
ViolationReport verify_gadget(std::span<const Interval> stream,
                              const GadgetSecret& secret);

// Reads pi_t(i_t) back from the left endpoint of each good interval. Returns
// nullopt for a phase whose endpoint does not sit on the encoding lattice.
std::vector<std::optional<int>> decode_gadget(std::span<const Interval> stream,
                                              const GadgetSecret& secret);

// Size of the intended solution: 3 per block, or all auxiliaries plus one
// good interval per stack.
std::size_t gadget_planted_size(const GadgetSecret& secret);

std::optional<GadgetKind> ParseGadgetKind(std::string_view name);
std::string_view ToString(GadgetKind kind);

}  // namespace intsel

#endif  // INTSEL_ADVERSARY_H_
