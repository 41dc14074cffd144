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

#ifndef INTSEL_GENERAL_H_
#define INTSEL_GENERAL_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "intsel/interval.h"

namespace intsel {

enum class ArrivalOutcome { kRejected, kAccepted };

// One-pass 2-approximate interval selection.
//
// The state keeps a set of actual intervals A, drawn from the stream, and a
// set of virtual intervals V, each the overlap of two intervals that were
// actual at some point. An arrival is rejected iff it weakly contains a
// member of A or V; otherwise it joins A, evicts whatever contains it, trims
// the virtual intervals it overlaps and records its overlaps with A. The
// answer is a maximum disjoint subset of A.
//
// Invariants maintained between arrivals: A has load at most 2 and no
// containment, V is pairwise disjoint, and |V| <= |A| <= 2 |Opt(A)|.
//
// Single owner: one mutator at a time; the object may move between threads
// between arrivals.
class GeneralState {
 public:
  GeneralState() = default;

  // Builds an arbitrary (possibly invalid) state for diagnostics. Peaks are
  // initialized from the given sets.
  static GeneralState FromSets(std::span<const Interval> actual,
                               std::span<const Interval> virtuals,
                               uint64_t arrivals);

  // Requires an input interval whose id and key arrivals equal arrivals();
  // throws std::invalid_argument otherwise. A rejected arrival leaves A and
  // V untouched.
  ArrivalOutcome process(const Interval& iv);

  // Maximum disjoint subset of A, left to right.
  std::vector<Interval> finalize() const;

  std::vector<Interval> actual() const;
  std::vector<Interval> virtuals() const;
  std::size_t actual_size() const { return actual_.size(); }
  std::size_t virtual_size() const { return virtual_.size(); }
  bool in_actual(const Interval& iv) const;

  uint64_t arrivals() const { return arrivals_; }
  std::size_t peak_actual() const { return peak_actual_; }
  std::size_t peak_virtual() const { return peak_virtual_; }

 private:
  using Store = std::map<EndpointKey, Interval, CPrimeLess>;

  bool ContainsStored(const Store& store, const Interval& iv) const;
  void EraseActualContaining(const Interval& iv);
  void EraseVirtualContaining(const Interval& iv);
  // Records the overlap at endpoint p of the new arrival: trims the virtual
  // interval holding p, or else adds the overlap with the other actual
  // interval holding p. Returns the lo key of the new virtual interval.
  std::optional<EndpointKey> UpdateAt(const Interval& iv, const EndpointKey& p);
  void EvictAroundVirtual(const Interval& k);
  void InsertVirtual(const Interval& v);

  Store actual_;
  Store virtual_;
  uint64_t arrivals_ = 0;
  std::size_t peak_actual_ = 0;
  std::size_t peak_virtual_ = 0;
};

// Overlap [max lo, min hi] of two intersecting intervals, marked virtual.
Interval overlap(const Interval& a, const Interval& b);

// ---------------------------------------------------------------------------
// Diagnostics.

// Coverage type of a maximal portion of the line: how many actual and
// virtual intervals contain its points.
struct PortionType {
  int actual = 0;
  int virtuals = 0;
  friend bool operator==(const PortionType&, const PortionType&) = default;
};

using PortionString = std::vector<PortionType>;

// Left-to-right portion types of the whole line, adjacent repeats merged.
PortionString portion_string(const GeneralState& state);
// Same, for arbitrary actual and virtual sets.
PortionString portion_string(std::span<const Interval> actual,
                             std::span<const Interval> virtuals);

std::string ToString(const PortionString& s);

// Splits the uncollapsed scan into components of A (coverage by at least one
// actual interval) and the gaps between them, each collapsed.
struct PortionRuns {
  std::vector<PortionString> components;
  std::vector<PortionString> gaps;
};
PortionRuns portion_runs(std::span<const Interval> actual,
                         std::span<const Interval> virtuals);

// <1,1>? <1,0> (<2,1> <1,0>)* <1,1>?
bool MatchesComponentPattern(const PortionString& s);
// <0,0> (<0,1> <0,0>)*
bool MatchesGapPattern(const PortionString& s);

struct Violation {
  std::string rule;
  std::string detail;
};
using ViolationReport = std::vector<Violation>;

// Checks the structural invariants of a state against the full prefix of
// inputs processed so far: containment shape between actual and virtual
// intervals, overlaps of actual pairs recorded, virtual load 1, actual load
// 2, no nested actual pair, every input leaves a trace, every stored endpoint comes from an input, the component and gap
// patterns, the <0,0>-adjacency rule and |V| <= |A|.
ViolationReport check_invariants(const GeneralState& state,
                                 std::span<const Interval> seen);

}  // namespace intsel

#endif  // INTSEL_GENERAL_H_
