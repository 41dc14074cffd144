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

#ifndef INTSEL_INTERVAL_H_
#define INTSEL_INTERVAL_H_

#include <cstdint>
#include <limits>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "intsel/rational.h"

namespace intsel {

enum class Openness : uint8_t { kOpen, kClosed };
enum class Side : uint8_t { kLeft, kRight };
enum class IntervalKind : uint8_t { kInput, kVirtual };

// One endpoint of an input interval. Virtual intervals reuse the keys of the
// input intervals they were cut from, so `arrival` always names an input.
struct EndpointKey {
  Rational coord;
  Openness openness = Openness::kClosed;
  Side side = Side::kLeft;
  uint64_t arrival = 0;

  bool is_open() const { return openness == Openness::kOpen; }
  friend bool operator==(const EndpointKey&, const EndpointKey&) = default;
};

// Strict total order on endpoint keys that makes every endpoint distinct.
//
// Keys are ordered by coordinate first. At a shared coordinate the order is
//
//   open right < closed left < closed right < open left
//
// which keeps touching closed endpoints overlapping and everything involving
// an open endpoint apart. Same-side keys with the same openness fall back to
// arrival order: an earlier left endpoint compares greater, an earlier right
// endpoint compares smaller, so later arrivals are pushed outward.
//
// Returns 0 only for the same endpoint of the same interval.
int cprime_compare(const EndpointKey& p, const EndpointKey& q);

// The same order without the arrival tie-break: keys with equal coordinate,
// side and openness compare equal. This is exactly the point-set order of
// the boundaries, with "ends before starts" at a shared cut.
int cut_compare(const EndpointKey& p, const EndpointKey& q);

struct CPrimeLess {
  bool operator()(const EndpointKey& a, const EndpointKey& b) const {
    return cprime_compare(a, b) < 0;
  }
};

inline constexpr uint64_t kNoId = std::numeric_limits<uint64_t>::max();

struct Interval {
  EndpointKey lo;
  EndpointKey hi;
  uint64_t id = kNoId;
  IntervalKind kind = IntervalKind::kInput;

  // Builds an input interval whose keys carry `arrival` as their arrival
  // index and id. Throws std::invalid_argument unless left < right.
  static Interval Make(Rational left, Openness left_open, Rational right,
                       Openness right_open, uint64_t arrival);
  // Half-open [left, right).
  static Interval HalfOpen(Rational left, Rational right, uint64_t arrival);
  static Interval Closed(Rational left, Rational right, uint64_t arrival);

  bool is_virtual() const { return kind == IntervalKind::kVirtual; }

  // Same endpoints (all key fields); ids are ignored.
  bool SameKeys(const Interval& other) const {
    return lo == other.lo && hi == other.hi;
  }
  // Same point set: equal coordinates and openness, arrival ignored.
  bool SamePointSet(const Interval& other) const;

  std::string ToString() const;
  friend std::ostream& operator<<(std::ostream& os, const Interval& iv) {
    return os << iv.ToString();
  }
};

// True iff the closed segments [lo, hi] overlap in the distinct-endpoints
// order. Equivalent to intersection of the raw intervals.
bool intersects(const Interval& a, const Interval& b);

enum class Containment { kNone, kWeak, kProper };

// Whether `outer` contains `inner` in the distinct-endpoints order. kWeak
// allows shared keys on either side, kProper requires both sides strict.
Containment contains(const Interval& outer, const Interval& inner);

// Weak containment, the common case for the algorithms.
inline bool contains_weakly(const Interval& outer, const Interval& inner) {
  return contains(outer, inner) != Containment::kNone;
}

// Weak containment under cut_compare, i.e. raw point-set containment.
bool contains_as_sets(const Interval& outer, const Interval& inner);

// Orders intervals by lo, then hi, in the distinct-endpoints order.
struct ByLo {
  bool operator()(const Interval& a, const Interval& b) const;
};
// Orders intervals by hi, then lo.
struct ByHi {
  bool operator()(const Interval& a, const Interval& b) const;
};

// A set of intervals kept sorted by lo; no two members share both keys.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(std::span<const Interval> items);

  // Returns false (and leaves the set unchanged) if an interval with the
  // same keys is already present.
  bool insert(const Interval& iv);
  bool erase(const Interval& iv);
  bool contains_keys(const Interval& iv) const;

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  const Interval& operator[](std::size_t i) const { return items_[i]; }
  std::span<const Interval> view() const { return items_; }
  operator std::span<const Interval>() const { return items_; }  // NOLINT

 private:
  std::vector<Interval> items_;
};

std::string ToString(const EndpointKey& key);

}  // namespace intsel

#endif  // INTSEL_INTERVAL_H_
