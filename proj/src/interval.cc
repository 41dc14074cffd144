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

#include "intsel/interval.h"

#include <algorithm>
#include <stdexcept>

namespace intsel {
namespace {

// Position of a key among the four kinds that can share a coordinate.
int TieRank(const EndpointKey& k) {
  if (k.side == Side::kRight) return k.is_open() ? 0 : 2;
  return k.is_open() ? 3 : 1;
}

int Sign(std::strong_ordering o) {
  if (o < 0) return -1;
  if (o > 0) return 1;
  return 0;
}

}  // namespace

int cut_compare(const EndpointKey& p, const EndpointKey& q) {
  if (int c = Sign(p.coord <=> q.coord); c != 0) return c;
  int rp = TieRank(p);
  int rq = TieRank(q);
  return (rp > rq) - (rp < rq);
}

int cprime_compare(const EndpointKey& p, const EndpointKey& q) {
  if (int c = cut_compare(p, q); c != 0) return c;
  // Same coordinate, side and openness.
  if (p.arrival == q.arrival) return 0;
  bool p_earlier = p.arrival < q.arrival;
  if (p.side == Side::kLeft) return p_earlier ? 1 : -1;
  return p_earlier ? -1 : 1;
}

Interval Interval::Make(Rational left, Openness left_open, Rational right,
                        Openness right_open, uint64_t arrival) {
  if (!(left < right)) {
    throw std::invalid_argument("interval needs left < right, got " +
                                left.ToString() + " and " + right.ToString());
  }
  Interval iv;
  iv.lo = EndpointKey{std::move(left), left_open, Side::kLeft, arrival};
  iv.hi = EndpointKey{std::move(right), right_open, Side::kRight, arrival};
  iv.id = arrival;
  iv.kind = IntervalKind::kInput;
  return iv;
}

Interval Interval::HalfOpen(Rational left, Rational right, uint64_t arrival) {
  return Make(std::move(left), Openness::kClosed, std::move(right),
              Openness::kOpen, arrival);
}

Interval Interval::Closed(Rational left, Rational right, uint64_t arrival) {
  return Make(std::move(left), Openness::kClosed, std::move(right),
              Openness::kClosed, arrival);
}

bool Interval::SamePointSet(const Interval& other) const {
  return cut_compare(lo, other.lo) == 0 && cut_compare(hi, other.hi) == 0;
}

std::string ToString(const EndpointKey& key) {
  std::string s = key.side == Side::kLeft ? (key.is_open() ? "(" : "[") : "";
  s += key.coord.ToString();
  if (key.side == Side::kRight) s += key.is_open() ? ")" : "]";
  return s + "@" + std::to_string(key.arrival);
}

std::string Interval::ToString() const {
  std::string s = lo.is_open() ? "(" : "[";
  s += lo.coord.ToString() + " " + hi.coord.ToString();
  s += hi.is_open() ? ")" : "]";
  if (is_virtual()) {
    s += "v{" + std::to_string(lo.arrival) + "," + std::to_string(hi.arrival) +
         "}";
  } else {
    s += "#" + std::to_string(id);
  }
  return s;
}

bool intersects(const Interval& a, const Interval& b) {
  return cprime_compare(a.hi, b.lo) >= 0 && cprime_compare(b.hi, a.lo) >= 0;
}

Containment contains(const Interval& outer, const Interval& inner) {
  int l = cprime_compare(outer.lo, inner.lo);
  int r = cprime_compare(inner.hi, outer.hi);
  if (l > 0 || r > 0) return Containment::kNone;
  if (l < 0 && r < 0) return Containment::kProper;
  return Containment::kWeak;
}

bool contains_as_sets(const Interval& outer, const Interval& inner) {
  return cut_compare(outer.lo, inner.lo) <= 0 &&
         cut_compare(inner.hi, outer.hi) <= 0;
}

bool ByLo::operator()(const Interval& a, const Interval& b) const {
  if (int c = cprime_compare(a.lo, b.lo); c != 0) return c < 0;
  return cprime_compare(a.hi, b.hi) < 0;
}

bool ByHi::operator()(const Interval& a, const Interval& b) const {
  if (int c = cprime_compare(a.hi, b.hi); c != 0) return c < 0;
  return cprime_compare(a.lo, b.lo) < 0;
}

IntervalSet::IntervalSet(std::span<const Interval> items) {
  for (const Interval& iv : items) insert(iv);
}

bool IntervalSet::insert(const Interval& iv) {
  auto it = std::lower_bound(items_.begin(), items_.end(), iv, ByLo());
  if (it != items_.end() && it->SameKeys(iv)) return false;
  items_.insert(it, iv);
  return true;
}

bool IntervalSet::erase(const Interval& iv) {
  auto it = std::lower_bound(items_.begin(), items_.end(), iv, ByLo());
  if (it == items_.end() || !it->SameKeys(iv)) return false;
  items_.erase(it);
  return true;
}

bool IntervalSet::contains_keys(const Interval& iv) const {
  auto it = std::lower_bound(items_.begin(), items_.end(), iv, ByLo());
  return it != items_.end() && it->SameKeys(iv);
}

}  // namespace intsel
