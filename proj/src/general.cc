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
#include <iterator>
#include <stdexcept>
#include <string>
#include <utility>

#include "intsel/offline.h"

namespace intsel {

Interval overlap(const Interval& a, const Interval& b) {
  if (!intersects(a, b)) {
    throw std::invalid_argument("overlap of disjoint intervals " +
                                a.ToString() + " and " + b.ToString());
  }
  Interval v;
  v.lo = cprime_compare(a.lo, b.lo) >= 0 ? a.lo : b.lo;
  v.hi = cprime_compare(a.hi, b.hi) <= 0 ? a.hi : b.hi;
  v.id = kNoId;
  v.kind = IntervalKind::kVirtual;
  return v;
}

GeneralState GeneralState::FromSets(std::span<const Interval> actual,
                                    std::span<const Interval> virtuals,
                                    uint64_t arrivals) {
  GeneralState state;
  for (const Interval& iv : actual) {
    if (!state.actual_.emplace(iv.lo, iv).second) {
      throw std::invalid_argument("duplicate actual key " + iv.ToString());
    }
  }
  for (const Interval& iv : virtuals) {
    if (!state.virtual_.emplace(iv.lo, iv).second) {
      throw std::invalid_argument("duplicate virtual key " + iv.ToString());
    }
  }
  state.arrivals_ = arrivals;
  state.peak_actual_ = state.actual_.size();
  state.peak_virtual_ = state.virtual_.size();
  return state;
}

// Both stores are sorted by hi as well as by lo (A has no nested pair, V is
// disjoint), so the first member starting at or after lo(iv) has the
// smallest hi among the candidates.
bool GeneralState::ContainsStored(const Store& store,
                                  const Interval& iv) const {
  auto it = store.lower_bound(iv.lo);
  return it != store.end() && cprime_compare(it->second.hi, iv.hi) <= 0;
}

void GeneralState::EraseActualContaining(const Interval& iv) {
  auto it = actual_.find(iv.lo);
  while (it != actual_.begin()) {
    auto prev = std::prev(it);
    if (cprime_compare(prev->second.hi, iv.hi) < 0) break;
    actual_.erase(prev);
  }
}

void GeneralState::EraseVirtualContaining(const Interval& iv) {
  auto it = virtual_.upper_bound(iv.lo);
  if (it == virtual_.begin()) return;
  --it;
  if (cprime_compare(it->second.hi, iv.hi) >= 0) virtual_.erase(it);
}

void GeneralState::InsertVirtual(const Interval& v) {
  if (!virtual_.emplace(v.lo, v).second) {
    throw std::logic_error("virtual interval " + v.ToString() +
                           " collides with a stored key");
  }
}

std::optional<EndpointKey> GeneralState::UpdateAt(const Interval& iv,
                                                  const EndpointKey& p) {
  auto vit = virtual_.upper_bound(p);
  if (vit != virtual_.begin()) {
    --vit;
    if (cprime_compare(p, vit->second.hi) <= 0) {
      Interval trimmed = overlap(iv, vit->second);
      virtual_.erase(vit);
      InsertVirtual(trimmed);
      return trimmed.lo;
    }
  }
  // Members holding p form a run ending at the last one with lo <= p.
  auto ait = actual_.upper_bound(p);
  while (ait != actual_.begin()) {
    --ait;
    const Interval& other = ait->second;
    if (cprime_compare(other.hi, p) < 0) break;
    if (other.SameKeys(iv)) continue;
    Interval fresh = overlap(iv, other);
    InsertVirtual(fresh);
    return fresh.lo;
  }
  return std::nullopt;
}

void GeneralState::EvictAroundVirtual(const Interval& k) {
  auto it = actual_.lower_bound(k.lo);
  while (it != actual_.begin()) {
    auto prev = std::prev(it);
    if (cprime_compare(k.hi, prev->second.hi) >= 0) break;
    actual_.erase(prev);
  }
}

ArrivalOutcome GeneralState::process(const Interval& iv) {
  if (iv.is_virtual() || iv.id != arrivals_ || iv.lo.arrival != arrivals_ ||
      iv.hi.arrival != arrivals_ || iv.lo.side != Side::kLeft ||
      iv.hi.side != Side::kRight) {
    throw std::invalid_argument("arrival " + std::to_string(arrivals_) +
                                " got " + iv.ToString());
  }
  ++arrivals_;
  if (ContainsStored(actual_, iv) || ContainsStored(virtual_, iv)) {
    return ArrivalOutcome::kRejected;
  }
  actual_.emplace(iv.lo, iv);
  EraseActualContaining(iv);
  EraseVirtualContaining(iv);

  EndpointKey fresh[2];
  int num_fresh = 0;
  for (const EndpointKey* p : {&iv.lo, &iv.hi}) {
    if (auto key = UpdateAt(iv, *p)) fresh[num_fresh++] = *std::move(key);
  }
  // Only virtual intervals created in this round can sit strictly inside an
  // actual interval; older ones were checked when they appeared.
  for (int i = 0; i < num_fresh; ++i) {
    auto it = virtual_.find(fresh[i]);
    if (it != virtual_.end()) EvictAroundVirtual(it->second);
  }

  peak_actual_ = std::max(peak_actual_, actual_.size());
  peak_virtual_ = std::max(peak_virtual_, virtual_.size());
  return ArrivalOutcome::kAccepted;
}

std::vector<Interval> GeneralState::finalize() const {
  return offline_optimum(actual());
}

std::vector<Interval> GeneralState::actual() const {
  std::vector<Interval> out;
  out.reserve(actual_.size());
  for (const auto& [key, iv] : actual_) out.push_back(iv);
  return out;
}

std::vector<Interval> GeneralState::virtuals() const {
  std::vector<Interval> out;
  out.reserve(virtual_.size());
  for (const auto& [key, iv] : virtual_) out.push_back(iv);
  return out;
}

bool GeneralState::in_actual(const Interval& iv) const {
  auto it = actual_.find(iv.lo);
  return it != actual_.end() && it->second.SameKeys(iv);
}

}  // namespace intsel
