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

#ifndef INTSEL_PROPER_H_
#define INTSEL_PROPER_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "intsel/general.h"
#include "intsel/interval.h"

namespace intsel {

// Raised when the zone algorithm sees input that is not proper.
class ProperViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A boundary between points of the line. Every endpoint key (compared with
// cut_compare, so arrival order plays no role) is a point; the cuts just
// before and just after it bound zones. An interval with keys s and e covers
// the cuts from Before(s) to After(e).
struct Cut {
  EndpointKey key;
  int8_t offset = -1;  // -1: just before key, +1: just after key.

  static Cut Before(const EndpointKey& k) { return {k, -1}; }
  static Cut After(const EndpointKey& k) { return {k, +1}; }
};

int compare(const Cut& a, const Cut& b);
// Where point `p` lies relative to the cut: -1 left of it, +1 right of it.
int compare(const EndpointKey& p, const Cut& c);

struct CutLess {
  bool operator()(const Cut& a, const Cut& b) const { return compare(a, b) < 0; }
};

struct Zone {
  Cut lo;
  Cut hi;
  bool fixed = false;
  // Leftmost-starting input whose left endpoint lies in the zone, and
  // rightmost-ending input whose right endpoint lies in it.
  std::optional<Interval> left_rep;
  std::optional<Interval> right_rep;

  // Point-set notation such as "[0 1)".
  std::string ToString() const;
};

enum class ProperCase {
  kBothOut = 1,        // Fresh component made of one fixed zone.
  kSameComponent = 2,  // Only the records of the two endpoint zones change.
  kBridge = 3,         // The gap between two components becomes a fixed zone.
  kExtend = 4,         // A component grows by a flexible zone.
};

// One-pass 3/2-approximate selection for proper intervals.
//
// The covered part of the line is partitioned into zones. For each zone the
// table records the input with the leftmost left endpoint in it and the input
// with the rightmost right endpoint in it; the answer is a maximum disjoint
// subset of the records. Comparisons ignore arrival order, so inputs that
// are equal as point sets share keys and the later copies change nothing.
class ZoneTable {
 public:
  ZoneTable() = default;

  // Builds a table from arbitrary zones for diagnostics; components are the
  // runs of exactly abutting zones.
  static ZoneTable FromZones(std::span<const Zone> zones);

  // Requires arrival order as in GeneralState::process. Throws
  // ProperViolation when the input visibly breaks properness.
  ProperCase process(const Interval& iv);

  std::vector<Zone> zones() const;
  // Defined records, each input once, left to right.
  std::vector<Interval> stored() const;
  std::size_t zone_count() const { return zones_.size(); }
  std::size_t peak_zones() const { return peak_zones_; }
  uint64_t arrivals() const { return arrivals_; }

 private:
  using ZoneMap = std::map<Cut, Zone, CutLess>;
  using ComponentMap = std::map<Cut, Cut, CutLess>;

  ZoneMap::iterator FindZone(const EndpointKey& p);
  ComponentMap::iterator ComponentOf(const Cut& lo);
  // Zones inside [Before(s), After(e)].
  std::size_t CountZonesInside(const Interval& iv) const;
  void CheckRecords(const Interval& iv, const Zone& zone) const;

  ZoneMap zones_;          // keyed by lo
  ComponentMap components_;  // lo -> hi
  uint64_t arrivals_ = 0;
  std::size_t peak_zones_ = 0;
};

ProperCase process_proper(ZoneTable& table, const Interval& iv);
std::vector<Interval> finalize_proper(const ZoneTable& table);

// Checks the zone structure against the full prefix and its case labels:
// every zone lies inside some input, every input contains at most one zone
// (two for bridging arrivals), the zones tile the support of the prefix, and
// there are at most 5 |Opt| + 4 zones.
ViolationReport zone_invariants(const ZoneTable& table,
                                std::span<const Interval> seen,
                                std::span<const ProperCase> case_log);

}  // namespace intsel

#endif  // INTSEL_PROPER_H_
