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

#include "intsel/proper.h"

#include <algorithm>
#include <iterator>
#include <set>
#include <string>
#include <utility>

#include "intsel/offline.h"

namespace intsel {

int compare(const Cut& a, const Cut& b) {
  if (int c = cut_compare(a.key, b.key); c != 0) return c;
  return (a.offset > b.offset) - (a.offset < b.offset);
}

int compare(const EndpointKey& p, const Cut& c) {
  if (int k = cut_compare(p, c.key); k != 0) return k;
  return -c.offset;
}

namespace {

std::string LowerBracket(const Cut& c) {
  const EndpointKey& k = c.key;
  bool open = k.side == Side::kLeft ? k.is_open() : !k.is_open();
  if ((k.side == Side::kLeft) != (c.offset < 0)) return "?";
  return open ? "(" : "[";
}

std::string UpperBracket(const Cut& c) {
  const EndpointKey& k = c.key;
  bool open = k.side == Side::kRight ? k.is_open() : !k.is_open();
  if ((k.side == Side::kRight) != (c.offset > 0)) return "?";
  return open ? ")" : "]";
}

Cut LoCut(const Interval& iv) { return Cut::Before(iv.lo); }
Cut HiCut(const Interval& iv) { return Cut::After(iv.hi); }

bool ProperlyNested(const Interval& outer, const Interval& inner) {
  return contains_as_sets(outer, inner) && !outer.SamePointSet(inner);
}

void UpdateLeft(Zone& zone, const Interval& iv) {
  if (!zone.left_rep || cut_compare(iv.lo, zone.left_rep->lo) < 0) {
    zone.left_rep = iv;
  }
}

void UpdateRight(Zone& zone, const Interval& iv) {
  if (!zone.right_rep || cut_compare(iv.hi, zone.right_rep->hi) > 0) {
    zone.right_rep = iv;
  }
}

}  // namespace

std::string Zone::ToString() const {
  std::string s = LowerBracket(lo) + lo.key.coord.ToString() + " " +
                  hi.key.coord.ToString() + UpperBracket(hi);
  s += fixed ? " fixed" : " flexible";
  s += " L=" + (left_rep ? left_rep->ToString() : std::string("-"));
  s += " R=" + (right_rep ? right_rep->ToString() : std::string("-"));
  return s;
}

ZoneTable ZoneTable::FromZones(std::span<const Zone> zones) {
  ZoneTable table;
  for (const Zone& z : zones) table.zones_.emplace(z.lo, z);
  for (const auto& [lo, z] : table.zones_) {
    if (!table.components_.empty() &&
        compare(std::prev(table.components_.end())->second, z.lo) == 0) {
      std::prev(table.components_.end())->second = z.hi;
    } else {
      table.components_.emplace(z.lo, z.hi);
    }
  }
  table.peak_zones_ = table.zones_.size();
  return table;
}

ZoneTable::ZoneMap::iterator ZoneTable::FindZone(const EndpointKey& p) {
  // Zones starting left of p start at or before the cut just before p.
  auto it = zones_.upper_bound(Cut::Before(p));
  if (it == zones_.begin()) return zones_.end();
  --it;
  return compare(p, it->second.hi) < 0 ? it : zones_.end();
}

ZoneTable::ComponentMap::iterator ZoneTable::ComponentOf(const Cut& lo) {
  return std::prev(components_.upper_bound(lo));
}

std::size_t ZoneTable::CountZonesInside(const Interval& iv) const {
  std::size_t count = 0;
  for (auto it = zones_.lower_bound(LoCut(iv));
       it != zones_.end() && compare(it->second.hi, HiCut(iv)) <= 0; ++it) {
    ++count;
  }
  return count;
}

void ZoneTable::CheckRecords(const Interval& iv, const Zone& zone) const {
  for (const auto* rep : {&zone.left_rep, &zone.right_rep}) {
    if (!rep->has_value()) continue;
    const Interval& r = **rep;
    if (ProperlyNested(iv, r) || ProperlyNested(r, iv)) {
      throw ProperViolation(iv.ToString() + " and " + r.ToString() +
                            " are properly nested");
    }
  }
}

ProperCase ZoneTable::process(const Interval& iv) {
  if (iv.is_virtual() || iv.id != arrivals_ || iv.lo.arrival != arrivals_ ||
      iv.hi.arrival != arrivals_) {
    throw std::invalid_argument("arrival " + std::to_string(arrivals_) +
                                " got " + iv.ToString());
  }
  ++arrivals_;
  const Cut lo = LoCut(iv);
  const Cut hi = HiCut(iv);
  auto zs = FindZone(iv.lo);
  auto ze = FindZone(iv.hi);
  ProperCase kind;

  if (zs == zones_.end() && ze == zones_.end()) {
    // Both ends uncovered: anything covered in between is a whole component
    // strictly inside the arrival.
    auto next = zones_.lower_bound(lo);
    if (next != zones_.end() && compare(next->second.lo, hi) < 0) {
      throw ProperViolation(iv.ToString() + " contains the zone " +
                            next->second.ToString());
    }
    Zone z{lo, hi, /*fixed=*/true, iv, iv};
    zones_.emplace(lo, z);
    components_.emplace(lo, hi);
    kind = ProperCase::kBothOut;
  } else if (zs != zones_.end() && ze != zones_.end()) {
    auto c1 = ComponentOf(zs->first);
    auto c2 = ComponentOf(ze->first);
    CheckRecords(iv, zs->second);
    CheckRecords(iv, ze->second);
    UpdateLeft(zs->second, iv);
    UpdateRight(ze->second, iv);
    if (c1 == c2) {
      kind = ProperCase::kSameComponent;
    } else {
      if (std::next(c1) != c2) {
        throw ProperViolation(iv.ToString() + " spans a whole component");
      }
      zs->second.fixed = true;
      ze->second.fixed = true;
      Zone z{c1->second, c2->first, /*fixed=*/true, std::nullopt,
             std::nullopt};
      // Flexible extremes strictly inside the arrival are absorbed.
      auto left_end = std::prev(zones_.lower_bound(c1->second));
      auto right_end = zones_.find(c2->first);
      if (left_end != zs && !left_end->second.fixed) {
        z.lo = left_end->second.lo;
        z.left_rep = left_end->second.left_rep;
        z.right_rep = left_end->second.right_rep;
        zones_.erase(left_end);
      }
      if (right_end != ze && !right_end->second.fixed) {
        z.hi = right_end->second.hi;
        if (!z.left_rep) z.left_rep = right_end->second.left_rep;
        if (right_end->second.right_rep) z.right_rep = right_end->second.right_rep;
        zones_.erase(right_end);
      }
      zones_.emplace(z.lo, z);
      Cut merged_hi = c2->second;
      components_.erase(c2);
      c1->second = merged_hi;
      kind = ProperCase::kBridge;
    }
  } else if (zs != zones_.end()) {
    // Left end covered, right end in the out-region past the component.
    auto c = ComponentOf(zs->first);
    auto after = std::next(c);
    if (after != components_.end() && compare(after->first, hi) < 0) {
      throw ProperViolation(iv.ToString() + " spans a whole component");
    }
    CheckRecords(iv, zs->second);
    UpdateLeft(zs->second, iv);
    zs->second.fixed = true;
    Zone z{c->second, hi, /*fixed=*/false, std::nullopt, iv};
    auto end_zone = std::prev(zones_.lower_bound(c->second));
    if (end_zone != zs && !end_zone->second.fixed) {
      z.lo = end_zone->second.lo;
      z.left_rep = end_zone->second.left_rep;
      zones_.erase(end_zone);
    }
    zones_.emplace(z.lo, z);
    c->second = hi;
    kind = ProperCase::kExtend;
  } else {
    // Mirror image: right end covered, left end before the component.
    auto c = ComponentOf(ze->first);
    if (c != components_.begin() && compare(std::prev(c)->second, lo) > 0) {
      throw ProperViolation(iv.ToString() + " spans a whole component");
    }
    CheckRecords(iv, ze->second);
    UpdateRight(ze->second, iv);
    ze->second.fixed = true;
    Zone z{lo, c->first, /*fixed=*/false, iv, std::nullopt};
    auto start_zone = zones_.find(c->first);
    if (start_zone != ze && !start_zone->second.fixed) {
      z.hi = start_zone->second.hi;
      z.right_rep = start_zone->second.right_rep;
      zones_.erase(start_zone);
    }
    Cut comp_hi = c->second;
    components_.erase(c);
    components_.emplace(lo, comp_hi);
    zones_.emplace(z.lo, z);
    kind = ProperCase::kExtend;
  }

  // On proper input no arrival covers three consecutive zones unless it
  // created the middle one by bridging, and copies of a bridging arrival
  // cover what it covers. Four zones inside is therefore proof of misuse.
  // (The tighter "one zone, two when bridging" does not hold in general.)
  if (std::size_t inside = CountZonesInside(iv); inside > 3) {
    throw ProperViolation(iv.ToString() + " contains " +
                          std::to_string(inside) + " zones");
  }
  peak_zones_ = std::max(peak_zones_, zones_.size());
  return kind;
}

std::vector<Zone> ZoneTable::zones() const {
  std::vector<Zone> out;
  out.reserve(zones_.size());
  for (const auto& [lo, z] : zones_) out.push_back(z);
  return out;
}

std::vector<Interval> ZoneTable::stored() const {
  std::set<uint64_t> ids;
  std::vector<Interval> out;
  for (const auto& [lo, z] : zones_) {
    for (const auto* rep : {&z.left_rep, &z.right_rep}) {
      if (rep->has_value() && ids.insert((*rep)->id).second) {
        out.push_back(**rep);
      }
    }
  }
  std::sort(out.begin(), out.end(), ByLo());
  return out;
}

ProperCase process_proper(ZoneTable& table, const Interval& iv) {
  return table.process(iv);
}

std::vector<Interval> finalize_proper(const ZoneTable& table) {
  return offline_optimum(table.stored());
}

ViolationReport zone_invariants(const ZoneTable& table,
                                std::span<const Interval> seen,
                                std::span<const ProperCase> case_log) {
  ViolationReport report;
  auto fail = [&](const char* rule, std::string detail) {
    report.push_back({rule, std::move(detail)});
  };
  const std::vector<Zone> zones = table.zones();

  // Inputs sorted by start with running maxima of their end cuts.
  std::vector<const Interval*> by_lo;
  for (const Interval& iv : seen) by_lo.push_back(&iv);
  std::sort(by_lo.begin(), by_lo.end(),
            [](const Interval* a, const Interval* b) {
              return cut_compare(a->lo, b->lo) < 0;
            });
  std::vector<Cut> max_hi;
  for (const Interval* iv : by_lo) {
    Cut h = HiCut(*iv);
    if (!max_hi.empty() && compare(max_hi.back(), h) > 0) h = max_hi.back();
    max_hi.push_back(h);
  }

  // Every zone lies inside some input. A zone made by a lone arrival
  // coincides with it, so containment is weak here.
  for (const Zone& z : zones) {
    auto end = std::partition_point(by_lo.begin(), by_lo.end(),
                                    [&](const Interval* iv) {
                                      return compare(LoCut(*iv), z.lo) <= 0;
                                    });
    std::size_t k = end - by_lo.begin();
    if (k == 0 || compare(max_hi[k - 1], z.hi) < 0) {
      fail("zone-inside-input", z.ToString());
    }
  }

  // Every input contains at most one zone, two if it bridged components.
  for (std::size_t i = 0; i < seen.size(); ++i) {
    const Interval& iv = seen[i];
    auto first = std::partition_point(zones.begin(), zones.end(),
                                      [&](const Zone& z) {
                                        return compare(z.lo, LoCut(iv)) < 0;
                                      });
    auto last = std::partition_point(zones.begin(), zones.end(),
                                     [&](const Zone& z) {
                                       return compare(z.hi, HiCut(iv)) <= 0;
                                     });
    std::ptrdiff_t inside = std::max<std::ptrdiff_t>(0, last - first);
    std::ptrdiff_t limit =
        i < case_log.size() && case_log[i] == ProperCase::kBridge ? 2 : 1;
    if (inside > limit) {
      fail("zones-per-input",
           iv.ToString() + " contains " + std::to_string(inside) + " zones");
    }
  }

  // Zones tile the support: merge intersecting inputs into components and
  // walk the zones alongside.
  std::vector<std::pair<Cut, Cut>> support;
  for (const Interval* iv : by_lo) {
    if (!support.empty() && compare(LoCut(*iv), support.back().second) < 0) {
      if (compare(HiCut(*iv), support.back().second) > 0) {
        support.back().second = HiCut(*iv);
      }
    } else {
      support.emplace_back(LoCut(*iv), HiCut(*iv));
    }
  }
  std::size_t zi = 0;
  bool tiled = true;
  for (const auto& [start, end] : support) {
    if (zi >= zones.size() || compare(zones[zi].lo, start) != 0) {
      tiled = false;
      break;
    }
    while (zi < zones.size() && compare(zones[zi].hi, end) < 0) {
      if (zi + 1 >= zones.size() ||
          compare(zones[zi].hi, zones[zi + 1].lo) != 0) {
        tiled = false;
        break;
      }
      ++zi;
    }
    if (!tiled || zi >= zones.size() || compare(zones[zi].hi, end) != 0) {
      tiled = false;
      break;
    }
    ++zi;
  }
  if (!tiled || zi != zones.size()) {
    fail("partition", std::to_string(zones.size()) + " zones over " +
                          std::to_string(support.size()) + " components");
  }

  for (const Zone& z : zones) {
    if (compare(z.lo, z.hi) >= 0) fail("zone-order", z.ToString());
  }

  std::size_t opt = offline_optimum_size(seen);
  if (zones.size() > 5 * opt + 4) {
    fail("zone-count", std::to_string(zones.size()) + " zones, optimum " +
                           std::to_string(opt));
  }
  return report;
}

}  // namespace intsel
