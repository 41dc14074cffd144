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
#include <stdexcept>
#include <string>

#include "intsel/random.h"

namespace intsel {
namespace {

struct Segment {
  Rational lo;
  Rational hi;
};

// A child of a tree node: a stack (phase index) or a leaf auxiliary.
struct Child {
  bool leaf = false;
  std::size_t index = 0;
};

// Where every phase and auxiliary of a secret lives.
struct Layout {
  std::vector<Segment> stack;  // per phase
  std::vector<Segment> aux;    // per auxiliary, in stream order
  // Tree only: per phase, its two children and its σ_ℓ / σ_r.
  std::vector<Child> left, right;
  std::vector<Segment> sigma_l, sigma_r;
};

int MinN(GadgetKind kind) { return kind == GadgetKind::kUnit ? 2 : 3; }

Rational Lambda(const Segment& s, int n) {
  return (s.hi - s.lo) / (Rational(2 * n) - Rational(1, 2));
}

void CheckSecret(const GadgetSecret& secret) {
  if (secret.n < 2) throw std::invalid_argument("gadget needs n >= 2");
  if (secret.size < 1) throw std::invalid_argument("gadget size must be >= 1");
  if (secret.kind == GadgetKind::kTree && secret.size > 20) {
    throw std::invalid_argument("tree gadget depth too large");
  }
  const std::size_t phases = secret.kind == GadgetKind::kUnit
                                 ? static_cast<std::size_t>(secret.size)
                                 : (std::size_t{1} << secret.size) - 1;
  if (secret.pi.size() != phases || secret.index.size() != phases) {
    throw std::invalid_argument("secret has the wrong number of phases");
  }
  for (std::size_t t = 0; t < phases; ++t) {
    std::vector<int> sorted = secret.pi[t];
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> expected(secret.n);
    std::iota(expected.begin(), expected.end(), 1);
    if (sorted != expected) {
      throw std::invalid_argument("phase " + std::to_string(t + 1) +
                                  ": not a permutation of 1..n");
    }
    if (secret.index[t] < 1 || secret.index[t] > secret.n) {
      throw std::invalid_argument("phase " + std::to_string(t + 1) +
                                  ": index out of range");
    }
  }
}

Segment SigmaLeft(const Segment& s, int n, int i) {
  const Rational lambda = Lambda(s, n);
  return {s.lo + lambda * (Rational(i) - Rational(3, 2)),
          s.lo + lambda * Rational(i - 1)};
}

Segment SigmaRight(const Segment& s, int n, int i) {
  const Rational lambda = Lambda(s, n);
  return {s.lo + lambda * (Rational(i + n) - Rational(1, 2)),
          s.lo + lambda * Rational(i + n)};
}

// Deploys the subtree whose root is the next phase in pre-order.
// `choose` fills in the phase's choices when generating.
template <typename Choose>
Child DeployTree(const GadgetSecret& secret, int level, const Segment& seg,
                 Layout& layout, Choose& choose) {
  const std::size_t t = layout.stack.size();
  choose(t);
  layout.stack.push_back(seg);
  layout.left.emplace_back();
  layout.right.emplace_back();
  const int i = secret.index[t];
  const Segment l = SigmaLeft(seg, secret.n, i);
  const Segment r = SigmaRight(seg, secret.n, i);
  layout.sigma_l.push_back(l);
  layout.sigma_r.push_back(r);
  Child lc, rc;
  if (level + 1 == secret.size) {
    lc = {true, layout.aux.size()};
    layout.aux.push_back(l);
    rc = {true, layout.aux.size()};
    layout.aux.push_back(r);
  } else {
    lc = DeployTree(secret, level + 1, l, layout, choose);
    rc = DeployTree(secret, level + 1, r, layout, choose);
  }
  layout.left[t] = lc;
  layout.right[t] = rc;
  return {false, t};
}

Segment UnitStackSegment(int block, int n) {
  const Rational x(4 * block);
  return {x, x + Rational(2) - Rational(1, 2 * n)};
}

Segment UnitLeftAux(const Segment& s, int n, int i) {
  const Rational p = s.lo + Rational(i - 1, n);
  return {p - Rational(1), p};
}

Segment UnitRightAux(const Segment& s, int n, int i) {
  const Rational p = s.lo + (Rational(i) - Rational(1, 2)) / Rational(n);
  return {p + Rational(1), p + Rational(2)};
}

template <typename Choose>
Layout MakeLayout(GadgetSecret& secret, Choose choose) {
  Layout layout;
  if (secret.kind == GadgetKind::kUnit) {
    for (int b = 0; b < secret.size; ++b) {
      choose(static_cast<std::size_t>(b));
      const Segment s = UnitStackSegment(b, secret.n);
      layout.stack.push_back(s);
      layout.aux.push_back(UnitLeftAux(s, secret.n, secret.index[b]));
      layout.aux.push_back(UnitRightAux(s, secret.n, secret.index[b]));
    }
  } else {
    DeployTree(secret, 0, Segment{Rational(0), Rational(1)}, layout, choose);
  }
  return layout;
}

Layout LayoutOf(const GadgetSecret& secret) {
  CheckSecret(secret);
  GadgetSecret copy = secret;
  return MakeLayout(copy, [](std::size_t) {});
}

std::size_t StackStart(const GadgetSecret& secret, std::size_t t) {
  return secret.kind == GadgetKind::kUnit ? t * (secret.n + 2) : t * secret.n;
}

std::size_t AuxPosition(const GadgetSecret& secret, std::size_t a) {
  if (secret.kind == GadgetKind::kUnit) {
    return (a / 2) * (secret.n + 2) + secret.n + a % 2;
  }
  return secret.phases() * secret.n + a;
}

std::vector<Interval> Emit(const GadgetSecret& secret, const Layout& layout) {
  std::vector<Interval> stream;
  auto stack = [&](std::size_t t) {
    StackSpec spec{secret.n, secret.pi[t], layout.stack[t].lo,
                   layout.stack[t].hi};
    for (const Interval& iv : make_stack(spec, stream.size())) {
      stream.push_back(iv);
    }
  };
  auto aux = [&](std::size_t a) {
    stream.push_back(
        Interval::HalfOpen(layout.aux[a].lo, layout.aux[a].hi, stream.size()));
  };
  for (std::size_t t = 0; t < secret.phases(); ++t) {
    stack(t);
    if (secret.kind == GadgetKind::kUnit) {
      aux(2 * t);
      aux(2 * t + 1);
    }
  }
  if (secret.kind == GadgetKind::kTree) {
    for (std::size_t a = 0; a < layout.aux.size(); ++a) aux(a);
  }
  return stream;
}

Gadget Generate(GadgetKind kind, int size, int n, uint64_t seed) {
  Gadget g;
  g.secret.kind = kind;
  g.secret.n = n;
  g.secret.size = size;
  if (n < MinN(kind)) throw std::invalid_argument("gadget n too small");
  if (size < 1 || (kind == GadgetKind::kTree && size > 20)) {
    throw std::invalid_argument("gadget size out of range");
  }
  Rng rng(seed);
  GadgetSecret& secret = g.secret;
  Layout layout = MakeLayout(secret, [&](std::size_t t) {
    std::vector<int> pi(n);
    std::iota(pi.begin(), pi.end(), 1);
    rng.Shuffle(pi);
    secret.pi.resize(std::max(secret.pi.size(), t + 1));
    secret.index.resize(std::max(secret.index.size(), t + 1));
    secret.pi[t] = std::move(pi);
    // The tree's split guarantees compare the good interval with both of its
    // neighbours in the stack; with i = 1 or i = n a child segment sticks out
    // of the parent's segment and its subtree can reach the good interval
    // one level up. Tree phases therefore draw interior indices.
    secret.index[t] = kind == GadgetKind::kUnit
                          ? static_cast<int>(rng.Below(n)) + 1
                          : static_cast<int>(rng.Below(n - 2)) + 2;
  });
  g.stream = Emit(secret, layout);
  return g;
}

bool InsideSegment(const Interval& iv, const Segment& s) {
  return s.lo <= iv.lo.coord && iv.hi.coord <= s.hi;
}

std::string Where(std::size_t t, int j) {
  return "phase " + std::to_string(t + 1) + " J_" + std::to_string(j);
}

// Stream positions of everything assigned to the subtree below `c`.
void CollectSubtree(const GadgetSecret& secret, const Layout& layout,
                    const Child& c, std::vector<std::size_t>& out) {
  if (c.leaf) {
    out.push_back(AuxPosition(secret, c.index));
    return;
  }
  for (int j = 0; j < secret.n; ++j) {
    out.push_back(StackStart(secret, c.index) + j);
  }
  CollectSubtree(secret, layout, layout.left[c.index], out);
  CollectSubtree(secret, layout, layout.right[c.index], out);
}

void VerifyUnit(std::span<const Interval> stream, const GadgetSecret& secret,
                const Layout& layout, ViolationReport& report) {
  for (std::size_t t = 0; t < secret.phases(); ++t) {
    const std::size_t start = StackStart(secret, t);
    const Interval& l = stream[AuxPosition(secret, 2 * t)];
    const Interval& r = stream[AuxPosition(secret, 2 * t + 1)];
    for (int j = 1; j <= secret.n; ++j) {
      const Interval& iv = stream[start + j - 1];
      if (!InsideSegment(iv, layout.stack[t])) {
        report.push_back({"order", Where(t, j) + " outside its stack segment"});
      }
      const int hits = intersects(iv, l) + intersects(iv, r);
      if (j == secret.index[t] && hits != 0) {
        report.push_back({"good-auxiliary", Where(t, j) + " meets L or R"});
      }
      if (j != secret.index[t] && hits != 1) {
        report.push_back({"non-good-auxiliary",
                          Where(t, j) + " meets " + std::to_string(hits) +
                              " auxiliaries"});
      }
    }
  }
  for (const Interval& iv : stream) {
    if (iv.lo.is_open() || !iv.hi.is_open() ||
        iv.hi.coord - iv.lo.coord != Rational(1)) {
      report.push_back({"unit-length", iv.ToString()});
    }
  }
  // Blocks must not interact.
  const std::size_t width = secret.n + 2;
  for (std::size_t t = 0; t + 1 < secret.phases(); ++t) {
    for (std::size_t a = t * width; a < (t + 1) * width; ++a) {
      for (std::size_t b = (t + 1) * width; b < (t + 2) * width; ++b) {
        if (intersects(stream[a], stream[b])) {
          report.push_back({"block-separation",
                            stream[a].ToString() + " meets " +
                                stream[b].ToString()});
        }
      }
    }
  }
}

void VerifyTree(std::span<const Interval> stream, const GadgetSecret& secret,
                const Layout& layout, ViolationReport& report) {
  for (std::size_t t = 0; t < secret.phases(); ++t) {
    const std::size_t start = StackStart(secret, t);
    const int i = secret.index[t];
    auto j_at = [&](int j) -> const Interval& { return stream[start + j - 1]; };
    for (int j = 1; j <= secret.n; ++j) {
      if (!InsideSegment(j_at(j), layout.stack[t])) {
        report.push_back({"order", Where(t, j) + " outside its stack segment"});
      }
    }
    const Segment& l = layout.sigma_l[t];
    const Segment& r = layout.sigma_r[t];
    const Interval& good = j_at(i);
    auto chain = [&](bool ok, const std::string& what) {
      if (!ok) report.push_back({"chain", "phase " + std::to_string(t + 1) +
                                              ": " + what});
    };
    if (i > 1) chain(j_at(i - 1).lo.coord <= l.lo, "left(J_{i-1}) > left(σ_ℓ)");
    chain(l.lo < l.hi && l.hi <= good.lo.coord, "right(σ_ℓ) > left(J_i)");
    chain(good.hi.coord <= r.lo && r.lo < r.hi, "right(J_i) > left(σ_r)");
    if (i < secret.n) {
      chain(r.hi <= j_at(i + 1).hi.coord, "right(σ_r) > right(J_{i+1})");
    }
    std::vector<std::size_t> below_left, below_right;
    CollectSubtree(secret, layout, layout.left[t], below_left);
    CollectSubtree(secret, layout, layout.right[t], below_right);
    for (const auto* below : {&below_left, &below_right}) {
      for (std::size_t p : *below) {
        if (intersects(good, stream[p])) {
          report.push_back({"good-descendant", Where(t, i) + " meets " +
                                                   stream[p].ToString()});
        }
      }
    }
    auto covers = [&](int j, const std::vector<std::size_t>& below) {
      for (std::size_t p : below) {
        if (!contains_as_sets(j_at(j), stream[p])) {
          report.push_back({"split-containment",
                            Where(t, j) + " misses " + stream[p].ToString()});
        }
      }
    };
    if (i > 1) covers(i - 1, below_left);
    if (i < secret.n) covers(i + 1, below_right);
  }
  const std::size_t first_aux = AuxPosition(secret, 0);
  for (std::size_t a = first_aux; a < stream.size(); ++a) {
    for (std::size_t b = a + 1; b < stream.size(); ++b) {
      if (intersects(stream[a], stream[b])) {
        report.push_back({"auxiliary-disjoint", stream[a].ToString() +
                                                    " meets " +
                                                    stream[b].ToString()});
      }
    }
  }
}

}  // namespace

Rational StackSpec::lambda() const { return Lambda({x, y}, n); }

Rational StackSpec::epsilon() const { return lambda() / Rational(2 * n); }

std::vector<Interval> make_stack(const StackSpec& spec,
                                 uint64_t first_arrival) {
  if (spec.n < 1 || spec.pi.size() != static_cast<std::size_t>(spec.n)) {
    throw std::invalid_argument("stack permutation has the wrong size");
  }
  std::vector<bool> seen(spec.n + 1, false);
  for (int v : spec.pi) {
    if (v < 1 || v > spec.n || seen[v]) {
      throw std::invalid_argument("stack pi is not a permutation");
    }
    seen[v] = true;
  }
  if (!(spec.x < spec.y)) throw std::invalid_argument("stack needs x < y");
  const Rational lambda = spec.lambda();
  const Rational epsilon = spec.epsilon();
  const Rational length = lambda * Rational(spec.n);
  std::vector<Interval> out;
  out.reserve(spec.n);
  for (int i = 1; i <= spec.n; ++i) {
    Rational left = spec.x + lambda * Rational(i - 1) +
                    epsilon * Rational(spec.pi[i - 1]);
    out.push_back(Interval::HalfOpen(left, left + length, first_arrival + i - 1));
  }
  return out;
}

Gadget gen_unit_gadget(int blocks, int n, uint64_t seed) {
  return Generate(GadgetKind::kUnit, blocks, n, seed);
}

Gadget gen_tree_gadget(int depth, int n, uint64_t seed) {
  return Generate(GadgetKind::kTree, depth, n, seed);
}

std::vector<Interval> build_gadget(const GadgetSecret& secret) {
  return Emit(secret, LayoutOf(secret));
}

std::vector<std::size_t> good_positions(const GadgetSecret& secret) {
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < secret.phases(); ++t) {
    out.push_back(StackStart(secret, t) + secret.index[t] - 1);
  }
  return out;
}

ViolationReport verify_gadget(std::span<const Interval> stream,
                              const GadgetSecret& secret) {
  ViolationReport report;
  Layout layout;
  try {
    layout = LayoutOf(secret);
  } catch (const std::invalid_argument& e) {
    report.push_back({"secret", e.what()});
    return report;
  }
  const std::vector<Interval> expected = Emit(secret, layout);
  if (stream.size() != expected.size()) {
    report.push_back({"size", "expected " + std::to_string(expected.size()) +
                                  " intervals, got " +
                                  std::to_string(stream.size())});
    return report;
  }
  for (std::size_t p = 0; p < stream.size(); ++p) {
    if (!stream[p].SamePointSet(expected[p])) {
      report.push_back({"mismatch", "position " + std::to_string(p) + ": " +
                                        stream[p].ToString() + " vs " +
                                        expected[p].ToString()});
    }
  }
  if (secret.kind == GadgetKind::kUnit) {
    VerifyUnit(stream, secret, layout, report);
  } else {
    VerifyTree(stream, secret, layout, report);
  }
  return report;
}

std::vector<std::optional<int>> decode_gadget(std::span<const Interval> stream,
                                              const GadgetSecret& secret) {
  const Layout layout = LayoutOf(secret);
  std::vector<std::optional<int>> out;
  const auto goods = good_positions(secret);
  for (std::size_t t = 0; t < secret.phases(); ++t) {
    out.emplace_back();
    if (goods[t] >= stream.size()) continue;
    const Segment& s = layout.stack[t];
    const Rational lambda = Lambda(s, secret.n);
    const Rational epsilon = lambda / Rational(2 * secret.n);
    const Rational value =
        (stream[goods[t]].lo.coord - s.lo -
         lambda * Rational(secret.index[t] - 1)) / epsilon;
    for (int k = 1; k <= secret.n; ++k) {
      if (value == Rational(k)) out.back() = k;
    }
  }
  return out;
}

std::size_t gadget_planted_size(const GadgetSecret& secret) {
  return secret.kind == GadgetKind::kUnit ? 3 * secret.phases()
                                          : 2 * secret.phases() + 1;
}

std::optional<GadgetKind> ParseGadgetKind(std::string_view name) {
  if (name == "unit-gadget") return GadgetKind::kUnit;
  if (name == "tree-gadget") return GadgetKind::kTree;
  return std::nullopt;
}

std::string_view ToString(GadgetKind kind) {
  return kind == GadgetKind::kUnit ? "unit-gadget" : "tree-gadget";
}

}  // namespace intsel
