// Copyright 2026 The gridham Authors
//
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

// Rectangular grid graphs: the forbidden endpoint configurations, the
// acceptability predicate, the boustrophedon Hamiltonian cycle and the
// strip/split path constructor.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "gridham/grid.hpp"
#include "gridham/oracle.hpp"
#include "gridham/validate.hpp"

namespace gridham {

/// One of the eight symmetries of an m x n rectangle.
struct Isometry {
  bool transpose = false;
  bool flip_x = false;  // applied after the transpose
  bool flip_y = false;

  RectShape image(const RectShape& r) const {
    return transpose ? RectShape(r.n, r.m) : r;
  }

  Coord apply(const RectShape& r, Coord v) const {
    const RectShape img = image(r);
    Coord c = transpose ? Coord{v.y, v.x} : v;
    if (flip_x) c.x = img.m + 1 - c.x;
    if (flip_y) c.y = img.n + 1 - c.y;
    return c;
  }

  static std::array<Isometry, 8> all() {
    std::array<Isometry, 8> out{};
    for (int i = 0; i < 8; ++i) out[i] = Isometry{(i & 4) != 0, (i & 1) != 0, (i & 2) != 0};
    return out;
  }
};

inline bool is_corner(const RectShape& r, Coord v) {
  return (v.x == 1 || v.x == r.m) && (v.y == 1 || v.y == r.n);
}

/// 1-rectangle with an endpoint that is not an end of the path graph.
inline bool cond_f1(const RectShape& r, Coord s, Coord t) {
  if (std::min(r.m, r.n) != 1) return false;
  return !is_corner(r, s) || !is_corner(r, t);
}

/// 2-rectangle where (s,t) is a rung strictly between the two end rungs.
inline bool cond_f2(const RectShape& r, Coord s, Coord t) {
  if (std::min(r.m, r.n) != 2 || !adjacent(s, t)) return false;
  if (r.n == 2 && s.x == t.x && s.x > 1 && s.x < r.m) return true;
  if (r.m == 2 && s.y == t.y && s.y > 1 && s.y < r.n) return true;
  return false;
}

namespace detail {

// The forbidden pattern in canonical orientation: R(m',3), m' even, a black
// s' and a white t'.
inline bool f3_canonical(Coord sp, Coord tp) {
  if (color_of(sp) != Color::Black || color_of(tp) != Color::White) return false;
  if (sp.y == 2) return sp.x < tp.x;
  return sp.x < tp.x - 1;
}

}  // namespace detail

/// Existential over all symmetries and both endpoint orders; colors are
/// recomputed in the canonical frame.
inline bool cond_f3(const RectShape& r, Coord s, Coord t) {
  for (const Isometry& g : Isometry::all()) {
    const RectShape img = g.image(r);
    if (img.n != 3 || img.m % 2 != 0) continue;
    const Coord a = g.apply(r, s);
    const Coord b = g.apply(r, t);
    if (detail::f3_canonical(a, b) || detail::f3_canonical(b, a)) return true;
  }
  return false;
}

/// The condition that makes a rectangle problem unacceptable, if any.
enum class RectObstruction { None, ColorIncompatible, F1, F2, F3 };

inline const char* to_string(RectObstruction o) {
  switch (o) {
    case RectObstruction::None: return "none";
    case RectObstruction::ColorIncompatible: return "color-incompatible";
    case RectObstruction::F1: return "F1";
    case RectObstruction::F2: return "F2";
    case RectObstruction::F3: return "F3";
  }
  return "?";
}

inline RectObstruction rect_obstruction(const RectShape& r, Coord s, Coord t) {
  if (!color_compatible(r, s, t)) return RectObstruction::ColorIncompatible;
  if (cond_f1(r, s, t)) return RectObstruction::F1;
  if (cond_f2(r, s, t)) return RectObstruction::F2;
  if (cond_f3(r, s, t)) return RectObstruction::F3;
  return RectObstruction::None;
}

inline bool rect_acceptable(const RectShape& r, Coord s, Coord t) {
  if (s == t) return false;
  return rect_obstruction(r, s, t) == RectObstruction::None;
}

/// Acceptability of a sub-rectangle problem, evaluated in local coordinates.
inline bool region_acceptable(const Region& g, Coord s, Coord t) {
  if (!g.contains(s) || !g.contains(t)) return false;
  if (s == t) return g.size() == 1;
  return rect_acceptable(g.local_shape(), g.to_local(s), g.to_local(t));
}


// ---------------------------------------------------------------------------
// Construction

enum class Side { Left, Right, Bottom, Top };

inline const char* to_string(Side s) {
  switch (s) {
    case Side::Left: return "left";
    case Side::Right: return "right";
    case Side::Bottom: return "bottom";
    case Side::Top: return "top";
  }
  return "?";
}

/// Lemma-1 style Hamiltonian cycle of an even-sized rectangle: up column 1,
/// boustrophedon through columns 2..m over rows 2..n, back along row 1. When
/// m is odd (so n is even) the same pattern is used with the axes swapped.
inline Cycle rect_ham_cycle(const RectShape& r) {
  if ((static_cast<std::int64_t>(r.m) * r.n) % 2 != 0) {
    throw GridError(ErrorKind::OddSized, "R(" + std::to_string(r.m) + "," +
                                             std::to_string(r.n) + ") is odd-sized");
  }
  if (r.m < 2 || r.n < 2) {
    throw GridError(ErrorKind::DegenerateDimension, "both dimensions must be > 1");
  }
  Cycle c;
  c.order.reserve(static_cast<std::size_t>(r.m) * r.n);
  if (r.m % 2 == 0) {
    for (int y = 1; y <= r.n; ++y) c.order.push_back({1, y});
    for (int x = 2; x <= r.m; ++x) {
      if (x % 2 == 0) {
        for (int y = r.n; y >= 2; --y) c.order.push_back({x, y});
      } else {
        for (int y = 2; y <= r.n; ++y) c.order.push_back({x, y});
      }
    }
    for (int x = r.m; x >= 2; --x) c.order.push_back({x, 1});
  } else {
    for (int x = 1; x <= r.m; ++x) c.order.push_back({x, 1});
    for (int y = 2; y <= r.n; ++y) {
      if (y % 2 == 0) {
        for (int x = r.m; x >= 2; --x) c.order.push_back({x, y});
      } else {
        for (int x = 2; x <= r.m; ++x) c.order.push_back({x, y});
      }
    }
    for (int y = r.n; y >= 2; --y) c.order.push_back({1, y});
  }
  return c;
}

struct StripChoice {
  Region strip;
  Region rest;
  Side side;
};

struct SplitChoice {
  Region first;   // contains s and p
  Region second;  // contains q and t
  Coord p;
  Coord q;
};

namespace detail {

inline constexpr std::int64_t kLeafVertices = 30;

/// Successor-array path under construction. Strip merges and split joins
/// only rewrite a constant number of entries, which keeps the whole
/// construction linear in the vertex count.
class PathWriter {
 public:
  explicit PathWriter(const RectShape& box) : index_(box), next_(index_.size(), -1) {}

  void link(Coord a, Coord b) { next_[index_(a)] = index_(b); }
  void terminate(Coord t) { next_[index_(t)] = -1; }
  bool linked(Coord a, Coord b) const { return next_[index_(a)] == index_(b); }

  void write(const std::vector<Coord>& seq) {
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) link(seq[i], seq[i + 1]);
    if (!seq.empty()) terminate(seq.back());
  }

  Path extract(Coord s, std::int64_t limit) const {
    Path out;
    out.reserve(static_cast<std::size_t>(limit));
    std::int32_t cur = index_(s);
    while (cur >= 0 && static_cast<std::int64_t>(out.size()) <= limit) {
      out.push_back(index_.at(cur));
      cur = next_[cur];
    }
    return out;
  }

 private:
  BoxIndex index_;
  std::vector<std::int32_t> next_;
};

inline std::optional<Side> facing_side(const Region& band, const Region& rest) {
  if (band.x1() + 1 == rest.x0) return Side::Right;
  if (rest.x1() + 1 == band.x0) return Side::Left;
  if (band.y1() + 1 == rest.y0) return Side::Top;
  if (rest.y1() + 1 == band.y0) return Side::Bottom;
  return std::nullopt;
}

/// Cycle of an even-sized region in which every consecutive pair along the
/// given side is a cycle edge.
inline std::vector<Coord> band_cycle(const Region& band, Side side) {
  const bool across = side == Side::Bottom || side == Side::Top;
  const RectShape canon = across ? RectShape(band.n, band.m) : RectShape(band.m, band.n);
  // In the canonical frame the requested side is column 1, which both cycle
  // patterns traverse in full.
  std::vector<Coord> order = rect_ham_cycle(canon).order;
  for (Coord& c : order) {
    switch (side) {
      case Side::Left: c = {band.x0 + c.x - 1, band.y0 + c.y - 1}; break;
      case Side::Right: c = {band.x1() - (c.x - 1), band.y0 + c.y - 1}; break;
      case Side::Bottom: c = {band.x0 + c.y - 1, band.y0 + c.x - 1}; break;
      case Side::Top: c = {band.x0 + c.y - 1, band.y1() - (c.x - 1)}; break;
    }
  }
  return order;
}

/// Hamiltonian path of the band from d to e, where (d,e) is an edge of the
/// band's cycle.
inline std::vector<Coord> open_cycle(const std::vector<Coord>& order, Coord d, Coord e) {
  const std::size_t k = order.size();
  std::size_t di = k;
  for (std::size_t i = 0; i < k; ++i) {
    if (order[i] == d) {
      di = i;
      break;
    }
  }
  std::vector<Coord> out;
  if (di == k) return out;
  out.reserve(k);
  if (order[(di + 1) % k] == e) {
    for (std::size_t i = 0; i < k; ++i) out.push_back(order[(di + k - i) % k]);
  } else if (order[(di + k - 1) % k] == e) {
    for (std::size_t i = 0; i < k; ++i) out.push_back(order[(di + i) % k]);
  } else {
    out.clear();
  }
  return out;
}

/// Splices the cycle of `band` into the path already written over a region
/// that contains `facing` (the part of the rest adjacent to the band).
/// Returns false when no path edge lies on the shared boundary.
inline bool merge_band(PathWriter& w, const Region& band, const Region& facing) {
  const auto side = facing_side(band, facing);
  if (!side) return false;
  const bool vertical = *side == Side::Left || *side == Side::Right;
  const int lo = vertical ? std::max(band.y0, facing.y0) : std::max(band.x0, facing.x0);
  const int hi = vertical ? std::min(band.y1(), facing.y1()) : std::min(band.x1(), facing.x1());
  const int rest_line = *side == Side::Right ? facing.x0
                        : *side == Side::Left ? facing.x1()
                        : *side == Side::Top  ? facing.y0
                                              : facing.y1();
  const int band_line = *side == Side::Right ? band.x1()
                        : *side == Side::Left ? band.x0
                        : *side == Side::Top  ? band.y1()
                                              : band.y0;
  auto at = [vertical](int line, int pos) {
    return vertical ? Coord{line, pos} : Coord{pos, line};
  };
  for (int pos = lo; pos < hi; ++pos) {
    Coord a = at(rest_line, pos);
    Coord b = at(rest_line, pos + 1);
    if (w.linked(b, a)) std::swap(a, b);
    if (!w.linked(a, b)) continue;
    const Coord d = at(band_line, vertical ? a.y : a.x);
    const Coord e = at(band_line, vertical ? b.y : b.x);
    const std::vector<Coord> tour = open_cycle(band_cycle(band, *side), d, e);
    if (tour.empty()) return false;
    w.link(a, d);
    for (std::size_t i = 0; i + 1 < tour.size(); ++i) w.link(tour[i], tour[i + 1]);
    w.link(e, b);
    return true;
  }
  return false;
}

inline Region peel(const Region& r, Side side, int width, Region* rest) {
  switch (side) {
    case Side::Left:
      *rest = Region{r.x0 + width, r.y0, r.m - width, r.n};
      return Region{r.x0, r.y0, width, r.n};
    case Side::Right:
      *rest = Region{r.x0, r.y0, r.m - width, r.n};
      return Region{r.x1() - width + 1, r.y0, width, r.n};
    case Side::Bottom:
      *rest = Region{r.x0, r.y0 + width, r.m, r.n - width};
      return Region{r.x0, r.y0, r.m, width};
    case Side::Top:
      *rest = Region{r.x0, r.y0, r.m, r.n - width};
      return Region{r.x0, r.y1() - width + 1, r.m, width};
  }
  return r;
}

// A strip of width 2 on `side` qualifies when the band has a cycle, the
// remainder is acceptable, and the remainder's path is guaranteed an edge
// on the shared boundary (fails only for a length-2 boundary holding both
// endpoints).
inline std::optional<StripChoice> strip_on(const Region& r, Side side, Coord s, Coord t) {
  const bool vertical = side == Side::Left || side == Side::Right;
  const int depth = vertical ? r.m : r.n;
  const int length = vertical ? r.n : r.m;
  if (depth < 3 || length < 2) return std::nullopt;
  Region rest;
  const Region band = peel(r, side, 2, &rest);
  if (band.contains(s) || band.contains(t)) return std::nullopt;
  if (!region_acceptable(rest, s, t)) return std::nullopt;
  if (length == 2) {
    const int line = side == Side::Left    ? rest.x0
                     : side == Side::Right ? rest.x1()
                     : side == Side::Bottom ? rest.y0
                                            : rest.y1();
    auto on_line = [&](Coord v) { return (vertical ? v.x : v.y) == line; };
    if (on_line(s) && on_line(t)) return std::nullopt;
  }
  return StripChoice{band, rest, side};
}

inline std::optional<StripChoice> choose_strip(const Region& r, Coord s, Coord t) {
  struct Gap {
    Side side;
    int gap;
  };
  std::array<Gap, 4> gaps{{
      {Side::Left, std::min(s.x, t.x) - r.x0},
      {Side::Right, r.x1() - std::max(s.x, t.x)},
      {Side::Bottom, std::min(s.y, t.y) - r.y0},
      {Side::Top, r.y1() - std::max(s.y, t.y)},
  }};
  std::stable_sort(gaps.begin(), gaps.end(), [](const Gap& a, const Gap& b) { return a.gap > b.gap; });
  for (const Gap& g : gaps) {
    if (g.gap < 2) break;
    if (auto st = strip_on(r, g.side, s, t)) return st;
  }
  return std::nullopt;
}

inline bool piece_ok(const Region& g, Coord a, Coord b) { return region_acceptable(g, a, b); }

// Cuts strictly between s and t, nearest to s first; per cut, crossing
// edges bottom-to-top (or left-to-right).
inline std::optional<SplitChoice> choose_split(const Region& r, Coord s, Coord t) {
  if (s.x != t.x) {
    const int dir = s.x < t.x ? 1 : -1;
    for (int c = s.x; c != t.x; c += dir) {
      // Columns up to c (in the direction of s) form the first part.
      const Region first = dir > 0 ? Region{r.x0, r.y0, c - r.x0 + 1, r.n}
                                   : Region{c, r.y0, r.x1() - c + 1, r.n};
      const Region second = dir > 0 ? Region{c + 1, r.y0, r.x1() - c, r.n}
                                    : Region{r.x0, r.y0, c - r.x0, r.n};
      for (int y = r.y0; y <= r.y1(); ++y) {
        const Coord p{c, y};
        const Coord q{c + dir, y};
        if (piece_ok(first, s, p) && piece_ok(second, q, t)) return SplitChoice{first, second, p, q};
      }
    }
  }
  if (s.y != t.y) {
    const int dir = s.y < t.y ? 1 : -1;
    for (int c = s.y; c != t.y; c += dir) {
      const Region first = dir > 0 ? Region{r.x0, r.y0, r.m, c - r.y0 + 1}
                                   : Region{r.x0, c, r.m, r.y1() - c + 1};
      const Region second = dir > 0 ? Region{r.x0, c + 1, r.m, r.y1() - c}
                                    : Region{r.x0, r.y0, r.m, c - r.y0};
      for (int x = r.x0; x <= r.x1(); ++x) {
        const Coord p{x, c};
        const Coord q{x, c + dir};
        if (piece_ok(first, s, p) && piece_ok(second, q, t)) return SplitChoice{first, second, p, q};
      }
    }
  }
  return std::nullopt;
}

inline void write_line(PathWriter& w, const Region& r, Coord s, Coord t) {
  const int dx = t.x > s.x ? 1 : (t.x < s.x ? -1 : 0);
  const int dy = t.y > s.y ? 1 : (t.y < s.y ? -1 : 0);
  Coord cur = s;
  while (cur != t) {
    const Coord nxt{cur.x + dx, cur.y + dy};
    w.link(cur, nxt);
    cur = nxt;
  }
  w.terminate(t);
  (void)r;
}

inline void solve_leaf(PathWriter& w, const Region& r, Coord s, Coord t) {
  SearchBudget budget;
  budget.max_vertices = kLeafVertices;
  budget.max_expansions = 50'000'000;
  HamSearch search(r.local_shape(), std::vector<char>(static_cast<std::size_t>(r.size()), 1), budget);
  OracleVerdict v = search.run(r.to_local(s), r.to_local(t));
  if (!v.exists()) {
    throw GridError(ErrorKind::DecompositionExhausted,
                    "leaf search found no path in an acceptable rectangle");
  }
  for (Coord& c : v.path) c = r.to_global(c);
  w.write(v.path);
}

/// Writes a Hamiltonian s-t path of region r into w. Requires
/// region_acceptable(r, s, t).
inline void solve_region(PathWriter& w, Region r, Coord s, Coord t) {
  std::vector<StripChoice> strips;
  for (;;) {
    if (s == t) {
      w.terminate(t);
      break;
    }
    if (r.m == 1 || r.n == 1) {
      write_line(w, r, s, t);
      break;
    }
    if (r.size() <= kLeafVertices) {
      solve_leaf(w, r, s, t);
      break;
    }
    if (auto st = choose_strip(r, s, t)) {
      strips.push_back(*st);
      r = st->rest;
      continue;
    }
    if (auto sp = choose_split(r, s, t)) {
      solve_region(w, sp->first, s, sp->p);
      w.link(sp->p, sp->q);
      r = sp->second;
      s = sp->q;
      continue;
    }
    throw GridError(ErrorKind::DecompositionExhausted,
                    "no strip or split for an acceptable rectangle");
  }
  for (auto it = strips.rbegin(); it != strips.rend(); ++it) {
    if (!merge_band(w, it->strip, it->rest)) {
      throw GridError(ErrorKind::NoFacingEdge, "strip has no facing path edge");
    }
  }
}

inline void require_acceptable(const RectShape& r, Coord s, Coord t) {
  if (!contains(r, s) || !contains(r, t)) {
    throw GridError(ErrorKind::OutsideShape, "endpoint outside rectangle");
  }
  if (s == t) throw GridError(ErrorKind::SameEndpoints, "s and t must differ");
  const RectObstruction o = rect_obstruction(r, s, t);
  if (o != RectObstruction::None) {
    throw GridError(ErrorKind::NotAcceptable, std::string("rectangle problem violates ") + to_string(o));
  }
}

}  // namespace detail

/// First 2-wide band, tried from the side with the most room beyond both
/// endpoints, whose removal leaves an acceptable rectangle.
inline std::optional<StripChoice> find_strip(const RectShape& r, Coord s, Coord t) {
  detail::require_acceptable(r, s, t);
  return detail::choose_strip(Region{1, 1, r.m, r.n}, s, t);
}

/// Lines are a base case of the construction and are never split.
inline std::optional<SplitChoice> split_rect(const RectShape& r, Coord s, Coord t) {
  detail::require_acceptable(r, s, t);
  if (r.m == 1 || r.n == 1) return std::nullopt;
  return detail::choose_split(Region{1, 1, r.m, r.n}, s, t);
}

inline Path rect_ham_path(const RectShape& r, Coord s, Coord t) {
  detail::require_acceptable(r, s, t);
  detail::PathWriter w(r);
  detail::solve_region(w, Region{1, 1, r.m, r.n}, s, t);
  return w.extract(s, static_cast<std::int64_t>(r.m) * r.n);
}

/// Reroutes h through c across a pair of facing edges: a -> d -> (around c)
/// -> e -> b, where (a,b) is consecutive in h and (d,e) consecutive in c.
inline Path merge_path_with_cycle(const Path& h, const Cycle& c, const Shape& shape) {
  const RectShape box = bounding_rect(shape);
  const BoxIndex index(box);
  std::vector<std::int32_t> pos(index.size(), -1);
  for (std::size_t i = 0; i < c.order.size(); ++i) {
    if (!contains(shape, c.order[i])) {
      throw GridError(ErrorKind::OutsideShape, "cycle vertex outside shape");
    }
    pos[index(c.order[i])] = static_cast<std::int32_t>(i);
  }
  for (Coord v : h) {
    if (!contains(shape, v)) throw GridError(ErrorKind::OutsideShape, "path vertex outside shape");
    if (pos[index(v)] >= 0) {
      throw GridError(ErrorKind::InvalidPath, "path and cycle share vertex " + to_string(v));
    }
  }
  const std::size_t k = c.order.size();
  for (std::size_t i = 0; k >= 2 && i + 1 < h.size(); ++i) {
    const Coord a = h[i];
    const Coord b = h[i + 1];
    for (Coord step : kSteps) {
      const Coord d{a.x + step.x, a.y + step.y};
      if (!contains(box, d) || pos[index(d)] < 0) continue;
      const std::size_t di = static_cast<std::size_t>(pos[index(d)]);
      for (std::size_t e_idx : {(di + 1) % k, (di + k - 1) % k}) {
        if (!adjacent(c.order[e_idx], b)) continue;
        std::vector<Coord> tour = detail::open_cycle(c.order, d, c.order[e_idx]);
        if (tour.empty()) continue;
        Path out;
        out.reserve(h.size() + k);
        out.insert(out.end(), h.begin(), h.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        out.insert(out.end(), tour.begin(), tour.end());
        out.insert(out.end(), h.begin() + static_cast<std::ptrdiff_t>(i) + 1, h.end());
        return out;
      }
    }
  }
  throw GridError(ErrorKind::NoFacingEdge, "no path edge faces a cycle edge");
}

}  // namespace gridham
