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

// L- and C-alphabet grid graphs: separations, the acceptability predicates
// and the path constructor.
//
// The constructor treats an alphabet shape as a chain of rectangles
// (upper stroke, corner, foot for L; top arm, top corner, middle, bottom
// corner, bottom arm for C). Consecutive pieces may be regrouped into
// larger rectangles, an end group without endpoints is stripped and its
// cycle merged back, and endpoints in different groups are joined across a
// connector edge. Rectangle leaves go to the rectangle solver.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gridham/grid.hpp"
#include "gridham/oracle.hpp"
#include "gridham/rect.hpp"
#include "gridham/validate.hpp"

namespace gridham {

struct SeparationPart {
  std::string name;
  std::vector<Region> rects;  // one rectangle, or the stroke and foot of an L part

  std::int64_t size() const {
    std::int64_t total = 0;
    for (const Region& r : rects) total += r.size();
    return total;
  }
  bool contains(Coord v) const {
    for (const Region& r : rects) {
      if (r.contains(v)) return true;
    }
    return false;
  }
};

struct Separation {
  std::vector<SeparationPart> parts;
  std::vector<std::pair<Coord, Coord>> connectors;
};

inline Region l_stroke(int m, int n) { return Region{1, 1, m, 5 * n - 4}; }
inline Region l_foot(int m, int n) { return Region{m + 1, 1, 2 * m - 2, n}; }
inline Region c_top_arm(int m, int n) { return Region{m + 1, 4 * n - 3, 2 * m - 2, n}; }

inline Separation l_separation(const LShape& l) {
  Separation sep;
  sep.parts.push_back({"stroke", {l_stroke(l.m, l.n)}});
  sep.parts.push_back({"foot", {l_foot(l.m, l.n)}});
  for (int y = 1; y <= l.n; ++y) sep.connectors.push_back({{l.m, y}, {l.m + 1, y}});
  return sep;
}

inline Separation c_separation(const CShape& c) {
  Separation sep;
  sep.parts.push_back({"lower L", {l_stroke(c.m, c.n), l_foot(c.m, c.n)}});
  sep.parts.push_back({"top arm", {c_top_arm(c.m, c.n)}});
  for (int y = 4 * c.n - 3; y <= 5 * c.n - 4; ++y) {
    sep.connectors.push_back({{c.m, y}, {c.m + 1, y}});
  }
  return sep;
}

/// Which acceptability clause the C predicate uses: the literal one (the
/// L part only) or the literal one plus its mirror image on the top arm.
enum class CArmRule { Mirrored, PaperLiteral };

enum class AlphabetObstruction { None, ColorIncompatible, FootF3, TopArmF3 };

inline const char* to_string(AlphabetObstruction o) {
  switch (o) {
    case AlphabetObstruction::None: return "none";
    case AlphabetObstruction::ColorIncompatible: return "color-incompatible";
    case AlphabetObstruction::FootF3: return "foot-F3";
    case AlphabetObstruction::TopArmF3: return "foot-F3";
  }
  return "?";
}

namespace detail {

// The foot R(2m-2, n) blocks every path when it carries the F3 pattern:
// with both endpoints inside it directly, and with one endpoint inside it
// beyond column m+1 using the connector-side entry vertex (m+1, 2) as the
// other end.
inline bool foot_f3(int m, int n, Coord s, Coord t) {
  const Region foot = l_foot(m, n);
  const RectShape local = foot.local_shape();
  const bool s_in = foot.contains(s);
  const bool t_in = foot.contains(t);
  const Coord entry{1, 2};
  if (s_in && t_in) return cond_f3(local, foot.to_local(s), foot.to_local(t));
  if (t_in && t.x > m + 1) return cond_f3(local, entry, foot.to_local(t));
  if (s_in && s.x > m + 1) return cond_f3(local, entry, foot.to_local(s));
  return false;
}

inline Coord mirror_c(const CShape& c, Coord v) { return Coord{v.x, 5 * c.n - 3 - v.y}; }

}  // namespace detail

inline AlphabetObstruction l_obstruction(const LShape& l, Coord s, Coord t) {
  if (!color_compatible(l, s, t)) return AlphabetObstruction::ColorIncompatible;
  if (detail::foot_f3(l.m, l.n, s, t)) return AlphabetObstruction::FootF3;
  return AlphabetObstruction::None;
}

inline AlphabetObstruction c_obstruction(const CShape& c, Coord s, Coord t,
                                         CArmRule rule = CArmRule::Mirrored) {
  if (!color_compatible(c, s, t)) return AlphabetObstruction::ColorIncompatible;
  if (detail::foot_f3(c.m, c.n, s, t)) return AlphabetObstruction::FootF3;
  if (rule == CArmRule::Mirrored &&
      detail::foot_f3(c.m, c.n, detail::mirror_c(c, s), detail::mirror_c(c, t))) {
    return AlphabetObstruction::TopArmF3;
  }
  return AlphabetObstruction::None;
}

inline bool l_acceptable(const LShape& l, Coord s, Coord t) {
  if (s == t) return false;
  return l_obstruction(l, s, t) == AlphabetObstruction::None;
}

inline bool c_acceptable(const CShape& c, Coord s, Coord t, CArmRule rule = CArmRule::Mirrored) {
  if (s == t) return false;
  return c_obstruction(c, s, t, rule) == AlphabetObstruction::None;
}

/// Name of the violated condition, or nullopt when the instance is
/// acceptable.
inline std::optional<std::string> refusal_reason(const ProblemInstance& inst,
                                                 CArmRule rule = CArmRule::Mirrored) {
  switch (kind_of(inst.shape)) {
    case ShapeKind::Rect: {
      const auto o = rect_obstruction(std::get<RectShape>(inst.shape), inst.s, inst.t);
      if (o == RectObstruction::None) return std::nullopt;
      return std::string(to_string(o));
    }
    case ShapeKind::L: {
      const auto o = l_obstruction(std::get<LShape>(inst.shape), inst.s, inst.t);
      if (o == AlphabetObstruction::None) return std::nullopt;
      return std::string(to_string(o));
    }
    case ShapeKind::C: {
      const auto o = c_obstruction(std::get<CShape>(inst.shape), inst.s, inst.t, rule);
      if (o == AlphabetObstruction::None) return std::nullopt;
      return std::string(to_string(o));
    }
  }
  return std::nullopt;
}

inline bool shape_acceptable(const ProblemInstance& inst, CArmRule rule = CArmRule::Mirrored) {
  return !refusal_reason(inst, rule).has_value();
}

/// One decomposition step taken by the alphabet constructor, recorded for
/// inspection by tests and the CLI.
struct DecompositionStep {
  enum class Kind { Rect, Strip, Split, Oracle };
  Kind kind = Kind::Rect;
  std::vector<Region> domain;  // pieces covered by this step
  Region band;                 // Strip: the stripped rectangle
  std::vector<Region> rest;    // Strip: what remains; Split: the t side
  Coord s, t;                  // endpoints of the sub-problem
  Coord p, q;                  // Split: connector edge
};

namespace detail {

inline std::int64_t white_count(const Region& r) {
  const std::int64_t total = r.size();
  if (total % 2 == 0) return total / 2;
  return (r.x0 + r.y0) % 2 == 0 ? (total + 1) / 2 : (total - 1) / 2;
}

inline std::optional<Region> union_rect(const std::vector<Region>& pieces) {
  int x0 = pieces.front().x0, y0 = pieces.front().y0;
  int x1 = pieces.front().x1(), y1 = pieces.front().y1();
  std::int64_t area = 0;
  for (const Region& r : pieces) {
    x0 = std::min(x0, r.x0);
    y0 = std::min(y0, r.y0);
    x1 = std::max(x1, r.x1());
    y1 = std::max(y1, r.y1());
    area += r.size();
  }
  const Region box{x0, y0, x1 - x0 + 1, y1 - y0 + 1};
  if (box.size() != area) return std::nullopt;
  return box;
}

inline bool chain_contains(const std::vector<Region>& pieces, Coord v) {
  for (const Region& r : pieces) {
    if (r.contains(v)) return true;
  }
  return false;
}

// Necessary condition from the 2-coloring, exact enough to prune hopeless
// sub-chains before any construction work.
inline bool parity_feasible(const std::vector<Region>& pieces, Coord a, Coord b) {
  std::int64_t total = 0;
  std::int64_t whites = 0;
  for (const Region& r : pieces) {
    total += r.size();
    whites += white_count(r);
  }
  if (a == b) return total == 1;
  const std::int64_t blacks = total - whites;
  const bool aw = color_of(a) == Color::White;
  const bool bw = color_of(b) == Color::White;
  if (whites == blacks) return aw != bw;
  if (whites == blacks + 1) return aw && bw;
  if (blacks == whites + 1) return !aw && !bw;
  return false;
}

// Adjacent vertex pairs across the shared boundary of two touching regions,
// ordered by position along the boundary; first of each pair lies in a.
inline std::vector<std::pair<Coord, Coord>> crossing_edges(const Region& a, const Region& b) {
  std::vector<std::pair<Coord, Coord>> out;
  auto span = [](int lo0, int hi0, int lo1, int hi1) {
    return std::pair<int, int>{std::max(lo0, lo1), std::min(hi0, hi1)};
  };
  if (a.x1() + 1 == b.x0 || b.x1() + 1 == a.x0) {
    const int ax = a.x1() + 1 == b.x0 ? a.x1() : a.x0;
    const int bx = a.x1() + 1 == b.x0 ? b.x0 : b.x1();
    const auto [lo, hi] = span(a.y0, a.y1(), b.y0, b.y1());
    for (int y = lo; y <= hi; ++y) out.push_back({{ax, y}, {bx, y}});
  } else if (a.y1() + 1 == b.y0 || b.y1() + 1 == a.y0) {
    const int ay = a.y1() + 1 == b.y0 ? a.y1() : a.y0;
    const int by = a.y1() + 1 == b.y0 ? b.y0 : b.y1();
    const auto [lo, hi] = span(a.x0, a.x1(), b.x0, b.x1());
    for (int x = lo; x <= hi; ++x) out.push_back({{x, ay}, {x, by}});
  }
  return out;
}

class ChainSolver {
 public:
  ChainSolver(PathWriter& writer, std::vector<DecompositionStep>* trace)
      : w_(writer), trace_(trace) {}

  /// Writes a Hamiltonian s-t path over the union of `chain` (consecutive
  /// pieces touch) and returns true, or returns false when no combination
  /// of regrouping, stripping and splitting applies.
  bool solve(const std::vector<Region>& chain, Coord s, Coord t) {
    if (auto whole = union_rect(chain)) {
      if (!region_acceptable(*whole, s, t)) return false;
      solve_region(w_, *whole, s, t);
      record(DecompositionStep::Kind::Rect, chain, s, t);
      return true;
    }
    if (!parity_feasible(chain, s, t)) return false;
    for (const auto& groups : groupings(chain)) {
      if (try_strips(chain, groups, s, t)) return true;
      if (try_splits(chain, groups, s, t)) return true;
    }
    return false;
  }

 private:
  // Compositions of the chain into consecutive runs whose unions are
  // rectangles; fewest groups first. Each group is [begin, end) over pieces.
  static std::vector<std::vector<std::pair<std::size_t, std::size_t>>> groupings(
      const std::vector<Region>& chain) {
    const std::size_t k = chain.size();
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> out;
    for (std::uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
      std::vector<std::pair<std::size_t, std::size_t>> groups;
      std::size_t begin = 0;
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) {
        const bool cut = i + 1 == k || (mask >> i & 1u);
        if (!cut) continue;
        std::vector<Region> run(chain.begin() + begin, chain.begin() + i + 1);
        ok = union_rect(run).has_value();
        groups.push_back({begin, i + 1});
        begin = i + 1;
      }
      if (ok && groups.size() > 1) out.push_back(std::move(groups));
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return out;
  }

  static Region group_rect(const std::vector<Region>& chain, std::pair<std::size_t, std::size_t> g) {
    return *union_rect(std::vector<Region>(chain.begin() + g.first, chain.begin() + g.second));
  }

  bool try_strips(const std::vector<Region>& chain,
                  const std::vector<std::pair<std::size_t, std::size_t>>& groups, Coord s, Coord t) {
    for (const bool front : {true, false}) {
      const auto g = front ? groups.front() : groups.back();
      const auto nb = front ? groups[1] : groups[groups.size() - 2];
      const Region band = group_rect(chain, g);
      if (band.contains(s) || band.contains(t)) continue;
      if (band.size() % 2 != 0 || band.m < 2 || band.n < 2) continue;
      std::vector<Region> rest = front ? std::vector<Region>(chain.begin() + g.second, chain.end())
                                       : std::vector<Region>(chain.begin(), chain.begin() + g.first);
      if (!parity_feasible(rest, s, t)) continue;
      if (!solve(rest, s, t)) continue;
      if (!merge_band(w_, band, group_rect(chain, nb))) continue;
      if (trace_) {
        DecompositionStep step;
        step.kind = DecompositionStep::Kind::Strip;
        step.domain = chain;
        step.band = band;
        step.rest = rest;
        step.s = s;
        step.t = t;
        trace_->push_back(step);
      }
      return true;
    }
    return false;
  }

  bool try_splits(const std::vector<Region>& chain,
                  const std::vector<std::pair<std::size_t, std::size_t>>& groups, Coord s, Coord t) {
    for (std::size_t i = 0; i + 1 < groups.size(); ++i) {
      const std::vector<Region> lower(chain.begin(), chain.begin() + groups[i].second);
      const std::vector<Region> upper(chain.begin() + groups[i].second, chain.end());
      const bool s_low = chain_contains(lower, s);
      const bool t_low = chain_contains(lower, t);
      if (s_low == t_low) continue;
      const std::vector<Region>& s_side = s_low ? lower : upper;
      const std::vector<Region>& t_side = s_low ? upper : lower;
      const Region a = group_rect(chain, groups[i]);
      const Region b = group_rect(chain, groups[i + 1]);
      for (auto [ca, cb] : crossing_edges(a, b)) {
        const Coord p = s_low ? ca : cb;
        const Coord q = s_low ? cb : ca;
        if (!quick_ok(s_side, s, p) || !quick_ok(t_side, q, t)) continue;
        if (!solve(s_side, s, p)) continue;
        if (!solve(t_side, q, t)) continue;
        w_.link(p, q);
        if (trace_) {
          DecompositionStep step;
          step.kind = DecompositionStep::Kind::Split;
          step.domain = chain;
          step.rest = t_side;
          step.s = s;
          step.t = t;
          step.p = p;
          step.q = q;
          trace_->push_back(step);
        }
        return true;
      }
    }
    return false;
  }

  static bool quick_ok(const std::vector<Region>& side, Coord a, Coord b) {
    if (auto whole = union_rect(side)) return region_acceptable(*whole, a, b);
    return parity_feasible(side, a, b);
  }

  void record(DecompositionStep::Kind kind, const std::vector<Region>& chain, Coord s, Coord t) {
    if (!trace_) return;
    DecompositionStep step;
    step.kind = kind;
    step.domain = chain;
    step.s = s;
    step.t = t;
    trace_->push_back(step);
  }

  PathWriter& w_;
  std::vector<DecompositionStep>* trace_;
};

inline std::vector<Region> l_chain(int m, int n) {
  return {Region{1, n + 1, m, 4 * n - 4}, Region{1, 1, m, n}, l_foot(m, n)};
}

inline std::vector<Region> c_chain(int m, int n) {
  return {c_top_arm(m, n), Region{1, 4 * n - 3, m, n}, Region{1, n + 1, m, 3 * n - 4},
          Region{1, 1, m, n}, l_foot(m, n)};
}

inline constexpr std::int64_t kOracleFallbackVertices = 60;

inline Path solve_alphabet(const Shape& shape, const std::vector<Region>& chain, Coord s, Coord t,
                           std::vector<DecompositionStep>* trace) {
  PathWriter w(bounding_rect(shape));
  ChainSolver solver(w, trace);
  if (solver.solve(chain, s, t)) {
    Path path = w.extract(s, vertex_count(shape));
    if (auto v = validate_path(shape, path, s, t)) {
      throw GridError(ErrorKind::InvalidPath,
                      "constructed path for " + describe(shape) + " is invalid: " + v->message());
    }
    return path;
  }
  if (vertex_count(shape) <= kOracleFallbackVertices) {
    OracleVerdict v = brute_force_ham_path(shape, s, t);
    if (v.exists()) {
      if (trace) {
        DecompositionStep step;
        step.kind = DecompositionStep::Kind::Oracle;
        step.domain = chain;
        step.s = s;
        step.t = t;
        trace->push_back(step);
      }
      return v.path;
    }
  }
  throw GridError(ErrorKind::DecompositionExhausted,
                  "no decomposition of " + describe(shape) + " from " + to_string(s) + " to " +
                      to_string(t) + " although the instance is acceptable");
}

}  // namespace detail

inline Path l_ham_path(const LShape& l, Coord s, Coord t,
                       std::vector<DecompositionStep>* trace = nullptr) {
  require_member(l, s, "s");
  require_member(l, t, "t");
  if (s == t) throw GridError(ErrorKind::SameEndpoints, "s and t must differ");
  if (const auto o = l_obstruction(l, s, t); o != AlphabetObstruction::None) {
    throw GridError(ErrorKind::NotAcceptable, std::string("L problem violates ") + to_string(o));
  }
  return detail::solve_alphabet(l, detail::l_chain(l.m, l.n), s, t, trace);
}

inline Path c_ham_path(const CShape& c, Coord s, Coord t, CArmRule rule = CArmRule::Mirrored,
                       std::vector<DecompositionStep>* trace = nullptr) {
  require_member(c, s, "s");
  require_member(c, t, "t");
  if (s == t) throw GridError(ErrorKind::SameEndpoints, "s and t must differ");
  if (const auto o = c_obstruction(c, s, t, rule); o != AlphabetObstruction::None) {
    throw GridError(ErrorKind::NotAcceptable, std::string("C problem violates ") + to_string(o));
  }
  return detail::solve_alphabet(c, detail::c_chain(c.m, c.n), s, t, trace);
}

/// Dispatches on the shape. The path is validated before it is returned.
inline Path shape_ham_path(const ProblemInstance& inst, CArmRule rule = CArmRule::Mirrored,
                           std::vector<DecompositionStep>* trace = nullptr) {
  switch (kind_of(inst.shape)) {
    case ShapeKind::Rect: {
      const RectShape& r = std::get<RectShape>(inst.shape);
      Path path = rect_ham_path(r, inst.s, inst.t);
      if (auto v = validate_path(r, path, inst.s, inst.t)) {
        throw GridError(ErrorKind::InvalidPath, "constructed rectangle path is invalid: " + v->message());
      }
      return path;
    }
    case ShapeKind::L:
      return l_ham_path(std::get<LShape>(inst.shape), inst.s, inst.t, trace);
    case ShapeKind::C:
      return c_ham_path(std::get<CShape>(inst.shape), inst.s, inst.t, rule, trace);
  }
  throw GridError(ErrorKind::InvalidShape, "unknown shape");
}

}  // namespace gridham
