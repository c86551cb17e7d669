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

// Exhaustive Hamiltonian path search. This is the ground truth the closed-form
// predicates are checked against, so it deliberately shares nothing with them
// beyond grid membership.

#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "gridham/grid.hpp"
#include "gridham/validate.hpp"

namespace gridham {

struct SearchBudget {
  std::int64_t max_vertices = 60;
  std::int64_t max_expansions = 1'000'000'000;
  std::chrono::milliseconds timeout{std::chrono::minutes(10)};

  /// Default budget, with max_expansions taken from GRIDHAM_ORACLE_BUDGET
  /// when that variable holds a positive integer.
  static SearchBudget from_env() {
    SearchBudget b;
    if (const char* env = std::getenv("GRIDHAM_ORACLE_BUDGET")) {
      char* end = nullptr;
      const long long v = std::strtoll(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) b.max_expansions = v;
    }
    return b;
  }
};

enum class Outcome { Exists, NotExists, Exhausted };

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Exists: return "exists";
    case Outcome::NotExists: return "not-exists";
    case Outcome::Exhausted: return "exhausted";
  }
  return "?";
}

struct OracleVerdict {
  Outcome outcome = Outcome::NotExists;
  Path path;  // non-empty only for Exists
  std::int64_t expansions = 0;

  bool exists() const { return outcome == Outcome::Exists; }
};

namespace detail {

/// Depth-first search over simple paths on an arbitrary vertex mask inside
/// a bounding box.
class HamSearch {
 public:
  HamSearch(const RectShape& box, std::vector<char> member, const SearchBudget& budget)
      : index_(box), member_(std::move(member)), budget_(budget) {
    adj_.assign(index_.size(), {-1, -1, -1, -1});
    for (std::int32_t i = 0; i < static_cast<std::int32_t>(index_.size()); ++i) {
      if (!member_[i]) continue;
      const Coord v = index_.at(i);
      ++total_;
      if (color_of(v) == Color::White) ++whites_;
      for (std::size_t k = 0; k < kSteps.size(); ++k) {
        const Coord u{v.x + kSteps[k].x, v.y + kSteps[k].y};
        if (contains(box, u) && member_[index_(u)]) adj_[i][k] = index_(u);
      }
    }
  }

  OracleVerdict run(Coord s, Coord t) {
    OracleVerdict out;
    if (!parity_ok(s, t)) return out;
    if (total_ > budget_.max_vertices) {
      out.outcome = Outcome::Exhausted;
      return out;
    }
    start_ = std::chrono::steady_clock::now();
    source_ = index_(s);
    target_ = index_(t);
    visited_.assign(index_.size(), 0);
    free_deg_.assign(index_.size(), 0);
    for (std::int32_t i = 0; i < static_cast<std::int32_t>(index_.size()); ++i) {
      if (!member_[i]) continue;
      for (std::int32_t u : adj_[i]) free_deg_[i] += (u >= 0);
    }
    out.outcome = search();
    out.expansions = expansions_;
    if (out.outcome == Outcome::Exists) {
      out.path.reserve(stack_.size());
      for (const Frame& f : stack_) out.path.push_back(index_.at(f.v));
    }
    return out;
  }

 private:
  struct Frame {
    std::int32_t v;
    std::int8_t next;    // next neighbor slot to try, -1 before entry checks
    std::int8_t forced;  // slot forced by a degree-2 neighbor, or -1
  };

  // Counting argument on the 2-coloring: a path alternates colors, so the
  // endpoint colors are fixed by the white/black balance.
  bool parity_ok(Coord s, Coord t) const {
    const std::int64_t blacks = total_ - whites_;
    const bool sw = color_of(s) == Color::White;
    const bool tw = color_of(t) == Color::White;
    if (whites_ == blacks) return sw != tw;
    if (whites_ == blacks + 1) return sw && tw;
    if (blacks == whites_ + 1) return !sw && !tw;
    return false;
  }

  void visit(std::int32_t v) {
    visited_[v] = 1;
    ++depth_;
    for (std::int32_t u : adj_[v]) {
      if (u >= 0) --free_deg_[u];
    }
  }
  void unvisit(std::int32_t v) {
    visited_[v] = 0;
    --depth_;
    for (std::int32_t u : adj_[v]) {
      if (u >= 0) ++free_deg_[u];
    }
  }

  // Unvisited vertices must stay reachable from the head.
  bool connected(std::int32_t head) {
    queue_.clear();
    mark_.assign(index_.size(), 0);
    queue_.push_back(head);
    mark_[head] = 1;
    std::int64_t reached = 0;
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      for (std::int32_t u : adj_[queue_[qi]]) {
        if (u >= 0 && !visited_[u] && !mark_[u]) {
          mark_[u] = 1;
          ++reached;
          queue_.push_back(u);
        }
      }
    }
    return reached == total_ - depth_;
  }

  // Entry checks for a freshly pushed head. Returns false to backtrack.
  bool admissible(Frame& f, std::int32_t prev) {
    const std::int32_t v = f.v;
    if (prev >= 0) {
      for (std::int32_t w : adj_[prev]) {
        if (w < 0 || visited_[w]) continue;
        if (w == target_ ? free_deg_[w] < 1 : free_deg_[w] < 2) return false;
      }
    }
    f.forced = -1;
    for (std::int8_t k = 0; k < 4; ++k) {
      const std::int32_t w = adj_[v][k];
      if (w < 0 || visited_[w] || w == target_) continue;
      if (free_deg_[w] == 0) return false;
      if (free_deg_[w] == 1) {
        if (f.forced >= 0) return false;
        f.forced = k;
      }
    }
    return connected(v);
  }

  bool over_budget() {
    if (++expansions_ > budget_.max_expansions) return true;
    if ((expansions_ & 0xFFF) == 0 &&
        std::chrono::steady_clock::now() - start_ > budget_.timeout) {
      return true;
    }
    return false;
  }

  Outcome search() {
    stack_.clear();
    depth_ = 0;
    visit(source_);
    stack_.push_back(Frame{source_, -1, -1});
    while (!stack_.empty()) {
      Frame& f = stack_.back();
      if (f.next < 0) {
        if (over_budget()) return Outcome::Exhausted;
        if (depth_ == total_) {
          if (f.v == target_) return Outcome::Exists;
          pop();
          continue;
        }
        const std::int32_t prev = stack_.size() > 1 ? stack_[stack_.size() - 2].v : -1;
        if (f.v == target_ || !admissible(f, prev)) {
          pop();
          continue;
        }
        f.next = 0;
      }
      std::int32_t chosen = -1;
      while (f.next < 4 && chosen < 0) {
        const std::int8_t k = f.next++;
        if (f.forced >= 0 && k != f.forced) continue;
        const std::int32_t w = adj_[f.v][k];
        if (w < 0 || visited_[w]) continue;
        if (w == target_ && depth_ + 1 != total_) continue;
        chosen = w;
      }
      if (chosen < 0) {
        pop();
        continue;
      }
      visit(chosen);
      stack_.push_back(Frame{chosen, -1, -1});
    }
    return Outcome::NotExists;
  }

  void pop() {
    unvisit(stack_.back().v);
    stack_.pop_back();
  }

  BoxIndex index_;
  std::vector<char> member_;
  SearchBudget budget_;
  std::vector<std::array<std::int32_t, 4>> adj_;
  std::int64_t total_ = 0;
  std::int64_t whites_ = 0;
  std::int32_t source_ = -1;
  std::int32_t target_ = -1;
  std::vector<char> visited_;
  std::vector<std::int32_t> free_deg_;  // unvisited neighbors per vertex
  std::vector<Frame> stack_;
  std::int64_t depth_ = 0;
  std::int64_t expansions_ = 0;
  std::vector<std::int32_t> queue_;
  std::vector<char> mark_;
  std::chrono::steady_clock::time_point start_;
};

inline std::vector<char> member_mask(const Shape& shape) {
  const RectShape box = bounding_rect(shape);
  const BoxIndex index(box);
  std::vector<char> mask(index.size(), 0);
  for (int y = 1; y <= box.n; ++y) {
    for (int x = 1; x <= box.m; ++x) mask[index(Coord{x, y})] = contains(shape, Coord{x, y});
  }
  return mask;
}

}  // namespace detail

/// Exhaustive search for a Hamiltonian s-t path. Exhausted is returned when
/// the shape exceeds max_vertices or the search exceeds its expansion or
/// time budget; it is never reported as NotExists.
inline OracleVerdict brute_force_ham_path(const Shape& shape, Coord s, Coord t,
                                          const SearchBudget& budget = {}) {
  require_member(shape, s, "s");
  require_member(shape, t, "t");
  if (s == t) throw GridError(ErrorKind::SameEndpoints, "s and t must differ");
  detail::HamSearch search(bounding_rect(shape), detail::member_mask(shape), budget);
  return search.run(s, t);
}

}  // namespace gridham
