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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gridham/grid.hpp"

namespace gridham {

using Path = std::vector<Coord>;

/// Closed tour; the last vertex is adjacent to the first and is not repeated.
struct Cycle {
  std::vector<Coord> order;

  std::size_t size() const { return order.size(); }
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

enum class ViolationKind {
  Empty,
  WrongStart,
  WrongEnd,
  OutsideShape,
  Repeated,
  MissingVertex,
  NonAdjacent,
  TooShort,
};

inline const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::Empty: return "empty";
    case ViolationKind::WrongStart: return "wrong start";
    case ViolationKind::WrongEnd: return "wrong end";
    case ViolationKind::OutsideShape: return "outside shape";
    case ViolationKind::Repeated: return "repeated vertex";
    case ViolationKind::MissingVertex: return "missing vertex";
    case ViolationKind::NonAdjacent: return "non-adjacent";
    case ViolationKind::TooShort: return "too short";
  }
  return "?";
}

struct Violation {
  ViolationKind kind;
  std::size_t index = 0;  // offending position in the sequence (first of the pair for NonAdjacent)
  Coord vertex;

  std::string message() const {
    std::string out = to_string(kind);
    if (kind == ViolationKind::NonAdjacent) {
      out += " at index " + std::to_string(index) + "->" + std::to_string(index + 1);
    } else if (kind != ViolationKind::Empty && kind != ViolationKind::TooShort) {
      out += " " + to_string(vertex);
      if (kind != ViolationKind::MissingVertex) out += " at index " + std::to_string(index);
    }
    return out;
  }
};

namespace detail {

// Checks membership, distinctness and coverage against an arbitrary vertex
// set given by its bounding box and membership test.
template <typename Member>
std::optional<Violation> check_cover(const std::vector<Coord>& seq, const RectShape& box,
                                     std::int64_t expected, Member&& member) {
  const BoxIndex index(box);
  std::vector<char> seen(index.size(), 0);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Coord v = seq[i];
    if (!contains(box, v) || !member(v)) return Violation{ViolationKind::OutsideShape, i, v};
    char& flag = seen[static_cast<std::size_t>(index(v))];
    if (flag) return Violation{ViolationKind::Repeated, i, v};
    flag = 1;
  }
  if (static_cast<std::int64_t>(seq.size()) != expected) {
    for (int y = 1; y <= box.n; ++y) {
      for (int x = 1; x <= box.m; ++x) {
        const Coord v{x, y};
        if (member(v) && !seen[static_cast<std::size_t>(index(v))]) {
          return Violation{ViolationKind::MissingVertex, 0, v};
        }
      }
    }
  }
  return std::nullopt;
}

inline std::optional<Violation> check_steps(const std::vector<Coord>& seq) {
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (!adjacent(seq[i], seq[i + 1])) return Violation{ViolationKind::NonAdjacent, i, seq[i]};
  }
  return std::nullopt;
}

}  // namespace detail

/// Hamiltonian s-t path check. Returns nullopt when the path is valid,
/// otherwise the first violated property in the order: endpoints,
/// membership, repetition, coverage, adjacency.
inline std::optional<Violation> validate_path(const Shape& shape, const Path& path, Coord s,
                                              Coord t) {
  if (path.empty()) return Violation{ViolationKind::Empty, 0, s};
  if (path.front() != s) return Violation{ViolationKind::WrongStart, 0, path.front()};
  if (path.back() != t) return Violation{ViolationKind::WrongEnd, path.size() - 1, path.back()};
  if (auto v = detail::check_cover(path, bounding_rect(shape), vertex_count(shape),
                                   [&](Coord c) { return contains(shape, c); })) {
    return v;
  }
  return detail::check_steps(path);
}

namespace detail {

inline std::optional<Violation> validate_closed(const std::vector<Coord>& order,
                                                const RectShape& box, std::int64_t expected,
                                                const auto& member) {
  if (order.empty()) return Violation{ViolationKind::Empty, 0, Coord{}};
  if (auto v = check_cover(order, box, expected, member)) return v;
  if (order.size() < 4) return Violation{ViolationKind::TooShort, 0, order.front()};
  if (auto v = check_steps(order)) return v;
  if (!adjacent(order.back(), order.front())) {
    return Violation{ViolationKind::NonAdjacent, order.size() - 1, order.back()};
  }
  return std::nullopt;
}

}  // namespace detail

inline std::optional<Violation> validate_cycle(const Shape& shape, const Cycle& cycle) {
  return detail::validate_closed(cycle.order, bounding_rect(shape), vertex_count(shape),
                                 [&](Coord c) { return contains(shape, c); });
}

/// Region overload: the cycle is in global coordinates and must cover the
/// region exactly.
inline std::optional<Violation> validate_cycle(const Region& region, const Cycle& cycle) {
  std::vector<Coord> local;
  local.reserve(cycle.order.size());
  for (Coord c : cycle.order) {
    local.push_back(region.contains(c) ? region.to_local(c) : Coord{0, 0});
  }
  const RectShape box = region.local_shape();
  auto v = detail::validate_closed(local, box, region.size(), [](Coord) { return true; });
  if (!v) return v;
  if (v->kind == ViolationKind::OutsideShape) {
    v->vertex = cycle.order[v->index];
  } else if (v->kind != ViolationKind::Empty) {
    v->vertex = region.to_global(v->vertex);
  }
  return v;
}

}  // namespace gridham
