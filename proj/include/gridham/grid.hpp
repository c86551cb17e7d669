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

#include <array>
#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace gridham {

enum class ErrorKind {
  InvalidShape,
  OutsideShape,
  SameEndpoints,
  OddSized,
  DegenerateDimension,
  NotAcceptable,
  NoFacingEdge,
  DecompositionExhausted,
  InvalidPath,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidShape: return "InvalidShape";
    case ErrorKind::OutsideShape: return "OutsideShape";
    case ErrorKind::SameEndpoints: return "SameEndpoints";
    case ErrorKind::OddSized: return "OddSized";
    case ErrorKind::DegenerateDimension: return "DegenerateDimension";
    case ErrorKind::NotAcceptable: return "NotAcceptable";
    case ErrorKind::NoFacingEdge: return "NoFacingEdge";
    case ErrorKind::DecompositionExhausted: return "DecompositionExhausted";
    case ErrorKind::InvalidPath: return "InvalidPath";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI exit-code mapping) can tell them apart.
class GridError : public std::runtime_error {
 public:
  GridError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// A lattice point, 1-based, with (1,1) the lower-left corner of the
/// bounding rectangle.
struct Coord {
  int x = 1;
  int y = 1;

  friend constexpr auto operator<=>(const Coord&, const Coord&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Coord& c) {
  return os << '(' << c.x << ',' << c.y << ')';
}

inline std::string to_string(const Coord& c) {
  return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
}

constexpr bool adjacent(Coord a, Coord b) {
  const int dx = a.x > b.x ? a.x - b.x : b.x - a.x;
  const int dy = a.y > b.y ? a.y - b.y : b.y - a.y;
  return dx + dy == 1;
}

enum class Color { White, Black };

constexpr Color color_of(Coord v) {
  return ((v.x + v.y) % 2 == 0) ? Color::White : Color::Black;
}

inline const char* to_string(Color c) { return c == Color::White ? "white" : "black"; }

struct RectShape {
  int m = 1;
  int n = 1;

  RectShape() = default;
  RectShape(int width, int height) : m(width), n(height) {
    if (m < 1 || n < 1) {
      throw GridError(ErrorKind::InvalidShape, "rectangle dimensions must be >= 1");
    }
  }
  friend bool operator==(const RectShape&, const RectShape&) = default;
};

/// L(m,n): R(3m-2, 5n-4) minus the block m+1..3m-2 x n+1..5n-4.
struct LShape {
  int m = 3;
  int n = 3;

  LShape() = default;
  LShape(int m_, int n_) : m(m_), n(n_) {
    if (m < 3) throw GridError(ErrorKind::InvalidShape, "m must be >= 3");
    if (n < 3) throw GridError(ErrorKind::InvalidShape, "n must be >= 3");
  }
  friend bool operator==(const LShape&, const LShape&) = default;
};

/// C(m,n): R(3m-2, 5n-4) minus the block m+1..3m-2 x n+1..4n-4.
struct CShape {
  int m = 3;
  int n = 3;

  CShape() = default;
  CShape(int m_, int n_) : m(m_), n(n_) {
    if (m < 3) throw GridError(ErrorKind::InvalidShape, "m must be >= 3");
    if (n < 3) throw GridError(ErrorKind::InvalidShape, "n must be >= 3");
  }
  friend bool operator==(const CShape&, const CShape&) = default;
};

using Shape = std::variant<RectShape, LShape, CShape>;

enum class ShapeKind { Rect, L, C };

inline ShapeKind kind_of(const Shape& shape) {
  return static_cast<ShapeKind>(shape.index());
}

inline const char* to_string(ShapeKind k) {
  switch (k) {
    case ShapeKind::Rect: return "rect";
    case ShapeKind::L: return "L";
    case ShapeKind::C: return "C";
  }
  return "?";
}

inline int param_m(const Shape& shape) {
  return std::visit([](const auto& s) { return s.m; }, shape);
}
inline int param_n(const Shape& shape) {
  return std::visit([](const auto& s) { return s.n; }, shape);
}

inline std::string describe(const Shape& shape) {
  const char* tag = kind_of(shape) == ShapeKind::Rect ? "R" : to_string(kind_of(shape));
  return std::string(tag) + "(" + std::to_string(param_m(shape)) + "," +
         std::to_string(param_n(shape)) + ")";
}

inline RectShape bounding_rect(const Shape& shape) {
  if (const auto* r = std::get_if<RectShape>(&shape)) return *r;
  const int m = param_m(shape);
  const int n = param_n(shape);
  return RectShape(3 * m - 2, 5 * n - 4);
}

inline bool contains(const RectShape& r, Coord v) {
  return v.x >= 1 && v.x <= r.m && v.y >= 1 && v.y <= r.n;
}

inline bool contains(const LShape& l, Coord v) {
  if (!contains(RectShape(3 * l.m - 2, 5 * l.n - 4), v)) return false;
  return !(v.x >= l.m + 1 && v.y >= l.n + 1);
}

inline bool contains(const CShape& c, Coord v) {
  if (!contains(RectShape(3 * c.m - 2, 5 * c.n - 4), v)) return false;
  return !(v.x >= c.m + 1 && v.y >= c.n + 1 && v.y <= 4 * c.n - 4);
}

inline bool contains(const Shape& shape, Coord v) {
  return std::visit([v](const auto& s) { return contains(s, v); }, shape);
}

inline std::int64_t vertex_count(const Shape& shape) {
  const std::int64_t m = param_m(shape);
  const std::int64_t n = param_n(shape);
  switch (kind_of(shape)) {
    case ShapeKind::Rect: return m * n;
    case ShapeKind::L: return m * (5 * n - 4) + (2 * m - 2) * n;
    case ShapeKind::C: return m * (5 * n - 4) + 2 * (2 * m - 2) * n;
  }
  return 0;
}

/// Parity of the bounding rectangle; the notches are even x even so this
/// always agrees with the parity of vertex_count.
inline bool is_even_sized(const Shape& shape) {
  const RectShape b = bounding_rect(shape);
  return (static_cast<std::int64_t>(b.m) * b.n) % 2 == 0;
}

inline void require_member(const Shape& shape, Coord v, const char* what) {
  if (!contains(shape, v)) {
    throw GridError(ErrorKind::OutsideShape,
                    std::string(what) + " " + to_string(v) + " is not a vertex of " + describe(shape));
  }
}

inline constexpr std::array<Coord, 4> kSteps{{{-1, 0}, {1, 0}, {0, -1}, {0, 1}}};

/// Neighbors in the fixed order left, right, down, up.
inline std::vector<Coord> neighbors(const Shape& shape, Coord v) {
  require_member(shape, v, "vertex");
  std::vector<Coord> out;
  out.reserve(4);
  for (Coord d : kSteps) {
    Coord u{v.x + d.x, v.y + d.y};
    if (contains(shape, u)) out.push_back(u);
  }
  return out;
}

inline bool color_compatible(const Shape& shape, Coord s, Coord t) {
  require_member(shape, s, "endpoint");
  require_member(shape, t, "endpoint");
  if (is_even_sized(shape)) return color_of(s) != color_of(t);
  return color_of(s) == Color::White && color_of(t) == Color::White;
}

struct ProblemInstance {
  Shape shape;
  Coord s;
  Coord t;

  ProblemInstance(Shape sh, Coord s_, Coord t_) : shape(sh), s(s_), t(t_) {
    require_member(shape, s, "s");
    require_member(shape, t, "t");
    if (s == t) throw GridError(ErrorKind::SameEndpoints, "s and t must differ");
  }
};

/// Axis-aligned sub-rectangle in global coordinates. Local coordinates are
/// (x - x0 + 1, y - y0 + 1).
struct Region {
  int x0 = 1;
  int y0 = 1;
  int m = 1;
  int n = 1;

  int x1() const { return x0 + m - 1; }
  int y1() const { return y0 + n - 1; }
  std::int64_t size() const { return static_cast<std::int64_t>(m) * n; }
  bool contains(Coord v) const { return v.x >= x0 && v.x <= x1() && v.y >= y0 && v.y <= y1(); }
  Coord to_local(Coord v) const { return Coord{v.x - x0 + 1, v.y - y0 + 1}; }
  Coord to_global(Coord v) const { return Coord{v.x + x0 - 1, v.y + y0 - 1}; }
  RectShape local_shape() const { return RectShape(m, n); }

  friend bool operator==(const Region&, const Region&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Region& r) {
  return os << "Region(" << r.x0 << ',' << r.y0 << ',' << r.m << ',' << r.n << ')';
}

/// Dense row-major indexing over a bounding box; shared by the search and
/// construction code.
struct BoxIndex {
  int width = 0;
  int height = 0;

  explicit BoxIndex(const RectShape& box) : width(box.m), height(box.n) {}

  std::size_t size() const { return static_cast<std::size_t>(width) * height; }
  std::int32_t operator()(Coord v) const {
    return static_cast<std::int32_t>((v.y - 1) * width + (v.x - 1));
  }
  Coord at(std::int32_t i) const { return Coord{i % width + 1, i / width + 1}; }
};

}  // namespace gridham
