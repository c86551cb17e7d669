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

// Text and SVG drawings of a Hamiltonian path. Both refuse to draw a path
// that does not validate.

#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "gridham/grid.hpp"
#include "gridham/validate.hpp"

namespace gridham {

namespace detail {

inline void require_valid(const Shape& shape, const Path& path) {
  if (path.empty()) throw GridError(ErrorKind::InvalidPath, "cannot render an empty path");
  if (auto v = validate_path(shape, path, path.front(), path.back())) {
    throw GridError(ErrorKind::InvalidPath, "refusing to render: " + v->message());
  }
}

}  // namespace detail

/// Vertices sit on even character columns and rows; connectors between
/// them use box-drawing strokes. Row order is top (largest y) first.
/// Vertices are 'o', endpoints 'S' and 'T', removed cells blank.
inline std::string render_ascii(const Shape& shape, const Path& path) {
  detail::require_valid(shape, path);
  const RectShape box = bounding_rect(shape);
  const int w = 2 * box.m - 1;
  const int h = 2 * box.n - 1;
  // One string per cell so multi-byte strokes do not disturb the layout.
  std::vector<std::vector<std::string>> canvas(h, std::vector<std::string>(w, " "));
  auto cell = [&](int cx, int cy) -> std::string& { return canvas[h - 1 - cy][cx]; };
  for (int y = 1; y <= box.n; ++y) {
    for (int x = 1; x <= box.m; ++x) {
      if (contains(shape, Coord{x, y})) cell(2 * (x - 1), 2 * (y - 1)) = "o";
    }
  }
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const Coord a = path[i];
    const Coord b = path[i + 1];
    const int cx = (a.x - 1) + (b.x - 1);
    const int cy = (a.y - 1) + (b.y - 1);
    cell(cx, cy) = a.y == b.y ? "─" : "│";
  }
  cell(2 * (path.front().x - 1), 2 * (path.front().y - 1)) = "S";
  cell(2 * (path.back().x - 1), 2 * (path.back().y - 1)) = "T";
  std::string out;
  for (const auto& row : canvas) {
    std::string line;
    for (const std::string& c : row) line += c;
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

/// One unit square per vertex, a polyline through the vertex centers and
/// labeled circles on the endpoints. Output bytes depend only on the input.
inline std::string render_svg(const Shape& shape, const Path& path) {
  detail::require_valid(shape, path);
  constexpr int kUnit = 20;
  const RectShape box = bounding_rect(shape);
  const int width = box.m * kUnit;
  const int height = box.n * kUnit;
  auto px = [&](Coord c) { return (c.x - 1) * kUnit + kUnit / 2; };
  auto py = [&](Coord c) { return height - (c.y - 1) * kUnit - kUnit / 2; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  os << "<title>" << describe(shape) << "</title>\n";
  os << "<g fill=\"#f4f4f4\" stroke=\"#bbbbbb\" stroke-width=\"1\">\n";
  for (int y = 1; y <= box.n; ++y) {
    for (int x = 1; x <= box.m; ++x) {
      const Coord c{x, y};
      if (!contains(shape, c)) continue;
      os << "<rect x=\"" << (x - 1) * kUnit << "\" y=\"" << height - y * kUnit << "\" width=\""
         << kUnit << "\" height=\"" << kUnit << "\"/>\n";
    }
  }
  os << "</g>\n";
  os << "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"3\" points=\"";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) os << ' ';
    os << px(path[i]) << ',' << py(path[i]);
  }
  os << "\"/>\n";
  const char* labels[2] = {"S", "T"};
  const Coord ends[2] = {path.front(), path.back()};
  for (int k = 0; k < 2; ++k) {
    os << "<circle cx=\"" << px(ends[k]) << "\" cy=\"" << py(ends[k]) << "\" r=\"" << kUnit / 3
       << "\" fill=\"#c0392b\"/>\n";
    os << "<text x=\"" << px(ends[k]) << "\" y=\"" << py(ends[k]) + 4
       << "\" font-size=\"11\" text-anchor=\"middle\" fill=\"#ffffff\">" << labels[k]
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace gridham
