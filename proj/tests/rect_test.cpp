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

#include <gtest/gtest.h>

#include <random>

#include "gridham/rect.hpp"

namespace gridham {
namespace {

ErrorKind error_of(auto&& fn) {
  try {
    fn();
  } catch (const GridError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidPath;
}

TEST(CondF1, Examples) {
  EXPECT_TRUE(cond_f1(RectShape(5, 1), {2, 1}, {5, 1}));
  EXPECT_FALSE(cond_f1(RectShape(5, 1), {1, 1}, {5, 1}));
  EXPECT_FALSE(cond_f1(RectShape(3, 3), {2, 1}, {2, 3}));
  EXPECT_TRUE(cond_f1(RectShape(1, 5), {1, 1}, {1, 3}));
}

TEST(CondF2, Examples) {
  EXPECT_TRUE(cond_f2(RectShape(4, 2), {2, 1}, {2, 2}));
  EXPECT_FALSE(cond_f2(RectShape(4, 2), {1, 1}, {1, 2}));
  EXPECT_FALSE(cond_f2(RectShape(4, 2), {1, 1}, {2, 2}));
  EXPECT_TRUE(cond_f2(RectShape(2, 4), {1, 3}, {2, 3}));
}

TEST(CondF3, Examples) {
  EXPECT_TRUE(cond_f3(RectShape(4, 3), {1, 2}, {4, 2}));
  EXPECT_FALSE(cond_f3(RectShape(4, 3), {1, 1}, {2, 1}));
  for (int x1 = 1; x1 <= 4; ++x1) {
    for (int y1 = 1; y1 <= 4; ++y1) {
      EXPECT_FALSE(cond_f3(RectShape(4, 4), {1, 1}, {x1, y1}));
    }
  }
}

TEST(CondF3, InvariantUnderIsometriesAndOrder) {
  for (const RectShape r : {RectShape(4, 3), RectShape(6, 3), RectShape(3, 8), RectShape(5, 3)}) {
    for (int a = 0; a < r.m * r.n; ++a) {
      for (int b = 0; b < r.m * r.n; ++b) {
        if (a == b) continue;
        const Coord s{a % r.m + 1, a / r.m + 1};
        const Coord t{b % r.m + 1, b / r.m + 1};
        const bool base = cond_f3(r, s, t);
        EXPECT_EQ(base, cond_f3(r, t, s));
        for (const Isometry& g : Isometry::all()) {
          EXPECT_EQ(base, cond_f3(g.image(r), g.apply(r, s), g.apply(r, t)));
        }
      }
    }
  }
}

TEST(RectAcceptable, Examples) {
  EXPECT_FALSE(rect_acceptable(RectShape(4, 3), {1, 2}, {4, 2}));
  EXPECT_TRUE(rect_acceptable(RectShape(3, 3), {1, 1}, {3, 1}));
  EXPECT_FALSE(rect_acceptable(RectShape(2, 2), {1, 1}, {2, 2}));
  EXPECT_EQ(rect_obstruction(RectShape(2, 2), {1, 1}, {2, 2}), RectObstruction::ColorIncompatible);
  EXPECT_EQ(rect_obstruction(RectShape(4, 3), {1, 2}, {4, 2}), RectObstruction::F3);
  EXPECT_EQ(rect_obstruction(RectShape(5, 1), {3, 1}, {5, 1}), RectObstruction::F1);
  EXPECT_EQ(rect_obstruction(RectShape(4, 2), {2, 1}, {2, 2}), RectObstruction::F2);
}

TEST(RectHamCycle, Examples) {
  EXPECT_EQ(rect_ham_cycle(RectShape(2, 2)).order,
            (std::vector<Coord>{{1, 1}, {1, 2}, {2, 2}, {2, 1}}));
  const Cycle c = rect_ham_cycle(RectShape(4, 3));
  EXPECT_EQ(c.size(), 12u);
  EXPECT_FALSE(validate_cycle(RectShape(4, 3), c));
  EXPECT_EQ(error_of([] { rect_ham_cycle(RectShape(3, 3)); }), ErrorKind::OddSized);
  EXPECT_EQ(error_of([] { rect_ham_cycle(RectShape(1, 4)); }), ErrorKind::DegenerateDimension);
  EXPECT_EQ(error_of([] { rect_ham_cycle(RectShape(1, 3)); }), ErrorKind::OddSized);
}

TEST(RectHamCycle, OddWidthEvenHeight) {
  for (int m : {3, 5, 7}) {
    for (int n : {2, 4, 6}) {
      EXPECT_FALSE(validate_cycle(RectShape(m, n), rect_ham_cycle(RectShape(m, n))));
    }
  }
}

TEST(RectHamPath, Examples) {
  EXPECT_EQ(rect_ham_path(RectShape(5, 1), {1, 1}, {5, 1}),
            (Path{{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}}));
  EXPECT_EQ(rect_ham_path(RectShape(2, 2), {1, 1}, {1, 2}),
            (Path{{1, 1}, {2, 1}, {2, 2}, {1, 2}}));
  const Path p = rect_ham_path(RectShape(5, 5), {1, 1}, {5, 5});
  EXPECT_EQ(p.size(), 25u);
  EXPECT_FALSE(validate_path(RectShape(5, 5), p, {1, 1}, {5, 5}));
  const Path big = rect_ham_path(RectShape(100, 100), {1, 1}, {100, 100 - 1});
  EXPECT_FALSE(validate_path(RectShape(100, 100), big, {1, 1}, {100, 99}));
}

TEST(RectHamPath, RefusesUnacceptable) {
  EXPECT_EQ(error_of([] { rect_ham_path(RectShape(4, 3), {1, 2}, {4, 2}); }),
            ErrorKind::NotAcceptable);
  EXPECT_EQ(error_of([] { rect_ham_path(RectShape(2, 2), {1, 1}, {2, 2}); }),
            ErrorKind::NotAcceptable);
  EXPECT_EQ(error_of([] { rect_ham_path(RectShape(2, 2), {1, 1}, {1, 1}); }),
            ErrorKind::SameEndpoints);
  EXPECT_EQ(error_of([] { rect_ham_path(RectShape(2, 2), {1, 1}, {3, 1}); }),
            ErrorKind::OutsideShape);
}

TEST(RectHamPath, AllAcceptablePairsUpToSeven) {
  for (int m = 1; m <= 7; ++m) {
    for (int n = 1; n <= 7; ++n) {
      const RectShape r(m, n);
      for (int a = 0; a < m * n; ++a) {
        for (int b = 0; b < m * n; ++b) {
          const Coord s{a % m + 1, a / m + 1};
          const Coord t{b % m + 1, b / m + 1};
          if (a == b || !rect_acceptable(r, s, t)) continue;
          const auto v = validate_path(r, rect_ham_path(r, s, t), s, t);
          ASSERT_FALSE(v) << describe(r) << s << t << ": " << v->message();
        }
      }
    }
  }
}

TEST(RectHamPath, RandomLargeInstances) {
  std::mt19937_64 rng(20261015);
  int solved = 0;
  while (solved < 200) {
    const RectShape r(1 + static_cast<int>(rng() % 120), 1 + static_cast<int>(rng() % 120));
    const Coord s{1 + static_cast<int>(rng() % r.m), 1 + static_cast<int>(rng() % r.n)};
    const Coord t{1 + static_cast<int>(rng() % r.m), 1 + static_cast<int>(rng() % r.n)};
    if (s == t || !rect_acceptable(r, s, t)) continue;
    const auto v = validate_path(r, rect_ham_path(r, s, t), s, t);
    ASSERT_FALSE(v) << describe(r) << s << t << ": " << v->message();
    ++solved;
  }
}

TEST(RectHamPath, Deterministic) {
  EXPECT_EQ(rect_ham_path(RectShape(9, 7), {3, 3}, {8, 6}),
            rect_ham_path(RectShape(9, 7), {3, 3}, {8, 6}));
}

TEST(FindStrip, Examples) {
  const auto st = find_strip(RectShape(8, 5), {1, 1}, {2, 3});
  ASSERT_TRUE(st);
  EXPECT_EQ(st->strip, (Region{7, 1, 2, 5}));
  EXPECT_EQ(st->rest, (Region{1, 1, 6, 5}));
  EXPECT_EQ(st->side, Side::Right);
  EXPECT_FALSE(find_strip(RectShape(2, 2), {1, 1}, {2, 1}));
  EXPECT_FALSE(find_strip(RectShape(2, 2), {1, 1}, {1, 2}));
  // Same-colored opposite corners of an even square are not a valid request.
  EXPECT_EQ(error_of([] { find_strip(RectShape(4, 4), {1, 1}, {4, 4}); }), ErrorKind::NotAcceptable);
}

TEST(FindStrip, SatisfiesStripConditions) {
  for (int m = 2; m <= 9; ++m) {
    for (int n = 2; n <= 9; ++n) {
      const RectShape r(m, n);
      for (int a = 0; a < m * n; ++a) {
        for (int b = a + 1; b < m * n; ++b) {
          const Coord s{a % m + 1, a / m + 1};
          const Coord t{b % m + 1, b / m + 1};
          if (!rect_acceptable(r, s, t)) continue;
          const auto st = find_strip(r, s, t);
          if (!st) continue;
          EXPECT_EQ(st->strip.size() % 2, 0);
          EXPECT_EQ(st->strip.size() + st->rest.size(), r.m * r.n);
          EXPECT_FALSE(st->strip.contains(s) || st->strip.contains(t));
          EXPECT_TRUE(region_acceptable(st->rest, s, t));
        }
      }
    }
  }
}

TEST(SplitRect, Examples) {
  const auto sp = split_rect(RectShape(4, 3), {1, 1}, {4, 3});
  ASSERT_TRUE(sp);
  EXPECT_TRUE(adjacent(sp->p, sp->q));
  EXPECT_TRUE(region_acceptable(sp->first, {1, 1}, sp->p));
  EXPECT_TRUE(region_acceptable(sp->second, sp->q, {4, 3}));
  EXPECT_EQ(sp->first.size() + sp->second.size(), 12);

  const auto sq = split_rect(RectShape(2, 2), {1, 1}, {2, 1});
  ASSERT_TRUE(sq);
  EXPECT_EQ(sq->first, (Region{1, 1, 1, 2}));
  EXPECT_EQ(sq->second, (Region{2, 1, 1, 2}));
  EXPECT_EQ(sq->p, (Coord{1, 2}));
  EXPECT_EQ(sq->q, (Coord{2, 2}));

  EXPECT_FALSE(split_rect(RectShape(3, 1), {1, 1}, {3, 1}));
}

TEST(MergePathWithCycle, HandExample) {
  const Path h{{1, 1}, {2, 1}};
  const Cycle c{{{1, 2}, {2, 2}, {2, 3}, {1, 3}}};
  EXPECT_EQ(merge_path_with_cycle(h, c, RectShape(2, 3)),
            (Path{{1, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 2}, {2, 1}}));
}

TEST(MergePathWithCycle, StripOntoRest) {
  const Path h = rect_ham_path(RectShape(6, 5), {1, 1}, {2, 3});
  Cycle c = rect_ham_cycle(RectShape(2, 5));
  for (Coord& v : c.order) v.x += 6;
  const Path merged = merge_path_with_cycle(h, c, RectShape(8, 5));
  EXPECT_FALSE(validate_path(RectShape(8, 5), merged, {1, 1}, {2, 3}));
}

TEST(MergePathWithCycle, Errors) {
  const Path h{{1, 1}, {1, 2}};
  const Cycle far{{{4, 1}, {4, 2}, {5, 2}, {5, 1}}};
  EXPECT_EQ(error_of([&] { merge_path_with_cycle(h, far, RectShape(5, 2)); }),
            ErrorKind::NoFacingEdge);
  const Cycle overlap{{{1, 1}, {1, 2}, {2, 2}, {2, 1}}};
  EXPECT_EQ(error_of([&] { merge_path_with_cycle(h, overlap, RectShape(5, 2)); }),
            ErrorKind::InvalidPath);
}

}  // namespace
}  // namespace gridham
