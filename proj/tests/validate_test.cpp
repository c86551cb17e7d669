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

#include "gridham/validate.hpp"

namespace gridham {
namespace {

TEST(ValidatePath, AcceptsHamiltonianPath) {
  EXPECT_FALSE(validate_path(RectShape(2, 2), {{1, 1}, {2, 1}, {2, 2}, {1, 2}}, {1, 1}, {1, 2}));
}

TEST(ValidatePath, ReportsNonAdjacentPair) {
  auto v = validate_path(RectShape(2, 2), {{1, 1}, {2, 2}, {2, 1}, {1, 2}}, {1, 1}, {1, 2});
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, ViolationKind::NonAdjacent);
  EXPECT_EQ(v->index, 0u);
  EXPECT_EQ(v->message(), "non-adjacent at index 0->1");
}

TEST(ValidatePath, ReportsMissingVertex) {
  auto v = validate_path(RectShape(2, 2), {{1, 1}, {2, 1}, {1, 2}}, {1, 1}, {1, 2});
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, ViolationKind::MissingVertex);
  EXPECT_EQ(v->vertex, (Coord{2, 2}));
  EXPECT_EQ(v->message(), "missing vertex (2,2)");
}

TEST(ValidatePath, EndpointsRepeatsAndOutsiders) {
  const RectShape r(2, 2);
  EXPECT_EQ(validate_path(r, {}, {1, 1}, {1, 2})->kind, ViolationKind::Empty);
  EXPECT_EQ(validate_path(r, {{2, 1}, {1, 1}, {1, 2}, {2, 2}}, {1, 1}, {2, 2})->kind,
            ViolationKind::WrongStart);
  EXPECT_EQ(validate_path(r, {{1, 1}, {2, 1}, {2, 2}, {1, 2}}, {1, 1}, {2, 2})->kind,
            ViolationKind::WrongEnd);
  EXPECT_EQ(validate_path(r, {{1, 1}, {2, 1}, {1, 1}, {1, 2}}, {1, 1}, {1, 2})->kind,
            ViolationKind::Repeated);
  EXPECT_EQ(validate_path(r, {{1, 1}, {3, 1}, {1, 2}}, {1, 1}, {1, 2})->kind,
            ViolationKind::OutsideShape);
  // A vertex of the bounding box that is not in the L shape.
  EXPECT_EQ(validate_path(LShape(4, 3), {{1, 1}, {5, 4}}, {1, 1}, {5, 4})->kind,
            ViolationKind::OutsideShape);
}

TEST(ValidateCycle, Examples) {
  EXPECT_FALSE(validate_cycle(RectShape(2, 2), Cycle{{{1, 1}, {1, 2}, {2, 2}, {2, 1}}}));
  auto missing = validate_cycle(RectShape(2, 3), Cycle{{{1, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 2}}});
  ASSERT_TRUE(missing);
  EXPECT_EQ(missing->kind, ViolationKind::MissingVertex);
  auto nonadj = validate_cycle(RectShape(2, 2), Cycle{{{1, 1}, {2, 2}, {1, 2}, {2, 1}}});
  ASSERT_TRUE(nonadj);
  EXPECT_EQ(nonadj->kind, ViolationKind::NonAdjacent);
}

TEST(ValidateCycle, WrapAroundMustBeAnEdge) {
  // Hamiltonian path of R(3,2) whose ends are not adjacent.
  auto v = validate_cycle(RectShape(3, 2), Cycle{{{1, 1}, {1, 2}, {2, 2}, {2, 1}, {3, 1}, {3, 2}}});
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, ViolationKind::NonAdjacent);
  EXPECT_EQ(v->index, 5u);
}

TEST(ValidateCycle, RegionOverloadUsesGlobalCoordinates) {
  const Region band{7, 1, 2, 2};
  EXPECT_FALSE(validate_cycle(band, Cycle{{{7, 1}, {7, 2}, {8, 2}, {8, 1}}}));
  auto v = validate_cycle(band, Cycle{{{7, 1}, {7, 2}, {8, 2}, {9, 1}}});
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, ViolationKind::OutsideShape);
  EXPECT_EQ(v->vertex, (Coord{9, 1}));
}

}  // namespace
}  // namespace gridham
