#include <gtest/gtest.h>

#include <random>

#include "termrw/position.hpp"

namespace termrw {
namespace {

TEST(PositionTest, CompareExamples) {
  EXPECT_EQ(compare({}, {}), PositionRelation::Equal);
  EXPECT_EQ(compare({0}, {0, 1}), PositionRelation::Above);
  EXPECT_EQ(compare({0, 1}, {0}), PositionRelation::Below);
  EXPECT_EQ(compare({0, 1}, {1}), PositionRelation::Parallel);
  EXPECT_EQ(compare({}, {3}), PositionRelation::Above);
}

TEST(PositionTest, ConcatExamples) {
  EXPECT_EQ(concat({}, {2}), (Position{2}));
  EXPECT_EQ(concat({0, 1}, {}), (Position{0, 1}));
  EXPECT_EQ(concat({0}, {1, 0}), (Position{0, 1, 0}));
}

TEST(PositionTest, Rendering) {
  EXPECT_EQ(to_string(Position{}), "[]");
  EXPECT_EQ(to_string(Position{0, 1}), "[0,1]");
}

TEST(PositionTest, OrderingIsPreorder) {
  EXPECT_LT((Position{}), (Position{0}));
  EXPECT_LT((Position{0}), (Position{0, 0}));
  EXPECT_LT((Position{0, 5}), (Position{1}));
}

Position random_position(std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> len(0, 4), idx(0, 2);
  Position p;
  for (std::size_t n = len(rng); n > 0; --n) p.push_back(idx(rng));
  return p;
}

TEST(PositionTest, Laws) {
  std::mt19937 rng(7);
  for (int i = 0; i < 5000; ++i) {
    const auto p = random_position(rng);
    const auto q = random_position(rng);
    const auto r = random_position(rng);
    const auto pq = compare(p, q);
    const auto qp = compare(q, p);
    switch (pq) {
      case PositionRelation::Equal:
        EXPECT_EQ(p, q);
        EXPECT_EQ(qp, PositionRelation::Equal);
        break;
      case PositionRelation::Above: EXPECT_EQ(qp, PositionRelation::Below); break;
      case PositionRelation::Below: EXPECT_EQ(qp, PositionRelation::Above); break;
      case PositionRelation::Parallel:
        EXPECT_EQ(qp, PositionRelation::Parallel);
        break;
    }
    if (!q.is_root()) EXPECT_EQ(compare(p, concat(p, q)), PositionRelation::Above);
    EXPECT_EQ(concat(concat(p, q), r), concat(p, concat(q, r)));
  }
}

}  // namespace
}  // namespace termrw
