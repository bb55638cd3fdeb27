#include <gtest/gtest.h>

#include <stdexcept>

#include "qfg/dynkin.hpp"

using namespace qfg;

TEST(Dynkin, Distance) {
  EXPECT_EQ(distance(DynkinA(3), 1, 3), 2);
  EXPECT_EQ(distance(DynkinA(3), 2, 2), 0);
  EXPECT_EQ(distance(DynkinA(5), 2, 5), 3);
  EXPECT_EQ(distance(DynkinA(5), 5, 2), 3);
}

TEST(Dynkin, BoundaryDistance) {
  EXPECT_EQ(boundary_distance(DynkinA(3), {2, 2}), 1);
  EXPECT_EQ(boundary_distance(DynkinA(3), {1, 2}), 0);
  EXPECT_EQ(boundary_distance(DynkinA(5), {3, 3}), 2);
  EXPECT_EQ(boundary_distance_within({2, 5}, {3, 4}), 1);
  EXPECT_EQ(boundary_distance_within({2, 5}, {2, 2}), 0);
}

TEST(Dynkin, DualNodeAndCoxeter) {
  EXPECT_EQ(dual_node(Subdiagram{1, 3}, 1), 3);
  EXPECT_EQ(dual_node(Subdiagram{2, 2}, 2), 2);
  EXPECT_EQ(dual_node(Subdiagram{1, 2}, 1), 2);
  EXPECT_EQ(dual_coxeter(Subdiagram{1, 3}), 4);
  EXPECT_EQ(dual_coxeter(Subdiagram{1, 1}), 2);
  EXPECT_EQ(dual_coxeter(Subdiagram{1, 2}), 3);
  EXPECT_EQ(dual_node(DynkinA(4), 1), 4);
  EXPECT_EQ(dual_coxeter(DynkinA(4)), 5);
}

TEST(Dynkin, DualNodeIsAnInvolution) {
  for (int lo = 1; lo <= 6; ++lo) {
    for (int hi = lo; hi <= 6; ++hi) {
      for (int i = lo; i <= hi; ++i) {
        const Subdiagram j{lo, hi};
        EXPECT_TRUE(j.contains(dual_node(j, i)));
        EXPECT_EQ(dual_node(j, dual_node(j, i)), i);
      }
    }
  }
}

TEST(Dynkin, Errors) {
  EXPECT_THROW(DynkinA(0), std::invalid_argument);
  EXPECT_THROW(distance(DynkinA(3), 0, 2), std::out_of_range);
  EXPECT_THROW(distance(DynkinA(3), 1, 4), std::out_of_range);
  EXPECT_THROW(boundary_distance(DynkinA(3), {2, 4}), std::out_of_range);
  EXPECT_THROW(dual_node(Subdiagram{2, 3}, 1), std::out_of_range);
}

TEST(Dynkin, SubdiagramContainment) {
  EXPECT_TRUE((Subdiagram{1, 4}.contains(Subdiagram{2, 3})));
  EXPECT_FALSE((Subdiagram{2, 3}.contains(Subdiagram{1, 3})));
  EXPECT_EQ(interval(4, 2), (Subdiagram{2, 4}));
  EXPECT_EQ((Subdiagram{2, 4}.size()), 3);
}
