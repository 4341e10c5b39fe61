#include <gtest/gtest.h>

#include "smallcover/enumerate.hpp"
#include "smallcover/errors.hpp"
#include "smallcover/obstruct.hpp"

using namespace smallcover;

namespace {

CharMatrix make(std::vector<int> sides, std::vector<std::string> rows) {
  return CharMatrix(PolygonProduct(std::move(sides)), BitMatrix::from_strings(rows));
}

}  // namespace

TEST(Triangle, FlagsFirstTriangleFactor) {
  EXPECT_EQ(triangle_obstruction(PolygonProduct({3, 6})), 0);
  EXPECT_EQ(triangle_obstruction(PolygonProduct({4, 4})), std::nullopt);
  EXPECT_EQ(triangle_obstruction(PolygonProduct({6, 3, 8})), 1);
}

TEST(Triangle, EveryMatrixOverATriangleProductRefusesCompatibility) {
  for (const auto& sides : std::vector<std::vector<int>>{{3}, {3, 4}, {4, 3}, {3, 6}}) {
    for (const auto& c : enumerate_charmaps(PolygonProduct(sides))) {
      const auto compat = factor_compatible(c);
      const auto* r = refusal(compat);
      ASSERT_NE(r, nullptr);
      EXPECT_EQ(r->reason, Refusal::Reason::odd_factor);
      EXPECT_EQ(r->factor, *triangle_obstruction(c.product()));
      EXPECT_EQ(symplectic_verdict(c).kind, SymplecticVerdict::Kind::triangle_factor);
    }
  }
}

TEST(DetSum, EqualsProductOfSidesModTwo) {
  for (const auto& sides : std::vector<std::vector<int>>{{3, 3}, {4, 4}, {3, 5}, {3, 4}, {5}}) {
    int prod = 1;
    for (int m : sides) prod *= m;
    for (const auto& c : enumerate_charmaps(PolygonProduct(sides))) {
      EXPECT_EQ(det_sum_identity(c), prod % 2 == 1);
    }
  }
  EXPECT_THROW(det_sum_identity(make({4}, {"1100", "0011"})), NotCharacteristic);
}

TEST(AllOdd, NoOrientableCoverOverOddProducts) {
  for (const auto& sides : std::vector<std::vector<int>>{{3}, {5}, {3, 3}, {3, 5}, {5, 5}}) {
    const auto classes = enumerate_charmaps(PolygonProduct(sides));
    EXPECT_FALSE(classes.empty());
    for (const auto& c : classes) {
      EXPECT_FALSE(orientable(c).orientable);
      const auto report = all_odd_obstruction(c);
      EXPECT_TRUE(report.applicable);
      EXPECT_TRUE(report.det_sum);
      EXPECT_EQ(symplectic_verdict(c).kind, sides[0] == 3 ? SymplecticVerdict::Kind::triangle_factor
                                                          : SymplecticVerdict::Kind::all_odd);
    }
  }
}

TEST(AllOdd, InapplicableWithAnEvenFactor) {
  const auto c = enumerate_charmaps(PolygonProduct({4, 6})).front();
  EXPECT_FALSE(all_odd_obstruction(c).applicable);
}

TEST(EvenSides, HexagonPair) {
  const auto c = make({6, 6}, {"101010101000", "111111000000", "000000101010", "000000111111"});
  for (const auto& e : even_sides_consistency(c)) {
    EXPECT_TRUE(e.weight_in_row_space);
    EXPECT_EQ(e.sides, 6);
  }
  EXPECT_EQ(symplectic_verdict(c).kind, SymplecticVerdict::Kind::symplectic);
}

TEST(EvenSides, OddFactorWeightNeverInRowSpace) {
  for (const auto& sides : std::vector<std::vector<int>>{{3, 4}, {5, 4}, {3, 3}}) {
    for (const auto& c : enumerate_charmaps(PolygonProduct(sides))) {
      const auto entries = even_sides_consistency(c);
      for (const auto& e : entries) {
        if (e.sides % 2) EXPECT_FALSE(e.weight_in_row_space);
      }
    }
  }
  const auto hex = make({6}, {"111111", "101010"});
  EXPECT_TRUE(even_sides_consistency(hex).front().weight_in_row_space);
}

TEST(Verdict, UnknownForOrientableNonCompatibleInstances) {
  // Orientable but not factor-compatible instances exist over [4,6].
  bool seen = false;
  for (const auto& c : enumerate_charmaps(PolygonProduct({4, 6}))) {
    if (orientable(c).orientable && !certified(factor_compatible(c))) {
      EXPECT_EQ(symplectic_verdict(c).kind, SymplecticVerdict::Kind::unknown);
      seen = true;
    }
  }
  EXPECT_TRUE(seen);
}
