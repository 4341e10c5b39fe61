#include <gtest/gtest.h>

#include "smallcover/enumerate.hpp"
#include "smallcover/errors.hpp"
#include "smallcover/hodge.hpp"

using namespace smallcover;

namespace {

CharMatrix make(std::vector<int> sides, std::vector<std::string> rows) {
  return CharMatrix(PolygonProduct(std::move(sides)), BitMatrix::from_strings(rows));
}

CharMatrix hexagon_pair() {
  return make({6, 6}, {"101010101000", "111111000000", "000000101010", "000000111111"});
}

HodgePolynomial diamond(int n, std::vector<std::vector<std::int64_t>> h) {
  HodgePolynomial out(n);
  out.h = std::move(h);
  return out;
}

}  // namespace

TEST(Hodge, HexagonPairMultiplicities) {
  const auto c = hexagon_pair();
  const CharacterGroup group(c);
  const auto trivial = group.character_of(BitVector(12));
  const auto rho = group.character_of(BitVector::from_string("101010000000"));
  // The same character on the second factor.
  EXPECT_EQ(group.character_of(BitVector::from_string("000000101000")), rho);
  EXPECT_EQ(group.character_of(BitVector::from_string("000000000010")), rho);

  const auto a1 = multiplicities(c, 0);
  const auto a2 = multiplicities(c, 1);
  EXPECT_EQ(a1.multiplicity(trivial), 0);
  EXPECT_EQ(a1.multiplicity(rho), 2);
  EXPECT_EQ(a2.multiplicity(trivial), 2);
  EXPECT_EQ(a2.multiplicity(rho), 1);
  EXPECT_EQ(a1.genus, genus(6));
  EXPECT_EQ(a2.genus, genus(6));
}

TEST(Hodge, HexagonPairInvariants) {
  const auto a = hodge_analysis(hexagon_pair());
  EXPECT_EQ(a.t, (std::vector<std::int64_t>{1, 0, 2, 2}));
  EXPECT_EQ(a.T, (std::vector<std::int64_t>{1, 2, 2}));
  EXPECT_TRUE(a.averaging_checked);
  EXPECT_EQ(a.polynomial, diamond(2, {{1, 2, 2}, {2, 6, 2}, {2, 2, 1}}));
  EXPECT_EQ(poincare_from_hodge(a.polynomial), (GradedDims{1, 4, 10, 4, 1}));
}

TEST(Hodge, TorusTimesTorus) {
  const auto c = make({4, 4}, {"10100000", "01010000", "00001010", "00000101"});
  const auto a = hodge_analysis(c);
  EXPECT_EQ(a.T, (std::vector<std::int64_t>{1, 2, 1}));
  EXPECT_EQ(a.polynomial, diamond(2, {{1, 2, 1}, {2, 4, 2}, {1, 2, 1}}));
}

TEST(Hodge, TorusOverSquare) {
  const auto a = hodge_analysis(make({4}, {"1010", "0101"}));
  EXPECT_EQ(a.polynomial, diamond(1, {{1, 1}, {1, 1}}));
}

TEST(Hodge, NonCompatibleInputsAreRefused) {
  EXPECT_THROW(hodge_polynomial(make({4}, {"1011", "0101"})), NotFactorCompatible);
  EXPECT_THROW(hodge_polynomial(make({4}, {"1100", "0011"})), NotCharacteristic);
  EXPECT_THROW(multiplicities(make({6}, {"101011", "010101"}), 0), NotFactorCompatible);
}

TEST(Hodge, ConvolutionAndAveragingAgree) {
  for (const auto& sides : std::vector<std::vector<int>>{{4, 4}, {4, 6}}) {
    for (const auto& c : enumerate_charmaps(PolygonProduct(sides))) {
      const auto compat = factor_compatible(c);
      const auto* cert = certificate(compat);
      if (!cert) continue;
      std::vector<MultiplicityTable> tables;
      for (int i = 0; i < 2; ++i) tables.push_back(multiplicities(cert->regrouped, i));
      const CharacterGroup group(cert->regrouped);
      for (FactorSet s = 0; s < 4; ++s) {
        EXPECT_EQ(t_by_convolution(tables, s), t_by_averaging(tables, s, group).value());
        EXPECT_EQ(t_invariant(tables, s, cert->regrouped), t_by_convolution(tables, s));
      }
    }
  }
}

TEST(Hodge, SingleFactorSubsetsCountInvariantForms) {
  // t_{i} is the multiplicity of the trivial character.
  const auto c = hexagon_pair();
  const CharacterGroup group(c);
  std::vector<MultiplicityTable> tables{multiplicities(c, 0), multiplicities(c, 1)};
  for (int i = 0; i < 2; ++i) {
    EXPECT_EQ(t_by_convolution(tables, FactorSet{1} << i),
              tables[i].multiplicity(group.character_of(BitVector(12))));
  }
}

TEST(Hodge, ExpansionsAgree) {
  const std::vector<std::int64_t> t{1, 0, 2, 2};
  const std::vector<std::int64_t> T{1, 2, 2};
  EXPECT_EQ(hodge_from_t(2, t), hodge_from_T(T));
  EXPECT_THROW(hodge_from_t(2, std::vector<std::int64_t>{1, 2}), std::invalid_argument);
}

TEST(Hodge, SymmetryCheck) {
  EXPECT_TRUE(diamond(1, {{1, 3}, {3, 1}}).symmetric());
  EXPECT_FALSE(diamond(1, {{1, 3}, {2, 1}}).symmetric());
  EXPECT_FALSE(diamond(1, {{2, 3}, {3, 2}}).symmetric());
}

TEST(RecoverT, PeelsFromTheBottom) {
  EXPECT_EQ(recover_T_from_poincare({1, 4, 10, 4, 1}, 2), (std::vector<std::int64_t>{1, 2, 2}));
  EXPECT_EQ(recover_T_from_poincare({1, 4, 6, 4, 1}, 2), (std::vector<std::int64_t>{1, 2, 1}));
  // (1 + t^2)^2 alone.
  EXPECT_EQ(recover_T_from_poincare({1, 0, 2, 0, 1}, 2), (std::vector<std::int64_t>{1, 0, 0}));
  EXPECT_EQ(recover_T_from_poincare({1, 2, 1}, 1), (std::vector<std::int64_t>{1, 1}));
}

TEST(RecoverT, RejectsInconsistentVectors) {
  EXPECT_THROW(recover_T_from_poincare({1, 0, 1, 0, 1}, 2), std::invalid_argument);
  EXPECT_THROW(recover_T_from_poincare({1, 3, 1}, 1), std::invalid_argument);
  EXPECT_THROW(recover_T_from_poincare({1, 1, 0}, 1), std::invalid_argument);
  EXPECT_THROW(recover_T_from_poincare({1, 2}, 1), std::invalid_argument);
}

TEST(RecoverT, RoundTripsEveryExpansion) {
  for (std::int64_t a = 0; a < 5; ++a) {
    for (std::int64_t b = 0; b < 5; ++b) {
      for (std::int64_t c = 0; c < 5; ++c) {
        const std::vector<std::int64_t> T{1, a, b, c};
        const auto h = hodge_from_T(T);
        EXPECT_EQ(recover_T_from_poincare(poincare_from_hodge(h), 3), T);
      }
    }
  }
}
