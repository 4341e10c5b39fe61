#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "smallcover/gf2.hpp"
#include "smallcover/gf2_wide.hpp"

using namespace smallcover::gf2;

namespace {

BitMatrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
  std::vector<BitVector> r;
  for (int i = 0; i < rows; ++i) {
    const std::uint64_t mask = cols == 64 ? ~0ULL : (1ULL << cols) - 1;
    r.emplace_back(cols, rng() & mask);
  }
  return BitMatrix(cols, r);
}

// Every element of the row space, by brute force.
std::set<std::uint64_t> span_words(const BitMatrix& m) {
  std::set<std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < (1ULL << m.nrows()); ++mask) {
    std::uint64_t w = 0;
    for (int i = 0; i < m.nrows(); ++i) {
      if ((mask >> i) & 1U) w ^= m.row(i).word();
    }
    out.insert(w);
  }
  return out;
}

int rank_oracle(const BitMatrix& m) {
  const auto size = span_words(m).size();
  int r = 0;
  while ((std::size_t{1} << r) < size) ++r;
  return r;
}

bool det_oracle(const BitMatrix& m) {
  std::vector<int> perm(m.nrows());
  std::iota(perm.begin(), perm.end(), 0);
  bool sum = false;
  do {
    bool term = true;
    for (int i = 0; i < m.nrows() && term; ++i) term = m.get(i, perm[i]);
    sum ^= term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

}  // namespace

TEST(BitVector, StringRoundTripPutsCoordinateZeroFirst) {
  const auto v = BitVector::from_string("1011");
  EXPECT_EQ(v.size(), 4);
  EXPECT_TRUE(v.get(0));
  EXPECT_FALSE(v.get(1));
  EXPECT_EQ(v.word(), 0b1101u);
  EXPECT_EQ(v.to_string(), "1011");
  EXPECT_EQ(v.count(), 3);
  EXPECT_EQ(v.lowest(), 0);
}

TEST(BitVector, OrderIsNumericWithCoordinateZeroLowest) {
  EXPECT_LT(BitVector::from_string("1000"), BitVector::from_string("0100"));
  EXPECT_LT(BitVector::from_string("1110"), BitVector::from_string("0001"));
}

TEST(BitVector, RejectsBadInput) {
  EXPECT_THROW(BitVector::from_string("10x1"), std::invalid_argument);
  EXPECT_THROW(BitVector(65), std::invalid_argument);
  EXPECT_THROW(BitVector(3) ^ BitVector(4), std::invalid_argument);
}

TEST(BitMatrix, RankMatchesSpanSize) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 7);
    const int cols = 1 + static_cast<int>(rng() % 9);
    const auto m = random_matrix(rng, rows, cols);
    EXPECT_EQ(rank(m), rank_oracle(m));
  }
}

TEST(BitMatrix, DeterminantMatchesLeibniz) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const auto m = random_matrix(rng, n, n);
    EXPECT_EQ(det(m), det_oracle(m));
  }
  EXPECT_THROW(det(BitMatrix(2, 3)), std::invalid_argument);
}

TEST(BitMatrix, RrefTransformReproducesReducedForm) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = random_matrix(rng, 1 + rng() % 6, 1 + rng() % 10);
    const auto r = rref(m);
    EXPECT_EQ(r.transform * m, r.reduced);
    EXPECT_EQ(rank(r.transform), m.nrows());
    for (int i = 0; i < r.rank; ++i) {
      for (int k = 0; k < r.rank; ++k) EXPECT_EQ(r.reduced.get(k, r.pivots[i]), k == i);
    }
    EXPECT_EQ(span_words(r.reduced), span_words(m));
  }
}

TEST(BitMatrix, KernelIsAnnihilatedAndHasFullDimension) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = random_matrix(rng, 1 + rng() % 6, 1 + rng() % 10);
    const auto ker = kernel_basis(m);
    EXPECT_EQ(static_cast<int>(ker.size()), m.ncols() - rank_oracle(m));
    for (const auto& v : ker) {
      for (const auto& row : m.rows()) EXPECT_EQ(row.dot(v), 0);
    }
    if (!ker.empty()) EXPECT_EQ(rank(BitMatrix(m.ncols(), ker)), static_cast<int>(ker.size()));
  }
}

TEST(BitMatrix, InverseOfInvertibleMatrices) {
  std::mt19937_64 rng(15);
  int seen = 0;
  while (seen < 100) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const auto m = random_matrix(rng, n, n);
    if (!det_oracle(m)) {
      EXPECT_THROW(inverse(m), std::invalid_argument);
      continue;
    }
    ++seen;
    EXPECT_EQ(m * inverse(m), BitMatrix::identity(n));
  }
}

TEST(BitMatrix, RowSpaceMembershipWitness) {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = random_matrix(rng, 1 + rng() % 5, 1 + rng() % 7);
    const auto span = span_words(m);
    for (std::uint64_t w = 0; w < (1ULL << m.ncols()); ++w) {
      const BitVector v(m.ncols(), w);
      const auto c = row_space_contains(m, v);
      EXPECT_EQ(c.has_value(), span.contains(w));
      if (c) EXPECT_EQ(m.combine_rows(*c), v);
    }
  }
}

TEST(BitMatrix, PermuteColumnsAndTranspose) {
  const auto m = BitMatrix::from_strings({"1100", "0011"});
  const std::vector<int> order{2, 0, 3, 1};
  EXPECT_EQ(m.permute_columns(order).to_strings(), (std::vector<std::string>{"0101", "1010"}));
  EXPECT_EQ(m.transpose().to_strings(), (std::vector<std::string>{"10", "10", "01", "01"}));
  EXPECT_EQ(m.column(2).to_string(), "01");
}

TEST(CosetReducer, CanonicalRepresentativePerCoset) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int size = 1 + static_cast<int>(rng() % 7);
    const auto m = random_matrix(rng, 1 + rng() % 4, size);
    const CosetReducer reducer(size, m.rows());
    const auto span = span_words(m);
    for (std::uint64_t w = 0; w < (1ULL << size); ++w) {
      const BitVector rep = reducer.reduce(BitVector(size, w));
      EXPECT_TRUE(span.contains(rep.word() ^ w));
      for (auto s : span) EXPECT_EQ(reducer.reduce(BitVector(size, w ^ s)), rep);
    }
    EXPECT_EQ(reducer.dimension(), rank_oracle(m));
  }
}

TEST(EchelonBasis, InsertReportsDependenceAndReduceClearsPivots) {
  EchelonBasis basis(5);
  WideVector a(5), b(5), c(5);
  a.flip(0);
  a.flip(3);
  b.flip(1);
  b.flip(3);
  c.flip(0);
  c.flip(1);
  EXPECT_TRUE(basis.insert(a));
  EXPECT_TRUE(basis.insert(b));
  EXPECT_FALSE(basis.insert(c));
  EXPECT_EQ(basis.rank(), 2u);
  WideVector d(5);
  d.flip(0);
  const auto r = basis.reduce(d);
  EXPECT_FALSE(r.get(0));
  EXPECT_FALSE(r.get(1));
  EXPECT_TRUE(r.get(3));
}
