#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace smallcover::gf2 {

/// A vector over GF(2) with at most 64 coordinates, packed into one word.
///
/// Coordinate i lives in bit i of the word. The textual form lists
/// coordinate 0 first, so "1000" is the first unit vector of length 4.
/// Ordering (operator<) compares the packed words numerically, which makes
/// coordinate 0 the least significant position.
class BitVector {
 public:
  static constexpr int kMaxSize = 64;

  BitVector() = default;
  explicit BitVector(int size, std::uint64_t word = 0);

  static BitVector from_string(std::string_view bits);
  static BitVector ones(int size);
  static BitVector unit(int size, int index);

  int size() const { return size_; }
  std::uint64_t word() const { return word_; }

  bool get(int i) const;
  void set(int i, bool value = true);
  void flip(int i);

  int count() const;
  bool none() const { return word_ == 0; }
  bool any() const { return word_ != 0; }
  /// Index of the lowest set coordinate, or -1 when zero.
  int lowest() const;

  /// Parity of the coordinatewise AND.
  int dot(const BitVector& other) const;

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }

  friend bool operator==(const BitVector&, const BitVector&) = default;
  friend std::strong_ordering operator<=>(const BitVector& a, const BitVector& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return a.word_ <=> b.word_;
  }

  std::string to_string() const;

 private:
  void check_same_size(const BitVector& other) const;

  std::uint64_t word_ = 0;
  int size_ = 0;
};

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int nrows, int ncols);
  BitMatrix(int ncols, std::vector<BitVector> rows);

  static BitMatrix identity(int n);
  static BitMatrix from_strings(const std::vector<std::string>& rows);
  /// Builds a matrix whose j-th column is columns[j].
  static BitMatrix from_columns(int nrows, std::span<const BitVector> columns);

  int nrows() const { return static_cast<int>(rows_.size()); }
  int ncols() const { return ncols_; }
  bool square() const { return nrows() == ncols_; }

  const BitVector& row(int i) const { return rows_.at(i); }
  BitVector& row(int i) { return rows_.at(i); }
  const std::vector<BitVector>& rows() const { return rows_; }
  BitVector column(int j) const;

  bool get(int i, int j) const { return rows_.at(i).get(j); }
  void set(int i, int j, bool value = true) { rows_.at(i).set(j, value); }

  BitMatrix transpose() const;
  /// Column j of the result is column order[j] of this matrix.
  BitMatrix permute_columns(std::span<const int> order) const;
  /// Combination of rows selected by coeffs (coeffs.size() == nrows()).
  BitVector combine_rows(const BitVector& coeffs) const;

  friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);
  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

  std::vector<std::string> to_strings() const;

 private:
  int ncols_ = 0;
  std::vector<BitVector> rows_;
};

struct RrefResult {
  BitMatrix reduced;
  int rank = 0;
  /// Invertible nrows x nrows matrix with transform * M == reduced.
  BitMatrix transform;
  /// Pivot column of each nonzero row of `reduced`, ascending.
  std::vector<int> pivots;
};

RrefResult rref(const BitMatrix& m);
int rank(const BitMatrix& m);
/// Determinant of a square matrix; throws std::invalid_argument otherwise.
bool det(const BitMatrix& m);
std::vector<BitVector> kernel_basis(const BitMatrix& m);
/// Coefficients c with c * M == v, or nullopt if v is not in the row space.
std::optional<BitVector> row_space_contains(const BitMatrix& m, const BitVector& v);
/// Inverse of a square invertible matrix; throws std::invalid_argument otherwise.
BitMatrix inverse(const BitMatrix& m);

/// Canonical representatives of cosets v + span(basis).
///
/// The spanning set is brought to reduced echelon form once; reducing v
/// against it clears every pivot coordinate, so two vectors in the same
/// coset reduce to the same vector.
class CosetReducer {
 public:
  CosetReducer(int size, std::span<const BitVector> spanning);

  BitVector reduce(BitVector v) const;
  bool contains(const BitVector& v) const { return reduce(v).none(); }
  int dimension() const { return static_cast<int>(basis_.size()); }
  int size() const { return size_; }
  const std::vector<BitVector>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

 private:
  int size_;
  std::vector<BitVector> basis_;
  std::vector<int> pivots_;
};

BitVector coset_canonical(const BitVector& v, std::span<const BitVector> basis);

/// Sum of the subset of `vectors` selected by the bits of `mask`.
BitVector span_element(int size, std::span<const BitVector> vectors, std::uint64_t mask);

}  // namespace smallcover::gf2
