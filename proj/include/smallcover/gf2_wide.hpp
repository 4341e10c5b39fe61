#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace smallcover::gf2 {

/// Arbitrary-length GF(2) vector; used for monomial coordinates in the face ring.
class WideVector {
 public:
  WideVector() = default;
  explicit WideVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }

  bool none() const;
  /// First set index at or after `from`, or size() if there is none.
  std::size_t next_set(std::size_t from) const;
  std::vector<std::size_t> support() const;

  WideVector& operator^=(const WideVector& other);
  friend bool operator==(const WideVector&, const WideVector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Incrementally built semi-echelon basis keyed by lowest set index.
///
/// reduce() clears every pivot coordinate, so its output is the unique
/// representative of v modulo the span supported on non-pivot coordinates.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t size) : size_(size) {}

  /// Adds v to the span; returns false if it was already dependent.
  bool insert(WideVector v);
  WideVector reduce(WideVector v) const;
  bool is_pivot(std::size_t i) const { return pivot_row_.contains(i); }
  std::size_t rank() const { return rows_.size(); }
  std::size_t size() const { return size_; }

 private:
  std::size_t size_;
  std::vector<WideVector> rows_;
  std::unordered_map<std::size_t, std::size_t> pivot_row_;
};

}  // namespace smallcover::gf2
