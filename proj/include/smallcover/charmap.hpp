#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "smallcover/gf2.hpp"
#include "smallcover/polytope.hpp"

namespace smallcover {

using gf2::BitMatrix;

/// A 2n x m matrix over GF(2), columns in the facet order of its product.
///
/// Validity (every vertex minor invertible) is decided on construction;
/// invalid matrices can be held and inspected but the analyses reject them.
class CharMatrix {
 public:
  CharMatrix(PolygonProduct product, BitMatrix matrix);

  const PolygonProduct& product() const { return product_; }
  const BitMatrix& matrix() const { return matrix_; }
  int rows() const { return matrix_.nrows(); }
  int facets() const { return matrix_.ncols(); }
  /// Characteristic vector of a facet as a vector of length 2n.
  const BitVector& column(int flat) const { return columns_.at(flat); }

  BitMatrix vertex_minor(std::span<const int> edges) const;

  bool valid() const { return !invalid_vertex_.has_value(); }
  /// First vertex (in lexicographic order) with a singular minor.
  const std::optional<std::vector<int>>& invalid_vertex() const { return invalid_vertex_; }
  /// Throws NotCharacteristic when invalid.
  void require_valid() const;

  /// Same product and row space test, for D-J equivalence.
  bool same_row_space(const CharMatrix& other) const;
  CharMatrix permute_columns(const PolygonProduct& product, std::span<const int> order) const;

 private:
  PolygonProduct product_;
  BitMatrix matrix_;
  std::vector<BitVector> columns_;
  std::optional<std::vector<int>> invalid_vertex_;
};

struct Validation {
  bool valid = false;
  std::vector<int> witness;  // vertex tuple when invalid
};

Validation validate(const CharMatrix& lambda);

struct Orientability {
  bool orientable = false;
  std::optional<BitVector> witness;  // row combination summing to 1_m
};

Orientability orientable(const CharMatrix& lambda);

/// delta^+ (edges 1 and 3) or delta^- (edges 2 and 4) of the a-th square factor.
struct OppositeWeight {
  int square = 0;  // index among the square factors, in factor order
  bool plus = true;
  friend auto operator<=>(const OppositeWeight&, const OppositeWeight&) = default;
};

struct SquarePair {
  OppositeWeight first;
  OppositeWeight second;
  friend bool operator==(const SquarePair&, const SquarePair&) = default;
};

using SquareMatching = std::vector<SquarePair>;

std::vector<int> square_factors(const PolygonProduct& p);
std::pair<BitVector, BitVector> opposite_pair_weights(const PolygonProduct& p, int factor);
BitVector weight_vector(const PolygonProduct& p, const OppositeWeight& w);

/// Lexicographically smallest perfect matching of the opposite-pair weights
/// in which every pair sums into the row space.
std::optional<SquareMatching> find_square_matching(const CharMatrix& lambda);
std::vector<SquareMatching> all_square_matchings(const CharMatrix& lambda);

struct Regrouping {
  CharMatrix regrouped;
  /// Column j of the regrouped matrix is column colperm[j] of the input.
  std::vector<int> colperm;
};

/// Rebuilds the cube part so that each matched pair forms one square whose
/// cyclic edge order interleaves the pair's supports (a1, b1, a2, b2).
Regrouping regroup(const CharMatrix& lambda, const SquareMatching& matching);

struct CompatibilityCertificate {
  SquareMatching matching;
  std::vector<int> colperm;
  CharMatrix regrouped;
  /// Per factor of the regrouped product: row coefficients summing to chi_i.
  std::vector<BitVector> chi_witnesses;
};

struct Refusal {
  enum class Reason { odd_factor, weight_not_in_row_space, no_square_matching };
  Reason reason;
  int factor = -1;  // offending factor, -1 for the cube part as a whole
  std::string message;
};

using Compatibility = std::variant<CompatibilityCertificate, Refusal>;

Compatibility factor_compatible(const CharMatrix& lambda);
/// Certificate for a caller-chosen perfect matching of the square weights.
Compatibility factor_compatible_with(const CharMatrix& lambda, const SquareMatching& matching);

inline const CompatibilityCertificate* certificate(const Compatibility& c) {
  return std::get_if<CompatibilityCertificate>(&c);
}
inline const Refusal* refusal(const Compatibility& c) { return std::get_if<Refusal>(&c); }
const CompatibilityCertificate* certificate(Compatibility&&) = delete;
const Refusal* refusal(Compatibility&&) = delete;

inline bool certified(const Compatibility& c) {
  return std::holds_alternative<CompatibilityCertificate>(c);
}

/// Certificate or NotFactorCompatible.
CompatibilityCertificate require_compatible(const CharMatrix& lambda);

}  // namespace smallcover
