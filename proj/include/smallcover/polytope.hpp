#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "smallcover/gf2.hpp"

namespace smallcover {

using gf2::BitVector;

/// Edges of one polygon factor selected by a bitmask (bit j = edge j).
struct FactorSubset {
  int factor = 0;
  int sides = 0;
  std::uint64_t mask = 0;
};

/// Reduced rational Betti numbers of a union of polygon edges in degrees -1, 0, 1.
struct ReducedBettiProfile {
  int b_minus1 = 0;
  int b0 = 0;
  int b1 = 0;
  friend bool operator==(const ReducedBettiProfile&, const ReducedBettiProfile&) = default;
};

/// The product P_{m_1} x ... x P_{m_n} of polygons.
///
/// Facets are indexed factor by factor: edge j (0-based, cyclic) of factor i
/// has flat index offset(i) + j. A vertex is a tuple of edges, one per
/// factor; it is the intersection of edges j_i and j_i + 1 of every factor.
class PolygonProduct {
 public:
  PolygonProduct() = default;
  explicit PolygonProduct(std::vector<int> sides);

  int factor_count() const { return static_cast<int>(sides_.size()); }
  int facet_count() const { return facets_; }
  int dimension() const { return 2 * factor_count(); }
  int sides(int factor) const { return sides_.at(factor); }
  int offset(int factor) const { return offsets_.at(factor); }
  const std::vector<int>& side_list() const { return sides_; }

  int facet(int factor, int edge) const;
  /// (factor, edge) of a flat facet index.
  std::pair<int, int> locate(int flat) const;

  std::uint64_t vertex_count() const;
  /// The 2n facets meeting at a vertex, in the order of the vertex matrix.
  std::vector<int> vertex_facets(std::span<const int> edges) const;
  /// Calls fn on every vertex tuple in lexicographic order (last factor fastest).
  void for_each_vertex(const std::function<void(std::span<const int>)>& fn) const;

  /// chi_i: indicator of all edges of one factor.
  BitVector factor_weight(int factor) const;
  std::uint64_t factor_bits(const BitVector& omega, int factor) const;
  std::vector<FactorSubset> split(const BitVector& omega) const;
  BitVector embed(const FactorSubset& subset) const;

  /// Product with factors listed in `order`, plus the matching column order.
  PolygonProduct reordered(std::span<const int> order, std::vector<int>* column_order) const;

  friend bool operator==(const PolygonProduct&, const PolygonProduct&) = default;

 private:
  std::vector<int> sides_;
  std::vector<int> offsets_;
  int facets_ = 0;
};

/// Number of maximal cyclic runs of selected edges on an m-cycle.
int component_count(int m, std::uint64_t edges);
ReducedBettiProfile factor_reduced_betti(int m, std::uint64_t edges);

/// Reduced Betti numbers of P_omega; entry k is degree k - 1, k = 0..2n.
std::vector<std::int64_t> omega_reduced_betti(const PolygonProduct& p, const BitVector& omega);

/// Genus 1 + (m - 4) 2^(m-3) of the real moment-angle surface over an m-gon.
std::int64_t genus(int m);

/// Betti numbers of the real moment-angle manifold from the factorwise
/// generating polynomials of edge-subset profiles.
std::vector<std::int64_t> rz_poincare(const PolygonProduct& p);
/// The same numbers summed over all 2^m vectors omega one at a time.
std::vector<std::int64_t> rz_poincare_exhaustive(const PolygonProduct& p);

}  // namespace smallcover
