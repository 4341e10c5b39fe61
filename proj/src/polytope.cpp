#include "smallcover/polytope.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace smallcover {

namespace {

std::uint64_t full_mask(int m) {
  return m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
}

std::vector<std::int64_t> multiply(const std::vector<std::int64_t>& a,
                                   const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

PolygonProduct::PolygonProduct(std::vector<int> sides) : sides_(std::move(sides)) {
  if (sides_.empty()) throw std::invalid_argument("a product of polygons needs a factor");
  for (int s : sides_) {
    if (s < 3) {
      throw std::invalid_argument("polygon factors need at least 3 sides, got " +
                                  std::to_string(s));
    }
    offsets_.push_back(facets_);
    facets_ += s;
  }
  if (facets_ > BitVector::kMaxSize) {
    throw std::invalid_argument("at most 64 facets are supported, got " +
                                std::to_string(facets_));
  }
}

int PolygonProduct::facet(int factor, int edge) const {
  const int m = sides(factor);
  if (edge < 0 || edge >= m) throw std::out_of_range("edge index out of range");
  return offsets_[factor] + edge;
}

std::pair<int, int> PolygonProduct::locate(int flat) const {
  if (flat < 0 || flat >= facets_) throw std::out_of_range("facet index out of range");
  int i = factor_count() - 1;
  while (offsets_[i] > flat) --i;
  return {i, flat - offsets_[i]};
}

std::uint64_t PolygonProduct::vertex_count() const {
  std::uint64_t n = 1;
  for (int s : sides_) n *= static_cast<std::uint64_t>(s);
  return n;
}

std::vector<int> PolygonProduct::vertex_facets(std::span<const int> edges) const {
  if (static_cast<int>(edges.size()) != factor_count()) {
    throw std::invalid_argument("vertex tuple needs one edge per factor");
  }
  std::vector<int> out;
  out.reserve(2 * edges.size());
  for (int i = 0; i < factor_count(); ++i) {
    const int j = edges[i];
    if (j < 0 || j >= sides_[i]) throw std::out_of_range("vertex tuple entry out of range");
    out.push_back(offsets_[i] + j);
    out.push_back(offsets_[i] + (j + 1) % sides_[i]);
  }
  return out;
}

void PolygonProduct::for_each_vertex(
    const std::function<void(std::span<const int>)>& fn) const {
  std::vector<int> j(sides_.size(), 0);
  while (true) {
    fn(j);
    int i = factor_count() - 1;
    while (i >= 0 && ++j[i] == sides_[i]) {
      j[i] = 0;
      --i;
    }
    if (i < 0) return;
  }
}

BitVector PolygonProduct::factor_weight(int factor) const {
  return embed({factor, sides(factor), full_mask(sides(factor))});
}

std::uint64_t PolygonProduct::factor_bits(const BitVector& omega, int factor) const {
  if (omega.size() != facets_) throw std::invalid_argument("omega length mismatch");
  return (omega.word() >> offsets_.at(factor)) & full_mask(sides_[factor]);
}

std::vector<FactorSubset> PolygonProduct::split(const BitVector& omega) const {
  std::vector<FactorSubset> out;
  out.reserve(sides_.size());
  for (int i = 0; i < factor_count(); ++i) {
    out.push_back({i, sides_[i], factor_bits(omega, i)});
  }
  return out;
}

BitVector PolygonProduct::embed(const FactorSubset& subset) const {
  if (subset.sides != sides(subset.factor) || (subset.mask & ~full_mask(subset.sides)) != 0) {
    throw std::invalid_argument("factor subset does not fit its factor");
  }
  return BitVector(facets_, subset.mask << offsets_[subset.factor]);
}

PolygonProduct PolygonProduct::reordered(std::span<const int> order,
                                         std::vector<int>* column_order) const {
  if (static_cast<int>(order.size()) != factor_count()) {
    throw std::invalid_argument("factor order has wrong length");
  }
  std::vector<int> sides;
  std::vector<bool> seen(sides_.size(), false);
  if (column_order) column_order->clear();
  for (int f : order) {
    if (f < 0 || f >= factor_count() || seen[f]) {
      throw std::invalid_argument("factor order is not a permutation");
    }
    seen[f] = true;
    sides.push_back(sides_[f]);
    if (column_order) {
      for (int j = 0; j < sides_[f]; ++j) column_order->push_back(offsets_[f] + j);
    }
  }
  return PolygonProduct(std::move(sides));
}

int component_count(int m, std::uint64_t edges) {
  const std::uint64_t all = full_mask(m);
  edges &= all;
  if (edges == 0) return 0;
  if (edges == all) return 1;
  // A run starts at every selected edge whose cyclic predecessor is unselected.
  const std::uint64_t prev = ((edges << 1) | (edges >> (m - 1))) & all;
  return std::popcount(edges & ~prev);
}

ReducedBettiProfile factor_reduced_betti(int m, std::uint64_t edges) {
  const std::uint64_t all = full_mask(m);
  edges &= all;
  if (edges == 0) return {1, 0, 0};
  if (edges == all) return {0, 0, 1};
  return {0, component_count(m, edges) - 1, 0};
}

std::vector<std::int64_t> omega_reduced_betti(const PolygonProduct& p, const BitVector& omega) {
  // Joins add the shifted degree q + 1, so each factor contributes the
  // polynomial b_{-1} + b_0 x + b_1 x^2 and degree q sits at x^(q+1).
  std::vector<std::int64_t> acc{1};
  for (const auto& part : p.split(omega)) {
    const auto prof = factor_reduced_betti(part.sides, part.mask);
    acc = multiply(acc, {prof.b_minus1, prof.b0, prof.b1});
  }
  return acc;
}

std::int64_t genus(int m) {
  if (m < 3) throw std::invalid_argument("genus needs m >= 3");
  if (m > 60) throw std::invalid_argument("genus overflows 64 bits for m > 60");
  return 1 + static_cast<std::int64_t>(m - 4) * (std::int64_t{1} << (m - 3));
}

std::vector<std::int64_t> rz_poincare(const PolygonProduct& p) {
  std::vector<std::int64_t> acc{1};
  for (int i = 0; i < p.factor_count(); ++i) {
    const int m = p.sides(i);
    if (m > 30) throw std::invalid_argument("factor too large for subset enumeration");
    std::vector<std::int64_t> f(3, 0);
    for (std::uint64_t u = 0; u <= full_mask(m); ++u) {
      const auto prof = factor_reduced_betti(m, u);
      f[0] += prof.b_minus1;
      f[1] += prof.b0;
      f[2] += prof.b1;
    }
    acc = multiply(acc, f);
  }
  return acc;
}

std::vector<std::int64_t> rz_poincare_exhaustive(const PolygonProduct& p) {
  if (p.facet_count() > 30) throw std::invalid_argument("too many facets for exhaustive sum");
  std::vector<std::int64_t> acc(p.dimension() + 1, 0);
  const std::uint64_t end = std::uint64_t{1} << p.facet_count();
  for (std::uint64_t w = 0; w < end; ++w) {
    const auto b = omega_reduced_betti(p, BitVector(p.facet_count(), w));
    for (std::size_t k = 0; k < b.size(); ++k) acc[k] += b[k];
  }
  return acc;
}

}  // namespace smallcover
