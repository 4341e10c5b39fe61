#include "smallcover/charmap.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "smallcover/errors.hpp"

namespace smallcover {

namespace {

std::string tuple_string(std::span<const int> edges) {
  std::string s = "(";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(edges[i] + 1);
  }
  return s + ")";
}

bool independent(std::span<const BitVector> vectors) {
  std::vector<BitVector> basis;
  for (BitVector v : vectors) {
    for (const auto& b : basis) {
      if (v.get(b.lowest())) v ^= b;
    }
    if (v.none()) return false;
    const int p = v.lowest();
    for (auto& b : basis) {
      if (b.get(p)) b ^= v;
    }
    basis.push_back(v);
  }
  return true;
}

int vertex_of(const OppositeWeight& w) {
  return 2 * w.square + (w.plus ? 0 : 1);
}

OppositeWeight weight_of(int vertex) { return {vertex / 2, vertex % 2 == 0}; }

/// Adjacency of the 2r opposite-pair weights: sum lies in the row space.
std::vector<std::vector<bool>> weight_graph(const CharMatrix& lambda) {
  const auto& p = lambda.product();
  const int r = static_cast<int>(square_factors(p).size());
  gf2::CosetReducer rows(p.facet_count(), lambda.matrix().rows());
  std::vector<BitVector> weights;
  for (int v = 0; v < 2 * r; ++v) weights.push_back(weight_vector(p, weight_of(v)));
  std::vector<std::vector<bool>> adj(2 * r, std::vector<bool>(2 * r, false));
  for (int a = 0; a < 2 * r; ++a) {
    for (int b = a + 1; b < 2 * r; ++b) {
      adj[a][b] = adj[b][a] = rows.contains(weights[a] ^ weights[b]);
    }
  }
  return adj;
}

/// Depth-first over perfect matchings; the smallest free vertex is always
/// matched first, so matchings come out in lexicographic order.
void search_matchings(const std::vector<std::vector<bool>>& adj, std::vector<bool>& used,
                      SquareMatching& current,
                      const std::function<bool(const SquareMatching&)>& emit, bool& stop) {
  const int nv = static_cast<int>(adj.size());
  int a = 0;
  while (a < nv && used[a]) ++a;
  if (a == nv) {
    stop = !emit(current);
    return;
  }
  used[a] = true;
  for (int b = a + 1; b < nv && !stop; ++b) {
    if (used[b] || !adj[a][b]) continue;
    used[b] = true;
    current.push_back({weight_of(a), weight_of(b)});
    search_matchings(adj, used, current, emit, stop);
    current.pop_back();
    used[b] = false;
  }
  used[a] = false;
}

void enumerate_matchings(const CharMatrix& lambda,
                         const std::function<bool(const SquareMatching&)>& emit) {
  lambda.require_valid();
  const auto adj = weight_graph(lambda);
  std::vector<bool> used(adj.size(), false);
  SquareMatching current;
  bool stop = false;
  search_matchings(adj, used, current, emit, stop);
}

/// Checks shared by every compatibility route: parity, then the non-square
/// factor weights. Returns the first refusal.
std::optional<Refusal> non_square_refusal(const CharMatrix& lambda,
                                          const gf2::CosetReducer& rows) {
  const auto& p = lambda.product();
  for (int i = 0; i < p.factor_count(); ++i) {
    if (p.sides(i) % 2 != 0) {
      return Refusal{Refusal::Reason::odd_factor, i,
                     "factor " + std::to_string(i + 1) + " has an odd number of sides (" +
                         std::to_string(p.sides(i)) + "), so its weight is not in the row space"};
    }
  }
  for (int i = 0; i < p.factor_count(); ++i) {
    if (p.sides(i) != 4 && !rows.contains(p.factor_weight(i))) {
      return Refusal{Refusal::Reason::weight_not_in_row_space, i,
                     "weight of factor " + std::to_string(i + 1) + " is not in the row space"};
    }
  }
  return std::nullopt;
}

}  // namespace

CharMatrix::CharMatrix(PolygonProduct product, BitMatrix matrix)
    : product_(std::move(product)), matrix_(std::move(matrix)) {
  if (matrix_.nrows() != product_.dimension() || matrix_.ncols() != product_.facet_count()) {
    throw std::invalid_argument(
        "characteristic matrix must be " + std::to_string(product_.dimension()) + " x " +
        std::to_string(product_.facet_count()) + ", got " + std::to_string(matrix_.nrows()) +
        " x " + std::to_string(matrix_.ncols()));
  }
  columns_.reserve(matrix_.ncols());
  for (int j = 0; j < matrix_.ncols(); ++j) columns_.push_back(matrix_.column(j));

  std::vector<BitVector> minor;
  product_.for_each_vertex([&](std::span<const int> edges) {
    if (invalid_vertex_) return;
    minor.clear();
    for (int f : product_.vertex_facets(edges)) minor.push_back(columns_[f]);
    if (!independent(minor)) invalid_vertex_.emplace(edges.begin(), edges.end());
  });
}

BitMatrix CharMatrix::vertex_minor(std::span<const int> edges) const {
  std::vector<BitVector> cols;
  for (int f : product_.vertex_facets(edges)) cols.push_back(columns_[f]);
  return BitMatrix::from_columns(rows(), cols);
}

void CharMatrix::require_valid() const {
  if (invalid_vertex_) {
    throw NotCharacteristic("not a characteristic matrix: singular vertex minor at j=" +
                            tuple_string(*invalid_vertex_));
  }
}

bool CharMatrix::same_row_space(const CharMatrix& other) const {
  if (facets() != other.facets() || rows() != other.rows()) return false;
  return gf2::rref(matrix_).reduced == gf2::rref(other.matrix_).reduced;
}

CharMatrix CharMatrix::permute_columns(const PolygonProduct& product,
                                       std::span<const int> order) const {
  return CharMatrix(product, matrix_.permute_columns(order));
}

Validation validate(const CharMatrix& lambda) {
  if (lambda.valid()) return {true, {}};
  return {false, *lambda.invalid_vertex()};
}

Orientability orientable(const CharMatrix& lambda) {
  lambda.require_valid();
  auto w = gf2::row_space_contains(lambda.matrix(), BitVector::ones(lambda.facets()));
  return {w.has_value(), w};
}

std::vector<int> square_factors(const PolygonProduct& p) {
  std::vector<int> out;
  for (int i = 0; i < p.factor_count(); ++i) {
    if (p.sides(i) == 4) out.push_back(i);
  }
  return out;
}

std::pair<BitVector, BitVector> opposite_pair_weights(const PolygonProduct& p, int factor) {
  if (p.sides(factor) != 4) {
    throw std::invalid_argument("factor " + std::to_string(factor + 1) + " is not a square");
  }
  return {p.embed({factor, 4, 0b0101}), p.embed({factor, 4, 0b1010})};
}

BitVector weight_vector(const PolygonProduct& p, const OppositeWeight& w) {
  const auto squares = square_factors(p);
  if (w.square < 0 || w.square >= static_cast<int>(squares.size())) {
    throw std::out_of_range("square index out of range");
  }
  const auto [plus, minus] = opposite_pair_weights(p, squares[w.square]);
  return w.plus ? plus : minus;
}

std::optional<SquareMatching> find_square_matching(const CharMatrix& lambda) {
  std::optional<SquareMatching> found;
  enumerate_matchings(lambda, [&](const SquareMatching& m) {
    found = m;
    return false;
  });
  return found;
}

std::vector<SquareMatching> all_square_matchings(const CharMatrix& lambda) {
  std::vector<SquareMatching> out;
  enumerate_matchings(lambda, [&](const SquareMatching& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

Regrouping regroup(const CharMatrix& lambda, const SquareMatching& matching) {
  const auto& p = lambda.product();
  const auto squares = square_factors(p);
  const int r = static_cast<int>(squares.size());
  if (static_cast<int>(matching.size()) != r) {
    throw std::invalid_argument("square matching is not perfect");
  }
  std::vector<bool> covered(2 * r, false);
  for (const auto& pair : matching) {
    for (const auto& w : {pair.first, pair.second}) {
      if (w.square < 0 || w.square >= r) throw std::invalid_argument("square index out of range");
      const int v = vertex_of(w);
      if (covered[v]) throw std::invalid_argument("square matching is not perfect");
      covered[v] = true;
    }
  }

  std::vector<int> colperm(p.facet_count());
  for (int j = 0; j < p.facet_count(); ++j) colperm[j] = j;
  for (int l = 0; l < r; ++l) {
    std::vector<int> a, b;
    const auto wa = weight_vector(p, matching[l].first);
    const auto wb = weight_vector(p, matching[l].second);
    for (int f = 0; f < p.facet_count(); ++f) {
      if (wa.get(f)) a.push_back(f);
      if (wb.get(f)) b.push_back(f);
    }
    const int base = p.offset(squares[l]);
    colperm[base + 0] = a[0];
    colperm[base + 1] = b[0];
    colperm[base + 2] = a[1];
    colperm[base + 3] = b[1];
  }

  CharMatrix regrouped = lambda.permute_columns(p, colperm);
  if (!regrouped.valid()) {
    throw ConsistencyError("square regrouping produced a non-characteristic matrix for rows " +
                           lambda.matrix().to_strings().front() + "...");
  }
  return {std::move(regrouped), std::move(colperm)};
}

Compatibility factor_compatible_with(const CharMatrix& lambda, const SquareMatching& matching) {
  lambda.require_valid();
  const auto& p = lambda.product();
  gf2::CosetReducer rows(p.facet_count(), lambda.matrix().rows());
  if (auto refused = non_square_refusal(lambda, rows)) return *refused;

  Regrouping rg = regroup(lambda, matching);
  std::vector<BitVector> witnesses;
  for (int i = 0; i < p.factor_count(); ++i) {
    auto w = gf2::row_space_contains(rg.regrouped.matrix(), p.factor_weight(i));
    if (!w) {
      return Refusal{Refusal::Reason::no_square_matching, i,
                     "regrouped square " + std::to_string(i + 1) +
                         " has its weight outside the row space"};
    }
    witnesses.push_back(*w);
  }
  if (!orientable(lambda).orientable) {
    throw ConsistencyError("factor-compatible matrix is not orientable");
  }
  return CompatibilityCertificate{matching, std::move(rg.colperm), std::move(rg.regrouped),
                                  std::move(witnesses)};
}

Compatibility factor_compatible(const CharMatrix& lambda) {
  lambda.require_valid();
  gf2::CosetReducer rows(lambda.facets(), lambda.matrix().rows());
  if (auto refused = non_square_refusal(lambda, rows)) return *refused;
  auto matching = find_square_matching(lambda);
  if (!matching) {
    return Refusal{Refusal::Reason::no_square_matching, -1,
                   "the opposite-pair weights of the square factors admit no perfect matching "
                   "with sums in the row space"};
  }
  return factor_compatible_with(lambda, *matching);
}

CompatibilityCertificate require_compatible(const CharMatrix& lambda) {
  auto c = factor_compatible(lambda);
  if (const auto* r = refusal(c)) throw NotFactorCompatible("not factor-compatible: " + r->message);
  return std::get<CompatibilityCertificate>(std::move(c));
}

}  // namespace smallcover
