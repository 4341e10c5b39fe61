#include "smallcover/triangular.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "smallcover/errors.hpp"

namespace smallcover {

namespace {

std::vector<BitVector> factor_weights(const PolygonProduct& p) {
  std::vector<BitVector> out;
  for (int i = 0; i < p.factor_count(); ++i) out.push_back(p.factor_weight(i));
  return out;
}

/// Numerically smallest element of v + span(basis).
BitVector smallest_in_coset(BitVector v, std::span<const BitVector> basis) {
  std::vector<BitVector> echelon;
  for (BitVector b : basis) {
    for (const auto& e : echelon) {
      if (b.get(63 - std::countl_zero(e.word()))) b ^= e;
    }
    if (b.any()) echelon.push_back(b);
  }
  std::sort(echelon.begin(), echelon.end(), [](const BitVector& a, const BitVector& b) {
    return a.word() > b.word();
  });
  for (const auto& e : echelon) {
    if (v.get(63 - std::countl_zero(e.word()))) v ^= e;
  }
  return v;
}

bool independent(std::span<const BitVector> vectors, int size) {
  return gf2::CosetReducer(size, vectors).dimension() == static_cast<int>(vectors.size());
}

bool transversals_from(std::span<const FunctionalSet> sets, std::size_t i,
                       std::vector<BitVector>& chosen, int size) {
  if (i == sets.size()) return independent(chosen, size);
  for (const auto& d : sets[i].functionals) {
    chosen.push_back(d);
    const bool ok = transversals_from(sets, i + 1, chosen, size);
    chosen.pop_back();
    if (!ok) return false;
  }
  return true;
}

std::string vectors_string(std::span<const BitVector> vs) {
  std::string s = "{";
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (k) s += ",";
    s += vs[k].to_string();
  }
  return s + "}";
}

std::vector<std::string> shape_violations(const CharMatrix& result) {
  std::vector<std::string> out;
  const auto& p = result.product();
  const int n = p.factor_count();
  const auto& m = result.matrix();
  auto block_zero = [&](int i, int j) {
    for (int r = 2 * i; r < 2 * i + 2; ++r) {
      for (int e = 0; e < p.sides(j); ++e) {
        if (m.get(r, p.facet(j, e))) return false;
      }
    }
    return true;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!block_zero(i, j)) {
        out.push_back("block (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                      ") above the diagonal is nonzero");
      }
    }
    for (int e = 0; e < p.sides(i); ++e) {
      if (!m.get(2 * i, p.facet(i, e))) {
        out.push_back("diagonal block " + std::to_string(i + 1) + ": first row is not all ones");
        break;
      }
    }
    const int mi = p.sides(i);
    for (int e = 0; e < mi; ++e) {
      const int a = p.facet(i, e), b = p.facet(i, (e + 1) % mi);
      const bool det = (m.get(2 * i, a) && m.get(2 * i + 1, b)) !=
                       (m.get(2 * i, b) && m.get(2 * i + 1, a));
      if (!det) {
        out.push_back("diagonal block " + std::to_string(i + 1) + ": adjacent pair (" +
                      std::to_string(e + 1) + "," + std::to_string((e + 1) % mi + 1) +
                      ") is not a basis");
      }
    }
  }
  return out;
}

BitMatrix diagonal_block(const CharMatrix& result, int position) {
  const auto& p = result.product();
  BitMatrix block(2, p.sides(position));
  for (int r = 0; r < 2; ++r) {
    for (int e = 0; e < p.sides(position); ++e) {
      block.set(r, e, result.matrix().get(2 * position + r, p.facet(position, e)));
    }
  }
  return block;
}

std::vector<Fiber> tower_of(const CharMatrix& result, std::span<const int> order) {
  std::vector<Fiber> out;
  const auto& p = result.product();
  for (int k = 0; k < p.factor_count(); ++k) {
    Fiber f{k, order[k], p.sides(k), (p.sides(k) - 2) / 2, diagonal_block(result, k)};
    if (!gf2::row_space_contains(f.block, BitVector::ones(f.sides))) {
      throw ConsistencyError("fiber over factor " + std::to_string(order[k] + 1) +
                             " is not orientable");
    }
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

std::vector<BitVector> quotient_representatives(const CharMatrix& regrouped) {
  const auto& p = regrouped.product();
  std::vector<BitVector> span = factor_weights(p);
  std::vector<BitVector> reps;
  for (const auto& row : regrouped.matrix().rows()) {
    span.push_back(row);
    if (gf2::CosetReducer(p.facet_count(), span).dimension() == static_cast<int>(span.size())) {
      reps.push_back(row);
    } else {
      span.pop_back();
    }
  }
  if (static_cast<int>(reps.size()) != p.factor_count()) {
    throw NotFactorCompatible("row space modulo the factor weights has dimension " +
                              std::to_string(reps.size()) + ", expected " +
                              std::to_string(p.factor_count()));
  }
  return reps;
}

std::vector<FunctionalSet> functionals(const CharMatrix& regrouped,
                                       std::span<const BitVector> representatives) {
  const auto& p = regrouped.product();
  const int n = static_cast<int>(representatives.size());
  std::vector<FunctionalSet> out;
  for (int i = 0; i < p.factor_count(); ++i) {
    const int m = p.sides(i);
    std::set<BitVector> distinct;
    for (int k = 0; k < m; ++k) {
      const int a = p.facet(i, k), b = p.facet(i, (k + 1) % m);
      BitVector d(n);
      for (int j = 0; j < n; ++j) {
        if (representatives[j].get(a) != representatives[j].get(b)) d.set(j);
      }
      if (d.none()) {
        throw ConsistencyError("zero functional d_{" + std::to_string(i + 1) + "," +
                               std::to_string(k + 1) + "}");
      }
      distinct.insert(d);
    }
    out.push_back({i, {distinct.begin(), distinct.end()}});
  }
  return out;
}

std::vector<FunctionalSet> functionals(const CharMatrix& lambda,
                                       const CompatibilityCertificate& cert) {
  (void)lambda;
  const auto reps = quotient_representatives(cert.regrouped);
  return functionals(cert.regrouped, reps);
}

bool every_transversal_is_basis(std::span<const FunctionalSet> sets) {
  if (sets.empty()) return true;
  std::vector<BitVector> chosen;
  const int size = sets.front().functionals.empty() ? 0 : sets.front().functionals.front().size();
  for (const auto& s : sets) {
    if (s.functionals.empty()) return false;
  }
  return transversals_from(sets, 0, chosen, size);
}

ColoredBasis colored_triangularize(std::span<const FunctionalSet> sets) {
  const int n = static_cast<int>(sets.size());
  if (!every_transversal_is_basis(sets)) {
    throw ConsistencyError("some transversal of the functional sets is not a basis");
  }
  ColoredBasis out{std::vector<int>(n, -1), std::vector<BitVector>(n)};
  std::vector<bool> placed(n, false);
  std::vector<BitVector> later;
  for (int pos = n - 1; pos >= 0; --pos) {
    bool found = false;
    // Highest index first, so inputs already in block form keep their order.
    for (int i = n - 1; i >= 0 && !found; --i) {
      if (placed[i]) continue;
      std::set<BitVector> reduced;
      for (const auto& d : sets[i].functionals) reduced.insert(gf2::coset_canonical(d, later));
      if (reduced.size() != 1 || reduced.begin()->none()) continue;
      out.order[pos] = sets[i].factor;
      out.basis[pos] = *reduced.begin();
      later.push_back(out.basis[pos]);
      placed[i] = true;
      found = true;
    }
    if (!found) {
      std::string state;
      for (int i = 0; i < n; ++i) {
        if (!placed[i]) {
          state += " D_" + std::to_string(sets[i].factor + 1) + "=" +
                   vectors_string(sets[i].functionals);
        }
      }
      throw ConsistencyError("no singleton functional set modulo " + vectors_string(later) +
                             " at position " + std::to_string(pos + 1) + ":" + state);
    }
  }
  return out;
}

TriangularForm blockize(const CharMatrix& lambda, const CompatibilityCertificate& cert) {
  const CharMatrix& regrouped = cert.regrouped;
  const auto& p = regrouped.product();
  const int n = p.factor_count();
  const int m = p.facet_count();

  const auto reps = quotient_representatives(regrouped);
  const auto sets = functionals(regrouped, reps);
  const ColoredBasis colored = colored_triangularize(sets);

  // tau_j = sum_k coeff[j][k] w_k is dual to eps: eps_l(tau_j) = delta_lj.
  const BitMatrix eps(n, colored.basis);
  const BitMatrix coeff = gf2::inverse(eps.transpose());
  const auto chis = factor_weights(p);

  std::vector<BitVector> rows;
  for (int j = 0; j < n; ++j) {
    BitVector tau(m);
    for (int k = 0; k < n; ++k) {
      if (coeff.get(j, k)) tau ^= reps[k];
    }
    BitVector eta = smallest_in_coset(tau, chis);
    for (int k = j + 1; k < n; ++k) {
      const int f = colored.order[k];
      const std::uint64_t bits = p.factor_bits(eta, f);
      const std::uint64_t full = (p.sides(f) == 64) ? ~std::uint64_t{0}
                                                    : (std::uint64_t{1} << p.sides(f)) - 1;
      if (bits == full) {
        eta ^= chis[f];
      } else if (bits != 0) {
        throw ConsistencyError("lift of tau_" + std::to_string(j + 1) +
                               " is not constant on factor " + std::to_string(f + 1));
      }
    }
    rows.push_back(chis[colored.order[j]]);
    rows.push_back(eta);
  }

  std::vector<int> reorder_cols;
  PolygonProduct reordered = p.reordered(colored.order, &reorder_cols);
  std::vector<int> colperm(m);
  for (int j = 0; j < m; ++j) colperm[j] = cert.colperm[reorder_cols[j]];

  const BitMatrix target = BitMatrix(m, rows).permute_columns(reorder_cols);
  const BitMatrix base = lambda.matrix().permute_columns(colperm);
  std::vector<BitVector> u_rows;
  for (const auto& row : target.rows()) {
    auto c = gf2::row_space_contains(base, row);
    if (!c) throw ConsistencyError("block form row " + row.to_string() + " left the row space");
    u_rows.push_back(*c);
  }
  BitMatrix U(2 * n, u_rows);
  if (gf2::rank(U) != 2 * n) throw ConsistencyError("row transform of the block form is singular");

  CharMatrix result(reordered, target);
  auto tower = tower_of(result, colored.order);
  return {colored.order, std::move(colperm), std::move(U), std::move(result), std::move(tower)};
}

TriangularForm blockize(const CharMatrix& lambda) {
  return blockize(lambda, require_compatible(lambda));
}

BlockformReport verify_blockform(const TriangularForm& form, const CharMatrix& original) {
  BlockformReport report;
  auto& v = report.violations;
  const auto& p = original.product();
  const int n = p.factor_count();
  const int m = p.facet_count();

  std::vector<int> sorted = form.factor_order;
  std::sort(sorted.begin(), sorted.end());
  bool order_ok = static_cast<int>(sorted.size()) == n;
  for (int i = 0; order_ok && i < n; ++i) order_ok = sorted[i] == i;
  if (!order_ok) {
    v.push_back("factor order is not a permutation of the factors");
    return report;
  }
  for (int k = 0; k < n; ++k) {
    if (form.result.product().sides(k) != p.sides(form.factor_order[k])) {
      v.push_back("result product does not list the factors in the stated order");
      return report;
    }
  }
  std::vector<int> cols = form.colperm;
  std::sort(cols.begin(), cols.end());
  bool perm_ok = static_cast<int>(cols.size()) == m;
  for (int j = 0; perm_ok && j < m; ++j) perm_ok = cols[j] == j;
  if (!perm_ok) {
    v.push_back("column permutation is not a permutation of the facets");
    return report;
  }
  std::set<BitVector> vertices;
  p.for_each_vertex([&](std::span<const int> edges) {
    BitVector facets(m);
    for (int f : p.vertex_facets(edges)) facets.set(f);
    vertices.insert(std::move(facets));
  });
  bool carried = true;
  const auto& q = form.result.product();
  q.for_each_vertex([&](std::span<const int> edges) {
    if (!carried) return;
    BitVector image(m);
    for (int j : q.vertex_facets(edges)) image.set(form.colperm[j]);
    carried = vertices.contains(image);
  });
  if (!carried) v.push_back("column permutation does not carry vertices to vertices");

  const BitMatrix permuted = original.matrix().permute_columns(form.colperm);
  if (form.U.nrows() != 2 * n || !form.U.square() || gf2::rank(form.U) != 2 * n) {
    v.push_back("row transform is not an invertible " + std::to_string(2 * n) + "x" +
                std::to_string(2 * n) + " matrix");
  } else if (!(form.U * permuted == form.result.matrix())) {
    v.push_back("result differs from the row transform applied to the permuted matrix");
  }
  if (!(gf2::rref(permuted).reduced == gf2::rref(form.result.matrix()).reduced)) {
    v.push_back("row space of the result differs from the permuted input");
  }
  if (auto j = form.result.invalid_vertex()) {
    std::string t;
    for (int e : *j) t += (t.empty() ? "" : ",") + std::to_string(e + 1);
    v.push_back("result is not characteristic at vertex (" + t + ")");
  }
  for (auto& s : shape_violations(form.result)) v.push_back(std::move(s));
  return report;
}

std::vector<Fiber> bundle_tower(const TriangularForm& form) {
  const auto shape = shape_violations(form.result);
  if (!shape.empty()) throw std::invalid_argument("not a block lower triangular form: " + shape.front());
  return tower_of(form.result, form.factor_order);
}

}  // namespace smallcover
