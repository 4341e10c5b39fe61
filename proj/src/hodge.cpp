#include "smallcover/hodge.hpp"

#include <bit>
#include <iostream>
#include <stdexcept>

#include "smallcover/errors.hpp"

namespace smallcover {

namespace {

using Poly2 = std::vector<std::vector<std::int64_t>>;

Poly2 poly2_multiply(const Poly2& a, const Poly2& b) {
  const std::size_t na = a.size(), nb = b.size();
  Poly2 out(na + nb - 1, std::vector<std::int64_t>(na + nb - 1, 0));
  for (std::size_t p = 0; p < na; ++p) {
    for (std::size_t q = 0; q < na; ++q) {
      if (a[p][q] == 0) continue;
      for (std::size_t r = 0; r < nb; ++r) {
        for (std::size_t s = 0; s < nb; ++s) out[p + r][q + s] += a[p][q] * b[r][s];
      }
    }
  }
  return out;
}

/// (u+v)^s (1+uv)^(n-s) as an (n+1) x (n+1) coefficient array.
Poly2 basis_term(int n, int s) {
  const Poly2 u_plus_v{{0, 1}, {1, 0}};
  const Poly2 one_plus_uv{{1, 0}, {0, 1}};
  Poly2 acc{{1}};
  for (int k = 0; k < n; ++k) acc = poly2_multiply(acc, k < s ? u_plus_v : one_plus_uv);
  return acc;
}

}  // namespace

CharacterGroup::CharacterGroup(const CharMatrix& lambda)
    : rows_(lambda.facets(), lambda.matrix().rows()),
      kernel_(gf2::kernel_basis(lambda.matrix())) {
  lambda.require_valid();
}

CharacterClass CharacterGroup::character_of(const BitVector& u) const {
  return {rows_.reduce(u)};
}

std::int64_t MultiplicityTable::multiplicity(const CharacterClass& rho) const {
  auto it = entries.find(rho);
  return it == entries.end() ? 0 : it->second;
}

MultiplicityTable multiplicities(const CharMatrix& lambda, int factor) {
  const auto& p = lambda.product();
  const CharacterGroup group(lambda);
  if (!group.character_of(p.factor_weight(factor)).trivial()) {
    throw NotFactorCompatible("weight of factor " + std::to_string(factor + 1) +
                              " is not in the row space; its curve carries no G-action "
                              "by holomorphic maps");
  }
  const int m = p.sides(factor);
  if (m > 24) throw std::invalid_argument("factor too large for subset enumeration");

  std::map<CharacterClass, std::int64_t> doubled;
  for (std::uint64_t u = 0; u < (std::uint64_t{1} << m); ++u) {
    const int d = factor_reduced_betti(m, u).b0;
    if (d == 0) continue;
    doubled[group.character_of(p.embed({factor, m, u}))] += d;
  }

  MultiplicityTable table{factor, {}, 0};
  for (const auto& [rho, twice] : doubled) {
    if (twice % 2 != 0) {
      throw ConsistencyError("odd coset sum " + std::to_string(twice) + " for character " +
                             rho.rep.to_string() + " on factor " + std::to_string(factor + 1));
    }
    table.entries.emplace(rho, twice / 2);
    table.genus += twice / 2;
  }
  if (table.genus != genus(m)) {
    throw ConsistencyError("character multiplicities of factor " + std::to_string(factor + 1) +
                           " sum to " + std::to_string(table.genus) + ", expected genus " +
                           std::to_string(genus(m)));
  }
  return table;
}

std::int64_t t_by_convolution(std::span<const MultiplicityTable> tables, FactorSet subset) {
  if (subset == 0) return 1;
  std::map<BitVector, std::int64_t> dist;
  bool first = true;
  for (const auto& table : tables) {
    if (((subset >> table.factor) & 1U) == 0) continue;
    if (table.entries.empty()) return 0;
    if (first) {
      dist.emplace(BitVector(table.entries.begin()->first.rep.size()), 1);
      first = false;
    }
    std::map<BitVector, std::int64_t> next;
    for (const auto& [sum, count] : dist) {
      // Canonical representatives have zeros at every pivot, so their sum is canonical too.
      for (const auto& [rho, a] : table.entries) next[sum ^ rho.rep] += count * a;
    }
    dist = std::move(next);
  }
  if (first) throw std::invalid_argument("no multiplicity table covers the factor subset");
  auto it = dist.begin();
  return it != dist.end() && it->first.none() ? it->second : 0;
}

std::optional<std::int64_t> t_by_averaging(std::span<const MultiplicityTable> tables,
                                           FactorSet subset, const CharacterGroup& group) {
  const int k = group.kernel_dimension();
  if (k > 20) return std::nullopt;
  const auto& kernel = group.kernel();
  const int size = kernel.empty() ? 0 : kernel.front().size();

  __int128 total = 0;
  BitVector g(size);
  const std::uint64_t order = std::uint64_t{1} << k;
  for (std::uint64_t step = 0; step < order; ++step) {
    if (step > 0) g ^= kernel[std::countr_zero(step)];  // Gray code walk over G
    __int128 product = 1;
    for (const auto& table : tables) {
      if (((subset >> table.factor) & 1U) == 0) continue;
      std::int64_t trace = 0;
      for (const auto& [rho, a] : table.entries) trace += group.evaluate(rho, g) ? -a : a;
      product *= trace;
    }
    total += product;
  }
  if (total % static_cast<__int128>(order) != 0) {
    throw ConsistencyError("character average is not an integer");
  }
  return static_cast<std::int64_t>(total / static_cast<__int128>(order));
}

std::int64_t t_invariant(std::span<const MultiplicityTable> tables, FactorSet subset,
                         const CharMatrix& lambda) {
  const std::int64_t conv = t_by_convolution(tables, subset);
  const CharacterGroup group(lambda);
  if (auto avg = t_by_averaging(tables, subset, group)) {
    if (*avg != conv) {
      throw ConsistencyError("t_S disagreement: convolution " + std::to_string(conv) +
                             ", averaging " + std::to_string(*avg));
    }
  }
  return conv;
}

bool HodgePolynomial::symmetric() const {
  if (h[0][0] != 1 || h[n][n] != 1) return false;
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; q <= n; ++q) {
      if (h[p][q] != h[q][p] || h[p][q] != h[n - p][n - q]) return false;
    }
  }
  return true;
}

HodgePolynomial hodge_from_t(int n, std::span<const std::int64_t> t_values) {
  if (t_values.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("need one t value per factor subset");
  }
  HodgePolynomial out(n);
  std::vector<Poly2> terms;
  for (int s = 0; s <= n; ++s) terms.push_back(basis_term(n, s));
  for (std::size_t subset = 0; subset < t_values.size(); ++subset) {
    const auto& term = terms[std::popcount(subset)];
    for (int p = 0; p <= n; ++p) {
      for (int q = 0; q <= n; ++q) out.h[p][q] += t_values[subset] * term[p][q];
    }
  }
  return out;
}

HodgePolynomial hodge_from_T(std::span<const std::int64_t> T) {
  const int n = static_cast<int>(T.size()) - 1;
  HodgePolynomial out(n);
  for (int s = 0; s <= n; ++s) {
    const Poly2 term = basis_term(n, s);
    for (int p = 0; p <= n; ++p) {
      for (int q = 0; q <= n; ++q) out.h[p][q] += T[s] * term[p][q];
    }
  }
  return out;
}

HodgeAnalysis hodge_analysis(const CharMatrix& lambda, const CompatibilityCertificate& cert) {
  const CharMatrix& regrouped = cert.regrouped;
  const int n = regrouped.product().factor_count();
  if (n > 20) throw std::invalid_argument("too many factors for subset enumeration");

  HodgeAnalysis out{cert, {}, {}, std::vector<std::int64_t>(n + 1, 0), HodgePolynomial(n)};
  for (int i = 0; i < n; ++i) out.tables.push_back(multiplicities(regrouped, i));

  const CharacterGroup group(regrouped);
  out.t.assign(std::size_t{1} << n, 0);
  for (FactorSet s = 0; s < out.t.size(); ++s) {
    const std::int64_t conv = t_by_convolution(out.tables, s);
    const auto avg = t_by_averaging(out.tables, s, group);
    if (!avg) {
      out.averaging_checked = false;
    } else if (*avg != conv) {
      throw ConsistencyError("t_S disagreement for subset " + std::to_string(s) +
                             ": convolution " + std::to_string(conv) + ", averaging " +
                             std::to_string(*avg));
    }
    out.t[s] = conv;
    out.T[std::popcount(s)] += conv;
  }
  if (!out.averaging_checked) {
    std::clog << "warning: |G| = 2^" << group.kernel_dimension()
              << " exceeds 2^20; t_S checked by convolution only\n";
  }

  out.polynomial = hodge_from_t(n, out.t);
  if (!(hodge_from_T(out.T) == out.polynomial)) {
    throw ConsistencyError("Hodge polynomial differs between the t_S and T_s expansions");
  }
  if (!out.polynomial.symmetric()) {
    throw ConsistencyError("Hodge polynomial violates Hodge symmetry or Serre duality");
  }
  (void)lambda;
  return out;
}

HodgeAnalysis hodge_analysis(const CharMatrix& lambda) {
  return hodge_analysis(lambda, require_compatible(lambda));
}

HodgePolynomial hodge_polynomial(const CharMatrix& lambda) {
  return hodge_analysis(lambda).polynomial;
}

GradedDims poincare_from_hodge(const HodgePolynomial& h) {
  GradedDims b(2 * h.n + 1, 0);
  for (int p = 0; p <= h.n; ++p) {
    for (int q = 0; q <= h.n; ++q) b[p + q] += h.h[p][q];
  }
  return b;
}

std::vector<std::int64_t> recover_T_from_poincare(const GradedDims& b, int n) {
  if (n < 0 || static_cast<int>(b.size()) != 2 * n + 1) {
    throw std::invalid_argument("Betti vector must have length 2n+1");
  }
  GradedDims residual = b;
  std::vector<std::int64_t> T(n + 1, 0);
  for (int s = 0; s <= n; ++s) {
    // (2t)^s (1+t^2)^(n-s) starts in degree s with coefficient 2^s.
    const std::int64_t lead = std::int64_t{1} << s;
    if (residual[s] < 0 || residual[s] % lead != 0) {
      throw std::invalid_argument("Betti vector is not of the form sum T_s (2t)^s (1+t^2)^(n-s): "
                                  "degree " + std::to_string(s) + " leaves " +
                                  std::to_string(residual[s]));
    }
    T[s] = residual[s] / lead;
    std::int64_t binom = 1;  // C(n-s, k)
    for (int k = 0; k <= n - s; ++k) {
      residual[s + 2 * k] -= T[s] * lead * binom;
      binom = binom * (n - s - k) / (k + 1);
    }
  }
  for (int d = 0; d <= 2 * n; ++d) {
    if (residual[d] != 0) {
      throw std::invalid_argument("Betti vector is not of the form sum T_s (2t)^s (1+t^2)^(n-s): "
                                  "residual " + std::to_string(residual[d]) + " in degree " +
                                  std::to_string(d));
    }
  }
  return T;
}

}  // namespace smallcover
