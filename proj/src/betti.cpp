#include "smallcover/betti.hpp"

#include <stdexcept>

#include "smallcover/errors.hpp"

namespace smallcover {

namespace {

void monomials_of_degree(int vars, int degree, Exponents& current, int pos,
                         std::vector<Exponents>& out) {
  if (pos == vars - 1) {
    current[pos] = static_cast<std::uint8_t>(degree);
    out.push_back(current);
    return;
  }
  for (int e = degree; e >= 0; --e) {
    current[pos] = static_cast<std::uint8_t>(e);
    monomials_of_degree(vars, degree - e, current, pos + 1, out);
  }
  current[pos] = 0;
}

std::vector<Exponents> all_monomials(int vars, int degree) {
  std::vector<Exponents> out;
  if (vars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Exponents current(vars, 0);
  monomials_of_degree(vars, degree, current, 0, out);
  return out;
}

/// Minimal non-faces of the boundary complex dual to P: for an m-gon with
/// m >= 4 the non-adjacent edge pairs, for a triangle all three edges.
std::vector<std::vector<int>> stanley_reisner_generators(const PolygonProduct& p) {
  std::vector<std::vector<int>> gens;
  for (int i = 0; i < p.factor_count(); ++i) {
    const int m = p.sides(i);
    if (m == 3) {
      gens.push_back({p.facet(i, 0), p.facet(i, 1), p.facet(i, 2)});
      continue;
    }
    for (int a = 0; a < m; ++a) {
      for (int b = a + 2; b < m; ++b) {
        if (a == 0 && b == m - 1) continue;
        gens.push_back({p.facet(i, a), p.facet(i, b)});
      }
    }
  }
  return gens;
}

}  // namespace

GradedDims small_cover_betti(const CharMatrix& lambda) {
  lambda.require_valid();
  const auto& p = lambda.product();
  const auto& rows = lambda.matrix().rows();
  GradedDims b(p.dimension() + 1, 0);
  const std::uint64_t combos = std::uint64_t{1} << rows.size();
  for (std::uint64_t mask = 0; mask < combos; ++mask) {
    const BitVector omega = gf2::span_element(p.facet_count(), rows, mask);
    const auto reduced = omega_reduced_betti(p, omega);
    // Entry k of the profile is reduced degree k - 1, which lands in H^k.
    for (std::size_t k = 0; k < reduced.size(); ++k) b[k] += reduced[k];
  }
  return b;
}

GradedDims h_vector_oracle(const PolygonProduct& p) {
  GradedDims acc{1};
  for (int i = 0; i < p.factor_count(); ++i) {
    const std::int64_t f[3] = {1, p.sides(i) - 2, 1};
    GradedDims next(acc.size() + 2, 0);
    for (std::size_t k = 0; k < acc.size(); ++k) {
      for (int j = 0; j < 3; ++j) next[k + j] += acc[k] * f[j];
    }
    acc = std::move(next);
  }
  return acc;
}

FaceRing::FaceRing(const CharMatrix& lambda) {
  lambda.require_valid();
  const auto& p = lambda.product();
  const int m = p.facet_count();
  top_degree_ = p.dimension();

  const auto r = gf2::rref(lambda.matrix());
  std::vector<int> pivot_row(m, -1);
  for (int j = 0; j < r.rank; ++j) pivot_row[r.pivots[j]] = j;
  for (int f = 0; f < m; ++f) {
    if (pivot_row[f] < 0) free_facets_.push_back(f);
  }
  if (free_count() > 62) throw std::invalid_argument("too many free variables");

  linear_forms_.assign(m, 0);
  for (int k = 0; k < free_count(); ++k) linear_forms_[free_facets_[k]] = std::uint64_t{1} << k;
  for (int f = 0; f < m; ++f) {
    if (pivot_row[f] < 0) continue;
    // v_pivot + sum_k R[row][k] v_k = 0 over the free facets k.
    std::uint64_t mask = 0;
    for (int k = 0; k < free_count(); ++k) {
      if (r.reduced.get(pivot_row[f], free_facets_[k])) mask |= std::uint64_t{1} << k;
    }
    linear_forms_[f] = mask;
  }

  // One degree past the top so that Sq^1 out of the top degree is defined.
  degrees_.resize(top_degree_ + 2);
  for (int d = 0; d <= top_degree_ + 1; ++d) {
    Degree& lv = degrees_[d];
    lv.monomials = all_monomials(free_count(), d);
    for (std::size_t k = 0; k < lv.monomials.size(); ++k) lv.index.emplace(lv.monomials[k], k);
    lv.relations = gf2::EchelonBasis(lv.monomials.size());
  }

  for (const auto& gen : stanley_reisner_generators(p)) {
    Element g = zero(0);
    g.coords.flip(0);
    for (int f : gen) g = multiply(g, facet_class(f));
    for (int d = g.degree; d <= top_degree_ + 1; ++d) {
      const Degree& shift = degrees_[d - g.degree];
      for (std::size_t k = 0; k < shift.monomials.size(); ++k) {
        Element mono = zero(d - g.degree);
        mono.coords.flip(k);
        degrees_[d].relations.insert(multiply(mono, g).coords);
      }
    }
  }

  for (auto& lv : degrees_) {
    for (std::size_t k = 0; k < lv.monomials.size(); ++k) {
      if (!lv.relations.is_pivot(k)) lv.standard.push_back(k);
    }
  }
}

const FaceRing::Degree& FaceRing::level(int degree) const {
  if (degree < 0 || degree >= static_cast<int>(degrees_.size())) {
    throw std::out_of_range("face ring degree " + std::to_string(degree) + " not tabulated");
  }
  return degrees_[degree];
}

std::size_t FaceRing::monomial_count(int degree) const { return level(degree).monomials.size(); }

const Exponents& FaceRing::monomial(int degree, std::size_t index) const {
  return level(degree).monomials.at(index);
}

std::size_t FaceRing::monomial_index(const Exponents& e) const {
  int d = 0;
  for (auto x : e) d += x;
  return level(d).index.at(e);
}

std::size_t FaceRing::dimension(int degree) const { return level(degree).standard.size(); }

MonomialBasis FaceRing::basis(int degree) const {
  MonomialBasis out{degree, {}};
  for (auto k : level(degree).standard) out.monomials.push_back(level(degree).monomials[k]);
  return out;
}

FaceRing::Element FaceRing::zero(int degree) const {
  return {degree, gf2::WideVector(level(degree).monomials.size())};
}

FaceRing::Element FaceRing::from_linear(std::uint64_t free_mask) const {
  Element x = zero(1);
  Exponents e(free_count(), 0);
  for (int k = 0; k < free_count(); ++k) {
    if (((free_mask >> k) & 1U) == 0) continue;
    e[k] = 1;
    x.coords.flip(level(1).index.at(e));
    e[k] = 0;
  }
  return x;
}

FaceRing::Element FaceRing::facet_class(int flat) const {
  return from_linear(linear_forms_.at(flat));
}

FaceRing::Element FaceRing::basis_element(int degree, std::size_t k) const {
  Element x = zero(degree);
  x.coords.flip(level(degree).standard.at(k));
  return x;
}

FaceRing::Element FaceRing::normal_form(Element x) const {
  x.coords = level(x.degree).relations.reduce(std::move(x.coords));
  return x;
}

bool FaceRing::is_zero(const Element& x) const { return normal_form(x).coords.none(); }

FaceRing::Element FaceRing::add(Element x, const Element& y) const {
  if (x.degree != y.degree) throw std::invalid_argument("adding elements of different degrees");
  x.coords ^= y.coords;
  return x;
}

FaceRing::Element FaceRing::multiply(const Element& x, const Element& y) const {
  Element out = zero(x.degree + y.degree);
  const Degree& dx = level(x.degree);
  const Degree& dy = level(y.degree);
  const Degree& dz = level(out.degree);
  const auto sy = y.coords.support();
  Exponents e(free_count());
  for (std::size_t i = x.coords.next_set(0); i < dx.monomials.size(); i = x.coords.next_set(i + 1)) {
    for (auto j : sy) {
      for (int k = 0; k < free_count(); ++k) {
        e[k] = static_cast<std::uint8_t>(dx.monomials[i][k] + dy.monomials[j][k]);
      }
      out.coords.flip(dz.index.at(e));
    }
  }
  return out;
}

FaceRing::Element FaceRing::sq1(const Element& x) const {
  Element out = zero(x.degree + 1);
  const Degree& dx = level(x.degree);
  const Degree& dz = level(out.degree);
  for (std::size_t i = x.coords.next_set(0); i < dx.monomials.size(); i = x.coords.next_set(i + 1)) {
    Exponents e = dx.monomials[i];
    // Sq^1(v^a) = a v^(a+1), and Sq^1 is a derivation.
    for (int k = 0; k < free_count(); ++k) {
      if (e[k] % 2 == 0) continue;
      ++e[k];
      out.coords.flip(dz.index.at(e));
      --e[k];
    }
  }
  return out;
}

gf2::WideVector FaceRing::quotient_coords(const Element& x) const {
  const Element nf = normal_form(x);
  const Degree& lv = level(x.degree);
  gf2::WideVector out(lv.standard.size());
  for (std::size_t k = 0; k < lv.standard.size(); ++k) {
    if (nf.coords.get(lv.standard[k])) out.flip(k);
  }
  return out;
}

GradedDims mod2_betti(const CharMatrix& lambda) {
  const FaceRing ring(lambda);
  GradedDims out;
  for (int d = 0; d <= ring.top_degree(); ++d) out.push_back(ring.dimension(d));
  if (ring.dimension(ring.top_degree() + 1) != 0) {
    throw ConsistencyError("mod 2 cohomology does not vanish above the top degree");
  }
  return out;
}

GradedDims sq1_e2_betti(const CharMatrix& lambda) {
  const FaceRing ring(lambda);
  const int top = ring.top_degree();
  std::vector<std::int64_t> image_rank(top + 1, 0);
  for (int d = 0; d <= top; ++d) {
    gf2::EchelonBasis image(ring.dimension(d + 1));
    for (std::size_t k = 0; k < ring.dimension(d); ++k) {
      image.insert(ring.quotient_coords(ring.sq1(ring.basis_element(d, k))));
    }
    image_rank[d] = static_cast<std::int64_t>(image.rank());
  }
  GradedDims out(top + 1, 0);
  for (int d = 0; d <= top; ++d) {
    const std::int64_t kernel = static_cast<std::int64_t>(ring.dimension(d)) - image_rank[d];
    out[d] = kernel - (d > 0 ? image_rank[d - 1] : 0);
  }
  return out;
}

}  // namespace smallcover
