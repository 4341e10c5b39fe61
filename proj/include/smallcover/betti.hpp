#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "smallcover/charmap.hpp"
#include "smallcover/gf2_wide.hpp"

namespace smallcover {

/// Dimensions indexed by cohomological degree 0..2n.
using GradedDims = std::vector<std::int64_t>;

/// Rational Betti numbers: sum of reduced Betti numbers of P_omega, shifted
/// by one degree, over the 2^(2n) vectors omega of the row space.
GradedDims small_cover_betti(const CharMatrix& lambda);

/// Coefficients of prod_i (1 + (m_i - 2) t + t^2).
GradedDims h_vector_oracle(const PolygonProduct& p);

using Exponents = std::vector<std::uint8_t>;

/// Standard monomials spanning one degree of the face ring.
struct MonomialBasis {
  int degree = 0;
  std::vector<Exponents> monomials;
};

/// The mod 2 cohomology ring F_2[v_1..v_m] / (I_P + J_lambda).
///
/// The linear relations eliminate the pivot columns of the reduced row
/// echelon form of lambda; the remaining m - 2n facet variables are free.
/// Each degree is the span of all monomials in the free variables modulo the
/// degree part of the Stanley-Reisner ideal, computed by elimination.
class FaceRing {
 public:
  explicit FaceRing(const CharMatrix& lambda);

  /// An element of one degree, in coordinates over all monomials of that degree.
  struct Element {
    int degree = 0;
    gf2::WideVector coords;
  };

  int free_count() const { return static_cast<int>(free_facets_.size()); }
  const std::vector<int>& free_facets() const { return free_facets_; }
  int top_degree() const { return top_degree_; }

  std::size_t monomial_count(int degree) const;
  const Exponents& monomial(int degree, std::size_t index) const;
  std::size_t monomial_index(const Exponents& e) const;

  std::size_t dimension(int degree) const;
  MonomialBasis basis(int degree) const;

  Element zero(int degree) const;
  /// The class v_f of a facet, after substituting the linear relations.
  Element facet_class(int flat) const;
  /// Basis element number k of a degree, as an element.
  Element basis_element(int degree, std::size_t k) const;

  Element normal_form(Element x) const;
  bool is_zero(const Element& x) const;
  Element add(Element x, const Element& y) const;
  Element multiply(const Element& x, const Element& y) const;
  /// Sq^1 extended from Sq^1(v) = v^2 by the Cartan formula.
  Element sq1(const Element& x) const;
  /// Quotient coordinates: entries at the standard monomials.
  gf2::WideVector quotient_coords(const Element& x) const;

 private:
  struct Degree {
    std::vector<Exponents> monomials;
    std::map<Exponents, std::size_t> index;
    gf2::EchelonBasis relations{0};
    std::vector<std::size_t> standard;  // non-pivot monomial indices
  };

  const Degree& level(int degree) const;
  Element from_linear(std::uint64_t free_mask) const;

  int top_degree_ = 0;
  std::vector<int> free_facets_;
  std::vector<std::uint64_t> linear_forms_;  // facet -> mask over free variables
  std::vector<Degree> degrees_;
};

/// Graded dimensions of the mod 2 cohomology ring.
GradedDims mod2_betti(const CharMatrix& lambda);

/// Per degree dim ker Sq^1 - dim im Sq^1 on the mod 2 cohomology ring.
GradedDims sq1_e2_betti(const CharMatrix& lambda);

}  // namespace smallcover
