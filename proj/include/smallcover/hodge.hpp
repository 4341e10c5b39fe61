#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "smallcover/betti.hpp"
#include "smallcover/charmap.hpp"

namespace smallcover {

/// A character eps_u of G = ker(lambda), keyed by the canonical
/// representative of the coset u + row(lambda).
struct CharacterClass {
  BitVector rep;
  bool trivial() const { return rep.none(); }
  friend auto operator<=>(const CharacterClass&, const CharacterClass&) = default;
};

class CharacterGroup {
 public:
  explicit CharacterGroup(const CharMatrix& lambda);

  CharacterClass character_of(const BitVector& u) const;
  /// <rep, g> for g in ker(lambda).
  int evaluate(const CharacterClass& rho, const BitVector& g) const { return rho.rep.dot(g); }
  const std::vector<BitVector>& kernel() const { return kernel_; }
  int kernel_dimension() const { return static_cast<int>(kernel_.size()); }

 private:
  gf2::CosetReducer rows_;
  std::vector<BitVector> kernel_;
};

/// Character multiplicities a_{i,rho} of H^{1,0} of the i-th curve.
struct MultiplicityTable {
  int factor = 0;
  std::map<CharacterClass, std::int64_t> entries;  // nonzero entries only
  std::int64_t genus = 0;

  std::int64_t multiplicity(const CharacterClass& rho) const;
};

MultiplicityTable multiplicities(const CharMatrix& lambda, int factor);

/// Factor subsets are bitmasks: bit i selects factor i.
using FactorSet = std::uint32_t;

/// t_S by convolving the tables' character distributions.
std::int64_t t_by_convolution(std::span<const MultiplicityTable> tables, FactorSet subset);
/// t_S by averaging characters of the tensor product over G; nullopt when
/// |G| exceeds 2^20 and the sum is skipped.
std::optional<std::int64_t> t_by_averaging(std::span<const MultiplicityTable> tables,
                                           FactorSet subset, const CharacterGroup& group);
/// Both formulas; throws ConsistencyError if they disagree.
std::int64_t t_invariant(std::span<const MultiplicityTable> tables, FactorSet subset,
                         const CharMatrix& lambda);

struct HodgePolynomial {
  int n = 0;
  std::vector<std::vector<std::int64_t>> h;  // h[p][q]

  explicit HodgePolynomial(int n = 0)
      : n(n), h(n + 1, std::vector<std::int64_t>(n + 1, 0)) {}
  friend bool operator==(const HodgePolynomial&, const HodgePolynomial&) = default;

  /// Hodge symmetry, Serre duality and corner ones.
  bool symmetric() const;
};

/// sum_S t_S (u+v)^|S| (1+uv)^(n-|S|) from the t_S values (indexed by FactorSet).
HodgePolynomial hodge_from_t(int n, std::span<const std::int64_t> t_values);
/// sum_s T_s (u+v)^s (1+uv)^(n-s).
HodgePolynomial hodge_from_T(std::span<const std::int64_t> T);

struct HodgeAnalysis {
  CompatibilityCertificate certificate;
  std::vector<MultiplicityTable> tables;
  std::vector<std::int64_t> t;   // indexed by FactorSet
  std::vector<std::int64_t> T;   // T_0..T_n
  HodgePolynomial polynomial;
  bool averaging_checked = true;
};

/// Full pipeline on the certificate's regrouped matrix.
HodgeAnalysis hodge_analysis(const CharMatrix& lambda);
HodgeAnalysis hodge_analysis(const CharMatrix& lambda, const CompatibilityCertificate& cert);
HodgePolynomial hodge_polynomial(const CharMatrix& lambda);

GradedDims poincare_from_hodge(const HodgePolynomial& h);
/// Peels T_s off the Betti numbers from degree 0 upward.
std::vector<std::int64_t> recover_T_from_poincare(const GradedDims& b, int n);

}  // namespace smallcover
