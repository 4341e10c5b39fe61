#pragma once

#include <string>
#include <vector>

#include "smallcover/charmap.hpp"

namespace smallcover {

/// The adjacent-sum functionals d_{i,k} of one factor on E = row(lambda)/C,
/// C = <chi_1, ..., chi_n>, in coordinates dual to a chosen basis of E.
struct FunctionalSet {
  int factor = 0;
  std::vector<BitVector> functionals;  // distinct, ascending
};

/// Rows w_1..w_n of lambda, chosen greedily, whose classes form a basis of E.
std::vector<BitVector> quotient_representatives(const CharMatrix& regrouped);

/// Evaluates every d_{i,k} on the given representatives.
std::vector<FunctionalSet> functionals(const CharMatrix& regrouped,
                                       std::span<const BitVector> representatives);
std::vector<FunctionalSet> functionals(const CharMatrix& lambda,
                                       const CompatibilityCertificate& cert);

bool every_transversal_is_basis(std::span<const FunctionalSet> sets);

struct ColoredBasis {
  std::vector<int> order;        // order[k] = factor placed at position k
  std::vector<BitVector> basis;  // eps_k, with D_{order[k]} in eps_k + <eps_{k+1}, ...>
};

/// Throws ConsistencyError if some transversal is not a basis or no
/// singleton is left at some step.
ColoredBasis colored_triangularize(std::span<const FunctionalSet> sets);

struct Fiber {
  int position = 0;
  int factor = 0;  // factor index in the input product
  int sides = 0;
  int genus = 0;
  BitMatrix block;  // diagonal block Lambda_ii
};

struct TriangularForm {
  std::vector<int> factor_order;
  /// Column j of result is column colperm[j] of the input matrix.
  std::vector<int> colperm;
  BitMatrix U;
  CharMatrix result;
  std::vector<Fiber> tower;
};

TriangularForm blockize(const CharMatrix& lambda, const CompatibilityCertificate& cert);
TriangularForm blockize(const CharMatrix& lambda);

struct BlockformReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

BlockformReport verify_blockform(const TriangularForm& form, const CharMatrix& original);

/// Fibers of the iterated bundle, bottom factor first. Throws
/// std::invalid_argument if the form is not block lower triangular.
std::vector<Fiber> bundle_tower(const TriangularForm& form);

}  // namespace smallcover
