#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smallcover/betti.hpp"
#include "smallcover/charmap.hpp"
#include "smallcover/hodge.hpp"
#include "smallcover/obstruct.hpp"

namespace smallcover {

/// Throws GuardrailExceeded unless 2n <= 6 and m <= 14.
void check_enumeration_guardrail(const PolygonProduct& p);

/// One RREF representative per D-J class of characteristic matrices over p,
/// sorted by rows. `jobs` threads split the search by the first free column.
std::vector<CharMatrix> enumerate_charmaps(const PolygonProduct& p, int jobs = 1);

struct CensusRow {
  CharMatrix matrix;
  bool orientable = false;
  bool factor_compatible = false;
  std::optional<Refusal> refusal;
  SymplecticVerdict verdict;
  GradedDims betti_q;
  GradedDims betti_f2;
  bool sq1_agrees = false;
  std::optional<HodgeAnalysis> hodge;
};

struct Census {
  PolygonProduct product;
  std::vector<CensusRow> rows;

  std::size_t orientable_count() const;
  std::size_t compatible_count() const;
};

CensusRow classify_one(const CharMatrix& lambda);
Census classify(const PolygonProduct& p, int jobs = 1);

}  // namespace smallcover
