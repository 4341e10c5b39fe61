#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smallcover/charmap.hpp"

namespace smallcover {

/// First triangle factor, if any: no small cover over P is c-symplectic.
std::optional<int> triangle_obstruction(const PolygonProduct& p);

/// Sum over all vertices of det B_j, mod 2.
bool det_sum_identity(const CharMatrix& lambda);

struct AllOddReport {
  bool applicable = false;  // every factor has an odd number of sides
  bool orientable = false;
  bool det_sum = false;
};

/// Throws ConsistencyError if an all-odd product carries an orientable cover
/// or the determinant sum is not 1.
AllOddReport all_odd_obstruction(const CharMatrix& lambda);

struct EvenSidesEntry {
  int factor = 0;
  int sides = 0;
  bool weight_in_row_space = false;
};

/// One entry per factor; throws ConsistencyError if an odd factor has its
/// weight in the row space.
std::vector<EvenSidesEntry> even_sides_consistency(const CharMatrix& lambda);

struct SymplecticVerdict {
  enum class Kind { symplectic, triangle_factor, all_odd, non_orientable, unknown };
  Kind kind = Kind::unknown;
  int factor = -1;
  std::string message;
};

const char* to_string(SymplecticVerdict::Kind kind);

SymplecticVerdict symplectic_verdict(const CharMatrix& lambda);

}  // namespace smallcover
