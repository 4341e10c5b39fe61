#include "smallcover/obstruct.hpp"

#include "smallcover/errors.hpp"

namespace smallcover {

std::optional<int> triangle_obstruction(const PolygonProduct& p) {
  for (int i = 0; i < p.factor_count(); ++i) {
    if (p.sides(i) == 3) return i;
  }
  return std::nullopt;
}

bool det_sum_identity(const CharMatrix& lambda) {
  lambda.require_valid();
  bool sum = false;
  lambda.product().for_each_vertex([&](std::span<const int> edges) {
    sum ^= gf2::det(lambda.vertex_minor(edges));
  });
  return sum;
}

AllOddReport all_odd_obstruction(const CharMatrix& lambda) {
  lambda.require_valid();
  const auto& p = lambda.product();
  AllOddReport report;
  report.applicable = true;
  for (int m : p.side_list()) report.applicable = report.applicable && m % 2 == 1;
  report.orientable = orientable(lambda).orientable;
  report.det_sum = det_sum_identity(lambda);
  if (report.applicable && (report.orientable || !report.det_sum)) {
    throw ConsistencyError("all factors odd but orientable=" + std::to_string(report.orientable) +
                           ", determinant sum=" + std::to_string(report.det_sum));
  }
  return report;
}

std::vector<EvenSidesEntry> even_sides_consistency(const CharMatrix& lambda) {
  lambda.require_valid();
  const auto& p = lambda.product();
  gf2::CosetReducer rows(p.facet_count(), lambda.matrix().rows());
  std::vector<EvenSidesEntry> out;
  for (int i = 0; i < p.factor_count(); ++i) {
    EvenSidesEntry e{i, p.sides(i), rows.contains(p.factor_weight(i))};
    if (e.weight_in_row_space && e.sides % 2 != 0) {
      throw ConsistencyError("factor " + std::to_string(i + 1) + " has " +
                             std::to_string(e.sides) + " sides but its weight is in the row space");
    }
    out.push_back(e);
  }
  return out;
}

const char* to_string(SymplecticVerdict::Kind kind) {
  switch (kind) {
    case SymplecticVerdict::Kind::symplectic: return "symplectic";
    case SymplecticVerdict::Kind::triangle_factor: return "triangle_factor";
    case SymplecticVerdict::Kind::all_odd: return "all_odd";
    case SymplecticVerdict::Kind::non_orientable: return "non_orientable";
    case SymplecticVerdict::Kind::unknown: return "unknown";
  }
  return "unknown";
}

SymplecticVerdict symplectic_verdict(const CharMatrix& lambda) {
  lambda.require_valid();
  using Kind = SymplecticVerdict::Kind;
  if (auto t = triangle_obstruction(lambda.product())) {
    return {Kind::triangle_factor, *t,
            "triangle factor " + std::to_string(*t + 1) +
                ": not c-symplectic, hence not symplectic"};
  }
  if (all_odd_obstruction(lambda).applicable) {
    return {Kind::all_odd, -1, "all factors odd: non-orientable, hence not symplectic"};
  }
  if (!orientable(lambda).orientable) {
    return {Kind::non_orientable, -1, "non-orientable: not symplectic"};
  }
  if (certified(factor_compatible(lambda))) {
    return {Kind::symplectic, -1, "factor-compatible: projective, hence symplectic"};
  }
  return {Kind::unknown, -1, "no obstruction applies and the matrix is not factor-compatible"};
}

}  // namespace smallcover
