#pragma once

#include <map>
#include <vector>

#include "qtdelta/partition.hpp"
#include "qtdelta/qt_poly.hpp"
#include "qtdelta/symfunc.hpp"

namespace qtdelta::detail {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Transition data for one degree; rows are indexed like `parts`.
struct DegreeTables {
  std::vector<Partition> parts;
  std::map<Partition, std::size_t> index;
  /// to_m[b][i][j]: coefficient of m_{parts[j]} in b_{parts[i]}.
  std::map<Basis, RationalMatrix> to_m;
  /// from_m[b][i][j]: coefficient of b_{parts[j]} in m_{parts[i]}.
  std::map<Basis, RationalMatrix> from_m;
};

/// Built once per degree; throws DegreeTooLarge above max_degree().
const DegreeTables& tables(int degree);

void check_degree(int degree);

RationalMatrix invert(const RationalMatrix& a);

}  // namespace qtdelta::detail
