#pragma once

#include <map>
#include <vector>

#include "qtdelta/marked_word.hpp"
#include "qtdelta/paths.hpp"
#include "qtdelta/qt_poly.hpp"

namespace qtdelta {

/// Label counts of one run, split into undecorated (z_i) and decorated (z_i•).
struct RunMultiplicity {
  std::map<int, int> undecorated;
  std::map<int, int> decorated;
  /// #rho~_i, the number of undecorated entries.
  int undecorated_size = 0;
  /// #rho'_i, the number of undecorated positive entries.
  int positive_size = 0;

  int z(int c) const;
  int z_dec(int c) const;
};

/// Index i holds rho_i (so the result runs bottom run first).
std::vector<RunMultiplicity> run_multiplicities(const MarkedWord& z);

struct ScheduleNumbers {
  int w = 0;
  int w_dec = 0;
};

/// w_{i,s}(c) and w•_{i,s}(c). Throws IndexOutOfRange unless 0 <= i, s <= l.
ScheduleNumbers schedule_numbers(const MarkedWord& z, int s, int i, int c);

/// b(z,s) = sum_{i<s} (#rho'_i - z•_{i-1}(0)).
int b_exponent(const MarkedWord& z, int s);

/// Closed-form q,t-enumerator of the paths with diagonal word z and shift s.
/// Zero when s > l; throws IndexOutOfRange for s < 0.
QTPoly schedule_product(const MarkedWord& z, int s);

/// Multiplicities of the positive labels 1..max of z.
std::vector<int> positive_content(const MarkedWord& z);
int zero_count(const MarkedWord& z);
int decorated_count(const MarkedWord& z);

/// Builds every path with diagonal word z and shift s by inserting labels run
/// by run. Throws UnrealizableWord when no valid path arises.
std::vector<DecoratedPath> insertion_generate(const MarkedWord& z, int s);

/// Oracle: enumerates all valley-decorated square paths with the content of z
/// and keeps those with shift s and diagonal word z.
std::vector<DecoratedPath> class_paths_bruteforce(const MarkedWord& z, int s);

/// Sum of q^dinv t^area.
QTPoly qt_enumerator(const std::vector<DecoratedPath>& paths);

}  // namespace qtdelta
