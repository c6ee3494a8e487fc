#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "qtdelta/genpoly.hpp"
#include "qtdelta/qt_poly.hpp"

namespace qtdelta {

enum class CheckStatus { pass, fail, skipped };
std::string to_string(CheckStatus s);

/// First coefficient where two generating polynomials differ.
struct CoefficientDiff {
  std::vector<int> content;
  int qexp = 0;
  int texp = 0;
  Rational lhs;
  Rational rhs;
};

struct CheckReport {
  std::string check;
  std::map<std::string, int> params;
  /// Diagonal word of a per-class report; empty otherwise.
  std::string word;
  CheckStatus status = CheckStatus::pass;
  std::string lhs;
  std::string rhs;
  std::optional<CoefficientDiff> diff;
  std::string note;
  long ms = 0;

  /// {"check":..,"params":{..},"status":..,"lhs":..,"rhs":..,"diff":{..},"ms":..}
  std::string to_json() const;
};

/// Scans contents in increasing order, then (q, t) exponents in increasing order.
std::optional<CoefficientDiff> first_difference(const GenPoly& lhs, const GenPoly& rhs);
std::optional<CoefficientDiff> first_difference(const QTPoly& lhs, const QTPoly& rhs);

const std::vector<std::string>& identity_names();
const std::vector<std::string>& conjecture_names();

/// Per class (diagonal word, shift) of valley-decorated square paths with m
/// zeros, n positive labels and k decorations: the product formula against the
/// brute-force class sum, and the insertion generator against the filtered paths.
std::vector<CheckReport> check_schedule(int n, int k, int m = 0);

/// Per class: the shift-by-1 ratio and, when #rho'_0 > 0, the flattening to Dyck paths.
std::vector<CheckReport> check_shift_recursion(int n, int k, int m = 0);

/// [r]_q LSQ'(m, n\r)^k = [n-k]_q LD(m, n\r)^k.
CheckReport check_square_to_dyck(int m, int n, int k, int r);

/// theta_en(n, k), theta_pn(n, k), theta_pn_corollary(n, k), pn_Enk(n), Enk_sum(n).
CheckReport check_identity(std::string_view name, int n, int k = 0);

/// Symmetric-function side rendered to monomial coefficients. Ratio prefactors
/// are divided out exactly; throws NotPolynomial when they do not divide.
GenPoly conjecture_symmetric_side(std::string_view name, int m, int n, int k, std::optional<int> r = std::nullopt);
/// Generating polynomial of the matching path family.
GenPoly conjecture_combinatorial_side(std::string_view name, int m, int n, int k,
                                      std::optional<int> r = std::nullopt);
CheckReport check_conjecture(std::string_view name, int m, int n, int k, std::optional<int> r = std::nullopt);

/// Sums of both sides of the generalised touching statement over r equal the
/// sides of the unrefined valley statement.
CheckReport check_touching_additivity(int m, int n, int k);

/// Touching Dyck sums scaled by [n-k]_q/[r]_q and summed over r equal the LSQ'
/// sum and Delta_{h_m} Theta_{e_k} nabla omega(p_{n-k}).
CheckReport check_square_pipeline(int m, int n, int k);

struct SuiteOptions {
  int max_size = 4;
  int max_k = 2;
  /// Subset of suite_families(); empty runs nothing.
  std::vector<std::string> families;
  /// Worker threads; 0 means hardware concurrency.
  int jobs = 0;
};

struct SuiteSummary {
  int total = 0;
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  long ms = 0;

  bool ok() const { return failed == 0; }
  std::string to_json() const;
};

/// schedule, shift, identity, conjecture, audit, pipeline.
const std::vector<std::string>& suite_families();

/// Number of report lines run_suite writes for these options (summary excluded).
std::size_t suite_catalogue_size(const SuiteOptions& options);

/// Runs every catalogued check and writes one JSON object per line in
/// catalogue order, then the summary. Throws InvalidParams on an unknown family.
SuiteSummary run_suite(const SuiteOptions& options, std::ostream& sink);

/// Exploratory, outside the suite: square paths of size n with decorated
/// valleys and decorated rises at once, weighted q^dinv t^area x^w. Reports
/// whether the resulting series is symmetric.
struct MixedSeries {
  bool symmetric = false;
  long paths = 0;
  std::string detail;
};
MixedSeries explore_mixed_decorations(int n, int valleys, int rises);

}  // namespace qtdelta
