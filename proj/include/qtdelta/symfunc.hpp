#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qtdelta/genpoly.hpp"
#include "qtdelta/partition.hpp"
#include "qtdelta/qt_poly.hpp"
#include "qtdelta/qt_rational.hpp"

namespace qtdelta {

enum class Basis { monomial, elementary, homogeneous, power, schur, macdonald };

std::string to_string(Basis b);
/// Accepts the full names and the letters m, e, h, p, s, H.
Basis parse_basis(std::string_view text);

/// Largest degree any conversion accepts (default 8). Larger inputs throw DegreeTooLarge.
int max_degree();
void set_max_degree(int n);

/// Homogeneous symmetric function of one degree, expanded in one basis.
class SymFunc {
 public:
  SymFunc() = default;
  SymFunc(Basis basis, int degree);

  static SymFunc element(Basis basis, const Partition& lambda, const QTRational& coeff = 1);
  static SymFunc e(int n) { return element(Basis::elementary, Partition({n})); }
  static SymFunc h(int n) { return element(Basis::homogeneous, Partition({n})); }
  static SymFunc p(int n) { return element(Basis::power, Partition({n})); }
  static SymFunc s(const Partition& lambda) { return element(Basis::schur, lambda); }
  /// The constant 1 in degree 0.
  static SymFunc one() { return element(Basis::monomial, Partition()); }

  Basis basis() const { return basis_; }
  int degree() const { return degree_; }
  const std::map<Partition, QTRational>& coeffs() const { return coeffs_; }
  QTRational coeff(const Partition& lambda) const;
  bool is_zero() const { return coeffs_.empty(); }

  void add(const Partition& lambda, const QTRational& c);
  SymFunc operator-() const;
  /// Operands must share basis and degree; throws InvalidParams otherwise.
  SymFunc& operator+=(const SymFunc& o);
  SymFunc& operator-=(const SymFunc& o);
  SymFunc& operator*=(const QTRational& c);
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(SymFunc a, const QTRational& c) { return a *= c; }
  friend SymFunc operator*(const QTRational& c, SymFunc a) { return a *= c; }
  /// Structural equality (same basis, degree and coefficients).
  bool operator==(const SymFunc&) const = default;

  /// Coefficients with q and t substituted.
  SymFunc map_coeffs(QTRational (*fn)(const QTRational&)) const;

  /// "(1 + q)*s[2] + s[1,1]" in the order of partitions_of; "0" for zero.
  std::string to_string() const;
  /// Monomial-basis rendering; throws NotPolynomial on a rational coefficient.
  GenPoly to_genpoly() const;

 private:
  Basis basis_ = Basis::monomial;
  int degree_ = 0;
  std::map<Partition, QTRational> coeffs_;
};

/// Parses the to_string form, e.g. "(1 + q)*s[2,1] - 2*e[3]". All terms share a basis.
SymFunc parse_symfunc(std::string_view text);

/// Same function in another basis.
SymFunc convert(const SymFunc& f, Basis target);
/// Equality after converting both sides to the monomial basis.
bool equal(const SymFunc& f, const SymFunc& g);
/// Product via p_lambda p_mu = p_{lambda cup mu}; returned in the basis of f.
SymFunc multiply(const SymFunc& f, const SymFunc& g);
/// f[X g] via p_r -> p_r g(q^r, t^r).
SymFunc plethysm_scaled_alphabet(const SymFunc& f, const QTRational& g);
/// Parses "X", "X/M", "X(1-q^j)/(1-q)" with a literal j, or "X*(<rational>)".
/// Anything else throws UnsupportedTransform.
QTRational parse_alphabet_transform(std::string_view text);
/// p_lambda -> (-1)^{|lambda| - l(lambda)} p_lambda.
SymFunc omega(const SymFunc& f);
/// f[A] for a polynomial alphabet A, with p_r[A] = A(q^r, t^r).
QTRational evaluate_at_alphabet(const SymFunc& f, const QTPoly& alphabet);

struct MacdonaldConstants {
  QTPoly B;
  QTPoly D;
  QTPoly T;
  QTPoly Pi;
  QTPoly w;
};

MacdonaldConstants constants(const Partition& mu);

/// Persistent cache of Macdonald expansions. The directory defaults to
/// $QTDELTA_CACHE_DIR, then $XDG_CACHE_HOME/qtdelta, then ~/.cache/qtdelta.
struct MacdonaldCacheConfig {
  bool enabled = true;
  std::optional<std::filesystem::path> directory;
};
void configure_macdonald_cache(const MacdonaldCacheConfig& config);
std::filesystem::path macdonald_cache_directory();

/// Modified Macdonald polynomial in the monomial basis.
SymFunc macdonald(const Partition& mu);
/// Coordinates in the Macdonald basis.
SymFunc to_macdonald(const SymFunc& f);

enum class DiagonalKind { nabla, delta, delta_prime, pi, pi_inverse };

struct DiagonalOperator {
  DiagonalKind kind = DiagonalKind::nabla;
  /// The symmetric function f of delta and delta_prime.
  std::optional<SymFunc> f;
};

/// Eigenvalue of the operator on the Macdonald polynomial of mu.
QTRational eigenvalue(const DiagonalOperator& op, const Partition& mu);
/// Result in the basis of F.
SymFunc apply_diagonal(const DiagonalOperator& op, const SymFunc& F);
SymFunc nabla(const SymFunc& F);
SymFunc delta(const SymFunc& f, const SymFunc& F);
SymFunc delta_prime(const SymFunc& f, const SymFunc& F);

/// Theta of e_k applied to F; result of degree deg F + k in the basis of F.
SymFunc theta(int k, const SymFunc& F);

/// E_{n,k} in the elementary basis. Throws IndexOutOfRange unless 0 <= k <= n.
SymFunc e_nk(int n, int k);

}  // namespace qtdelta
