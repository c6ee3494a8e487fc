#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "qtdelta/errors.hpp"

namespace qtdelta {

using Rational = mpq_class;

/// Exponent pair of a monomial q^q t^t.
struct Exponent {
  int q = 0;
  int t = 0;
  auto operator<=>(const Exponent&) const = default;
};

/// Exact polynomial in q and t with rational coefficients.
///
/// Terms are kept sorted by (qexp, texp) ascending with no zero coefficients,
/// so structural equality is polynomial equality.
class QTPoly {
 public:
  struct Term {
    Exponent exp;
    Rational coeff;
    bool operator==(const Term&) const = default;
  };

  QTPoly() = default;
  QTPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit QTPoly(const Rational& c);
  static QTPoly monomial(int qexp, int texp, const Rational& c = 1);
  static QTPoly q() { return monomial(1, 0); }
  static QTPoly t() { return monomial(0, 1); }
  /// Builds from unsorted terms; merges duplicates and drops zeros.
  static QTPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of q^qexp t^texp (zero when absent).
  Rational coeff(int qexp, int texp) const;
  /// Constant term, valid whatever the shape of the polynomial.
  Rational constant_term() const { return coeff(0, 0); }
  /// The term with the largest exponent in (q, t) lexicographic order.
  const Term& leading_term() const;
  int degree_q() const;
  int degree_t() const;
  /// Smallest exponents appearing; the monomial factor of the polynomial.
  Exponent min_exponents() const;

  QTPoly operator-() const;
  QTPoly& operator+=(const QTPoly& o);
  QTPoly& operator-=(const QTPoly& o);
  QTPoly& operator*=(const QTPoly& o);
  QTPoly& operator*=(const Rational& c);
  friend QTPoly operator+(QTPoly a, const QTPoly& b) { return a += b; }
  friend QTPoly operator-(QTPoly a, const QTPoly& b) { return a -= b; }
  friend QTPoly operator*(const QTPoly& a, const QTPoly& b);
  friend QTPoly operator*(QTPoly a, const Rational& c) { return a *= c; }
  friend QTPoly operator*(const Rational& c, QTPoly a) { return a *= c; }
  friend QTPoly operator*(QTPoly a, long c) { return a *= Rational(c); }
  friend QTPoly operator*(long c, QTPoly a) { return a *= Rational(c); }
  bool operator==(const QTPoly&) const = default;

  QTPoly pow(unsigned e) const;
  /// Multiplies by q^dq t^dt (exponents must stay non-negative).
  QTPoly shifted(int dq, int dt) const;
  /// Substitutes q -> q^r, t -> t^r (plethystic action of p_r on an alphabet).
  QTPoly power_substitute(int r) const;
  /// Exchanges the roles of q and t.
  QTPoly swap_qt() const;
  Rational evaluate(const Rational& qv, const Rational& tv) const;
  /// Specialises t -> tv leaving a polynomial in q (and symmetrically for q).
  QTPoly specialize_t(const Rational& tv) const;

  /// Exact quotient a / b if b divides a in Q[q,t], otherwise nullopt.
  static std::optional<QTPoly> divide_exact(const QTPoly& a, const QTPoly& b);

  /// Canonical text, terms in (qexp, texp) ascending order: "1 + q + 2*q*t^2".
  std::string to_string() const;
  /// Parses the canonical text (and reasonable whitespace variants).
  static QTPoly parse(std::string_view text);

 private:
  explicit QTPoly(std::vector<Term> sorted_terms) : terms_(std::move(sorted_terms)) {}
  std::vector<Term> terms_;
};

/// Greatest common divisor in Q[q,t], normalised to have its lex-leading
/// coefficient equal to 1. gcd(0, 0) is 0.
QTPoly gcd(const QTPoly& a, const QTPoly& b);

std::string rational_to_string(const Rational& r);

}  // namespace qtdelta
