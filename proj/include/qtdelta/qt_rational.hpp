#pragma once

#include <string>

#include "qtdelta/qt_poly.hpp"

namespace qtdelta {

/// Rational function in q and t.
///
/// Always canonical: numerator and denominator are coprime and the
/// denominator's lex-leading coefficient is 1, so equality is structural.
class QTRational {
 public:
  QTRational() : den_(1L) {}
  QTRational(long c) : num_(c), den_(1L) {}  // NOLINT(google-explicit-constructor)
  QTRational(const Rational& c) : num_(c), den_(1L) {}  // NOLINT(google-explicit-constructor)
  QTRational(QTPoly p) : num_(std::move(p)), den_(1L) {}  // NOLINT(google-explicit-constructor)
  /// Throws DivisionByZero when `den` is zero.
  QTRational(QTPoly num, QTPoly den);

  /// Trusts that num and den are coprime; only normalizes the leading coefficient.
  static QTRational from_coprime(QTPoly num, QTPoly den);

  const QTPoly& num() const { return num_; }
  const QTPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  /// The polynomial value; throws NotPolynomial if the denominator is not constant.
  QTPoly as_polynomial() const;

  QTRational operator-() const;
  QTRational& operator+=(const QTRational& o);
  QTRational& operator-=(const QTRational& o);
  QTRational& operator*=(const QTRational& o);
  QTRational& operator/=(const QTRational& o);
  friend QTRational operator+(QTRational a, const QTRational& b) { return a += b; }
  friend QTRational operator-(QTRational a, const QTRational& b) { return a -= b; }
  friend QTRational operator*(QTRational a, const QTRational& b) { return a *= b; }
  friend QTRational operator/(QTRational a, const QTRational& b) { return a /= b; }
  bool operator==(const QTRational&) const = default;

  /// Multiplies by a constant without touching the denominator.
  QTRational scaled(const Rational& c) const;

  /// Substitutes q -> q^r, t -> t^r.
  QTRational power_substitute(int r) const;
  QTRational swap_qt() const;
  /// Throws DivisionByZero if the denominator vanishes at the point.
  Rational evaluate(const Rational& qv, const Rational& tv) const;

  /// Renders "p" for polynomials and "(p)/(d)" otherwise.
  std::string to_string() const;

 private:
  void canonicalize();

  QTPoly num_;
  QTPoly den_;
};

/// The polynomial p with a = p * b; throws NotPolynomial when b does not
/// divide a and DivisionByZero when b is zero.
QTPoly exact_poly_quotient(const QTRational& a, const QTRational& b);

}  // namespace qtdelta
