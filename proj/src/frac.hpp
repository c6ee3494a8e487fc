#pragma once

#include <map>
#include <string>

#include "qtdelta/qt_poly.hpp"
#include "qtdelta/qt_rational.hpp"

namespace qtdelta::detail {

/// unit * prod atom^mult. Atoms are lex-monic; every atom is irreducible
/// (q, t, Phi_d(q^a t^b) and the homogenised Phi_d(q^a, t^b) with gcd(a, b) = 1)
/// except leftovers of general factoring, which are flagged opaque.
struct Denominator {
  struct Atom {
    QTPoly poly;
    int mult = 0;
    bool opaque = false;
  };
  Rational unit = 1;
  std::map<std::string, Atom> atoms;

  void multiply_atom(const QTPoly& poly, int mult, bool opaque = false);
  Denominator& operator*=(const Denominator& o);
  QTPoly expand() const;
  bool has_opaque() const;
};

/// 1 - q^a t^b and q^a - t^b in factored form.
Denominator factor_one_minus(int a, int b);
Denominator factor_difference(int a, int b);
/// Factors an arbitrary non-zero polynomial; memoized.
Denominator factor_polynomial(const QTPoly& p);

/// Rational function with a factored denominator; sums use exponent-wise lcm.
class Frac {
 public:
  Frac() = default;
  Frac(QTPoly num) : num_(std::move(num)) {}  // NOLINT(google-explicit-constructor)
  Frac(QTPoly num, Denominator den);
  static Frac from_rational(const QTRational& x);

  bool is_zero() const { return num_.is_zero(); }
  const QTPoly& num() const { return num_; }
  const Denominator& den() const { return den_; }

  Frac& operator*=(const Frac& o);
  Frac& operator*=(const QTPoly& p);
  Frac scaled(const Rational& c) const;
  Frac operator-() const { return scaled(-1); }
  /// Divides out the atoms that divide the numerator.
  Frac& cancel();
  /// Canonical value: cancels atoms by exact division.
  QTRational reduce() const;

 private:
  QTPoly num_;
  Denominator den_;
};

/// Accumulates fractions over the lcm of their denominators.
class FracSum {
 public:
  void add(const Frac& x);
  void add(const Frac& x, const QTPoly& factor);
  Frac value() const;
  bool empty() const { return terms_.empty(); }

 private:
  std::vector<std::pair<QTPoly, Denominator>> terms_;
};

}  // namespace qtdelta::detail
