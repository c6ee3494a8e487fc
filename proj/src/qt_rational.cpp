#include "qtdelta/qt_rational.hpp"

namespace qtdelta {

QTRational::QTRational(QTPoly num, QTPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  canonicalize();
}

void QTRational::canonicalize() {
  if (num_.is_zero()) {
    den_ = QTPoly(1L);
    return;
  }
  if (!den_.is_constant()) {
    if (auto quot = QTPoly::divide_exact(num_, den_)) {
      num_ = std::move(*quot);
      den_ = QTPoly(1L);
      return;
    }
    const QTPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *QTPoly::divide_exact(num_, g);
      den_ = *QTPoly::divide_exact(den_, g);
    }
  }
  const Rational lead = den_.leading_term().coeff;
  if (lead != 1) {
    const Rational inv = 1 / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

QTPoly QTRational::as_polynomial() const {
  if (!is_polynomial()) throw NotPolynomial("rational function is not a polynomial: " + to_string());
  return num_;
}

QTRational QTRational::operator-() const {
  QTRational out = *this;
  out.num_ = -out.num_;
  return out;
}

QTRational& QTRational::operator+=(const QTRational& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_constant()) {
      canonicalize();
    } else if (num_.is_zero()) {
      den_ = QTPoly(1L);
    }
    return *this;
  }
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ += o.num_;
    return *this;
  }
  // Henrici: only the common part of the denominators enters twice.
  const QTPoly g = gcd(den_, o.den_);
  const QTPoly d1 = *QTPoly::divide_exact(den_, g);
  const QTPoly d2 = *QTPoly::divide_exact(o.den_, g);
  num_ = num_ * d2 + o.num_ * d1;
  den_ = d1 * o.den_;
  canonicalize();
  return *this;
}

QTRational& QTRational::operator-=(const QTRational& o) { return *this += -o; }

QTRational& QTRational::operator*=(const QTRational& o) {
  if (is_zero() || o.is_zero()) return *this = QTRational();
  if (is_polynomial() && o.is_polynomial()) {
    num_ *= o.num_;
    return *this;
  }
  // Cross-cancel before multiplying to keep operands small.
  const QTPoly g1 = gcd(num_, o.den_);
  const QTPoly g2 = gcd(o.num_, den_);
  QTPoly n1 = *QTPoly::divide_exact(num_, g1);
  QTPoly d2 = *QTPoly::divide_exact(o.den_, g1);
  QTPoly n2 = *QTPoly::divide_exact(o.num_, g2);
  QTPoly d1 = *QTPoly::divide_exact(den_, g2);
  num_ = n1 * n2;
  den_ = d1 * d2;
  const Rational lead = den_.leading_term().coeff;
  if (lead != 1) {
    const Rational inv = 1 / lead;
    num_ *= inv;
    den_ *= inv;
  }
  return *this;
}

QTRational& QTRational::operator/=(const QTRational& o) {
  if (o.is_zero()) throw DivisionByZero();
  QTRational inv;
  inv.num_ = o.den_;
  inv.den_ = o.num_;
  inv.canonicalize();
  return *this *= inv;
}

QTRational QTRational::from_coprime(QTPoly num, QTPoly den) {
  if (den.is_zero()) throw DivisionByZero();
  QTRational out;
  if (num.is_zero()) return out;
  const Rational lead = den.leading_term().coeff;
  out.num_ = std::move(num);
  out.den_ = std::move(den);
  if (lead != 1) {
    const Rational inv = 1 / lead;
    out.num_ *= inv;
    out.den_ *= inv;
  }
  return out;
}

QTRational QTRational::scaled(const Rational& c) const {
  if (c == 0) return {};
  QTRational out = *this;
  out.num_ *= c;
  return out;
}

QTRational QTRational::power_substitute(int r) const {
  return {num_.power_substitute(r), den_.power_substitute(r)};
}

QTRational QTRational::swap_qt() const { return {num_.swap_qt(), den_.swap_qt()}; }

Rational QTRational::evaluate(const Rational& qv, const Rational& tv) const {
  const Rational d = den_.evaluate(qv, tv);
  if (d == 0) throw DivisionByZero();
  return num_.evaluate(qv, tv) / d;
}

std::string QTRational::to_string() const {
  if (den_ == QTPoly(1L)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

QTPoly exact_poly_quotient(const QTRational& a, const QTRational& b) {
  if (b.is_zero()) throw DivisionByZero();
  const QTRational quotient = a / b;
  if (!quotient.is_polynomial()) {
    throw NotPolynomial("quotient is not a polynomial: " + quotient.to_string());
  }
  return quotient.num();
}

}  // namespace qtdelta
