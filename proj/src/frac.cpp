#include "frac.hpp"

#include <mutex>
#include <numeric>
#include <stdexcept>

#include "qtdelta/errors.hpp"

namespace qtdelta::detail {

namespace {

// Integer coefficients of the d-th cyclotomic polynomial, lowest degree first.
const std::vector<long>& cyclotomic(int d) {
  static std::recursive_mutex mu;
  static std::map<int, std::vector<long>> memo;
  std::lock_guard lock(mu);
  if (auto it = memo.find(d); it != memo.end()) return it->second;
  std::vector<long> p(static_cast<std::size_t>(d) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(d)] = 1;
  for (int e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    const std::vector<long>& divisor = cyclotomic(e);
    // Exact division by a monic divisor.
    const std::size_t dd = divisor.size() - 1;
    std::vector<long> quot(p.size() - dd, 0);
    for (std::size_t k = quot.size(); k-- > 0;) {
      const long c = p[k + dd];
      quot[k] = c;
      for (std::size_t j = 0; j <= dd; ++j) p[k + j] -= c * divisor[j];
    }
    p = quot;
  }
  return memo.emplace(d, p).first->second;
}

int phi(int d) { return static_cast<int>(cyclotomic(d).size()) - 1; }

// Phi_d(q^a t^b).
QTPoly atom_power(int d, int a, int b) {
  const auto& c = cyclotomic(d);
  QTPoly out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) out += QTPoly::monomial(a * static_cast<int>(i), b * static_cast<int>(i), Rational(c[i]));
  }
  return out;
}

// t^{b phi(d)} Phi_d(q^a / t^b).
QTPoly atom_homogeneous(int d, int a, int b) {
  const auto& c = cyclotomic(d);
  const int f = phi(d);
  QTPoly out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) out += QTPoly::monomial(a * static_cast<int>(i), b * (f - static_cast<int>(i)), Rational(c[i]));
  }
  return out;
}

struct Extremes {
  Exponent lead_q;   // lex max, q first
  Exponent lead_t;   // lex max, t first
  Exponent trail_q;  // lex min, q first
  Exponent trail_t;  // lex min, t first
};

Extremes extremes(const QTPoly& p) {
  Extremes e{};
  bool first = true;
  auto tq_less = [](const Exponent& x, const Exponent& y) { return std::pair(x.t, x.q) < std::pair(y.t, y.q); };
  for (const auto& term : p.terms()) {
    const Exponent x = term.exp;
    if (first) {
      e = {x, x, x, x};
      first = false;
      continue;
    }
    if (e.lead_q < x) e.lead_q = x;
    if (x < e.trail_q) e.trail_q = x;
    if (tq_less(e.lead_t, x)) e.lead_t = x;
    if (tq_less(x, e.trail_t)) e.trail_t = x;
  }
  return e;
}

bool divides_exponent(const Exponent& a, const Exponent& b) { return a.q <= b.q && a.t <= b.t; }

// Necessary condition for `atom` to divide `p`, from multiplicativity of extreme terms.
bool may_divide(const Extremes& atom, const Extremes& p) {
  return divides_exponent(atom.lead_q, p.lead_q) && divides_exponent(atom.lead_t, p.lead_t) &&
         divides_exponent(atom.trail_q, p.trail_q) && divides_exponent(atom.trail_t, p.trail_t) &&
         p.lead_q.q - p.trail_q.q >= atom.lead_q.q - atom.trail_q.q &&
         p.lead_t.t - p.trail_t.t >= atom.lead_t.t - atom.trail_t.t;
}

// Divides out every copy of `atom`; returns the multiplicity.
int strip(QTPoly& rem, Extremes& ext, const QTPoly& atom) {
  const Extremes ea = extremes(atom);
  int mult = 0;
  while (!rem.is_constant() && may_divide(ea, ext)) {
    auto quot = QTPoly::divide_exact(rem, atom);
    if (!quot) break;
    rem = std::move(*quot);
    ext = extremes(rem);
    ++mult;
  }
  return mult;
}

Denominator factor_uncached(const QTPoly& p) {
  if (p.is_zero()) throw DivisionByZero();
  Denominator out;
  QTPoly rem = p;
  const Exponent low = rem.min_exponents();
  if (low.q > 0 || low.t > 0) {
    rem = *QTPoly::divide_exact(rem, QTPoly::monomial(low.q, low.t));
    if (low.q > 0) out.multiply_atom(QTPoly::q(), low.q);
    if (low.t > 0) out.multiply_atom(QTPoly::t(), low.t);
  }
  Extremes ext = extremes(rem);
  const int dq = rem.degree_q();
  const int dt = rem.degree_t();
  for (int d = 1; !rem.is_constant() && (phi(d) <= std::max(dq, dt)); ++d) {
    const int f = phi(d);
    for (int a = 0; a * f <= dq && !rem.is_constant(); ++a) {
      for (int b = 0; b * f <= dt && !rem.is_constant(); ++b) {
        if (std::gcd(a, b) != 1) continue;
        const QTPoly atom = atom_power(d, a, b);
        if (int m = strip(rem, ext, atom); m > 0) out.multiply_atom(atom, m);
        if (a > 0 && b > 0) {
          const QTPoly hom = atom_homogeneous(d, a, b);
          if (int m = strip(rem, ext, hom); m > 0) out.multiply_atom(hom, m);
        }
      }
    }
  }
  if (!rem.is_constant()) {
    const Rational lead = rem.leading_term().coeff;
    out.unit *= lead;
    out.multiply_atom(rem * Rational(1 / lead), 1, true);
  } else {
    out.unit *= rem.constant_term();
  }
  return out;
}

QTPoly power_of(const QTPoly& p, int e) { return e == 1 ? p : p.pow(static_cast<unsigned>(e)); }

}  // namespace

void Denominator::multiply_atom(const QTPoly& poly, int mult, bool opaque) {
  if (mult == 0) return;
  Atom& a = atoms[poly.to_string()];
  if (a.mult == 0) {
    a.poly = poly;
    a.opaque = opaque;
  }
  a.mult += mult;
}

Denominator& Denominator::operator*=(const Denominator& o) {
  unit *= o.unit;
  for (const auto& [key, a] : o.atoms) multiply_atom(a.poly, a.mult, a.opaque);
  return *this;
}

QTPoly Denominator::expand() const {
  QTPoly out(unit);
  for (const auto& [key, a] : atoms) out *= power_of(a.poly, a.mult);
  return out;
}

bool Denominator::has_opaque() const {
  for (const auto& [key, a] : atoms) {
    if (a.opaque && a.mult > 0) return true;
  }
  return false;
}

Denominator factor_one_minus(int a, int b) {
  if (a == 0 && b == 0) throw DivisionByZero();
  const int g = std::gcd(a, b);
  Denominator out;
  out.unit = -1;
  for (int d = 1; d <= g; ++d) {
    if (g % d == 0) out.multiply_atom(atom_power(d, a / g, b / g), 1);
  }
  return out;
}

Denominator factor_difference(int a, int b) {
  if (a == 0 && b == 0) throw DivisionByZero();
  if (a == 0) return factor_one_minus(0, b);
  Denominator out;
  if (b == 0) {
    for (int d = 1; d <= a; ++d) {
      if (a % d == 0) out.multiply_atom(atom_power(d, 1, 0), 1);
    }
    return out;
  }
  const int g = std::gcd(a, b);
  for (int d = 1; d <= g; ++d) {
    if (g % d == 0) out.multiply_atom(atom_homogeneous(d, a / g, b / g), 1);
  }
  return out;
}

Denominator factor_polynomial(const QTPoly& p) {
  static std::mutex mu;
  static std::map<std::string, Denominator> memo;
  const std::string key = p.to_string();
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  Denominator d = factor_uncached(p);
  std::lock_guard lock(mu);
  return memo.emplace(key, std::move(d)).first->second;
}

Frac::Frac(QTPoly num, Denominator den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.unit == 0) throw DivisionByZero();
}

Frac Frac::from_rational(const QTRational& x) {
  if (x.is_polynomial()) return Frac(x.num() * Rational(1 / x.den().constant_term()));
  return Frac(x.num(), factor_polynomial(x.den()));
}

Frac& Frac::operator*=(const Frac& o) {
  if (is_zero() || o.is_zero()) return *this = Frac();
  num_ *= o.num_;
  den_ *= o.den_;
  return *this;
}

Frac& Frac::operator*=(const QTPoly& p) {
  num_ *= p;
  if (num_.is_zero()) den_ = Denominator();
  return *this;
}

Frac Frac::scaled(const Rational& c) const {
  if (c == 0) return {};
  Frac out = *this;
  out.num_ *= c;
  return out;
}

Frac& Frac::cancel() {
  if (num_.is_zero()) {
    den_ = Denominator();
    return *this;
  }
  Denominator rest;
  rest.unit = den_.unit;
  for (const auto& [key, a] : den_.atoms) {
    int mult = a.mult;
    while (mult > 0) {
      auto quot = QTPoly::divide_exact(num_, a.poly);
      if (!quot) break;
      num_ = std::move(*quot);
      --mult;
    }
    rest.multiply_atom(a.poly, mult, a.opaque);
  }
  den_ = std::move(rest);
  return *this;
}

QTRational Frac::reduce() const {
  if (num_.is_zero()) return {};
  Frac f = *this;
  f.cancel();
  if (f.den_.has_opaque()) return QTRational(f.num_, f.den_.expand());
  return QTRational::from_coprime(std::move(f.num_), f.den_.expand());
}

void FracSum::add(const Frac& x) {
  if (x.is_zero()) return;
  Denominator d = x.den();
  const Rational unit = d.unit;
  d.unit = 1;
  terms_.emplace_back(x.num() * Rational(1 / unit), std::move(d));
}

void FracSum::add(const Frac& x, const QTPoly& factor) {
  if (x.is_zero() || factor.is_zero()) return;
  Frac y = x;
  y *= factor;
  add(y);
}

Frac FracSum::value() const {
  if (terms_.empty()) return {};
  if (terms_.size() == 1) return Frac(terms_[0].first, terms_[0].second);
  Denominator lcm;
  for (const auto& [num, den] : terms_) {
    for (const auto& [key, a] : den.atoms) {
      Denominator::Atom& slot = lcm.atoms[key];
      if (slot.mult == 0) {
        slot.poly = a.poly;
        slot.opaque = a.opaque;
      }
      slot.mult = std::max(slot.mult, a.mult);
    }
  }
  std::map<std::pair<std::string, int>, QTPoly> powers;
  QTPoly total;
  for (const auto& [num, den] : terms_) {
    QTPoly part = num;
    for (const auto& [key, a] : lcm.atoms) {
      auto it = den.atoms.find(key);
      const int missing = a.mult - (it == den.atoms.end() ? 0 : it->second.mult);
      if (missing == 0) continue;
      auto [pit, inserted] = powers.try_emplace({key, missing});
      if (inserted) pit->second = power_of(a.poly, missing);
      part *= pit->second;
    }
    total += part;
  }
  if (total.is_zero()) return {};
  Frac out(std::move(total), std::move(lcm));
  out.cancel();
  return out;
}

}  // namespace qtdelta::detail
