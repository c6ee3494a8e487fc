#include <doctest.h>

#include <random>

#include "qtdelta/q_analogues.hpp"
#include "qtdelta/qt_rational.hpp"

using namespace qtdelta;

namespace {

const QTPoly q = QTPoly::q();
const QTPoly t = QTPoly::t();

// Inversions of 0/1 words with k ones: sum over words of q^{#(1 before 0)}.
QTPoly binomial_by_inversions(int n, int k) {
  QTPoly total;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    int inv = 0;
    int ones = 0;
    for (int i = 0; i < n; ++i) {
      if (mask & (1U << i)) {
        ++ones;
      } else {
        inv += ones;
      }
    }
    total += QTPoly::monomial(inv, 0);
  }
  return total;
}

long binom(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

QTPoly random_poly(std::mt19937& rng, int max_deg, int max_terms) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> count(1, max_terms);
  std::vector<QTPoly::Term> terms;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) terms.push_back({{deg(rng), deg(rng)}, coeff(rng)});
  return QTPoly::from_terms(std::move(terms));
}

}  // namespace

TEST_CASE("q_analogue") {
  CHECK(q_analogue(0).is_zero());
  CHECK(q_analogue(1) == QTPoly(1L));
  CHECK(q_analogue(3) == 1 + q + q * q);
  CHECK(t_analogue(2) == 1 + t);
}

TEST_CASE("q_binomial examples") {
  CHECK(q_binomial(5, 0) == QTPoly(1L));
  CHECK(q_binomial(2, 1) == 1 + q);
  CHECK(q_binomial(4, 2) == QTPoly::parse("1 + q + 2*q^2 + q^3 + q^4"));
  CHECK(q_binomial(3, -1).is_zero());
  CHECK(q_binomial(3, 4).is_zero());
  CHECK(q_binomial(-1, 0).is_zero());
}

TEST_CASE("q_binomial agrees with inversion counting") {
  for (int n = 0; n <= 10; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(q_binomial(n, k) == binomial_by_inversions(n, k));
    }
  }
}

TEST_CASE("q_binomial invariants") {
  for (int n = 0; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(q_binomial(n, k) == q_binomial(n, n - k));
      if (n >= 1) {
        CHECK(q_binomial(n, k) == q_binomial(n - 1, k - 1) + q_binomial(n - 1, k).shifted(k, 0));
      }
      CHECK(q_binomial(n, k).evaluate(1, 1) == binom(n, k));
    }
  }
  // q-factorial form
  for (int n = 0; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(q_binomial(n, k) * q_factorial(k) * q_factorial(n - k) == q_factorial(n));
    }
  }
}

TEST_CASE("q_pochhammer ratio") {
  for (const QTPoly& x : {q, q * q, t}) {
    for (int n = 1; n <= 8; ++n) {
      const QTRational ratio(q_pochhammer(x, n), q_pochhammer(x, n - 1));
      CHECK(ratio == QTRational(1 - x * QTPoly::monomial(n - 1, 0)));
    }
  }
  CHECK(q_pochhammer(q, 0) == QTPoly(1L));
}

TEST_CASE("rational arithmetic") {
  const QTRational one_minus_q(1 - q);
  CHECK(exact_poly_quotient(QTRational(1 - q * q), one_minus_q) == 1 + q);
  CHECK(QTRational(1L) / one_minus_q * one_minus_q == QTRational(1L));
  CHECK_THROWS_AS(QTRational(1L) / QTRational(), DivisionByZero);
  CHECK_THROWS_AS(QTRational(q, QTPoly()), DivisionByZero);

  // [3]_q / [6]_q applied to something divisible by [6]_q/[3]_q = 1 + q^3.
  const QTPoly divisible = q_binomial(6, 2) * q_analogue(6);
  const QTRational ratio(q_analogue(3), q_analogue(6));
  CHECK(exact_poly_quotient(QTRational(divisible) * ratio, QTRational(1L)) ==
        q_binomial(6, 2) * q_analogue(3));
  CHECK_THROWS_AS(exact_poly_quotient(QTRational(q_analogue(3)), QTRational(q_analogue(6))),
                  NotPolynomial);

  const QTRational r(q - t, (q - t) * (1 + q));
  CHECK(r == QTRational(1L, 1 + q));
  CHECK(r.den() == 1 + q);
  // denominator normalisation: lex-leading coefficient 1
  const QTRational s(QTPoly(2L), -2 * q + 4);
  CHECK(s.den().leading_term().coeff == 1);
  CHECK(s == QTRational(QTPoly(-1L), q - 2));
}

TEST_CASE("canonicalization is idempotent and equality is structural") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const QTPoly a = random_poly(rng, 4, 5);
    const QTPoly b = random_poly(rng, 4, 5);
    const QTPoly c = random_poly(rng, 3, 4);
    if (b.is_zero() || c.is_zero()) continue;
    const QTRational r(a * c, b * c);
    const QTRational again(r.num(), r.den());
    CHECK(again.num() == r.num());
    CHECK(again.den() == r.den());
    CHECK(r == QTRational(a, b));
  }
}

TEST_CASE("gcd properties") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const QTPoly a = random_poly(rng, 4, 4);
    const QTPoly b = random_poly(rng, 4, 4);
    const QTPoly c = random_poly(rng, 3, 3);
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    const QTPoly g = gcd(a * c, b * c);
    CHECK(QTPoly::divide_exact(g, c).has_value());
    CHECK(QTPoly::divide_exact(a * c, g).has_value());
    CHECK(QTPoly::divide_exact(b * c, g).has_value());
    CHECK(g.leading_term().coeff == 1);
  }
  // known structured case
  const QTPoly g = gcd((1 - q * t) * (q - t) * (1 + q), (q - t) * (1 - q * t) * (t - 2));
  // lex-leading term of (1 - qt)(q - t) is -q^2 t
  CHECK(g == -((1 - q * t) * (q - t)));
  CHECK(gcd(q * q * t, q * t * t) == q * t);
  CHECK(gcd(1 + q, 1 + t) == QTPoly(1L));
}

TEST_CASE("gcd of larger polynomials is maximal") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const QTPoly a = random_poly(rng, 8, 6);
    const QTPoly b = random_poly(rng, 8, 6);
    const QTPoly c = random_poly(rng, 5, 4);
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    const QTPoly g = gcd(a * c, b * c);
    REQUIRE(QTPoly::divide_exact(g, c).has_value());
    const auto ra = QTPoly::divide_exact(a * c, g);
    const auto rb = QTPoly::divide_exact(b * c, g);
    REQUIRE(ra.has_value());
    REQUIRE(rb.has_value());
    CHECK(gcd(*ra, *rb) == QTPoly(1L));
  }
}

TEST_CASE("canonical text") {
  CHECK((1 + q + 2 * q * t * t).to_string() == "1 + q + 2*q*t^2");
  CHECK(QTPoly().to_string() == "0");
  CHECK((-q + QTPoly::monomial(0, 3, Rational(3, 2))).to_string() == "3/2*t^3 - q");
  CHECK((q - 1).to_string() == "-1 + q");
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const QTPoly p = random_poly(rng, 5, 6) * Rational(1, 1 + trial % 3);
    CHECK(QTPoly::parse(p.to_string()) == p);
  }
  CHECK_THROWS_AS(QTPoly::parse("1 + + q"), ParseError);
}
