#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>

#include "qtdelta/errors.hpp"
#include "qtdelta/q_analogues.hpp"
#include "qtdelta/symfunc.hpp"

using namespace qtdelta;

namespace {

const QTPoly q = QTPoly::q();
const QTPoly t = QTPoly::t();
const QTPoly one(1L);

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

// Explicit polynomials in n commuting variables, for an independent monomial oracle.
using Poly = std::map<std::vector<int>, long>;

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  }
  return out;
}

Poly elementary_poly(int k, int vars) {
  Poly out;
  for (int mask = 0; mask < (1 << vars); ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) != k) continue;
    std::vector<int> e(static_cast<std::size_t>(vars));
    for (int i = 0; i < vars; ++i) e[static_cast<std::size_t>(i)] = (mask >> i) & 1;
    out[e] += 1;
  }
  return out;
}

// Coefficient of x^lambda read from an explicit polynomial.
SymFunc to_monomial(const Poly& f, int degree, int vars) {
  SymFunc out(Basis::monomial, degree);
  for (const Partition& lambda : partitions_of(degree)) {
    std::vector<int> e(static_cast<std::size_t>(vars), 0);
    for (int i = 0; i < lambda.length(); ++i) e[static_cast<std::size_t>(i)] = lambda[i];
    auto it = f.find(e);
    if (it != f.end()) out.add(lambda, QTRational(it->second));
  }
  return out;
}

// Semistandard tableaux of shape lambda and content mu, filled row by row.
long count_ssyt(const Partition& lambda, const Partition& mu) {
  std::vector<std::vector<int>> grid;
  for (int p : lambda.parts) grid.emplace_back(static_cast<std::size_t>(p), 0);
  std::vector<int> left = mu.parts;
  std::function<long(int, int)> rec = [&](int r, int c) -> long {
    if (r == lambda.length()) return 1;
    if (c == lambda[r]) return rec(r + 1, 0);
    long total = 0;
    for (int v = 1; v <= mu.length(); ++v) {
      if (left[static_cast<std::size_t>(v - 1)] == 0) continue;
      if (c > 0 && grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)] > v) continue;
      if (r > 0 && grid[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] >= v) continue;
      grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
      --left[static_cast<std::size_t>(v - 1)];
      total += rec(r, c + 1);
      ++left[static_cast<std::size_t>(v - 1)];
    }
    return total;
  };
  return rec(0, 0);
}

SymFunc random_symfunc(std::mt19937& rng, Basis basis, int degree) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> expo(0, 2);
  SymFunc f(basis, degree);
  for (const Partition& lambda : partitions_of(degree)) {
    f.add(lambda, QTPoly::monomial(expo(rng), expo(rng), coeff(rng)) + QTPoly(static_cast<long>(coeff(rng))));
  }
  return f;
}

QTRational specialize_one(const QTRational& c) { return QTRational(c.evaluate(1, 1)); }
QTRational swap_coeff(const QTRational& c) { return c.swap_qt(); }

struct TempCache {
  std::filesystem::path dir;
  TempCache() {
    dir = std::filesystem::temp_directory_path() / ("qtdelta-test-" + std::to_string(std::random_device{}()));
    configure_macdonald_cache({true, dir});
  }
  ~TempCache() {
    configure_macdonald_cache({false, std::nullopt});
    std::error_code ec;
    std::filesystem::remove_all(dir, ec);
  }
};

}  // namespace

TEST_CASE("macdonald constants") {
  const auto c1 = constants(P({1}));
  CHECK(c1.B == one);
  CHECK(c1.T == one);
  CHECK(c1.Pi == one);
  CHECK(c1.D == (one - q) * (one - t) - one);
  CHECK(constants(P({2, 1})).B == one + q + t);
  CHECK(constants(P({2, 2})).T == QTPoly::monomial(2, 2));
  CHECK(constants(P({2, 1})).Pi == (one - q) * (one - t));
  CHECK(constants(Partition()).Pi == one);
  for (int n = 1; n <= 6; ++n) {
    for (const Partition& mu : partitions_of(n)) {
      const auto c = constants(mu);
      CHECK(c.T == QTPoly::monomial(mu.conjugate().n_stat(), mu.n_stat()));
      CHECK(!c.Pi.is_zero());
      CHECK(c.B.evaluate(1, 1) == n);
      CHECK(c.w.swap_qt() == constants(mu.conjugate()).w);
    }
  }
}

TEST_CASE("basis conversions against explicit expansions") {
  CHECK(convert(SymFunc::e(2), Basis::monomial) == SymFunc::element(Basis::monomial, P({1, 1})));
  CHECK(convert(SymFunc::h(2), Basis::monomial) ==
        SymFunc::element(Basis::monomial, P({2})) + SymFunc::element(Basis::monomial, P({1, 1})));
  CHECK(convert(SymFunc::s(P({2, 1})), Basis::monomial) ==
        SymFunc::element(Basis::monomial, P({2, 1})) + SymFunc::element(Basis::monomial, P({1, 1, 1}), 2));
  for (int n = 1; n <= 5; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      Poly e{{std::vector<int>(static_cast<std::size_t>(n), 0), 1}};
      for (int part : lambda.parts) e = poly_mul(e, elementary_poly(part, n));
      CHECK(convert(SymFunc::element(Basis::elementary, lambda), Basis::monomial) == to_monomial(e, n, n));
      const SymFunc s = convert(SymFunc::s(lambda), Basis::monomial);
      for (const Partition& mu : partitions_of(n)) {
        CHECK(s.coeff(mu) == QTRational(count_ssyt(lambda, mu)));
      }
    }
  }
}

TEST_CASE("basis round trips up to degree 6") {
  std::mt19937 rng(7);
  const std::vector<Basis> bases = {Basis::monomial, Basis::elementary, Basis::homogeneous, Basis::power, Basis::schur};
  for (int n = 0; n <= 6; ++n) {
    for (Basis from : bases) {
      const SymFunc f = random_symfunc(rng, from, n);
      for (Basis to : bases) CHECK(convert(convert(f, to), from) == f);
    }
  }
}

TEST_CASE("multiply and omega") {
  const SymFunc e1 = SymFunc::e(1);
  CHECK(convert(multiply(e1, e1), Basis::monomial) ==
        SymFunc::element(Basis::monomial, P({2})) + SymFunc::element(Basis::monomial, P({1, 1}), 2));
  const SymFunc f = SymFunc::s(P({2, 1})) * QTRational(q + t);
  CHECK(multiply(f, SymFunc::one()) == f);
  const Poly e21 = poly_mul(elementary_poly(2, 3), elementary_poly(1, 3));
  CHECK(convert(multiply(SymFunc::e(2), e1), Basis::monomial) == to_monomial(e21, 3, 3));
  for (int n = 1; n <= 5; ++n) CHECK(equal(omega(SymFunc::e(n)), SymFunc::h(n)));
  std::mt19937 rng(3);
  const SymFunc g = random_symfunc(rng, Basis::schur, 4);
  CHECK(omega(omega(g)) == g);
  CHECK(convert(omega(SymFunc::p(2)), Basis::monomial) == SymFunc::element(Basis::monomial, P({2}), -1));
  CHECK_THROWS_AS(multiply(SymFunc::e(5), SymFunc::e(4)), DegreeTooLarge);
}

TEST_CASE("plethysm with scaled alphabets") {
  const SymFunc e2q = plethysm_scaled_alphabet(SymFunc::e(2), one + q);
  CHECK(convert(e2q, Basis::monomial) == SymFunc::element(Basis::monomial, P({2}), q) +
                                              SymFunc::element(Basis::monomial, P({1, 1}), (one + q) * (one + q)));
  const SymFunc f = SymFunc::s(P({2, 2}));
  CHECK(plethysm_scaled_alphabet(f, 1L) == f);
  const QTRational over_m = parse_alphabet_transform("X/M");
  CHECK(plethysm_scaled_alphabet(SymFunc::p(2), over_m) ==
        SymFunc::element(Basis::power, P({2}), QTRational(one, (one - q * q) * (one - t * t))));
  CHECK(parse_alphabet_transform("X (1-q^3)/(1-q)") == QTRational(q_analogue(3)));
  CHECK(parse_alphabet_transform("X*(1 + q)") == QTRational(one + q));
  CHECK_THROWS_AS(parse_alphabet_transform("X^2"), UnsupportedTransform);
  CHECK_THROWS_AS(parse_alphabet_transform("X + Y"), UnsupportedTransform);
}

TEST_CASE("macdonald polynomials") {
  configure_macdonald_cache({false, std::nullopt});
  CHECK(macdonald(P({1})) == SymFunc::element(Basis::monomial, P({1})));
  CHECK(convert(macdonald(P({2})), Basis::schur) == SymFunc::s(P({2})) + SymFunc::s(P({1, 1})) * QTRational(q));
  CHECK(convert(macdonald(P({1, 1})), Basis::schur) == SymFunc::s(P({2})) + SymFunc::s(P({1, 1})) * QTRational(t));
  CHECK(convert(macdonald(P({2, 1})), Basis::schur) == SymFunc::s(P({3})) + SymFunc::s(P({2, 1})) * QTRational(q + t) +
                                                             SymFunc::s(P({1, 1, 1})) * QTRational(q * t));
  for (int n = 1; n <= 6; ++n) {
    SymFunc e1n = SymFunc::one();
    for (int i = 0; i < n; ++i) e1n = multiply(e1n, SymFunc::e(1));
    for (const Partition& mu : partitions_of(n)) {
      const SymFunc h = macdonald(mu);
      CHECK(h.map_coeffs(specialize_one) == convert(e1n, Basis::monomial));
      CHECK(h.map_coeffs(swap_coeff) == macdonald(mu.conjugate()));
    }
  }
  CHECK_THROWS_AS(macdonald(P({9})), DegreeTooLarge);
}

TEST_CASE("macdonald disk cache") {
  TempCache cache;
  // Partitions of 7 are not in the in-memory memo yet.
  const Partition nu = P({4, 2, 1});
  const SymFunc h = macdonald(nu);
  const auto file = macdonald_cache_directory() / "macdonald_4_2_1.txt";
  REQUIRE(std::filesystem::exists(file));
  std::ifstream in(file);
  std::string header;
  std::getline(in, header);
  CHECK(header == "qtdelta-macdonald 1");
  // A corrupt entry is recomputed instead of trusted.
  std::filesystem::create_directories(macdonald_cache_directory());
  std::ofstream(macdonald_cache_directory() / "macdonald_5_2.txt") << "qtdelta-macdonald 1\npartition (5,2)\ngarbage\n";
  CHECK(macdonald(P({5, 2})).map_coeffs(swap_coeff) == macdonald(P({2, 2, 1, 1, 1})));
  CHECK(h.map_coeffs(swap_coeff) == macdonald(nu.conjugate()));
}

TEST_CASE("macdonald basis coordinates") {
  configure_macdonald_cache({false, std::nullopt});
  CHECK(to_macdonald(macdonald(P({2}))) == SymFunc::element(Basis::macdonald, P({2})));
  const QTRational inv(one, q - t);
  CHECK(to_macdonald(SymFunc::e(2)) == SymFunc::element(Basis::macdonald, P({2}), inv) +
                                           SymFunc::element(Basis::macdonald, P({1, 1}), -inv));
  std::mt19937 rng(11);
  for (int n = 0; n <= 5; ++n) {
    const SymFunc f = random_symfunc(rng, Basis::schur, n);
    CHECK(convert(to_macdonald(f), Basis::schur) == f);
  }
}

TEST_CASE("diagonal operators") {
  configure_macdonald_cache({false, std::nullopt});
  CHECK(nabla(SymFunc::e(1)) == SymFunc::e(1));
  CHECK(convert(nabla(SymFunc::e(2)), Basis::schur) == SymFunc::s(P({2})) + SymFunc::s(P({1, 1})) * QTRational(q + t));
  for (int n = 1; n <= 4; ++n) {
    std::mt19937 rng(static_cast<unsigned>(n));
    const SymFunc f = random_symfunc(rng, Basis::schur, n);
    CHECK(delta(SymFunc::e(n), f) == nabla(f));
    CHECK(delta_prime(SymFunc::e(n - 1), f) == nabla(f));
  }
  const SymFunc f = SymFunc::s(P({2, 1}));
  CHECK(apply_diagonal({DiagonalKind::pi_inverse, std::nullopt}, apply_diagonal({DiagonalKind::pi, std::nullopt}, f)) == f);
  CHECK(apply_diagonal({DiagonalKind::pi, std::nullopt}, SymFunc::one()) == SymFunc::one());
  CHECK_THROWS_AS(eigenvalue({DiagonalKind::delta, std::nullopt}, P({1})), InvalidParams);
}

TEST_CASE("theta") {
  configure_macdonald_cache({false, std::nullopt});
  const SymFunc f = SymFunc::s(P({2, 1}));
  CHECK(theta(0, f) == f);
  for (int n = 2; n <= 4; ++n) {
    for (int k = 1; k < n; ++k) {
      const SymFunc lhs = theta(k, nabla(SymFunc::e(n - k)));
      CHECK(lhs.degree() == n);
      CHECK(equal(lhs, delta_prime(SymFunc::e(n - k - 1), SymFunc::e(n))));
    }
  }
}

TEST_CASE("E_{n,k}") {
  CHECK(equal(e_nk(1, 1), SymFunc::e(1)));
  const QTRational inv_q(one, q);
  const SymFunc h2 = convert(SymFunc::h(2), Basis::elementary);
  CHECK(e_nk(2, 1) == h2 * QTRational(-inv_q));
  CHECK(e_nk(2, 2) == SymFunc::e(2) + h2 * inv_q);
  CHECK(equal(e_nk(2, 1) * QTRational(one + q) + e_nk(2, 2), omega(SymFunc::p(2))));
  CHECK(e_nk(0, 0) == SymFunc::one());
  CHECK(e_nk(3, 0).is_zero());
  for (int n = 1; n <= 5; ++n) {
    SymFunc sum(Basis::elementary, n);
    SymFunc weighted(Basis::elementary, n);
    for (int k = 1; k <= n; ++k) {
      const SymFunc enk = e_nk(n, k);
      sum += enk;
      weighted += enk * QTRational(q_analogue(n), q_analogue(k));
    }
    CHECK(sum == SymFunc::e(n));
    CHECK(equal(weighted, omega(SymFunc::p(n))));
  }
  CHECK_THROWS_AS(e_nk(2, 3), IndexOutOfRange);
  CHECK_THROWS_AS(e_nk(-1, 0), IndexOutOfRange);
}

TEST_CASE("rendering") {
  CHECK(SymFunc::s(P({2, 1})).to_string() == "s[2,1]");
  CHECK((SymFunc::s(P({2})) * QTRational(one + q)).to_string() == "(1 + q)*s[2]");
  CHECK(SymFunc(Basis::schur, 3).to_string() == "0");
  GenPoly expected;
  expected.add({1, 1}, one + q + t);
  expected.add({2}, one);
  CHECK(nabla(SymFunc::e(2)).to_genpoly() == expected);
  CHECK_THROWS_AS((SymFunc::e(2) * QTRational(one, q)).to_genpoly(), NotPolynomial);
  CHECK(parse_basis("s") == Basis::schur);
  CHECK_THROWS_AS(parse_basis("x"), ParseError);
}

TEST_CASE("parsing the text form") {
  const SymFunc f = convert(nabla(SymFunc::e(3)), Basis::schur);
  CHECK(parse_symfunc(f.to_string()) == f);
  const SymFunc g = convert(to_macdonald(SymFunc::e(2)), Basis::schur) * QTRational(one, q - t);
  CHECK(parse_symfunc(g.to_string()) == g);
  const SymFunc h = parse_symfunc("2*e[2,1] - (1 + q)*e[3] + e[1,1,1]");
  CHECK(h.basis() == Basis::elementary);
  CHECK(h.coeff(P({2, 1})) == QTRational(2L));
  CHECK(h.coeff(P({3})) == QTRational(-(1 + q)));
  CHECK(parse_symfunc("-p[2]") == SymFunc::p(2) * QTRational(-1L));
  CHECK(parse_symfunc("0").is_zero());
  CHECK_THROWS_AS(parse_symfunc("e[2] + s[2]"), ParseError);
  CHECK_THROWS_AS(parse_symfunc("e[2] + e[3]"), ParseError);
  CHECK_THROWS_AS(parse_symfunc("e[1,2]"), ParseError);
  CHECK_THROWS_AS(parse_symfunc("x[2]"), ParseError);
  CHECK_THROWS_AS(parse_symfunc("e[2"), ParseError);
  CHECK_THROWS_AS(parse_symfunc("e[2] +"), ParseError);
}
