// Bivariate polynomial gcd over Q via subresultant remainder sequences
// in Z[x][y], with primitive sequences for the univariate contents.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qtdelta/qt_poly.hpp"

namespace qtdelta {

namespace {

using ZPoly = std::vector<mpz_class>;  // index = degree in the inner variable
using ZZPoly = std::vector<ZPoly>;     // index = degree in the main variable

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void trim(ZZPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

int deg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }
int deg(const ZZPoly& p) { return static_cast<int>(p.size()) - 1; }

mpz_class content(const ZPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly scale(const ZPoly& p, const mpz_class& c) {
  if (c == 0) return {};
  ZPoly out = p;
  for (auto& x : out) x *= c;
  return out;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

// a - b * x^shift
void sub_shifted(ZPoly& a, const ZPoly& b, std::size_t shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift);
  for (std::size_t j = 0; j < b.size(); ++j) a[j + shift] -= b[j];
  trim(a);
}

ZPoly primitive(const ZPoly& p) {
  const mpz_class c = content(p);
  if (c == 0) return {};
  ZPoly out = p;
  if (c != 1) {
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
  if (!out.empty() && out.back() < 0) {
    for (auto& x : out) x = -x;
  }
  return out;
}

ZPoly prem(ZPoly a, const ZPoly& b) {
  const mpz_class& lb = b.back();
  while (!a.empty() && deg(a) >= deg(b)) {
    const mpz_class la = a.back();
    const auto shift = static_cast<std::size_t>(deg(a) - deg(b));
    for (auto& x : a) x *= lb;
    sub_shifted(a, scale(b, la), shift);
  }
  return a;
}

ZPoly gcd1(ZPoly a, ZPoly b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  mpz_class c;
  const mpz_class ca = content(a);
  const mpz_class cb = content(b);
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  a = primitive(a);
  b = primitive(b);
  if (deg(a) < deg(b)) std::swap(a, b);
  while (!b.empty()) {
    if (deg(b) == 0) {
      a = ZPoly{1};
      break;
    }
    ZPoly r = prem(a, b);
    a = std::move(b);
    b = primitive(r);
  }
  return scale(a, c);
}

// Exact division in Z[x]; the caller guarantees divisibility.
ZPoly divexact1(ZPoly a, const ZPoly& b) {
  if (a.empty()) return {};
  ZPoly q(static_cast<std::size_t>(deg(a) - deg(b) + 1));
  while (!a.empty() && deg(a) >= deg(b)) {
    const auto shift = static_cast<std::size_t>(deg(a) - deg(b));
    mpz_class f;
    mpz_divexact(f.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());
    q[shift] = f;
    sub_shifted(a, scale(b, f), shift);
  }
  trim(q);
  return q;
}

ZPoly content(const ZZPoly& p) {
  ZPoly g;
  for (const auto& c : p) {
    if (c.empty()) continue;
    g = gcd1(g, c);
    if (deg(g) == 0 && g[0] == 1) break;
  }
  return g;
}

ZZPoly primitive(const ZZPoly& p) {
  ZPoly c = content(p);
  if (c.empty()) return {};
  ZZPoly out;
  out.reserve(p.size());
  for (const auto& x : p) out.push_back(x.empty() ? ZPoly{} : divexact1(x, c));
  const ZPoly& lead = out.back();
  if (!lead.empty() && lead.back() < 0) {
    for (auto& x : out) {
      for (auto& v : x) v = -v;
    }
  }
  return out;
}

// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
ZZPoly prem(ZZPoly a, const ZZPoly& b) {
  const ZPoly& lb = b.back();
  int steps = deg(a) - deg(b) + 1;
  while (!a.empty() && deg(a) >= deg(b)) {
    const ZPoly la = a.back();
    const auto shift = static_cast<std::size_t>(deg(a) - deg(b));
    for (auto& x : a) x = mul(x, lb);
    --steps;
    for (std::size_t j = 0; j < b.size(); ++j) {
      ZPoly prod = mul(b[j], la);
      ZPoly& target = a[j + shift];
      if (target.size() < prod.size()) target.resize(prod.size());
      for (std::size_t k = 0; k < prod.size(); ++k) target[k] -= prod[k];
      trim(target);
    }
    trim(a);
  }
  for (; steps > 0; --steps) {
    for (auto& x : a) x = mul(x, lb);
  }
  return a;
}

ZPoly power(const ZPoly& p, int e) {
  ZPoly out{1};
  for (int i = 0; i < e; ++i) out = mul(out, p);
  return out;
}

// Subresultant remainder sequence; coefficient degrees grow linearly.
ZZPoly gcd2(ZZPoly a, ZZPoly b) {
  const ZPoly ca = content(a);
  const ZPoly cb = content(b);
  const ZPoly c = gcd1(ca, cb);
  a = primitive(a);
  b = primitive(b);
  if (deg(a) < deg(b)) std::swap(a, b);
  ZPoly g{1};
  ZPoly h{1};
  while (!b.empty()) {
    if (deg(b) == 0) {
      b = ZZPoly{ZPoly{1}};
      break;
    }
    const int delta = deg(a) - deg(b);
    ZZPoly r = prem(a, b);
    if (r.empty()) break;
    const ZPoly div = mul(g, power(h, delta));
    for (auto& x : r) {
      if (!x.empty()) x = divexact1(x, div);
    }
    a = std::move(b);
    b = std::move(r);
    g = a.back();
    if (delta == 0) continue;
    h = divexact1(power(g, delta), power(h, delta - 1));
  }
  ZZPoly out = primitive(b);
  for (auto& x : out) x = mul(x, c);
  trim(out);
  return out;
}

// Clears denominators; `swap` makes q the main variable instead of t.
ZZPoly to_zz(const QTPoly& p, bool swap) {
  mpz_class lcm = 1;
  for (const auto& term : p.terms()) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), term.coeff.get_den_mpz_t());
  }
  ZZPoly out;
  for (const auto& term : p.terms()) {
    const int outer = swap ? term.exp.q : term.exp.t;
    const int inner = swap ? term.exp.t : term.exp.q;
    if (static_cast<int>(out.size()) <= outer) out.resize(static_cast<std::size_t>(outer) + 1);
    ZPoly& row = out[static_cast<std::size_t>(outer)];
    if (static_cast<int>(row.size()) <= inner) row.resize(static_cast<std::size_t>(inner) + 1);
    mpz_class v = lcm / term.coeff.get_den();
    row[static_cast<std::size_t>(inner)] = v * term.coeff.get_num();
  }
  for (auto& row : out) trim(row);
  trim(out);
  return out;
}

QTPoly from_zz(const ZZPoly& p, bool swap) {
  std::vector<QTPoly::Term> terms;
  for (std::size_t outer = 0; outer < p.size(); ++outer) {
    for (std::size_t inner = 0; inner < p[outer].size(); ++inner) {
      if (p[outer][inner] == 0) continue;
      const int o = static_cast<int>(outer);
      const int i = static_cast<int>(inner);
      terms.push_back({swap ? Exponent{o, i} : Exponent{i, o}, Rational(p[outer][inner])});
    }
  }
  return QTPoly::from_terms(std::move(terms));
}

constexpr std::uint64_t kPrime = 2147483629;  // below 2^31

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) { return a * b % kPrime; }

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t out = 1;
  for (; e > 0; e >>= 1, a = mulmod(a, a)) {
    if (e & 1) out = mulmod(out, a);
  }
  return out;
}

std::optional<std::uint64_t> reduce_mod(const Rational& c) {
  const mpz_class p = static_cast<unsigned long>(kPrime);
  const mpz_class den = c.get_den() % p;
  if (den == 0) return std::nullopt;
  mpz_class num = c.get_num() % p;
  if (num < 0) num += p;
  return mulmod(num.get_ui(), powmod(den.get_ui(), kPrime - 2));
}

using ModPoly = std::vector<std::uint64_t>;

void trim(ModPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// p with the inner variable set to `x`, as a polynomial in the main variable mod kPrime.
std::optional<ModPoly> specialize(const QTPoly& p, bool main_is_q, std::uint64_t x) {
  ModPoly out(static_cast<std::size_t>(main_is_q ? p.degree_q() : p.degree_t()) + 1, 0);
  for (const auto& term : p.terms()) {
    const auto c = reduce_mod(term.coeff);
    if (!c) return std::nullopt;
    const int outer = main_is_q ? term.exp.q : term.exp.t;
    const int inner = main_is_q ? term.exp.t : term.exp.q;
    auto& slot = out[static_cast<std::size_t>(outer)];
    slot = (slot + mulmod(*c, powmod(x, static_cast<std::uint64_t>(inner)))) % kPrime;
  }
  return out;
}

int gcd_degree_mod(ModPoly a, ModPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    const std::uint64_t inv = powmod(b.back(), kPrime - 2);
    while (a.size() >= b.size()) {
      const std::uint64_t f = mulmod(a.back(), inv);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) a[j + shift] = (a[j + shift] + kPrime - mulmod(f, b[j])) % kPrime;
      trim(a);
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

// True when a specialization proves that no common factor involves the main variable.
bool free_of_main(const QTPoly& a, const QTPoly& b, bool main_is_q) {
  const int da = main_is_q ? a.degree_q() : a.degree_t();
  const int db = main_is_q ? b.degree_q() : b.degree_t();
  if (da == 0 || db == 0) return true;
  for (std::uint64_t x = 7919; x < 7919 + 4; ++x) {
    const auto sa = specialize(a, main_is_q, x);
    const auto sb = specialize(b, main_is_q, x);
    if (!sa || !sb) return false;
    if (static_cast<int>(sa->size()) - 1 != da || static_cast<int>(sb->size()) - 1 != db) continue;
    if (sa->back() == 0 || sb->back() == 0) continue;
    return gcd_degree_mod(*sa, *sb) == 0;
  }
  return false;
}

QTPoly monic(const QTPoly& p) {
  if (p.is_zero()) return p;
  return p * Rational(1 / p.leading_term().coeff);
}

}  // namespace

QTPoly gcd(const QTPoly& a, const QTPoly& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return QTPoly(1L);
  const Exponent ma = a.min_exponents();
  const Exponent mb = b.min_exponents();
  const Exponent mono{std::min(ma.q, mb.q), std::min(ma.t, mb.t)};
  const QTPoly ra = a.shifted(-ma.q, -ma.t);
  const QTPoly rb = b.shifted(-mb.q, -mb.t);
  QTPoly core;
  if (ra.is_constant() || rb.is_constant()) {
    core = QTPoly(1L);
  } else if (auto quot = QTPoly::divide_exact(ra, rb)) {
    core = rb;
  } else if (auto quot2 = QTPoly::divide_exact(rb, ra)) {
    core = ra;
  } else if (free_of_main(ra, rb, true) && free_of_main(ra, rb, false)) {
    core = QTPoly(1L);
  } else {
    // The variable of smaller degree drives the remainder sequence.
    const bool swap = std::max(ra.degree_t(), rb.degree_t()) > std::max(ra.degree_q(), rb.degree_q());
    core = from_zz(gcd2(to_zz(ra, swap), to_zz(rb, swap)), swap);
  }
  return monic(core.shifted(mono.q, mono.t));
}

}  // namespace qtdelta
