#include "qtdelta/qt_poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace qtdelta {

namespace {

// Sorts by exponent, merges duplicates, drops zeros.
std::vector<QTPoly::Term> normalize_terms(std::vector<QTPoly::Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const QTPoly::Term& a, const QTPoly::Term& b) { return a.exp < b.exp; });
  std::vector<QTPoly::Term> out;
  out.reserve(terms.size());
  for (auto& term : terms) {
    if (!out.empty() && out.back().exp == term.exp) {
      out.back().coeff += term.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(term));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return out;
}

std::vector<QTPoly::Term> merge(const std::vector<QTPoly::Term>& a,
                                const std::vector<QTPoly::Term>& b, bool subtract) {
  std::vector<QTPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exp < b[j].exp)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].exp < a[i].exp) {
      out.push_back({b[j].exp, subtract ? Rational(-b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      Rational c = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back({a[i].exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

QTPoly::QTPoly(long c) {
  if (c != 0) terms_.push_back({{0, 0}, Rational(c)});
}

QTPoly::QTPoly(const Rational& c) {
  if (c != 0) terms_.push_back({{0, 0}, c});
}

QTPoly QTPoly::monomial(int qexp, int texp, const Rational& c) {
  if (qexp < 0 || texp < 0) throw InvalidParams("negative exponent in QTPoly");
  QTPoly p;
  if (c != 0) p.terms_.push_back({{qexp, texp}, c});
  return p;
}

QTPoly QTPoly::from_terms(std::vector<Term> terms) {
  for (const auto& term : terms) {
    if (term.exp.q < 0 || term.exp.t < 0) throw InvalidParams("negative exponent in QTPoly");
  }
  return QTPoly(normalize_terms(std::move(terms)));
}

bool QTPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == Exponent{0, 0});
}

Rational QTPoly::coeff(int qexp, int texp) const {
  const Exponent e{qexp, texp};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& term, const Exponent& x) { return term.exp < x; });
  if (it != terms_.end() && it->exp == e) return it->coeff;
  return 0;
}

const QTPoly::Term& QTPoly::leading_term() const {
  if (terms_.empty()) throw InvalidParams("leading term of zero polynomial");
  return terms_.back();
}

int QTPoly::degree_q() const {
  int d = -1;
  for (const auto& term : terms_) d = std::max(d, term.exp.q);
  return d;
}

int QTPoly::degree_t() const {
  int d = -1;
  for (const auto& term : terms_) d = std::max(d, term.exp.t);
  return d;
}

Exponent QTPoly::min_exponents() const {
  if (terms_.empty()) return {0, 0};
  Exponent e = terms_.front().exp;
  for (const auto& term : terms_) {
    e.q = std::min(e.q, term.exp.q);
    e.t = std::min(e.t, term.exp.t);
  }
  return e;
}

QTPoly QTPoly::operator-() const {
  QTPoly out = *this;
  for (auto& term : out.terms_) term.coeff = -term.coeff;
  return out;
}

QTPoly& QTPoly::operator+=(const QTPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

QTPoly& QTPoly::operator-=(const QTPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

QTPoly& QTPoly::operator*=(const QTPoly& o) {
  *this = *this * o;
  return *this;
}

QTPoly& QTPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else if (c != 1) {
    for (auto& term : terms_) term.coeff *= c;
  }
  return *this;
}

QTPoly operator*(const QTPoly& a, const QTPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_monomial()) {
    QTPoly out = a;
    const auto& bt = b.terms_[0];
    for (auto& term : out.terms_) {
      term.exp.q += bt.exp.q;
      term.exp.t += bt.exp.t;
      term.coeff *= bt.coeff;
    }
    return out;
  }
  if (a.is_monomial()) return b * a;
  // Dense accumulation over the exponent box.
  const Exponent amin = a.min_exponents();
  const Exponent bmin = b.min_exponents();
  const int qlo = amin.q + bmin.q;
  const int tlo = amin.t + bmin.t;
  const int qspan = a.degree_q() + b.degree_q() - qlo + 1;
  const int tspan = a.degree_t() + b.degree_t() - tlo + 1;
  const auto cells = static_cast<std::size_t>(qspan) * static_cast<std::size_t>(tspan);
  if (cells <= 4 * (a.size() * b.size() + 64)) {
    std::vector<Rational> acc(cells);
    std::vector<char> used(cells, 0);
    for (const auto& x : a.terms_) {
      for (const auto& y : b.terms_) {
        const auto idx = static_cast<std::size_t>(x.exp.q + y.exp.q - qlo) * tspan +
                         static_cast<std::size_t>(x.exp.t + y.exp.t - tlo);
        acc[idx] += x.coeff * y.coeff;
        used[idx] = 1;
      }
    }
    std::vector<QTPoly::Term> out;
    for (std::size_t idx = 0; idx < cells; ++idx) {
      if (used[idx] && acc[idx] != 0) {
        out.push_back({{static_cast<int>(idx / tspan) + qlo, static_cast<int>(idx % tspan) + tlo},
                       std::move(acc[idx])});
      }
    }
    return QTPoly(std::move(out));
  }
  std::vector<QTPoly::Term> prods;
  prods.reserve(a.size() * b.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      prods.push_back({{x.exp.q + y.exp.q, x.exp.t + y.exp.t}, x.coeff * y.coeff});
    }
  }
  return QTPoly(normalize_terms(std::move(prods)));
}

QTPoly QTPoly::pow(unsigned e) const {
  QTPoly result(1L);
  QTPoly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

QTPoly QTPoly::shifted(int dq, int dt) const {
  QTPoly out = *this;
  for (auto& term : out.terms_) {
    term.exp.q += dq;
    term.exp.t += dt;
    if (term.exp.q < 0 || term.exp.t < 0) throw InvalidParams("negative exponent in QTPoly");
  }
  return out;
}

QTPoly QTPoly::power_substitute(int r) const {
  if (r <= 0) throw InvalidParams("power substitution needs r >= 1");
  QTPoly out = *this;
  for (auto& term : out.terms_) {
    term.exp.q *= r;
    term.exp.t *= r;
  }
  return out;
}

QTPoly QTPoly::swap_qt() const {
  std::vector<Term> terms = terms_;
  for (auto& term : terms) std::swap(term.exp.q, term.exp.t);
  return QTPoly(normalize_terms(std::move(terms)));
}

Rational QTPoly::evaluate(const Rational& qv, const Rational& tv) const {
  Rational total = 0;
  for (const auto& term : terms_) {
    Rational m = term.coeff;
    for (int i = 0; i < term.exp.q; ++i) m *= qv;
    for (int i = 0; i < term.exp.t; ++i) m *= tv;
    total += m;
  }
  return total;
}

QTPoly QTPoly::specialize_t(const Rational& tv) const {
  std::vector<Term> terms;
  for (const auto& term : terms_) {
    Rational m = term.coeff;
    for (int i = 0; i < term.exp.t; ++i) m *= tv;
    terms.push_back({{term.exp.q, 0}, m});
  }
  return QTPoly(normalize_terms(std::move(terms)));
}

std::optional<QTPoly> QTPoly::divide_exact(const QTPoly& a, const QTPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return QTPoly{};
  if (b.is_constant()) return a * Rational(1 / b.terms_[0].coeff);
  if (a.degree_q() < b.degree_q() || a.degree_t() < b.degree_t()) return std::nullopt;
  if (b.is_monomial()) {
    const auto& bt = b.terms_[0];
    QTPoly out = a;
    const Rational inv = 1 / bt.coeff;
    for (auto& term : out.terms_) {
      term.exp.q -= bt.exp.q;
      term.exp.t -= bt.exp.t;
      if (term.exp.q < 0 || term.exp.t < 0) return std::nullopt;
      term.coeff *= inv;
    }
    return out;
  }
  // Lex-order division: with a single divisor the remainder vanishes iff b | a.
  const Term& lead = b.leading_term();
  const Rational inv_lead = 1 / lead.coeff;
  std::map<Exponent, Rational> rem;
  for (const auto& term : a.terms_) rem.emplace(term.exp, term.coeff);
  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    const Exponent e = top->first;
    if (e.q < lead.exp.q || e.t < lead.exp.t) return std::nullopt;
    const Exponent shift{e.q - lead.exp.q, e.t - lead.exp.t};
    const Rational factor = top->second * inv_lead;
    for (const auto& term : b.terms_) {
      const Exponent target{term.exp.q + shift.q, term.exp.t + shift.t};
      auto [it, inserted] = rem.try_emplace(target, 0);
      it->second -= factor * term.coeff;
      if (it->second == 0) rem.erase(it);
    }
    quotient.push_back({shift, factor});
  }
  return QTPoly(normalize_terms(std::move(quotient)));
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

std::string QTPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& term : terms_) {
    const bool negative = term.coeff < 0;
    const Rational mag = negative ? Rational(-term.coeff) : term.coeff;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::string mono;
    auto append = [&mono](char var, int e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += var;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    append('q', term.exp.q);
    append('t', term.exp.t);
    if (mono.empty()) {
      os << rational_to_string(mag);
    } else if (mag == 1) {
      os << mono;
    } else {
      os << rational_to_string(mag) << "*" << mono;
    }
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : s_(text) {}

  QTPoly parse() {
    std::vector<QTPoly::Term> terms;
    skip();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    terms.push_back(term(negative));
    for (;;) {
      skip();
      if (pos_ >= s_.size()) break;
      const char c = s_[pos_];
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      terms.push_back(term(c == '-'));
    }
    return QTPoly::from_terms(std::move(terms));
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial parse error at " + std::to_string(pos_) + ": " + what +
                     " in '" + std::string(s_) + "'");
  }
  long integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }
  std::string digits() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::string(s_.substr(start, pos_ - start));
  }
  QTPoly::Term term(bool negative) {
    skip();
    Rational coeff = 1;
    Exponent e;
    bool have_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = digits();
      if (peek() == '/') {
        ++pos_;
        num += "/" + digits();
      }
      coeff = Rational(num);
      coeff.canonicalize();
      have_factor = true;
      skip();
      if (peek() != '*') return {e, negative ? Rational(-coeff) : coeff};
      ++pos_;
      skip();
    }
    for (;;) {
      skip();
      const char v = peek();
      if (v != 'q' && v != 't') {
        if (!have_factor) fail("expected term");
        break;
      }
      ++pos_;
      int power = 1;
      skip();
      if (peek() == '^') {
        ++pos_;
        power = static_cast<int>(integer());
      }
      (v == 'q' ? e.q : e.t) += power;
      have_factor = true;
      skip();
      if (peek() != '*') break;
      ++pos_;
    }
    return {e, negative ? Rational(-coeff) : coeff};
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

QTPoly QTPoly::parse(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace qtdelta
