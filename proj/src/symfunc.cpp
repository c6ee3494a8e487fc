#include "qtdelta/symfunc.hpp"

#include <algorithm>
#include <charconv>
#include <mutex>
#include <regex>
#include <shared_mutex>

#include "qtdelta/errors.hpp"
#include "qtdelta/q_analogues.hpp"
#include "frac.hpp"
#include "symfunc_tables.hpp"

namespace qtdelta {

std::string to_string(Basis b) {
  switch (b) {
    case Basis::monomial:
      return "monomial";
    case Basis::elementary:
      return "elementary";
    case Basis::homogeneous:
      return "homogeneous";
    case Basis::power:
      return "power";
    case Basis::schur:
      return "schur";
    case Basis::macdonald:
      return "macdonald";
  }
  return "?";
}

Basis parse_basis(std::string_view text) {
  static const std::map<std::string, Basis, std::less<>> names = {
      {"monomial", Basis::monomial}, {"m", Basis::monomial},      {"elementary", Basis::elementary},
      {"e", Basis::elementary},      {"homogeneous", Basis::homogeneous}, {"h", Basis::homogeneous},
      {"power", Basis::power},       {"p", Basis::power},         {"schur", Basis::schur},
      {"s", Basis::schur},           {"macdonald", Basis::macdonald}, {"H", Basis::macdonald}};
  auto it = names.find(text);
  if (it == names.end()) throw ParseError("unknown basis: " + std::string(text));
  return it->second;
}

namespace {

const char* letter(Basis b) {
  switch (b) {
    case Basis::monomial:
      return "m";
    case Basis::elementary:
      return "e";
    case Basis::homogeneous:
      return "h";
    case Basis::power:
      return "p";
    case Basis::schur:
      return "s";
    case Basis::macdonald:
      return "H";
  }
  return "?";
}

using detail::Denominator;
using detail::Frac;
using detail::FracSum;

// Symmetric function with factored denominators, used inside every pipeline.
struct FSym {
  Basis basis = Basis::monomial;
  int degree = 0;
  std::map<Partition, Frac> c;

  void add(const Partition& lambda, const Frac& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = c.emplace(lambda, v);
    if (!inserted) {
      FracSum s;
      s.add(it->second);
      s.add(v);
      it->second = s.value();
      if (it->second.is_zero()) c.erase(it);
    }
  }
};

FSym lift(const SymFunc& f) {
  FSym out{f.basis(), f.degree(), {}};
  for (const auto& [lambda, v] : f.coeffs()) out.c.emplace(lambda, Frac::from_rational(v));
  return out;
}

SymFunc lower(const FSym& f) {
  SymFunc out(f.basis, f.degree);
  for (const auto& [lambda, v] : f.c) out.add(lambda, v.reduce());
  return out;
}

QTPoly star_weight(const Partition& lambda) {
  const long z = static_cast<long>(lambda.z());
  QTPoly w((lambda.size() - lambda.length()) % 2 == 0 ? z : -z);
  for (int r : lambda.parts) {
    w *= (QTPoly(1L) - QTPoly::monomial(r, 0)) * (QTPoly(1L) - QTPoly::monomial(0, r));
  }
  return w;
}

Denominator factored_w(const Partition& mu) {
  Denominator d;
  for (int i = 0; i < mu.length(); ++i) {
    for (int j = 0; j < mu[i]; ++j) {
      const int a = mu.arm(i, j);
      const int l = mu.leg(i, j);
      d *= detail::factor_difference(a, l + 1);
      Denominator second = detail::factor_difference(a + 1, l);
      second.unit = -second.unit;
      d *= second;
    }
  }
  return d;
}

Denominator factored_pi(const Partition& mu) {
  Denominator d;
  for (int i = 0; i < mu.length(); ++i) {
    for (int j = 0; j < mu[i]; ++j) {
      if (i != 0 || j != 0) d *= detail::factor_one_minus(mu.coarm(i, j), mu.coleg(i, j));
    }
  }
  return d;
}

std::shared_mutex g_power_mutex;
std::map<Partition, SymFunc> g_power_memo;

FSym fconvert(const FSym& f, Basis target);

// Macdonald polynomial in the power basis (polynomial coefficients).
const SymFunc& macdonald_power(const Partition& mu) {
  {
    std::shared_lock lock(g_power_mutex);
    if (auto it = g_power_memo.find(mu); it != g_power_memo.end()) return it->second;
  }
  SymFunc p = lower(fconvert(lift(macdonald(mu)), Basis::power));
  std::unique_lock lock(g_power_mutex);
  return g_power_memo.emplace(mu, std::move(p)).first->second;
}

FSym classical_convert(const FSym& f, Basis target) {
  const detail::DegreeTables& t = detail::tables(f.degree);
  std::vector<FracSum> mvec(t.parts.size());
  if (f.basis == Basis::monomial) {
    for (const auto& [lambda, v] : f.c) mvec[t.index.at(lambda)].add(v);
  } else {
    const detail::RationalMatrix& to = t.to_m.at(f.basis);
    for (const auto& [lambda, v] : f.c) {
      const std::size_t i = t.index.at(lambda);
      for (std::size_t j = 0; j < t.parts.size(); ++j) {
        if (to[i][j] != 0) mvec[j].add(v.scaled(to[i][j]));
      }
    }
  }
  std::vector<Frac> values;
  values.reserve(mvec.size());
  for (const FracSum& s : mvec) values.push_back(s.value());
  FSym out{target, f.degree, {}};
  if (target == Basis::monomial) {
    for (std::size_t k = 0; k < t.parts.size(); ++k) out.add(t.parts[k], values[k]);
    return out;
  }
  const detail::RationalMatrix& inv = t.from_m.at(target);
  for (std::size_t k = 0; k < t.parts.size(); ++k) {
    FracSum acc;
    for (std::size_t j = 0; j < t.parts.size(); ++j) {
      if (inv[j][k] != 0 && !values[j].is_zero()) acc.add(values[j].scaled(inv[j][k]));
    }
    out.add(t.parts[k], acc.value());
  }
  return out;
}

// Orthogonality <H_lambda, H_mu>_* = delta w_mu, with
// <p_lambda, p_mu>_* = delta (-1)^{|mu| - l(mu)} z_mu prod (1 - q^{mu_i})(1 - t^{mu_i}).
FSym fto_macdonald(const FSym& f) {
  if (f.basis == Basis::macdonald) return f;
  const FSym a = fconvert(f, Basis::power);
  std::map<Partition, QTPoly> weights;
  for (const auto& [lambda, v] : a.c) weights.emplace(lambda, star_weight(lambda));
  FSym out{Basis::macdonald, f.degree, {}};
  for (const Partition& mu : partitions_of(f.degree)) {
    const SymFunc& hp = macdonald_power(mu);
    FracSum acc;
    for (const auto& [lambda, v] : a.c) {
      const QTRational b = hp.coeff(lambda);
      if (!b.is_zero()) acc.add(v, b.num() * weights.at(lambda));
    }
    Frac pairing = acc.value();
    if (pairing.is_zero()) continue;
    pairing *= Frac(QTPoly(1L), factored_w(mu));
    out.add(mu, pairing.cancel());
  }
  return out;
}

FSym fconvert(const FSym& f, Basis target) {
  if (f.basis == target) return f;
  detail::check_degree(f.degree);
  if (target == Basis::macdonald) return fto_macdonald(f);
  if (f.basis == Basis::macdonald) {
    const detail::DegreeTables& t = detail::tables(f.degree);
    std::vector<FracSum> pvec(t.parts.size());
    for (const auto& [mu, v] : f.c) {
      for (const auto& [lambda, b] : macdonald_power(mu).coeffs()) pvec[t.index.at(lambda)].add(v, b.num());
    }
    FSym p{Basis::power, f.degree, {}};
    for (std::size_t i = 0; i < t.parts.size(); ++i) p.add(t.parts[i], pvec[i].value());
    return fconvert(p, target);
  }
  return classical_convert(f, target);
}

FSym fmultiply(const FSym& f, const FSym& g) {
  const FSym a = fconvert(f, Basis::power);
  const FSym b = fconvert(g, Basis::power);
  std::map<Partition, FracSum> acc;
  for (const auto& [la, ca] : a.c) {
    for (const auto& [lb, cb] : b.c) {
      std::vector<int> parts = la.parts;
      parts.insert(parts.end(), lb.parts.begin(), lb.parts.end());
      Frac v = ca;
      v *= cb;
      acc[Partition(parts)].add(v);
    }
  }
  FSym out{Basis::power, f.degree + g.degree, {}};
  for (const auto& [lambda, s] : acc) out.add(lambda, s.value());
  return out;
}

// p_r -> p_r g(q^r, t^r), result in the power basis.
FSym fplethysm(const FSym& f, const Frac& g_unit, const QTRational& g) {
  const FSym a = fconvert(f, Basis::power);
  std::map<int, Frac> powers;
  FSym out{Basis::power, f.degree, {}};
  for (const auto& [lambda, v] : a.c) {
    Frac x = v;
    for (int r : lambda.parts) {
      auto it = powers.find(r);
      if (it == powers.end()) it = powers.emplace(r, r == 1 ? g_unit : Frac::from_rational(g.power_substitute(r))).first;
      x *= it->second;
    }
    out.add(lambda, x.cancel());
  }
  return out;
}

Frac fevaluate(const FSym& f, const QTPoly& alphabet) {
  const FSym a = fconvert(f, Basis::power);
  FracSum acc;
  for (const auto& [lambda, v] : a.c) {
    QTPoly x(1L);
    for (int r : lambda.parts) x *= alphabet.power_substitute(r);
    acc.add(v, x);
  }
  return acc.value();
}

Frac feigenvalue(const DiagonalOperator& op, const Partition& mu) {
  const MacdonaldConstants c = constants(mu);
  switch (op.kind) {
    case DiagonalKind::nabla:
      return Frac(c.T);
    case DiagonalKind::pi:
      return Frac(c.Pi);
    case DiagonalKind::pi_inverse:
      return Frac(QTPoly(1L), factored_pi(mu));
    case DiagonalKind::delta:
    case DiagonalKind::delta_prime:
      if (!op.f) throw InvalidParams("delta operators need a symmetric function");
      return fevaluate(lift(*op.f), op.kind == DiagonalKind::delta ? c.B : c.B - QTPoly(1L));
  }
  return {};
}

FSym fapply(const DiagonalOperator& op, const FSym& F) {
  const FSym G = fto_macdonald(F);
  FSym out{Basis::macdonald, F.degree, {}};
  for (const auto& [mu, v] : G.c) {
    Frac x = v;
    x *= feigenvalue(op, mu);
    out.add(mu, x.cancel());
  }
  return out;
}

}  // namespace

SymFunc::SymFunc(Basis basis, int degree) : basis_(basis), degree_(degree) {
  if (degree < 0) throw InvalidParams("negative degree");
}

SymFunc SymFunc::element(Basis basis, const Partition& lambda, const QTRational& coeff) {
  SymFunc out(basis, lambda.size());
  out.add(lambda, coeff);
  return out;
}

QTRational SymFunc::coeff(const Partition& lambda) const {
  auto it = coeffs_.find(lambda);
  return it == coeffs_.end() ? QTRational() : it->second;
}

void SymFunc::add(const Partition& lambda, const QTRational& c) {
  if (lambda.size() != degree_) throw InvalidParams("partition " + lambda.to_string() + " has the wrong size");
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

SymFunc SymFunc::operator-() const {
  SymFunc out = *this;
  for (auto& [lambda, c] : out.coeffs_) c = -c;
  return out;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero() && (basis_ != o.basis_ || degree_ != o.degree_)) return *this = o;
  if (basis_ != o.basis_ || degree_ != o.degree_) {
    throw InvalidParams("adding symmetric functions of different basis or degree");
  }
  for (const auto& [lambda, c] : o.coeffs_) add(lambda, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) { return *this += -o; }

SymFunc& SymFunc::operator*=(const QTRational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [lambda, v] : coeffs_) v *= c;
  return *this;
}

SymFunc SymFunc::map_coeffs(QTRational (*fn)(const QTRational&)) const {
  SymFunc out(basis_, degree_);
  for (const auto& [lambda, c] : coeffs_) out.add(lambda, fn(c));
  return out;
}

std::string SymFunc::to_string() const {
  std::string out;
  for (const Partition& lambda : partitions_of(degree_)) {
    auto it = coeffs_.find(lambda);
    if (it == coeffs_.end()) continue;
    if (!out.empty()) out += " + ";
    if (it->second != QTRational(1L)) out += "(" + it->second.to_string() + ")*";
    out += letter(basis_);
    out += "[";
    for (std::size_t i = 0; i < lambda.parts.size(); ++i) {
      if (i > 0) out += ",";
      out += std::to_string(lambda.parts[i]);
    }
    out += "]";
  }
  return out.empty() ? "0" : out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

// Index of the parenthesis closing the one at `open`, or npos.
std::size_t closing(std::string_view s, std::size_t open) {
  int depth = 0;
  for (std::size_t i = open; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')' && --depth == 0) return i;
  }
  return std::string_view::npos;
}

QTRational parse_coefficient(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '(' && closing(s, 0) == s.size() - 1) return parse_coefficient(s.substr(1, s.size() - 2));
  if (!s.empty() && s.front() == '(') {
    const std::size_t end = closing(s, 0);
    if (end != std::string_view::npos && end + 1 < s.size() && s[end + 1] == '/') {
      std::string_view den = trim(s.substr(end + 2));
      if (den.size() < 2 || den.front() != '(' || closing(den, 0) != den.size() - 1) {
        throw ParseError("bad coefficient '" + std::string(s) + "'");
      }
      return {QTPoly::parse(s.substr(1, end - 1)), QTPoly::parse(den.substr(1, den.size() - 2))};
    }
  }
  return QTPoly::parse(s);
}

}  // namespace

SymFunc parse_symfunc(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty symmetric function");
  if (text == "0") return {};
  std::vector<std::pair<bool, std::string_view>> terms;
  int depth = 0;
  std::size_t start = 0;
  bool negative = false;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const char c = i < text.size() ? text[i] : '+';
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth < 0) throw ParseError("unbalanced brackets in '" + std::string(text) + "'");
    if (depth > 0 || (c != '+' && c != '-')) continue;
    const std::string_view piece = trim(text.substr(start, i - start));
    if (piece.empty()) {
      if (i != 0) throw ParseError("empty term in '" + std::string(text) + "'");
    } else {
      terms.emplace_back(negative, piece);
    }
    negative = c == '-';
    start = i + 1;
  }
  if (depth != 0) throw ParseError("unbalanced brackets in '" + std::string(text) + "'");
  std::optional<SymFunc> out;
  for (const auto& [neg, term] : terms) {
    const std::size_t open = term.rfind('[');
    if (open == std::string_view::npos || open == 0 || term.back() != ']') {
      throw ParseError("expected a term like 2*e[2,1], got '" + std::string(term) + "'");
    }
    const Basis basis = parse_basis(term.substr(open - 1, 1));
    std::string_view head = trim(term.substr(0, open - 1));
    QTRational coeff = 1;
    if (!head.empty()) {
      if (head.back() != '*') throw ParseError("expected '*' before the basis letter in '" + std::string(term) + "'");
      head.remove_suffix(1);
      coeff = parse_coefficient(head);
    }
    std::vector<int> parts;
    std::string_view list = term.substr(open + 1, term.size() - open - 2);
    while (!trim(list).empty()) {
      const std::size_t comma = list.find(',');
      const std::string_view tok = trim(list.substr(0, comma));
      int v = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || v <= 0) {
        throw ParseError("bad part '" + std::string(tok) + "'");
      }
      parts.push_back(v);
      if (comma == std::string_view::npos) break;
      list.remove_prefix(comma + 1);
    }
    if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>())) {
      throw ParseError("parts must be weakly decreasing in '" + std::string(term) + "'");
    }
    const SymFunc element = SymFunc::element(basis, Partition(parts), neg ? -coeff : coeff);
    if (!out) {
      out = element;
    } else {
      if (out->basis() != basis || out->degree() != element.degree()) {
        throw ParseError("terms must share one basis and one degree");
      }
      *out += element;
    }
  }
  if (!out) throw ParseError("empty symmetric function");
  return *out;
}

GenPoly SymFunc::to_genpoly() const {
  const SymFunc m = convert(*this, Basis::monomial);
  GenPoly out;
  for (const auto& [lambda, c] : m.coeffs()) out.add(lambda.parts, c.as_polynomial());
  return out;
}

SymFunc convert(const SymFunc& f, Basis target) {
  if (f.basis() == target) return f;
  return lower(fconvert(lift(f), target));
}

bool equal(const SymFunc& f, const SymFunc& g) {
  if (f.degree() != g.degree()) return f.is_zero() && g.is_zero();
  return convert(f, Basis::monomial) == convert(g, Basis::monomial);
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
  detail::check_degree(f.degree() + g.degree());
  return lower(fconvert(fmultiply(lift(f), lift(g)), f.basis()));
}

SymFunc plethysm_scaled_alphabet(const SymFunc& f, const QTRational& g) {
  return lower(fconvert(fplethysm(lift(f), Frac::from_rational(g), g), f.basis()));
}

QTRational parse_alphabet_transform(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ') s += c;
  }
  const QTPoly one(1L);
  if (s == "X") return one;
  if (s == "X/M") return QTRational(one, (one - QTPoly::q()) * (one - QTPoly::t()));
  static const std::regex qint(R"(X\(1-q\^(\d+)\)/\(1-q\))");
  static const std::regex scaled(R"(X\*\(([^()]*)\)(?:/\(([^()]*)\))?)");
  std::smatch m;
  try {
    if (std::regex_match(s, m, qint)) return q_analogue(std::stoi(m[1].str()));
    if (std::regex_match(s, m, scaled)) {
      const QTPoly num = QTPoly::parse(m[1].str());
      const QTPoly den = m[2].matched ? QTPoly::parse(m[2].str()) : one;
      return QTRational(num, den);
    }
  } catch (const ParseError&) {
  }
  throw UnsupportedTransform("unsupported alphabet transform: " + std::string(text));
}

SymFunc omega(const SymFunc& f) {
  FSym a = fconvert(lift(f), Basis::power);
  for (auto& [lambda, v] : a.c) {
    if ((lambda.size() - lambda.length()) % 2 != 0) v = -v;
  }
  return lower(fconvert(a, f.basis()));
}

QTRational evaluate_at_alphabet(const SymFunc& f, const QTPoly& alphabet) {
  return fevaluate(lift(f), alphabet).reduce();
}

SymFunc to_macdonald(const SymFunc& f) {
  if (f.basis() == Basis::macdonald) return f;
  detail::check_degree(f.degree());
  return lower(fto_macdonald(lift(f)));
}

QTRational eigenvalue(const DiagonalOperator& op, const Partition& mu) { return feigenvalue(op, mu).reduce(); }

SymFunc apply_diagonal(const DiagonalOperator& op, const SymFunc& F) {
  detail::check_degree(F.degree());
  return lower(fconvert(fapply(op, lift(F)), F.basis()));
}

SymFunc nabla(const SymFunc& F) { return apply_diagonal({DiagonalKind::nabla, std::nullopt}, F); }

SymFunc delta(const SymFunc& f, const SymFunc& F) { return apply_diagonal({DiagonalKind::delta, f}, F); }

SymFunc delta_prime(const SymFunc& f, const SymFunc& F) {
  return apply_diagonal({DiagonalKind::delta_prime, f}, F);
}

SymFunc theta(int k, const SymFunc& F) {
  if (k < 0) throw InvalidParams("theta needs k >= 0");
  detail::check_degree(F.degree() + k);
  if (k == 0) return F;
  const FSym G = fapply({DiagonalKind::pi_inverse, std::nullopt}, lift(F));
  const QTPoly one(1L);
  const QTRational over_m(one, (one - QTPoly::q()) * (one - QTPoly::t()));
  Denominator m_factored = detail::factor_one_minus(1, 0);
  m_factored *= detail::factor_one_minus(0, 1);
  const FSym ek = fplethysm(lift(SymFunc::e(k)), Frac(one, m_factored), over_m);
  const FSym product = fmultiply(G, ek);
  const FSym back = fapply({DiagonalKind::pi, std::nullopt}, product);
  return lower(fconvert(back, F.basis()));
}

SymFunc e_nk(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw IndexOutOfRange("E_{n,k} needs 0 <= k <= n, got n=" + std::to_string(n) + ", k=" + std::to_string(k));
  }
  detail::check_degree(n);
  if (n == 0) return SymFunc::one();
  if (k == 0) return SymFunc(Basis::elementary, n);
  // Rows j = 1..n: e_n[X [j]_q] = sum_{k>=1} qbinom(k+j-1, k) E_{n,k}.
  const std::size_t size = static_cast<std::size_t>(n);
  std::vector<std::vector<QTRational>> a(size, std::vector<QTRational>(size));
  std::vector<SymFunc> rhs;
  const SymFunc en = convert(SymFunc::e(n), Basis::power);
  for (int j = 1; j <= n; ++j) {
    for (int kk = 1; kk <= n; ++kk) a[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(kk - 1)] = q_binomial(kk + j - 1, kk);
    rhs.push_back(plethysm_scaled_alphabet(en, q_analogue(j)));
  }
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t pivot = col;
    while (pivot < size && a[pivot][col].is_zero()) ++pivot;
    if (pivot == size) throw std::logic_error("singular E_{n,k} system");
    std::swap(a[pivot], a[col]);
    std::swap(rhs[pivot], rhs[col]);
    const QTRational inv = QTRational(1L) / a[col][col];
    for (std::size_t j = col; j < size; ++j) a[col][j] *= inv;
    rhs[col] *= inv;
    for (std::size_t r = 0; r < size; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const QTRational factor = a[r][col];
      for (std::size_t j = col; j < size; ++j) a[r][j] -= factor * a[col][j];
      rhs[r] -= rhs[col] * factor;
    }
  }
  return convert(rhs[static_cast<std::size_t>(k - 1)], Basis::elementary);
}

}  // namespace qtdelta
