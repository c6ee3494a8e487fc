#include "qtdelta/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <set>

#include "qtdelta/errors.hpp"
#include "qtdelta/q_analogues.hpp"
#include "qtdelta/qt_rational.hpp"
#include "qtdelta/schedule.hpp"
#include "qtdelta/symfunc.hpp"

namespace qtdelta {

namespace {

using Clock = std::chrono::steady_clock;

long elapsed_ms(Clock::time_point start) {
  return static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count());
}

std::optional<CoefficientDiff> first_poly_difference(const std::vector<int>& content, const QTPoly& a,
                                                     const QTPoly& b) {
  if (a == b) return std::nullopt;
  const QTPoly d = a - b;
  const Exponent x = d.terms().front().exp;
  return CoefficientDiff{content, x.q, x.t, a.coeff(x.q, x.t), b.coeff(x.q, x.t)};
}

// Rational coefficients are compared after multiplying both by the product of their denominators.
std::optional<CoefficientDiff> first_symfunc_difference(const SymFunc& f, const SymFunc& g) {
  const SymFunc a = convert(f, Basis::monomial);
  const SymFunc b = convert(g, Basis::monomial);
  std::set<Partition> keys;
  for (const auto& [lambda, c] : a.coeffs()) keys.insert(lambda);
  for (const auto& [lambda, c] : b.coeffs()) keys.insert(lambda);
  for (const Partition& lambda : keys) {
    const QTRational x = a.coeff(lambda);
    const QTRational y = b.coeff(lambda);
    if (x == y) continue;
    const QTPoly den = x.den() * y.den();
    const QTPoly xp = exact_poly_quotient(x * QTRational(den), 1);
    const QTPoly yp = exact_poly_quotient(y * QTRational(den), 1);
    return first_poly_difference(lambda.parts, xp, yp);
  }
  return std::nullopt;
}

std::string render(const SymFunc& f) { return convert(f, Basis::schur).to_string(); }

void finish(CheckReport& r, bool ok, Clock::time_point start) {
  r.status = ok ? CheckStatus::pass : CheckStatus::fail;
  r.ms = elapsed_ms(start);
}

void compare_symfunc(CheckReport& r, const SymFunc& lhs, const SymFunc& rhs, Clock::time_point start) {
  r.lhs = render(lhs);
  r.rhs = render(rhs);
  const bool ok = equal(lhs, rhs);
  if (!ok) r.diff = first_symfunc_difference(lhs, rhs);
  finish(r, ok, start);
}

void compare_genpoly(CheckReport& r, const GenPoly& lhs, const GenPoly& rhs, Clock::time_point start) {
  r.lhs = lhs.to_string();
  r.rhs = rhs.to_string();
  const bool ok = lhs == rhs;
  if (!ok) r.diff = first_difference(lhs, rhs);
  finish(r, ok, start);
}

void compare_poly(CheckReport& r, const QTPoly& lhs, const QTPoly& rhs, Clock::time_point start) {
  r.lhs = lhs.to_string();
  r.rhs = rhs.to_string();
  const bool ok = lhs == rhs;
  if (!ok) r.diff = first_difference(lhs, rhs);
  finish(r, ok, start);
}

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidParams(message);
}

std::vector<std::vector<int>> compositions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = 1; part <= left; ++part) {
      cur.push_back(part);
      self(self, left - part);
      cur.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

struct ClassData {
  std::vector<DecoratedPath> paths;
  QTPoly sum;
};
using ClassKey = std::pair<MarkedWord, int>;
using ClassMap = std::map<ClassKey, ClassData>;

// Every order pattern of labels is realized by a content with no gaps, so
// compositions of n cover all classes up to relabelling.
ClassMap collect_classes(int m, int n, int k) {
  require(n >= 1 && m >= 0 && k >= 0, "schedule checks need n >= 1, m >= 0, k >= 0");
  ClassMap out;
  for (const auto& comp : compositions(n)) {
    EnumSpec spec;
    spec.family = Family::LSQ;
    spec.kind = DecorationKind::valley;
    spec.m = m;
    spec.n = n;
    spec.k = k;
    spec.content = comp;
    enumerate(spec, [&](const DecoratedPath& p) {
      ClassData& slot = out[{diagonal_word(p), shift(p.area_word)}];
      slot.paths.push_back(p);
      slot.sum += QTPoly::monomial(dinv(p), area(p));
    });
  }
  return out;
}

std::map<std::string, int> mnk(int m, int n, int k) { return {{"m", m}, {"n", n}, {"k", k}}; }

EnumSpec family_spec(Family family, DecorationKind kind, int m, int n, int k, std::optional<int> r = std::nullopt) {
  EnumSpec spec;
  spec.family = family;
  spec.kind = kind;
  spec.m = m;
  spec.n = n;
  spec.k = k;
  spec.touching = r;
  return spec;
}

GenPoly family_polynomial(Family family, DecorationKind kind, int m, int n, int k,
                          std::optional<int> r = std::nullopt) {
  return generating_polynomial_by_content(family_spec(family, kind, m, n, k, r));
}

// Monomial coefficients of f * num / den, each certified polynomial.
GenPoly render_scaled(const SymFunc& f, const QTPoly& num = QTPoly(1L), const QTPoly& den = QTPoly(1L)) {
  GenPoly out;
  const SymFunc mono = convert(f, Basis::monomial);
  for (const auto& [lambda, c] : mono.coeffs()) {
    out.add(lambda.parts, exact_poly_quotient(c * QTRational(num), QTRational(den)));
  }
  return out;
}

GenPoly scaled(const GenPoly& g, const QTPoly& num, const QTPoly& den) {
  GenPoly out;
  for (const auto& [content, c] : g.terms()) out.add(content, exact_poly_quotient(QTRational(c * num), QTRational(den)));
  return out;
}

SymFunc delta_h(int m, const SymFunc& F) { return m == 0 ? F : delta(SymFunc::h(m), F); }

SymFunc delta_prime_e(int j, const SymFunc& F) {
  if (j < 0) return SymFunc(F.basis(), F.degree());
  if (j == 0) return F;
  return delta_prime(SymFunc::e(j), F);
}

SymFunc omega_p(int n) { return omega(SymFunc::p(n)); }

QTRational ratio(const QTPoly& a, const QTPoly& b) { return {a, b}; }

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::skipped:
      return "skipped";
  }
  return "fail";
}

std::string CheckReport::to_json() const {
  nlohmann::ordered_json j;
  j["check"] = check;
  nlohmann::ordered_json p = nlohmann::ordered_json::object();
  for (const auto& [key, v] : params) p[key] = v;
  j["params"] = p;
  if (!word.empty()) j["word"] = word;
  j["status"] = to_string(status);
  j["lhs"] = lhs;
  j["rhs"] = rhs;
  nlohmann::ordered_json d = nlohmann::ordered_json::object();
  if (diff) {
    d["content"] = diff->content;
    d["q"] = diff->qexp;
    d["t"] = diff->texp;
    d["lhs"] = rational_to_string(diff->lhs);
    d["rhs"] = rational_to_string(diff->rhs);
  }
  j["diff"] = d;
  j["ms"] = ms;
  if (!note.empty()) j["note"] = note;
  return j.dump();
}

std::optional<CoefficientDiff> first_difference(const GenPoly& lhs, const GenPoly& rhs) {
  std::set<GenPoly::Content> keys;
  for (const auto& [c, v] : lhs.terms()) keys.insert(c);
  for (const auto& [c, v] : rhs.terms()) keys.insert(c);
  for (const auto& c : keys) {
    if (auto d = first_poly_difference(c, lhs.at(c), rhs.at(c))) return d;
  }
  return std::nullopt;
}

std::optional<CoefficientDiff> first_difference(const QTPoly& lhs, const QTPoly& rhs) {
  return first_poly_difference({}, lhs, rhs);
}

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = {"theta_en", "theta_pn", "theta_pn_corollary", "pn_Enk", "Enk_sum"};
  return names;
}

const std::vector<std::string>& conjecture_names() {
  static const std::vector<std::string> names = {"shuffle",
                                                 "square",
                                                 "valley_delta",
                                                 "valley_delta_touching",
                                                 "gen_valley_delta_touching",
                                                 "gen_valley_square_ratio",
                                                 "gen_valley_square_theta",
                                                 "modified_square",
                                                 "gen_modified_square",
                                                 "rise_delta",
                                                 "rise_square"};
  return names;
}

std::vector<CheckReport> check_schedule(int n, int k, int m) {
  std::vector<CheckReport> out;
  for (auto& [key, data] : collect_classes(m, n, k)) {
    const auto start = Clock::now();
    const auto& [z, s] = key;
    CheckReport r;
    r.check = "schedule";
    r.params = mnk(m, n, k);
    r.params["s"] = s;
    r.word = z.to_string();
    compare_poly(r, schedule_product(z, s), data.sum, start);
    std::sort(data.paths.begin(), data.paths.end());
    try {
      std::vector<DecoratedPath> built = insertion_generate(z, s);
      std::sort(built.begin(), built.end());
      if (built != data.paths) {
        r.status = CheckStatus::fail;
        r.note = "insertion produced " + std::to_string(built.size()) + " paths, enumeration " +
                 std::to_string(data.paths.size());
      }
    } catch (const Error& e) {
      r.status = CheckStatus::fail;
      r.note = std::string("insertion: ") + e.what();
    }
    r.ms = elapsed_ms(start);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CheckReport> check_shift_recursion(int n, int k, int m) {
  const ClassMap classes = collect_classes(m, n, k);
  auto lsq = [&](const MarkedWord& z, int s) {
    auto it = classes.find({z, s});
    return it == classes.end() ? QTPoly() : it->second.sum;
  };
  std::set<MarkedWord> words;
  for (const auto& [key, data] : classes) words.insert(key.first);

  std::vector<CheckReport> out;
  for (const MarkedWord& z : words) {
    const auto runs = run_multiplicities(z);
    const int top = static_cast<int>(runs.size()) - 1;
    auto pos = [&](int i) { return i >= 0 && i <= top ? runs[static_cast<std::size_t>(i)].positive_size : 0; };
    auto dec0 = [&](int i) { return i >= 0 && i <= top ? runs[static_cast<std::size_t>(i)].z_dec(0) : 0; };
    auto realized = [&](int s) { return classes.count({z, s}) > 0; };

    for (int s = 1; s <= top; ++s) {
      if (!realized(s) && !realized(s - 1)) continue;
      const auto start = Clock::now();
      CheckReport r;
      r.check = "shift_by_1";
      r.params = mnk(m, n, k);
      r.params["s"] = s;
      r.word = z.to_string();
      const int den = pos(s - 1) - dec0(s - 2);
      const int num = pos(s) - dec0(s - 1);
      if (den <= 0 || num < 0) {
        r.status = CheckStatus::skipped;
        r.note = "ratio [" + std::to_string(num) + "]_q/[" + std::to_string(den) + "]_q undefined";
        out.push_back(std::move(r));
        continue;
      }
      compare_poly(r, lsq(z, s) * q_analogue(den), q_analogue(num).shifted(den, 0) * lsq(z, s - 1), start);
      out.push_back(std::move(r));
    }

    if (pos(0) == 0) continue;
    for (int s = 0; s <= top; ++s) {
      if (!realized(s) && !realized(0)) continue;
      const auto start = Clock::now();
      CheckReport r;
      r.check = "flattening";
      r.params = mnk(m, n, k);
      r.params["s"] = s;
      r.word = z.to_string();
      const int num = pos(s) - dec0(s - 1);
      if (num < 0) {
        r.status = CheckStatus::fail;
        r.note = "negative q-analogue index";
        out.push_back(std::move(r));
        continue;
      }
      compare_poly(r, lsq(z, s) * q_analogue(pos(0)), q_analogue(num).shifted(b_exponent(z, s), 0) * lsq(z, 0),
                   start);
      out.push_back(std::move(r));
    }
  }
  return out;
}

CheckReport check_square_to_dyck(int m, int n, int k, int r) {
  require(n >= 1 && m >= 0 && k >= 0 && r >= 1, "square_to_dyck needs n >= 1, m >= 0, k >= 0, r >= 1");
  const auto start = Clock::now();
  CheckReport out;
  out.check = "square_to_dyck";
  out.params = mnk(m, n, k);
  out.params["r"] = r;
  GenPoly lhs = family_polynomial(Family::LSQprime, DecorationKind::valley, m, n, k, r);
  GenPoly rhs = family_polynomial(Family::LD, DecorationKind::valley, m, n, k, r);
  lhs *= q_analogue(r);
  rhs *= q_analogue(n - k);
  compare_genpoly(out, lhs, rhs, start);
  return out;
}

CheckReport check_identity(std::string_view name, int n, int k) {
  const auto start = Clock::now();
  CheckReport r;
  r.check = std::string(name);
  r.params = {{"n", n}};
  require(n >= 1, "identity checks need n >= 1");
  if (name == "theta_en" || name == "theta_pn" || name == "theta_pn_corollary") {
    require(k >= 0 && k < n, r.check + " needs 0 <= k < n");
    r.params["k"] = k;
  }
  if (name == "theta_en") {
    compare_symfunc(r, theta(k, nabla(SymFunc::e(n - k))), delta_prime_e(n - k - 1, SymFunc::e(n)), start);
  } else if (name == "theta_pn" || name == "theta_pn_corollary") {
    const SymFunc lhs = theta(k, nabla(omega_p(n - k)));
    const SymFunc rhs = delta(SymFunc::e(n - k), omega_p(n));
    if (name == "theta_pn") {
      compare_symfunc(r, lhs * ratio(q_analogue(n), q_analogue(n - k)), rhs * ratio(t_analogue(n - k), t_analogue(n)),
                      start);
    } else {
      compare_symfunc(r, lhs * ratio(t_analogue(n), t_analogue(n - k)), rhs * ratio(q_analogue(n - k), q_analogue(n)),
                      start);
    }
  } else if (name == "pn_Enk") {
    SymFunc sum(Basis::elementary, n);
    for (int j = 1; j <= n; ++j) sum += convert(e_nk(n, j), Basis::elementary) * ratio(q_analogue(n), q_analogue(j));
    compare_symfunc(r, omega_p(n), sum, start);
  } else if (name == "Enk_sum") {
    SymFunc sum(Basis::elementary, n);
    for (int j = 0; j <= n; ++j) sum += convert(e_nk(n, j), Basis::elementary);
    compare_symfunc(r, SymFunc::e(n), sum, start);
  } else {
    throw InvalidParams("unknown identity: " + r.check);
  }
  return r;
}

GenPoly conjecture_symmetric_side(std::string_view name, int m, int n, int k, std::optional<int> r) {
  require(n >= 1 && m >= 0 && k >= 0, "conjecture checks need n >= 1, m >= 0, k >= 0");
  const bool touching = name == "valley_delta_touching" || name == "gen_valley_delta_touching";
  require(touching == r.has_value(), std::string(name) + (touching ? " needs r" : " takes no r"));
  if (name == "shuffle" || name == "square") require(m == 0 && k == 0, std::string(name) + " takes m = k = 0");
  if (name == "valley_delta_touching" || name == "modified_square") require(m == 0, std::string(name) + " takes m = 0");
  if (name == "shuffle") return render_scaled(nabla(SymFunc::e(n)));
  if (name == "square") return render_scaled(nabla(omega_p(n)));
  if (name == "valley_delta" || name == "rise_delta") {
    return render_scaled(delta_h(m, delta_prime_e(n - k - 1, SymFunc::e(n))));
  }
  require(k < n, std::string(name) + " needs k < n");
  if (touching) {
    require(*r >= 0 && *r <= n - k, std::string(name) + " needs 0 <= r <= n - k");
    return render_scaled(delta_h(m, theta(k, nabla(e_nk(n - k, *r)))));
  }
  if (name == "gen_valley_square_ratio") {
    return render_scaled(delta_h(m, delta(SymFunc::e(n - k), omega_p(n))), q_analogue(n - k), q_analogue(n));
  }
  if (name == "rise_square") {
    return render_scaled(delta_h(m, delta(SymFunc::e(n - k), omega_p(n))), t_analogue(n - k), t_analogue(n));
  }
  if (name == "gen_valley_square_theta") {
    return render_scaled(delta_h(m, theta(k, nabla(omega_p(n - k)))), t_analogue(n), t_analogue(n - k));
  }
  if (name == "modified_square" || name == "gen_modified_square") {
    return render_scaled(delta_h(m, theta(k, nabla(omega_p(n - k)))));
  }
  throw InvalidParams("unknown conjecture: " + std::string(name));
}

GenPoly conjecture_combinatorial_side(std::string_view name, int m, int n, int k, std::optional<int> r) {
  const DecorationKind valley = DecorationKind::valley;
  if (name == "shuffle") return family_polynomial(Family::LD, valley, 0, n, 0);
  if (name == "square") return family_polynomial(Family::LSQ, valley, 0, n, 0);
  if (name == "valley_delta") return family_polynomial(Family::LD, valley, m, n, k);
  if (name == "valley_delta_touching" || name == "gen_valley_delta_touching") {
    return family_polynomial(Family::LD, valley, m, n, k, r);
  }
  if (name == "gen_valley_square_ratio" || name == "gen_valley_square_theta") {
    return family_polynomial(Family::LSQ, valley, m, n, k);
  }
  if (name == "modified_square" || name == "gen_modified_square") {
    return family_polynomial(Family::LSQprime, valley, m, n, k);
  }
  if (name == "rise_delta") return family_polynomial(Family::LD, DecorationKind::rise, m, n, k);
  if (name == "rise_square") return family_polynomial(Family::LSQ, DecorationKind::rise, m, n, k);
  throw InvalidParams("unknown conjecture: " + std::string(name));
}

CheckReport check_conjecture(std::string_view name, int m, int n, int k, std::optional<int> r) {
  const auto start = Clock::now();
  CheckReport out;
  out.check = std::string(name);
  out.params = mnk(m, n, k);
  if (r) out.params["r"] = *r;
  GenPoly lhs;
  try {
    lhs = conjecture_symmetric_side(name, m, n, k, r);
  } catch (const NotPolynomial& e) {
    out.status = CheckStatus::fail;
    out.note = std::string("NotPolynomial: ") + e.what();
    out.ms = elapsed_ms(start);
    return out;
  }
  compare_genpoly(out, lhs, conjecture_combinatorial_side(name, m, n, k, r), start);
  return out;
}

CheckReport check_touching_additivity(int m, int n, int k) {
  require(n >= 1 && m >= 0 && k >= 0 && k < n, "additivity needs n >= 1, m >= 0, 0 <= k < n");
  const auto start = Clock::now();
  CheckReport out;
  out.check = "touching_additivity";
  out.params = mnk(m, n, k);

  SymFunc sym_sum(Basis::schur, n);
  for (int r = 1; r <= n - k; ++r) sym_sum += convert(delta_h(m, theta(k, nabla(e_nk(n - k, r)))), Basis::schur);
  const SymFunc sym_whole = delta_h(m, delta_prime_e(n - k - 1, SymFunc::e(n)));
  if (!equal(sym_sum, sym_whole)) {
    out.note = "symmetric sides";
    compare_symfunc(out, sym_sum, sym_whole, start);
    return out;
  }
  GenPoly comb_sum;
  for (int r = 0; r <= n; ++r) comb_sum += family_polynomial(Family::LD, DecorationKind::valley, m, n, k, r);
  out.note = "combinatorial sides";
  compare_genpoly(out, comb_sum, family_polynomial(Family::LD, DecorationKind::valley, m, n, k), start);
  if (out.status == CheckStatus::pass) out.note.clear();
  return out;
}

CheckReport check_square_pipeline(int m, int n, int k) {
  require(n >= 1 && m >= 0 && k >= 0 && k < n, "pipeline needs n >= 1, m >= 0, 0 <= k < n");
  const auto start = Clock::now();
  CheckReport out;
  out.check = "square_pipeline";
  out.params = mnk(m, n, k);
  try {
    GenPoly scaled_dyck;
    for (int r = 1; r <= n; ++r) {
      const GenPoly dyck = family_polynomial(Family::LD, DecorationKind::valley, m, n, k, r);
      scaled_dyck += scaled(dyck, q_analogue(n - k), q_analogue(r));
    }
    const GenPoly square = family_polynomial(Family::LSQprime, DecorationKind::valley, m, n, k);
    if (scaled_dyck != square) {
      out.note = "scaled touching Dyck sums against LSQ'";
      compare_genpoly(out, scaled_dyck, square, start);
      return out;
    }
    SymFunc touching_sum(Basis::schur, n);
    for (int r = 1; r <= n - k; ++r) {
      touching_sum += convert(delta_h(m, theta(k, nabla(e_nk(n - k, r)))), Basis::schur) *
                      ratio(q_analogue(n - k), q_analogue(r));
    }
    const SymFunc target = delta_h(m, theta(k, nabla(omega_p(n - k))));
    if (!equal(touching_sum, target)) {
      out.note = "scaled touching symmetric sides against the theta form";
      compare_symfunc(out, touching_sum, target, start);
      return out;
    }
    compare_genpoly(out, render_scaled(target), square, start);
    if (out.status == CheckStatus::fail) out.note = "theta form against LSQ'";
  } catch (const NotPolynomial& e) {
    out.status = CheckStatus::fail;
    out.note = std::string("NotPolynomial: ") + e.what();
    out.ms = elapsed_ms(start);
  }
  return out;
}

}  // namespace qtdelta
