#include <doctest.h>

#include <algorithm>
#include <set>

#include "qtdelta/genpoly.hpp"
#include "qtdelta/paths.hpp"

using namespace qtdelta;

namespace {

const AreaWord kSampleArea{0, -3, -3, -2, -2, -1, 0, 0};
const QTPoly q = QTPoly::q();
const QTPoly t = QTPoly::t();

DecoratedPath valley_path(AreaWord a, std::vector<int> w, std::vector<int> dv = {}) {
  return {std::move(a), std::move(w), DecorationKind::valley, std::move(dv)};
}

// Independent enumeration: every N/E string, every labelling, every subset,
// filtered by the validity predicates.
std::set<DecoratedPath> brute_force(Family fam, DecorationKind kind, int m, int n, int k, int alphabet) {
  std::set<DecoratedPath> out;
  const int size = m + n;
  for (unsigned mask = 0; mask < (1U << (2 * size)); ++mask) {
    if (__builtin_popcount(mask) != size) continue;
    std::string steps;
    for (int b = 0; b < 2 * size; ++b) steps += (mask >> b) & 1U ? 'N' : 'E';
    if (size > 0 && steps.back() != 'E') continue;
    const AreaWord a = area_word_from_steps(steps);
    if (fam == Family::LD && shift(a) > 0) continue;
    std::vector<int> w(static_cast<std::size_t>(size), 0);
    long total = 1;
    for (int i = 0; i < size; ++i) total *= alphabet + 1;
    for (long code = 0; code < total; ++code) {
      long c = code;
      int zeros = 0;
      for (int i = 0; i < size; ++i) {
        w[static_cast<std::size_t>(i)] = static_cast<int>(c % (alphabet + 1));
        c /= alphabet + 1;
        if (w[static_cast<std::size_t>(i)] == 0) ++zeros;
      }
      if (zeros != m || !is_valid_labelling(a, w)) continue;
      for (unsigned dmask = 0; dmask < (1U << size); ++dmask) {
        if (__builtin_popcount(dmask) != k) continue;
        DecoratedPath p{a, w, kind, {}};
        for (int r = 0; r < size; ++r) {
          if ((dmask >> r) & 1U) p.decorations.push_back(r + 1);
        }
        if (!is_valid(p)) continue;
        if (fam == Family::LSQprime && touching(p) == 0) continue;
        out.insert(p);
      }
    }
  }
  return out;
}

long binom(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("shift") {
  CHECK(shift(kSampleArea) == 3);
  CHECK(shift({0, 1, 2}) == 0);
  CHECK(shift({-1, 0, 0}) == 1);
  CHECK(shift({}) == 0);
}

TEST_CASE("contractible valleys") {
  const std::vector<int> v = contractible_valleys(kSampleArea, {2, 0, 2, 4, 0, 1, 3, 4});
  CHECK(std::count(v.begin(), v.end(), 2) == 1);
  CHECK(std::count(v.begin(), v.end(), 8) == 1);
  CHECK(contractible_valleys({0, 0, 0}, {3, 2, 1}).empty());
  CHECK(contractible_valleys({0, 0}, {1, 2}) == std::vector<int>{2});
  // first-row zero needs two horizontal steps before it
  CHECK(contractible_valleys({-1, 0}, {0, 1}).empty());
  CHECK(contractible_valleys({-1, 0}, {1, 2}) == std::vector<int>{1});
  CHECK(contractible_valleys({-2, -1, 0}, {0, 1, 2}) == std::vector<int>{1});
}

TEST_CASE("rises") {
  CHECK(rises(kSampleArea) == std::vector<int>{4, 6, 7});
  CHECK(rises({0, 0, 0}).empty());
  CHECK(rises({0, 1, 2}) == std::vector<int>{2, 3});
}

TEST_CASE("area") {
  CHECK(area(valley_path(kSampleArea, {2, 1, 1, 4, 1, 3, 4, 1}, {2, 5})) == 13);
  CHECK(area(DecoratedPath{}) == 0);
  CHECK(area({{0, 1}, {1, 2}, DecorationKind::none, {}}) == 1);
  CHECK(area({{0, 1}, {1, 2}, DecorationKind::rise, {2}}) == 0);
  CHECK(area({kSampleArea, {2, 0, 2, 4, 0, 1, 3, 4}, DecorationKind::rise, {4, 7}}) == 9);
}

TEST_CASE("dinv") {
  // Pairs (1,7), (1,8), (7,8) are primary; (2,3) is skipped because row 2 is decorated.
  const DinvParts parts = dinv_parts(valley_path(kSampleArea, {2, 0, 2, 4, 0, 1, 3, 4}, {2, 8}));
  CHECK(parts.primary == 3);
  CHECK(parts.secondary == 1);
  CHECK(parts.bonus == 3);
  CHECK(parts.decorated == 2);
  CHECK(parts.total() == 5);
  // A decorated valley always carries its own inversion: e_2 needs dinv 0 here.
  CHECK(dinv(valley_path({0, 0}, {1, 2}, {2})) == 0);
  CHECK(dinv(valley_path({0}, {1})) == 0);
  CHECK(dinv(valley_path(kSampleArea, {2, 1, 2, 4, 1, 3, 4, 1})) == 7);
  // rise decorations do not affect dinv
  CHECK(dinv({{0, 1}, {1, 2}, DecorationKind::rise, {2}}) == dinv({{0, 1}, {1, 2}, DecorationKind::none, {}}));
}

TEST_CASE("diagonal word and maj") {
  const DecoratedPath p = valley_path(kSampleArea, {2, 1, 1, 4, 1, 3, 4, 1}, {2, 5});
  const MarkedWord z = diagonal_word(p);
  CHECK(z.to_string() == "1 2 4 | 3 | 1* 4 | 1 1*");
  CHECK(z.top() == 3);
  CHECK(maj(z) == 13);
  CHECK(maj(z) == area(p));
  CHECK(diagonal_word(valley_path({0}, {5})).to_string() == "5");
  CHECK(diagonal_word(valley_path({0, 0}, {1, 2})).to_string() == "1 2");
  CHECK(maj(MarkedWord::parse("1 1 2 3")) == 0);
  CHECK(maj(MarkedWord::parse("2 | 1")) == 1);
  CHECK(MarkedWord::parse(z.to_string()) == z);
  CHECK_THROWS_AS(MarkedWord::parse("1 | | 2"), ParseError);
  CHECK_THROWS_AS(MarkedWord::parse("1 x"), ParseError);
}

TEST_CASE("area words") {
  CHECK(area_words(2).size() == 3);
  for (int size = 0; size <= 7; ++size) {
    const auto words = area_words(size);
    CHECK(static_cast<long>(words.size()) == (size == 0 ? 1 : binom(2 * size - 1, size)));
    CHECK(std::is_sorted(words.begin(), words.end()));
    for (const AreaWord& a : words) {
      CHECK(is_valid_area_word(a));
      CHECK(area_word_from_steps(area_word_to_steps(a)) == a);
    }
  }
  CHECK(area_words(4, true).size() == 14);
  CHECK_THROWS_AS(area_word_from_steps("NEN"), InvalidParams);
  CHECK_THROWS_AS(area_word_from_steps("EENN"), InvalidParams);
}

TEST_CASE("enumeration matches the brute-force oracle") {
  for (Family fam : {Family::LSQ, Family::LD, Family::LSQprime}) {
    for (DecorationKind kind : {DecorationKind::valley, DecorationKind::rise}) {
      if (fam == Family::LSQprime && kind == DecorationKind::rise) continue;
      for (int size = 1; size <= 4; ++size) {
        for (int m = 0; m < size; ++m) {
          for (int k = 0; k <= 2; ++k) {
            const int n = size - m;
            EnumSpec spec{fam, kind, m, n, k};
            const auto list = enumerate_all(spec);
            CHECK(std::is_sorted(list.begin(), list.end()));
            const std::set<DecoratedPath> got(list.begin(), list.end());
            CHECK(got.size() == list.size());
            CHECK(got == brute_force(fam, kind, m, n, k, n));
          }
        }
      }
    }
  }
}

TEST_CASE("enumeration small cases") {
  EnumSpec spec{Family::LD, DecorationKind::valley, 0, 1, 0};
  spec.alphabet_max = 3;
  CHECK(enumerate_all(spec).size() == 3);
  EnumSpec empty{Family::LSQ, DecorationKind::valley, 0, 0, 0};
  CHECK(enumerate_all(empty).size() == 1);
  EnumSpec zeros_only{Family::LSQ, DecorationKind::valley, 2, 0, 0};
  CHECK(enumerate_all(zeros_only).empty());
  CHECK_THROWS_AS(enumerate_all({Family::LSQprime, DecorationKind::rise, 0, 2, 0}), InvalidParams);
  CHECK_THROWS_AS(enumerate_all({Family::LSQ, DecorationKind::valley, -1, 2, 0}), InvalidParams);
  EnumSpec bad_content{Family::LSQ, DecorationKind::valley, 0, 2, 0};
  bad_content.content = std::vector<int>{1};
  CHECK_THROWS_AS(enumerate_all(bad_content), InvalidParams);
}

TEST_CASE("touching classes partition the family") {
  for (Family fam : {Family::LD, Family::LSQ}) {
    for (int n = 1; n <= 4; ++n) {
      for (int k = 0; k < n; ++k) {
        EnumSpec spec{fam, DecorationKind::valley, 0, n, k};
        const auto all = enumerate_all(spec);
        std::vector<DecoratedPath> merged;
        for (int r = 0; r <= n; ++r) {
          EnumSpec s = spec;
          s.touching = r;
          for (const auto& p : enumerate_all(s)) merged.push_back(p);
        }
        std::sort(merged.begin(), merged.end());
        CHECK(merged == all);
      }
    }
  }
}

TEST_CASE("generating polynomials") {
  const GenPoly ld1 = generating_polynomial(EnumSpec{Family::LD, DecorationKind::valley, 0, 1, 0});
  CHECK(ld1.at({1}) == QTPoly(1L));
  CHECK(ld1.terms().size() == 1);
  CHECK(generating_polynomial(EnumSpec{Family::LSQ, DecorationKind::valley, 0, 1, 0}) == ld1);

  const GenPoly ld2 = generating_polynomial(EnumSpec{Family::LD, DecorationKind::valley, 0, 2, 0});
  CHECK(ld2.at({1, 1}) == 1 + q + t);
  CHECK(ld2.at({2}) == QTPoly(1L));
  CHECK(ld2.terms().size() == 2);

  EnumSpec spec{Family::LSQ, DecorationKind::valley, 1, 3, 1};
  CHECK(generating_polynomial(spec) == generating_polynomial_by_content(spec));
  CHECK(generating_polynomial(enumerate_all(spec)) == generating_polynomial(spec));

  CHECK(GenPoly::from_json(ld2.to_json()) == ld2);
  CHECK(ld2.to_json() ==
        R"({"terms":[{"content":[1,1],"q":0,"t":0,"coeff":"1"},{"content":[1,1],"q":0,"t":1,"coeff":"1"},)"
        R"({"content":[1,1],"q":1,"t":0,"coeff":"1"},{"content":[2],"q":0,"t":0,"coeff":"1"}]})");
  CHECK_THROWS_AS(GenPoly::from_json("{\"terms\":[{\"content\":[1]}]}"), ParseError);
}

TEST_CASE("symmetry check rejects a lopsided series") {
  ContentSeries series;
  series.add({1, 0}, 0, 0);
  CHECK_THROWS_AS(series.symmetrize(2), NotSymmetric);
  series.add({0, 1}, 1, 0);
  CHECK_THROWS_AS(series.symmetrize(2), NotSymmetric);
}

TEST_CASE("pushing infinities") {
  const DecoratedPath before{{0, -2, -3, -2, -1, -1, 0, 0},
                             {2, kInfinityLabel, 2, 4, kInfinityLabel, 1, 3, 4},
                             DecorationKind::valley,
                             {2, 8}};
  const DecoratedPath after = valley_path(kSampleArea, {2, 0, 2, 4, 0, 1, 3, 4}, {2, 8});
  CHECK(push_zeros(before) == after);
  CHECK(pull_zeros(after) == before);
  CHECK(dinv(before) == dinv(after));
  CHECK(area(before) == area(after) + 2);

  const DecoratedPath plain = valley_path({0, 0}, {1, 2}, {2});
  CHECK(push_zeros(plain) == plain);

  CHECK_THROWS_AS(push_zeros(valley_path({-1, 0}, {kInfinityLabel, 1})), InvalidEncoding);
  CHECK_THROWS_AS(push_zeros(valley_path({0, 1}, {kInfinityLabel, 1})), InvalidEncoding);
  CHECK_THROWS_AS(push_zeros(valley_path({0, 0}, {1, kInfinityLabel})), InvalidEncoding);
  CHECK_THROWS_AS(push_zeros(valley_path({0, 0}, {1, 0})), InvalidEncoding);
}

TEST_CASE("pushing preserves dinv and shifts area by the number of zeros") {
  for (int size = 1; size <= 5; ++size) {
    for (int m = 0; m < size; ++m) {
      for (int k = 0; k <= 2; ++k) {
        for (Family fam : {Family::LSQ, Family::LD}) {
          enumerate({fam, DecorationKind::valley, m, size - m, k}, [&](const DecoratedPath& p) {
            const DecoratedPath pulled = pull_zeros(p);
            CHECK(push_zeros(pulled) == p);
            CHECK(dinv(pulled) == dinv(p));
            CHECK(area(pulled) == area(p) + m);
            CHECK(shift(pulled.area_word) == shift(p.area_word));
          });
        }
      }
    }
  }
}

TEST_CASE("path lines round-trip") {
  const DecoratedPath p = valley_path(kSampleArea, {2, 0, 2, 4, 0, 1, 3, 4}, {2, 8});
  CHECK(to_line(p) == "areaword=[0,-3,-3,-2,-2,-1,0,0]; labels=[2,0,2,4,0,1,3,4]; kind=valley; dec=[2,8]");
  CHECK(parse_line(to_line(p)) == p);
  const DecoratedPath inf{{0, -1}, {kInfinityLabel, 1}, DecorationKind::none, {}};
  CHECK(parse_line(to_line(inf)) == inf);
  CHECK(parse_line(to_line(DecoratedPath{})) == DecoratedPath{});
  CHECK_THROWS_AS(parse_line("areaword=[0]; labels=[1]"), ParseError);
  CHECK_THROWS_AS(parse_line("areaword=[0]; labels=[1,2]; kind=valley; dec=[]"), ParseError);
}

TEST_CASE("path json round-trip") {
  const DecoratedPath p = valley_path(kSampleArea, {2, 0, 2, 4, 0, 1, 3, 4}, {2, 8});
  CHECK(to_json(p) == R"({"areaword":[0,-3,-3,-2,-2,-1,0,0],"labels":[2,0,2,4,0,1,3,4],"kind":"valley","dec":[2,8]})");
  CHECK(path_from_json(to_json(p)) == p);
  const DecoratedPath inf{{0, -1}, {kInfinityLabel, 1}, DecorationKind::none, {}};
  CHECK(path_from_json(to_json(inf)) == inf);
  EnumSpec spec;
  spec.family = Family::LSQ;
  spec.kind = DecorationKind::rise;
  spec.m = 1;
  spec.n = 2;
  spec.k = 1;
  for (const auto& path : enumerate_all(spec)) CHECK(path_from_json(to_json(path)) == path);
  CHECK_THROWS_AS(path_from_json(R"({"areaword":[0]})"), ParseError);
  CHECK_THROWS_AS(path_from_json("not json"), ParseError);
}

TEST_CASE("path invariants up to size 5") {
  for (int size = 1; size <= 5; ++size) {
    for (int m = 0; m < size; ++m) {
      for (int k = 0; k <= 2; ++k) {
        const int n = size - m;
        enumerate({Family::LSQ, DecorationKind::valley, m, n, k}, [&](const DecoratedPath& p) {
          CHECK(dinv(p) >= 0);
          CHECK(area(p) == maj(diagonal_word(p)));
          if (touching(p) > 0 && shift(p.area_word) > 0) CHECK(dinv(p) > 0);
        });
      }
    }
  }
}
