#include <doctest.h>

#include <map>

#include "qtdelta/q_analogues.hpp"
#include "qtdelta/schedule.hpp"

using namespace qtdelta;

namespace {

const QTPoly q = QTPoly::q();
const MarkedWord kSampleWord = MarkedWord::parse("1 2 4 | 3 | 1* 4 | 1 1*");

using ClassKey = std::pair<MarkedWord, int>;

std::map<ClassKey, std::vector<DecoratedPath>> classes(int m, int n, int k) {
  std::map<ClassKey, std::vector<DecoratedPath>> out;
  enumerate({Family::LSQ, DecorationKind::valley, m, n, k}, [&](const DecoratedPath& p) {
    out[{diagonal_word(p), shift(p.area_word)}].push_back(p);
  });
  return out;
}

}  // namespace

TEST_CASE("run multiplicities") {
  const auto rm = run_multiplicities(kSampleWord);
  REQUIRE(rm.size() == 4);
  CHECK(rm[0].z(1) == 1);
  CHECK(rm[0].z_dec(1) == 1);
  CHECK(rm[1].z(4) == 1);
  CHECK(rm[1].z_dec(1) == 1);
  CHECK(rm[2].z(3) == 1);
  CHECK(rm[3].undecorated == std::map<int, int>{{1, 1}, {2, 1}, {4, 1}});
  CHECK(rm[3].undecorated_size == 3);
  CHECK(rm[0].positive_size == 1);
  CHECK(run_multiplicities(MarkedWord()).empty());
  const auto single = run_multiplicities(MarkedWord::parse("1 1 2"));
  CHECK(single[0].z(1) == 2);
  CHECK(single[0].z(2) == 1);
}

TEST_CASE("schedule numbers") {
  const MarkedWord z = MarkedWord::parse("1 2");
  CHECK(schedule_numbers(z, 0, 0, 1).w == 2);
  CHECK(schedule_numbers(z, 0, 0, 2).w == 1);
  CHECK(schedule_numbers(kSampleWord, 3, 3, 4).w == 1);
  // i = s with c = 0 and only positives on the run: no extra slot
  const MarkedWord zeros = MarkedWord::parse("0 1 2");
  CHECK(schedule_numbers(zeros, 0, 0, 0).w == 2);
  CHECK_THROWS_AS(schedule_numbers(z, 0, 1, 1), IndexOutOfRange);
  CHECK_THROWS_AS(schedule_numbers(z, 1, 0, 1), IndexOutOfRange);
  CHECK_THROWS_AS(schedule_numbers(z, -1, 0, 1), IndexOutOfRange);
}

TEST_CASE("b exponent") {
  CHECK(b_exponent(kSampleWord, 0) == 0);
  CHECK(b_exponent(kSampleWord, 3) == 3);
  for (const char* text : {"1 2 4 | 3 | 1* 4 | 1 1*", "0 2 | 1 3 | 0* 2 | 0 1", "1 | 2 | 0 3 | 0* 1 | 1"}) {
    const MarkedWord z = MarkedWord::parse(text);
    const auto rm = run_multiplicities(z);
    for (int s = 1; s <= z.top(); ++s) {
      const int dec = s >= 2 ? rm[static_cast<std::size_t>(s - 2)].z_dec(0) : 0;
      CHECK(b_exponent(z, s) - b_exponent(z, s - 1) == rm[static_cast<std::size_t>(s - 1)].positive_size - dec);
    }
  }
}

TEST_CASE("schedule product small cases") {
  CHECK(schedule_product(MarkedWord::parse("1 2"), 0) == 1 + q);
  CHECK(schedule_product(MarkedWord::parse("3"), 0) == QTPoly(1L));
  CHECK(schedule_product(MarkedWord::parse("1 2"), 1).is_zero());
  CHECK(schedule_product(MarkedWord(), 0) == QTPoly(1L));
  CHECK_THROWS_AS(schedule_product(MarkedWord::parse("1 2"), -1), IndexOutOfRange);
  const auto paths = insertion_generate(MarkedWord::parse("1 2"), 0);
  REQUIRE(paths.size() == 2);
  CHECK(paths[0].area_word == AreaWord{0, 0});
  CHECK(paths[1].area_word == AreaWord{0, 0});
  CHECK(insertion_generate(MarkedWord::parse("4"), 0).size() == 1);
  CHECK_THROWS_AS(insertion_generate(MarkedWord::parse("1 2"), 1), UnrealizableWord);
  CHECK_THROWS_AS(insertion_generate(MarkedWord::parse("0"), 0), UnrealizableWord);
}

TEST_CASE("schedule formula agrees with enumeration up to size 4") {
  int classes_seen = 0;
  for (int size = 1; size <= 4; ++size) {
    for (int m = 0; m < size; ++m) {
      for (int k = 0; k <= 2; ++k) {
        for (const auto& [key, paths] : classes(m, size - m, k)) {
          ++classes_seen;
          const auto& [z, s] = key;
          INFO("word " << z.to_string() << " shift " << s);
          CHECK(schedule_product(z, s) == qt_enumerator(paths));
          CHECK(insertion_generate(z, s) == paths);
        }
      }
    }
  }
  CHECK(classes_seen > 100);
}

TEST_CASE("a word with a misplaced decoration is not realizable") {
  // Its decorated 1 in the bottom run cannot sit on a contractible valley.
  for (int s = 0; s <= 3; ++s) {
    CHECK(class_paths_bruteforce(kSampleWord, s).empty());
    CHECK(schedule_product(kSampleWord, s).is_zero());
    CHECK_THROWS_AS(insertion_generate(kSampleWord, s), UnrealizableWord);
  }
}

TEST_CASE("size 5 words with two decorations") {
  int checked = 0;
  for (int m = 0; m <= 2; ++m) {
    for (const auto& [key, paths] : classes(m, 5 - m, 2)) {
      const auto& [z, s] = key;
      INFO("word " << z.to_string() << " shift " << s);
      CHECK(schedule_product(z, s) == qt_enumerator(paths));
      CHECK(insertion_generate(z, s) == paths);
      ++checked;
    }
  }
  CHECK(checked > 50);
}
