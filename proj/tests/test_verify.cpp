#include <doctest.h>
#include <json.hpp>

#include <set>
#include <sstream>

#include "qtdelta/errors.hpp"
#include "qtdelta/schedule.hpp"
#include "qtdelta/verify.hpp"

using namespace qtdelta;

namespace {

const QTPoly q = QTPoly::q();
const QTPoly t = QTPoly::t();

bool all_pass(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports) {
    if (r.status == CheckStatus::fail) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("schedule checks on small families") {
  const auto single = check_schedule(1, 0, 0);
  REQUIRE(single.size() == 1);
  CHECK(single[0].status == CheckStatus::pass);
  CHECK(single[0].lhs == "1");

  const auto three = check_schedule(3, 0, 0);
  CHECK(three.size() > 5);
  CHECK(all_pass(three));
  CHECK(all_pass(check_schedule(3, 1, 1)));
}

TEST_CASE("shift recursion and flattening at size 3") {
  const auto reports = check_shift_recursion(3, 0, 0);
  int shift = 0;
  int flat = 0;
  for (const auto& r : reports) {
    CHECK(r.status != CheckStatus::fail);
    if (r.check == "shift_by_1" && r.status == CheckStatus::pass) ++shift;
    if (r.check == "flattening") ++flat;
  }
  CHECK(shift > 0);
  CHECK(flat > 0);
  CHECK(all_pass(check_shift_recursion(3, 1, 1)));
}

TEST_CASE("flattening is skipped without positive base labels") {
  std::set<std::string> zero_base;
  for (const auto& r : check_schedule(2, 1, 1)) {
    if (run_multiplicities(MarkedWord::parse(r.word))[0].positive_size == 0) zero_base.insert(r.word);
  }
  CHECK_FALSE(zero_base.empty());
  for (const auto& r : check_shift_recursion(2, 1, 1)) {
    if (r.check == "flattening") CHECK(zero_base.count(r.word) == 0);
  }
}

TEST_CASE("square to dyck") {
  for (int r = 1; r <= 3; ++r) CHECK(check_square_to_dyck(0, 4, 1, r).status == CheckStatus::pass);
  CHECK(check_square_to_dyck(1, 3, 1, 2).status == CheckStatus::pass);
}

TEST_CASE("identities") {
  CHECK(check_identity("theta_en", 4, 2).status == CheckStatus::pass);
  CHECK(check_identity("theta_pn", 3, 1).status == CheckStatus::pass);
  CHECK(check_identity("theta_pn_corollary", 4, 2).status == CheckStatus::pass);
  CHECK(check_identity("pn_Enk", 4).status == CheckStatus::pass);
  CHECK(check_identity("Enk_sum", 5).status == CheckStatus::pass);
  CHECK_THROWS_AS(check_identity("theta_en", 3, 3), InvalidParams);
  CHECK_THROWS_AS(check_identity("nonsense", 3), InvalidParams);
}

TEST_CASE("shuffle at n = 2") {
  const CheckReport r = check_conjecture("shuffle", 0, 2, 0);
  CHECK(r.status == CheckStatus::pass);
  GenPoly expected;
  expected.add({2}, QTPoly(1L));
  expected.add({1, 1}, 1 + q + t);
  CHECK(conjecture_symmetric_side("shuffle", 0, 2, 0) == expected);
  CHECK(conjecture_combinatorial_side("shuffle", 0, 2, 0) == expected);
}

TEST_CASE("conjecture guard and sample cases") {
  const CheckReport full = check_conjecture("valley_delta", 0, 3, 3);
  CHECK(full.status == CheckStatus::pass);
  CHECK(conjecture_symmetric_side("valley_delta", 0, 3, 3).is_zero());
  CHECK(check_conjecture("gen_valley_square_ratio", 0, 4, 1).status == CheckStatus::pass);
  CHECK(check_conjecture("gen_valley_square_theta", 1, 3, 1).status == CheckStatus::pass);
  CHECK(check_conjecture("valley_delta_touching", 0, 4, 1, 2).status == CheckStatus::pass);
  CHECK(check_conjecture("gen_modified_square", 1, 3, 1).status == CheckStatus::pass);
  CHECK(check_conjecture("rise_square", 0, 3, 1).status == CheckStatus::pass);
  CHECK_THROWS_AS(check_conjecture("valley_delta_touching", 0, 3, 1), InvalidParams);
  CHECK_THROWS_AS(check_conjecture("modified_square", 1, 3, 1), InvalidParams);
  CHECK_THROWS_AS(check_conjecture("gen_valley_square_ratio", 0, 3, 3), InvalidParams);
}

TEST_CASE("ratio and theta forms agree") {
  for (int n = 2; n <= 4; ++n) {
    for (int k = 0; k < n; ++k) {
      CHECK(conjecture_symmetric_side("gen_valley_square_ratio", 1, n, k) ==
            conjecture_symmetric_side("gen_valley_square_theta", 1, n, k));
    }
  }
}

TEST_CASE("audit and pipeline") {
  CHECK(check_touching_additivity(0, 4, 1).status == CheckStatus::pass);
  CHECK(check_touching_additivity(1, 3, 2).status == CheckStatus::pass);
  CHECK(check_square_pipeline(0, 4, 2).status == CheckStatus::pass);
  CHECK(check_square_pipeline(1, 3, 1).status == CheckStatus::pass);
}

TEST_CASE("differences point at the first coefficient") {
  GenPoly a;
  a.add({1, 1}, 1 + q + t);
  a.add({2}, QTPoly(1L));
  GenPoly b = a;
  b.add({2}, t * t);
  const auto d = first_difference(a, b);
  REQUIRE(d.has_value());
  CHECK(d->content == std::vector<int>{2});
  CHECK(d->qexp == 0);
  CHECK(d->texp == 2);
  CHECK(d->lhs == 0);
  CHECK(d->rhs == 1);
  CHECK_FALSE(first_difference(a, a).has_value());
}

TEST_CASE("report json") {
  CheckReport r;
  r.check = "shuffle";
  r.params = {{"n", 2}};
  r.status = CheckStatus::fail;
  r.lhs = "m[2]: 1";
  r.rhs = "m[2]: 2";
  r.diff = CoefficientDiff{{2}, 0, 0, 1, 2};
  const auto j = nlohmann::json::parse(r.to_json());
  CHECK(j.at("check") == "shuffle");
  CHECK(j.at("params").at("n") == 2);
  CHECK(j.at("status") == "fail");
  CHECK(j.at("diff").at("content") == std::vector<int>{2});
  CHECK(j.at("diff").at("rhs") == "2");
  CHECK(j.contains("ms"));
}

TEST_CASE("suite runs the catalogue in order") {
  SuiteOptions o;
  o.max_size = 3;
  o.families = suite_families();
  o.jobs = 2;
  std::ostringstream out;
  const SuiteSummary s = run_suite(o, out);
  CHECK(s.ok());
  CHECK(s.total == static_cast<int>(suite_catalogue_size(o)));
  CHECK(s.passed + s.skipped == s.total);

  std::istringstream lines(out.str());
  std::string line;
  std::vector<nlohmann::json> rows;
  while (std::getline(lines, line)) rows.push_back(nlohmann::json::parse(line));
  REQUIRE(rows.size() == static_cast<std::size_t>(s.total) + 1);
  CHECK(rows.back().at("summary") == true);
  CHECK(rows.back().at("total") == s.total);
  CHECK(rows.front().at("check") == "schedule");

  o.jobs = 1;
  std::ostringstream again;
  run_suite(o, again);
  auto strip_ms = [](const std::string& text) {
    std::istringstream in(text);
    std::string l;
    std::vector<nlohmann::json> out;
    while (std::getline(in, l)) {
      auto j = nlohmann::json::parse(l);
      j.erase("ms");
      out.push_back(j);
    }
    return out;
  };
  CHECK(strip_ms(out.str()) == strip_ms(again.str()));
}

TEST_CASE("empty suite") {
  SuiteOptions o;
  std::ostringstream out;
  const SuiteSummary s = run_suite(o, out);
  CHECK(s.total == 0);
  CHECK(s.ok());
  o.families = {"bogus"};
  CHECK_THROWS_AS(run_suite(o, out), InvalidParams);
}

TEST_CASE("mixed decorations series is computed") {
  const MixedSeries plain = explore_mixed_decorations(3, 0, 0);
  CHECK(plain.symmetric);
  const MixedSeries mixed = explore_mixed_decorations(3, 1, 1);
  CHECK(mixed.paths > 0);
  CHECK_FALSE(mixed.detail.empty());
}
