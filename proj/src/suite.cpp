#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <functional>
#include <mutex>
#include <thread>

#include "qtdelta/errors.hpp"
#include "qtdelta/verify.hpp"

namespace qtdelta {

namespace {

using Job = std::function<CheckReport()>;

// One report for a per-class check: counts plus the first failing class.
CheckReport aggregate(const std::string& check, int m, int n, int k, const std::vector<CheckReport>& parts) {
  CheckReport out;
  out.check = check;
  out.params = {{"m", m}, {"n", n}, {"k", k}};
  int failed = 0;
  int skipped = 0;
  for (const CheckReport& r : parts) {
    out.ms += r.ms;
    if (r.status == CheckStatus::skipped) ++skipped;
    if (r.status != CheckStatus::fail) continue;
    if (failed++ == 0) {
      out.word = r.word;
      out.lhs = r.lhs;
      out.rhs = r.rhs;
      out.diff = r.diff;
      out.note = r.check + " at s=" + std::to_string(r.params.at("s")) + (r.note.empty() ? "" : ": " + r.note);
    }
  }
  out.params["classes"] = static_cast<int>(parts.size());
  out.params["failed"] = failed;
  out.params["skipped"] = skipped;
  if (failed > 0) {
    out.status = CheckStatus::fail;
  } else if (!parts.empty() && skipped == static_cast<int>(parts.size())) {
    out.status = CheckStatus::skipped;
  }
  return out;
}

struct Grid {
  int m;
  int n;
  int k;
};

// (m, n, k) with 1 <= m + n <= max_size, n >= 1 and k <= min(max_k, n - 1).
std::vector<Grid> grid(const SuiteOptions& o) {
  std::vector<Grid> out;
  for (int size = 1; size <= o.max_size; ++size) {
    for (int m = 0; m < size; ++m) {
      const int n = size - m;
      for (int k = 0; k <= std::min(o.max_k, n - 1); ++k) out.push_back({m, n, k});
    }
  }
  return out;
}

bool wants(const SuiteOptions& o, const std::string& family) {
  return std::find(o.families.begin(), o.families.end(), family) != o.families.end();
}

std::vector<Job> catalogue(const SuiteOptions& o) {
  for (const auto& f : o.families) {
    if (std::find(suite_families().begin(), suite_families().end(), f) == suite_families().end()) {
      throw InvalidParams("unknown suite family: " + f);
    }
  }
  if (o.max_size < 0 || o.max_k < 0) throw InvalidParams("suite sizes must be non-negative");
  std::vector<Job> jobs;
  const std::vector<Grid> cells = grid(o);
  if (wants(o, "schedule")) {
    for (const Grid& g : cells) {
      jobs.emplace_back([g] { return aggregate("schedule", g.m, g.n, g.k, check_schedule(g.n, g.k, g.m)); });
    }
  }
  if (wants(o, "shift")) {
    for (const Grid& g : cells) {
      jobs.emplace_back([g] { return aggregate("shift_recursion", g.m, g.n, g.k, check_shift_recursion(g.n, g.k, g.m)); });
      for (int r = 1; r <= g.n; ++r) jobs.emplace_back([g, r] { return check_square_to_dyck(g.m, g.n, g.k, r); });
    }
  }
  if (wants(o, "identity")) {
    for (int n = 1; n <= o.max_size; ++n) {
      for (const char* name : {"theta_en", "theta_pn", "theta_pn_corollary"}) {
        for (int k = 0; k < n; ++k) jobs.emplace_back([name, n, k] { return check_identity(name, n, k); });
      }
      jobs.emplace_back([n] { return check_identity("pn_Enk", n); });
      jobs.emplace_back([n] { return check_identity("Enk_sum", n); });
    }
  }
  if (wants(o, "conjecture")) {
    for (int n = 1; n <= o.max_size; ++n) {
      jobs.emplace_back([n] { return check_conjecture("shuffle", 0, n, 0); });
      jobs.emplace_back([n] { return check_conjecture("square", 0, n, 0); });
    }
    for (const Grid& g : cells) {
      for (const char* name : {"valley_delta", "gen_valley_square_ratio", "gen_valley_square_theta",
                               "gen_modified_square", "rise_delta", "rise_square"}) {
        jobs.emplace_back([name, g] { return check_conjecture(name, g.m, g.n, g.k); });
      }
      if (g.m == 0) jobs.emplace_back([g] { return check_conjecture("modified_square", 0, g.n, g.k); });
      for (int r = 1; r <= g.n - g.k; ++r) {
        jobs.emplace_back([g, r] { return check_conjecture("gen_valley_delta_touching", g.m, g.n, g.k, r); });
        if (g.m == 0) jobs.emplace_back([g, r] { return check_conjecture("valley_delta_touching", 0, g.n, g.k, r); });
      }
    }
  }
  if (wants(o, "audit")) {
    for (const Grid& g : cells) jobs.emplace_back([g] { return check_touching_additivity(g.m, g.n, g.k); });
  }
  if (wants(o, "pipeline")) {
    for (const Grid& g : cells) jobs.emplace_back([g] { return check_square_pipeline(g.m, g.n, g.k); });
  }
  return jobs;
}

CheckReport run_job(const Job& job) {
  try {
    return job();
  } catch (const std::exception& e) {
    CheckReport r;
    r.check = "error";
    r.status = CheckStatus::fail;
    r.note = e.what();
    return r;
  }
}

}  // namespace

const std::vector<std::string>& suite_families() {
  static const std::vector<std::string> names = {"schedule", "shift", "identity", "conjecture", "audit", "pipeline"};
  return names;
}

std::size_t suite_catalogue_size(const SuiteOptions& options) { return catalogue(options).size(); }

std::string SuiteSummary::to_json() const {
  nlohmann::ordered_json j;
  j["summary"] = true;
  j["total"] = total;
  j["pass"] = passed;
  j["fail"] = failed;
  j["skipped"] = skipped;
  j["ms"] = ms;
  return j.dump();
}

SuiteSummary run_suite(const SuiteOptions& options, std::ostream& sink) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Job> jobs = catalogue(options);
  std::vector<std::optional<CheckReport>> results(jobs.size());
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};

  const unsigned hw = std::max(1U, std::thread::hardware_concurrency());
  const std::size_t workers =
      std::min<std::size_t>(jobs.size(), options.jobs > 0 ? static_cast<std::size_t>(options.jobs) : hw);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < jobs.size(); i = next++) {
        CheckReport r = run_job(jobs[i]);
        std::lock_guard lock(mu);
        results[i] = std::move(r);
        ready.notify_all();
      }
    });
  }

  SuiteSummary summary;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    std::unique_lock lock(mu);
    ready.wait(lock, [&] { return results[i].has_value(); });
    const CheckReport r = *results[i];
    lock.unlock();
    ++summary.total;
    if (r.status == CheckStatus::pass) ++summary.passed;
    if (r.status == CheckStatus::fail) ++summary.failed;
    if (r.status == CheckStatus::skipped) ++summary.skipped;
    sink << r.to_json() << '\n' << std::flush;
    if (!sink) throw std::ios_base::failure("cannot write suite report");
  }
  for (auto& t : pool) t.join();
  summary.ms =
      static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
  sink << summary.to_json() << '\n' << std::flush;
  if (!sink) throw std::ios_base::failure("cannot write suite summary");
  return summary;
}

MixedSeries explore_mixed_decorations(int n, int valleys, int rises_wanted) {
  if (n < 1 || valleys < 0 || rises_wanted < 0) throw InvalidParams("mixed series needs n >= 1 and non-negative counts");
  EnumSpec spec;
  spec.family = Family::LSQ;
  spec.kind = DecorationKind::valley;
  spec.n = n;
  ContentSeries series;
  MixedSeries out;
  auto subsets = [](const std::vector<int>& pool, int size, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, std::size_t from) -> void {
      if (static_cast<int>(cur.size()) == size) {
        visit(cur);
        return;
      }
      for (std::size_t i = from; i < pool.size(); ++i) {
        cur.push_back(pool[i]);
        self(self, i + 1);
        cur.pop_back();
      }
    };
    rec(rec, 0);
  };
  enumerate(spec, [&](const DecoratedPath& p) {
    std::vector<int> content(static_cast<std::size_t>(n), 0);
    for (int w : p.labels) ++content[static_cast<std::size_t>(w - 1)];
    const std::vector<int> valley_rows = contractible_valleys(p.area_word, p.labels);
    const std::vector<int> rise_rows = rises(p.area_word);
    subsets(valley_rows, valleys, [&](const std::vector<int>& dv) {
      subsets(rise_rows, rises_wanted, [&](const std::vector<int>& dr) {
        const DecoratedPath for_dinv{p.area_word, p.labels, DecorationKind::valley, dv};
        const DecoratedPath for_area{p.area_word, p.labels, DecorationKind::rise, dr};
        series.add(content, dinv(for_dinv), area(for_area));
        ++out.paths;
      });
    });
  });
  try {
    const GenPoly g = series.symmetrize(n);
    out.symmetric = true;
    out.detail = g.to_string();
  } catch (const NotSymmetric& e) {
    out.detail = e.what();
  }
  return out;
}

}  // namespace qtdelta
