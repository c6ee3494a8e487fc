#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "qtdelta/errors.hpp"
#include "qtdelta/genpoly.hpp"
#include "qtdelta/schedule.hpp"
#include "qtdelta/symfunc.hpp"
#include "qtdelta/verify.hpp"

using namespace qtdelta;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FamilyArgs {
  std::string family = "lsq";
  std::string kind = "valley";
  int m = 0;
  int n = 1;
  int k = 0;
  std::optional<int> touching;
  int alphabet = 0;
};

void add_family_options(CLI::App* cmd, FamilyArgs& a) {
  cmd->add_option("--family", a.family, "lsq, ld or lsqprime")->check(CLI::IsMember({"lsq", "ld", "lsqprime"}));
  cmd->add_option("--kind", a.kind, "valley or rise")->check(CLI::IsMember({"valley", "rise"}));
  cmd->add_option("--m", a.m, "number of zero labels")->check(CLI::NonNegativeNumber);
  cmd->add_option("--n", a.n, "number of positive labels")->check(CLI::NonNegativeNumber);
  cmd->add_option("--k", a.k, "number of decorations")->check(CLI::NonNegativeNumber);
  cmd->add_option("--touching", a.touching, "touching number r")->check(CLI::NonNegativeNumber);
  cmd->add_option("--alphabet", a.alphabet, "largest positive label (default n)")->check(CLI::NonNegativeNumber);
}

EnumSpec to_spec(const FamilyArgs& a, int max_total) {
  if (a.m + a.n > max_total) {
    throw UsageError("--n: size m + n = " + std::to_string(a.m + a.n) + " exceeds --max-total " +
                     std::to_string(max_total));
  }
  EnumSpec spec;
  spec.family = parse_family(a.family);
  spec.kind = parse_kind(a.kind);
  spec.m = a.m;
  spec.n = a.n;
  spec.k = a.k;
  spec.touching = a.touching;
  spec.alphabet_max = a.alphabet;
  return spec;
}

int report_status(const CheckReport& r) { return r.status == CheckStatus::fail ? kExitFail : 0; }

// Aggregates per-class reports the same way the suite does.
CheckReport summarize(const std::string& name, const std::map<std::string, int>& params,
                      const std::vector<CheckReport>& parts) {
  CheckReport out;
  out.check = name;
  out.params = params;
  int failed = 0;
  for (const auto& r : parts) {
    out.ms += r.ms;
    if (r.status != CheckStatus::fail) continue;
    if (failed++ == 0) {
      out.word = r.word;
      out.lhs = r.lhs;
      out.rhs = r.rhs;
      out.diff = r.diff;
      out.note = r.check + (r.note.empty() ? "" : ": " + r.note);
    }
  }
  out.params["classes"] = static_cast<int>(parts.size());
  out.params["failed"] = failed;
  out.status = failed > 0 ? CheckStatus::fail : CheckStatus::pass;
  return out;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q,t-enumeration of decorated lattice paths and Macdonald operator checks"};
  app.require_subcommand(1);
  int max_total = 7;
  int max_degree_opt = 8;
  bool no_cache = false;
  int jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  app.add_option("--max-total", max_total, "largest m + n accepted by any subcommand")->check(CLI::NonNegativeNumber);
  app.add_option("--max-degree", max_degree_opt, "largest symmetric-function degree")->check(CLI::NonNegativeNumber);
  app.add_flag("--no-cache", no_cache, "bypass the Macdonald disk cache");
  app.add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  FamilyArgs enum_args;
  std::string format = "lines";
  auto* enumerate_cmd = app.add_subcommand("enumerate", "list the paths of a family");
  add_family_options(enumerate_cmd, enum_args);
  enumerate_cmd->add_option("--format", format, "lines or json")->check(CLI::IsMember({"lines", "json"}));

  FamilyArgs gen_args;
  bool dominant = false;
  auto* genpoly_cmd = app.add_subcommand("genpoly", "generating polynomial of a family as JSON");
  add_family_options(genpoly_cmd, gen_args);
  genpoly_cmd->add_flag("--dominant", dominant, "enumerate dominant contents only, skipping the symmetry check");

  std::string word;
  int shift_value = 0;
  bool verify_flag = false;
  bool list_paths = false;
  auto* schedule_cmd = app.add_subcommand("schedule", "closed-form enumerator of one diagonal-word class");
  schedule_cmd->add_option("--word", word, "marked word, e.g. \"1 2 4 | 3 | 1* 4 | 1 1*\"")->required();
  schedule_cmd->add_option("--shift", shift_value, "shift s")->check(CLI::NonNegativeNumber);
  schedule_cmd->add_flag("--verify", verify_flag, "compare against brute-force enumeration");
  schedule_cmd->add_flag("--paths", list_paths, "list the paths built by insertion");

  std::string op;
  std::string arg_text;
  std::string f_text;
  std::string basis_text = "s";
  int sk = 0;
  int sn = 0;
  std::vector<int> mu;
  auto* symfunc_cmd = app.add_subcommand("symfunc", "apply a symmetric-function operator");
  symfunc_cmd->add_option("--op", op, "nabla, delta, delta_prime, theta, enk, macdonald, convert, omega")
      ->required()
      ->check(CLI::IsMember({"nabla", "delta", "delta_prime", "theta", "enk", "macdonald", "convert", "omega"}));
  symfunc_cmd->add_option("--arg", arg_text, "argument, e.g. \"e[3]\" or \"(1 + q)*s[2,1]\"");
  symfunc_cmd->add_option("--f", f_text, "function indexing delta and delta_prime, e.g. \"e[2]\"");
  symfunc_cmd->add_option("--k", sk, "degree k of theta, or index k of E_{n,k}")->check(CLI::NonNegativeNumber);
  symfunc_cmd->add_option("--n", sn, "degree n of E_{n,k}")->check(CLI::NonNegativeNumber);
  symfunc_cmd->add_option("--mu", mu, "partition for macdonald")->delimiter(',');
  symfunc_cmd->add_option("--basis", basis_text, "output basis letter: m, e, h, p, s or H");

  std::string check_name;
  int cm = 0;
  int cn = 1;
  int ck = 0;
  std::optional<int> cr;
  auto* check_cmd = app.add_subcommand("check", "run one catalogued check");
  check_cmd->add_option("--name", check_name, "identity, conjecture, schedule, shift_recursion, square_to_dyck, "
                                              "touching_additivity or square_pipeline")
      ->required();
  check_cmd->add_option("--m", cm)->check(CLI::NonNegativeNumber);
  check_cmd->add_option("--n", cn)->check(CLI::NonNegativeNumber);
  check_cmd->add_option("--k", ck)->check(CLI::NonNegativeNumber);
  check_cmd->add_option("--r", cr)->check(CLI::NonNegativeNumber);

  SuiteOptions suite;
  std::string families_text;
  std::string out_path;
  auto* suite_cmd = app.add_subcommand("suite", "run the verification suite");
  suite_cmd->add_option("--max-size", suite.max_size, "largest m + n in the grid")->check(CLI::NonNegativeNumber);
  suite_cmd->add_option("--max-k", suite.max_k, "largest number of decorations")->check(CLI::NonNegativeNumber);
  suite_cmd->add_option("--families", families_text,
                        "comma-separated subset of schedule,shift,identity,conjecture,audit,pipeline (default all)");
  suite_cmd->add_option("--out", out_path, "report file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    set_max_degree(max_degree_opt);
    if (no_cache) configure_macdonald_cache({false, std::nullopt});

    if (*enumerate_cmd) {
      const EnumSpec spec = to_spec(enum_args, max_total);
      if (format == "lines") {
        enumerate(spec, [](const DecoratedPath& p) { std::cout << to_line(p) << '\n'; });
      } else {
        std::cout << "[";
        bool first = true;
        enumerate(spec, [&](const DecoratedPath& p) {
          std::cout << (first ? "\n" : ",\n") << to_json(p);
          first = false;
        });
        std::cout << (first ? "]\n" : "\n]\n");
      }
      return 0;
    }

    if (*genpoly_cmd) {
      const EnumSpec spec = to_spec(gen_args, max_total);
      const GenPoly g = dominant ? generating_polynomial_by_content(spec) : generating_polynomial(spec);
      std::cout << g.to_json() << '\n';
      return 0;
    }

    if (*schedule_cmd) {
      const MarkedWord z = MarkedWord::parse(word);
      if (z.size() > max_total) throw UsageError("--word: size " + std::to_string(z.size()) + " exceeds --max-total");
      const QTPoly product = schedule_product(z, shift_value);
      std::cout << product.to_string() << '\n';
      if (list_paths) {
        for (const auto& p : insertion_generate(z, shift_value)) std::cout << to_line(p) << '\n';
      }
      if (verify_flag) {
        const QTPoly oracle = qt_enumerator(class_paths_bruteforce(z, shift_value));
        if (oracle == product) {
          std::cout << "match\n";
        } else {
          std::cout << "mismatch: " << oracle.to_string() << '\n';
          return kExitFail;
        }
      }
      return 0;
    }

    if (*symfunc_cmd) {
      const Basis out_basis = parse_basis(basis_text);
      auto need_arg = [&]() {
        if (arg_text.empty()) throw UsageError("--arg is required for --op " + op);
        return parse_symfunc(arg_text);
      };
      SymFunc result;
      if (op == "nabla") {
        result = nabla(need_arg());
      } else if (op == "delta" || op == "delta_prime") {
        if (f_text.empty()) throw UsageError("--f is required for --op " + op);
        const SymFunc f = parse_symfunc(f_text);
        result = op == "delta" ? delta(f, need_arg()) : delta_prime(f, need_arg());
      } else if (op == "theta") {
        result = theta(sk, need_arg());
      } else if (op == "enk") {
        result = e_nk(sn, sk);
      } else if (op == "macdonald") {
        if (mu.empty()) throw UsageError("--mu is required for --op macdonald");
        result = macdonald(Partition(mu));
      } else if (op == "omega") {
        result = omega(need_arg());
      } else {
        result = need_arg();
      }
      std::cout << convert(result, out_basis).to_string() << '\n';
      return 0;
    }

    if (*check_cmd) {
      if (cm + cn > max_total) throw UsageError("--n: size m + n exceeds --max-total");
      CheckReport r;
      const auto& ids = identity_names();
      const auto& conj = conjecture_names();
      const std::map<std::string, int> params{{"m", cm}, {"n", cn}, {"k", ck}};
      if (std::find(ids.begin(), ids.end(), check_name) != ids.end()) {
        r = check_identity(check_name, cn, ck);
      } else if (std::find(conj.begin(), conj.end(), check_name) != conj.end()) {
        r = check_conjecture(check_name, cm, cn, ck, cr);
      } else if (check_name == "schedule") {
        r = summarize("schedule", params, check_schedule(cn, ck, cm));
      } else if (check_name == "shift_recursion") {
        r = summarize("shift_recursion", params, check_shift_recursion(cn, ck, cm));
      } else if (check_name == "square_to_dyck") {
        if (!cr) throw UsageError("--r is required for square_to_dyck");
        r = check_square_to_dyck(cm, cn, ck, *cr);
      } else if (check_name == "touching_additivity") {
        r = check_touching_additivity(cm, cn, ck);
      } else if (check_name == "square_pipeline") {
        r = check_square_pipeline(cm, cn, ck);
      } else {
        throw UsageError("--name: unknown check '" + check_name + "'");
      }
      std::cout << r.to_json() << '\n';
      return report_status(r);
    }

    if (*suite_cmd) {
      if (suite.max_size > max_total) throw UsageError("--max-size exceeds --max-total");
      suite.families = families_text.empty() ? suite_families() : split_list(families_text);
      suite.jobs = jobs;
      SuiteSummary summary;
      if (out_path.empty()) {
        summary = run_suite(suite, std::cout);
      } else {
        std::ofstream out(out_path);
        if (!out) throw std::ios_base::failure("cannot open " + out_path);
        summary = run_suite(suite, out);
        std::cout << summary.to_json() << '\n';
      }
      return summary.ok() ? 0 : kExitFail;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidParams& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DegreeTooLarge& e) {
    std::cerr << "usage error: " << e.what() << " (raise --max-degree)\n";
    return kExitUsage;
  } catch (const IndexOutOfRange& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return 0;
}
