#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <thread>

#include <unistd.h>

#include "qtdelta/errors.hpp"
#include "qtdelta/symfunc.hpp"
#include "symfunc_tables.hpp"

namespace qtdelta {

MacdonaldConstants constants(const Partition& mu) {
  MacdonaldConstants c;
  c.T = QTPoly(1L);
  c.Pi = QTPoly(1L);
  c.w = QTPoly(1L);
  for (int i = 0; i < mu.length(); ++i) {
    for (int j = 0; j < mu[i]; ++j) {
      c.B += QTPoly::monomial(mu.coarm(i, j), mu.coleg(i, j));
      c.T = c.T.shifted(mu.coarm(i, j), mu.coleg(i, j));
      if (i != 0 || j != 0) c.Pi *= QTPoly(1L) - QTPoly::monomial(mu.coarm(i, j), mu.coleg(i, j));
      const int a = mu.arm(i, j);
      const int l = mu.leg(i, j);
      c.w *= (QTPoly::monomial(a, 0) - QTPoly::monomial(0, l + 1)) * (QTPoly::monomial(0, l) - QTPoly::monomial(a + 1, 0));
    }
  }
  const QTPoly M = (QTPoly(1L) - QTPoly::q()) * (QTPoly(1L) - QTPoly::t());
  c.D = M * c.B - QTPoly(1L);
  return c;
}

namespace {

constexpr const char* kCacheHeader = "qtdelta-macdonald 1";

struct Cell {
  int row;
  int col;
};

// Combinatorial formula over fillings of the diagram (row 0 at the bottom).
// inv = #attacking inversions - sum of arms over descents; maj = sum of (leg + 1) over descents.
SymFunc compute_macdonald(const Partition& mu) {
  const int n = mu.size();
  std::vector<Cell> cells;  // reading order: top row first, left to right
  for (int i = mu.length() - 1; i >= 0; --i) {
    for (int j = 0; j < mu[i]; ++j) cells.push_back({i, j});
  }
  auto position = [&](int row, int col) {
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (cells[k].row == row && cells[k].col == col) return static_cast<int>(k);
    }
    return -1;
  };
  struct Descent {
    int cell;
    int south;
    int leg_plus_one;
    int arm;
  };
  std::vector<Descent> descents;
  std::vector<std::pair<int, int>> attacks;
  for (std::size_t u = 0; u < cells.size(); ++u) {
    const Cell cu = cells[u];
    if (cu.row > 0) {
      descents.push_back({static_cast<int>(u), position(cu.row - 1, cu.col), mu.leg(cu.row, cu.col) + 1, mu.arm(cu.row, cu.col)});
    }
    for (std::size_t v = u + 1; v < cells.size(); ++v) {
      const Cell cv = cells[v];
      if ((cv.row == cu.row) || (cv.row == cu.row - 1 && cv.col < cu.col)) {
        attacks.emplace_back(static_cast<int>(u), static_cast<int>(v));
      }
    }
  }
  SymFunc out(Basis::monomial, n);
  for (const Partition& lambda : partitions_of(n)) {
    std::vector<int> word;
    for (int k = 0; k < lambda.length(); ++k) word.insert(word.end(), static_cast<std::size_t>(lambda[k]), k + 1);
    std::map<std::pair<int, int>, long> counts;
    do {
      int inv = 0;
      int maj = 0;
      for (const auto& [u, v] : attacks) inv += word[static_cast<std::size_t>(u)] > word[static_cast<std::size_t>(v)] ? 1 : 0;
      for (const Descent& d : descents) {
        if (word[static_cast<std::size_t>(d.cell)] > word[static_cast<std::size_t>(d.south)]) {
          inv -= d.arm;
          maj += d.leg_plus_one;
        }
      }
      ++counts[{inv, maj}];
    } while (std::next_permutation(word.begin(), word.end()));
    QTPoly coeff;
    for (const auto& [e, c] : counts) coeff += QTPoly::monomial(e.first, e.second, Rational(c));
    out.add(lambda, coeff);
  }
  return out;
}

std::shared_mutex g_cache_mutex;
MacdonaldCacheConfig g_cache_config;
std::map<Partition, SymFunc> g_memory;

std::filesystem::path default_directory() {
  if (const char* dir = std::getenv("QTDELTA_CACHE_DIR"); dir != nullptr && *dir != '\0') return dir;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg != nullptr && *xdg != '\0') {
    return std::filesystem::path(xdg) / "qtdelta";
  }
  if (const char* home = std::getenv("HOME"); home != nullptr && *home != '\0') {
    return std::filesystem::path(home) / ".cache" / "qtdelta";
  }
  return std::filesystem::temp_directory_path() / "qtdelta";
}

std::string file_name(const Partition& mu) {
  std::string name = "macdonald";
  for (int p : mu.parts) name += "_" + std::to_string(p);
  return name + ".txt";
}

std::string serialize(const Partition& mu, const SymFunc& f) {
  std::ostringstream out;
  out << kCacheHeader << "\npartition " << mu.to_string() << "\nbasis monomial\n";
  for (const Partition& lambda : partitions_of(mu.size())) {
    out << lambda.to_string() << ": " << f.coeff(lambda).as_polynomial().to_string() << "\n";
  }
  return out.str();
}

std::optional<SymFunc> read_cache_file(const std::filesystem::path& path, const Partition& mu) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line) || line != kCacheHeader) return std::nullopt;
  if (!std::getline(in, line) || line != "partition " + mu.to_string()) return std::nullopt;
  if (!std::getline(in, line) || line != "basis monomial") return std::nullopt;
  SymFunc out(Basis::monomial, mu.size());
  for (const Partition& lambda : partitions_of(mu.size())) {
    if (!std::getline(in, line)) return std::nullopt;
    const std::string prefix = lambda.to_string() + ": ";
    if (line.rfind(prefix, 0) != 0) return std::nullopt;
    try {
      out.add(lambda, QTPoly::parse(line.substr(prefix.size())));
    } catch (const Error&) {
      return std::nullopt;
    }
  }
  return out;
}

void write_cache_file(const std::filesystem::path& dir, const Partition& mu, const SymFunc& f) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return;
  const std::filesystem::path target = dir / file_name(mu);
  std::ostringstream suffix;
  suffix << ".tmp." << ::getpid() << "." << std::this_thread::get_id();
  const std::filesystem::path tmp = target.string() + suffix.str();
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << serialize(mu, f);
    if (!out) return;
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace

void configure_macdonald_cache(const MacdonaldCacheConfig& config) {
  std::unique_lock lock(g_cache_mutex);
  g_cache_config = config;
}

std::filesystem::path macdonald_cache_directory() {
  std::shared_lock lock(g_cache_mutex);
  return g_cache_config.directory.value_or(default_directory()) / "v1";
}

SymFunc macdonald(const Partition& mu) {
  detail::check_degree(mu.size());
  MacdonaldCacheConfig config;
  {
    std::shared_lock lock(g_cache_mutex);
    if (auto it = g_memory.find(mu); it != g_memory.end()) return it->second;
    config = g_cache_config;
  }
  const std::filesystem::path dir = config.directory.value_or(default_directory()) / "v1";
  std::optional<SymFunc> found;
  if (config.enabled) found = read_cache_file(dir / file_name(mu), mu);
  if (!found) {
    found = compute_macdonald(mu);
    if (config.enabled) write_cache_file(dir, mu, *found);
  }
  std::unique_lock lock(g_cache_mutex);
  g_memory.emplace(mu, *found);
  return *found;
}

}  // namespace qtdelta
