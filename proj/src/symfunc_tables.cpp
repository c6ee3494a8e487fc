#include "symfunc_tables.hpp"

#include <algorithm>
#include <atomic>
#include <memory>
#include <mutex>
#include <numeric>

#include "qtdelta/errors.hpp"

namespace qtdelta {

namespace {

std::atomic<int> g_max_degree{8};

}  // namespace

int max_degree() { return g_max_degree.load(); }

void set_max_degree(int n) {
  if (n < 0) throw InvalidParams("maximum degree must be non-negative");
  g_max_degree.store(n);
}

namespace detail {

namespace {

enum class Fill { zero_one, any, single };

// Matrices with row sums `rows` and column sums `cols` under the fill rule.
long long count_fillings(const std::vector<int>& rows, std::vector<int>& cols, std::size_t i, Fill fill) {
  if (i == rows.size()) {
    return std::all_of(cols.begin(), cols.end(), [](int c) { return c == 0; }) ? 1 : 0;
  }
  const int r = rows[i];
  long long total = 0;
  if (fill == Fill::single) {
    for (int& c : cols) {
      if (c < r) continue;
      c -= r;
      total += count_fillings(rows, cols, i + 1, fill);
      c += r;
    }
    return total;
  }
  // Distribute r over columns j.., recursing into row i + 1 when done.
  auto spread = [&](auto&& self, std::size_t j, int left) -> long long {
    if (left == 0) return count_fillings(rows, cols, i + 1, fill);
    if (j == cols.size()) return 0;
    long long sum = 0;
    const int top = std::min(fill == Fill::zero_one ? 1 : left, cols[j]);
    for (int x = top; x >= 0; --x) {
      cols[j] -= x;
      sum += self(self, j + 1, left - x);
      cols[j] += x;
    }
    return sum;
  };
  total = spread(spread, 0, r);
  return total;
}

RationalMatrix fill_matrix(const std::vector<Partition>& parts, Fill fill) {
  RationalMatrix out(parts.size(), std::vector<Rational>(parts.size()));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = 0; j < parts.size(); ++j) {
      std::vector<int> cols = parts[j].parts;
      out[i][j] = Rational(static_cast<long>(count_fillings(parts[i].parts, cols, 0, fill)));
    }
  }
  return out;
}

// Jacobi-Trudi: s_lambda = det(h_{lambda_i - i + j}).
RationalMatrix schur_matrix(const DegreeTables& t) {
  const RationalMatrix& h = t.to_m.at(Basis::homogeneous);
  RationalMatrix out(t.parts.size(), std::vector<Rational>(t.parts.size()));
  for (std::size_t a = 0; a < t.parts.size(); ++a) {
    const Partition& lambda = t.parts[a];
    const int l = lambda.length();
    std::vector<int> perm(static_cast<std::size_t>(l));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<int> idx;
      bool ok = true;
      for (int i = 0; i < l; ++i) {
        const int v = lambda[i] - i + perm[static_cast<std::size_t>(i)];
        if (v < 0) {
          ok = false;
          break;
        }
        idx.push_back(v);
      }
      if (!ok) continue;
      int inversions = 0;
      for (int i = 0; i < l; ++i) {
        for (int j = i + 1; j < l; ++j) inversions += perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)] ? 1 : 0;
      }
      const std::size_t row = t.index.at(Partition(idx));
      for (std::size_t j = 0; j < t.parts.size(); ++j) {
        if (inversions % 2 == 0) {
          out[a][j] += h[row][j];
        } else {
          out[a][j] -= h[row][j];
        }
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

std::unique_ptr<DegreeTables> build(int degree) {
  auto t = std::make_unique<DegreeTables>();
  t->parts = partitions_of(degree);
  for (std::size_t i = 0; i < t->parts.size(); ++i) t->index[t->parts[i]] = i;
  RationalMatrix identity(t->parts.size(), std::vector<Rational>(t->parts.size()));
  for (std::size_t i = 0; i < t->parts.size(); ++i) identity[i][i] = 1;
  t->to_m[Basis::monomial] = identity;
  t->to_m[Basis::elementary] = fill_matrix(t->parts, Fill::zero_one);
  t->to_m[Basis::homogeneous] = fill_matrix(t->parts, Fill::any);
  t->to_m[Basis::power] = fill_matrix(t->parts, Fill::single);
  t->to_m[Basis::schur] = schur_matrix(*t);
  for (const auto& [b, m] : t->to_m) t->from_m[b] = invert(m);
  return t;
}

}  // namespace

void check_degree(int degree) {
  if (degree > max_degree()) {
    throw DegreeTooLarge("degree " + std::to_string(degree) + " exceeds the maximum " + std::to_string(max_degree()));
  }
}

const DegreeTables& tables(int degree) {
  check_degree(degree);
  static std::mutex mu;
  static std::map<int, std::unique_ptr<DegreeTables>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[degree];
  if (!slot) slot = build(degree);
  return *slot;
}

RationalMatrix invert(const RationalMatrix& a) {
  const std::size_t n = a.size();
  RationalMatrix m = a;
  RationalMatrix inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::logic_error("singular transition matrix");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational scale = 1 / m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] *= scale;
      inv[col][j] *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace detail

}  // namespace qtdelta
