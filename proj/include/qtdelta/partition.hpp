#pragma once

#include <compare>
#include <string>
#include <vector>

namespace qtdelta {

/// Integer partition with weakly decreasing positive parts. Cells (i, j) are
/// 0-based with row i of length parts[i].
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  /// Sorts and drops zeros.
  explicit Partition(std::vector<int> p);

  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  bool empty() const { return parts.empty(); }
  int operator[](int i) const { return i < length() ? parts[static_cast<std::size_t>(i)] : 0; }
  Partition conjugate() const;

  int arm(int i, int j) const { return (*this)[i] - j - 1; }
  int leg(int i, int j) const { return conjugate_at(j) - i - 1; }
  int coarm(int /*i*/, int j) const { return j; }
  int coleg(int i, int /*j*/) const { return i; }
  /// Sum over parts of (i - 1) lambda_i, 1-based.
  int n_stat() const;
  /// Length of column j.
  int conjugate_at(int j) const;

  /// z_lambda = prod i^{m_i} m_i!.
  long long z() const;

  std::string to_string() const;

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;
};

/// Partitions of n in reverse lexicographic order: (n), (n-1, 1), ..., (1^n).
std::vector<Partition> partitions_of(int n);

}  // namespace qtdelta
