#include "qtdelta/partition.hpp"

#include <algorithm>
#include <functional>

namespace qtdelta {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  while (!parts.empty() && parts.back() <= 0) parts.pop_back();
}

int Partition::size() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

int Partition::conjugate_at(int j) const {
  int c = 0;
  for (int p : parts) {
    if (p > j) ++c;
  }
  return c;
}

Partition Partition::conjugate() const {
  Partition out;
  const int width = parts.empty() ? 0 : parts.front();
  for (int j = 0; j < width; ++j) out.parts.push_back(conjugate_at(j));
  return out;
}

int Partition::n_stat() const {
  int s = 0;
  for (int i = 0; i < length(); ++i) s += i * parts[static_cast<std::size_t>(i)];
  return s;
}

long long Partition::z() const {
  long long out = 1;
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const long long mult = static_cast<long long>(j - i);
    for (long long r = 1; r <= mult; ++r) out *= r * parts[i];
    i = j;
  }
  return out;
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts[i]);
  }
  return out + ")";
}

namespace {
void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    Partition p;
    p.parts = cur;
    out.push_back(std::move(p));
    return;
  }
  for (int v = std::min(remaining, max_part); v >= 1; --v) {
    cur.push_back(v);
    partitions_rec(remaining - v, v, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

}  // namespace qtdelta
