#include "qtdelta/q_analogues.hpp"

#include <vector>

namespace qtdelta {

QTPoly q_analogue(int n) {
  std::vector<QTPoly::Term> terms;
  for (int i = 0; i < n; ++i) terms.push_back({{i, 0}, 1});
  return QTPoly::from_terms(std::move(terms));
}

QTPoly t_analogue(int n) { return q_analogue(n).swap_qt(); }

QTPoly q_factorial(int n) {
  QTPoly out(1L);
  for (int k = 2; k <= n; ++k) out *= q_analogue(k);
  return out;
}

QTPoly q_binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return {};
  if (k > n - k) k = n - k;
  // Row-by-row Pascal: [i, j] = [i-1, j-1] + q^j [i-1, j].
  std::vector<QTPoly> row(static_cast<std::size_t>(k) + 1);
  row[0] = QTPoly(1L);
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) {
      row[j] = row[j - 1] + row[j].shifted(j, 0);
    }
  }
  return row[static_cast<std::size_t>(k)];
}

QTPoly q_pochhammer(const QTPoly& x, int n) {
  QTPoly out(1L);
  for (int k = 0; k < n; ++k) out *= QTPoly(1L) - x.shifted(k, 0);
  return out;
}

}  // namespace qtdelta
