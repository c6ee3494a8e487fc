#pragma once

#include "qtdelta/qt_poly.hpp"

namespace qtdelta {

/// [n]_q = 1 + q + ... + q^{n-1}; zero for n = 0.
QTPoly q_analogue(int n);
/// [n]_t, the same in the variable t.
QTPoly t_analogue(int n);
/// [n]_q! = [1]_q [2]_q ... [n]_q.
QTPoly q_factorial(int n);
/// Gaussian binomial; zero when k < 0 or k > n (including n < 0).
QTPoly q_binomial(int n, int k);
/// (x; q)_n = (1 - x)(1 - xq)...(1 - xq^{n-1}).
QTPoly q_pochhammer(const QTPoly& x, int n);

}  // namespace qtdelta
