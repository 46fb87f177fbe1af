#pragma once

#include <stdexcept>

namespace linefiber {

// C(n, 2) with the convention C(n, 2) = 0 for every n < 2, negative included.
inline long long binom2(long long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

// ceil(a / b) for b > 0.
inline long long ceil_div(long long a, long long b) {
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

inline int euler_phi(int m) {
  if (m < 1) throw std::invalid_argument("euler_phi: argument must be positive");
  int result = m;
  int n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    result -= result / p;
    while (n % p == 0) n /= p;
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace linefiber
