#pragma once

// Shared helpers for the unit tests: random generators and small builders.

#include <random>
#include <vector>

#include "mckay/cyclotomic.hpp"
#include "mckay/linalg.hpp"

namespace mckay::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eed1234u);
  return engine;
}

inline Rational random_rational(int span = 5, int max_den = 4) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, max_den);
  Rational q(num(rng()), den(rng()));
  q.canonicalize();
  return q;
}

/// Random element of Q(zeta_m) with roughly `density` of its coordinates nonzero.
inline CycNum random_cyc(unsigned m, double density = 0.7) {
  std::bernoulli_distribution keep(density);
  std::vector<Rational> coeffs(euler_phi(m));
  for (auto& c : coeffs)
    if (keep(rng())) c = random_rational();
  return CycNum(m, std::move(coeffs));
}

inline CycNum random_nonzero_cyc(unsigned m) {
  for (;;) {
    CycNum a = random_cyc(m);
    if (!a.is_zero()) return a;
  }
}

inline CycMatrix random_matrix(std::size_t rows, std::size_t cols, unsigned m,
                               double density = 0.5) {
  std::bernoulli_distribution keep(density);
  CycMatrix a(rows, cols, m);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (keep(rng())) a(i, j) = random_cyc(m, 0.5);
  return a;
}

inline CycMatrix diag(std::initializer_list<CycNum> entries) {
  const std::size_t n = entries.size();
  const unsigned m = entries.begin()->conductor();
  CycMatrix d(n, n, m);
  std::size_t i = 0;
  for (const auto& e : entries) {
    d(i, i) = e;
    ++i;
  }
  return d;
}

inline CycNum z(unsigned m, long k = 1) { return CycNum::zeta(m, k); }
inline CycNum q(unsigned m, long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return CycNum(m, r);
}

}  // namespace mckay::testing
