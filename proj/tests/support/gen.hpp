#pragma once

// Hand-rolled generators for the property suites. Every generator draws from
// a caller-owned engine so a failing case can be replayed from its seed.

#include "arith/bilinear.hpp"
#include "arith/lattice.hpp"
#include "arith/matrix.hpp"
#include "arith/polynomial.hpp"

#include <cstdint>
#include <random>

namespace gen {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

// Sparse polynomial, any shape: up to `terms` monomials with exponents <= max_exp.
inline arith::Polynomial polynomial(Rng& rng, std::size_t n, int terms, unsigned max_exp, long coef) {
  arith::Polynomial f(n);
  int k = static_cast<int>(uniform(rng, 0, terms));
  for (int t = 0; t < k; ++t) {
    arith::Monomial m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<arith::Exponent>(uniform(rng, 0, max_exp));
    f.add_term(m, uniform(rng, -coef, coef));
  }
  return f;
}

// Square-free, dominated by x1*...*xn. Each non-leading monomial gets a
// coefficient in [lo, hi] (zero allowed); the leading one in [lead_lo, lead_hi].
inline arith::Polynomial dominated(Rng& rng, std::size_t n, long lo, long hi, long lead_lo, long lead_hi) {
  arith::Polynomial f(n);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 0; mask <= full; ++mask)
    f.add_term(arith::Monomial::from_mask(n, mask), mask == full ? uniform(rng, lead_lo, lead_hi) : uniform(rng, lo, hi));
  return f;
}

inline arith::LatticePoint point(Rng& rng, std::size_t n, long lo, long hi) {
  arith::LatticePoint p = arith::LatticePoint::zeros(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = uniform(rng, lo, hi);
  return p;
}

inline arith::BilinearForm bilinear(Rng& rng, long a_hi, long b) {
  return {uniform(rng, 1, a_hi), uniform(rng, -b, b), uniform(rng, -b, b), uniform(rng, -b, b)};
}

// Non-negative entries, zero diagonal; zero rows are possible.
inline arith::IntegerMatrix zero_diagonal(Rng& rng, std::size_t n, long max_entry) {
  arith::IntegerMatrix L(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) L(i, j) = uniform(rng, 0, max_entry);
  return L;
}

}  // namespace gen
