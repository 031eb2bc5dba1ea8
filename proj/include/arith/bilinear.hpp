#pragma once

#include "arith/bigint.hpp"
#include "arith/lattice.hpp"
#include "arith/polynomial.hpp"

#include <cstddef>

namespace arith {

/// a*x1*x2 + b1*x1 + b2*x2 + c with a >= 1.
struct BilinearForm {
  BigInt a, b1, b2, c;

  /// Reads the four coefficients off a two-variable square-free polynomial.
  /// Throws std::invalid_argument if f has another shape or a < 1.
  static BilinearForm from_polynomial(const Polynomial& f);

  BigInt operator()(const BigInt& x1, const BigInt& x2) const { return a * x1 * x2 + b1 * x1 + b2 * x2 + c; }
};

struct PlusThresholds {
  BigInt d1_plus;
  BigInt d2_plus;
};

/// Least coordinates at which the linear coefficients of the shifted form
/// become positive: d1+ = max(1, ceil((1 - b2)/a)), d2+ = max(1, ceil((1 - b1)/a)).
PlusThresholds plus_thresholds(const BilinearForm& form);

/// Closed-form minimal antichain of the feasible region of a bilinear form:
/// points d >= (1,1) with a*d1 + b2 >= 1, a*d2 + b1 >= 1 and form(d) >= 0.
/// The staircase is enumerated column by column; `max_enumeration` bounds its
/// length and a ResourceLimitError is thrown beyond it.
MinimalSet min_cone_2d(const BilinearForm& form, std::size_t max_enumeration = 10'000'000);

/// Univariate case a*x + c, a >= 1: {max(1, ceil(-c/a))}.
MinimalSet min_cone_1d(const BigInt& a, const BigInt& c);

}  // namespace arith
