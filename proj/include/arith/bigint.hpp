#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace arith {

using BigInt = mpz_class;

/// Exact ceiling of num/den. den must be nonzero.
BigInt ceil_div(const BigInt& num, const BigInt& den);

/// Exact floor of num/den. den must be nonzero.
BigInt floor_div(const BigInt& num, const BigInt& den);

/// Non-negative gcd; gcd(0, 0) = 0.
BigInt gcd(const BigInt& a, const BigInt& b);

BigInt binomial(unsigned long n, unsigned long k);

std::optional<std::int64_t> to_int64(const BigInt& v);

inline std::string to_string(const BigInt& v) { return v.get_str(); }

}  // namespace arith
