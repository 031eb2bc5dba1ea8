#include "arith/bigint.hpp"

#include <stdexcept>

namespace arith {

BigInt ceil_div(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("ceil_div: division by zero");
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

BigInt floor_div(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("floor_div: division by zero");
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::optional<std::int64_t> to_int64(const BigInt& v) {
  if (!v.fits_slong_p()) return std::nullopt;
  static_assert(sizeof(long) == sizeof(std::int64_t));
  return static_cast<std::int64_t>(v.get_si());
}

}  // namespace arith
