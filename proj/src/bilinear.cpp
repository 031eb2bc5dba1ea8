#include "arith/bilinear.hpp"

#include "arith/errors.hpp"

#include <cassert>
#include <stdexcept>

namespace arith {

BilinearForm BilinearForm::from_polynomial(const Polynomial& f) {
  if (f.num_vars() != 2) throw std::invalid_argument("BilinearForm: expected two variables");
  BilinearForm form;
  for (const auto& [m, c] : f.terms()) {
    if (m[0] > 1 || m[1] > 1) throw std::invalid_argument("BilinearForm: polynomial is not square-free");
    if (m[0] == 1 && m[1] == 1)
      form.a = c;
    else if (m[0] == 1)
      form.b1 = c;
    else if (m[1] == 1)
      form.b2 = c;
    else
      form.c = c;
  }
  if (form.a < 1) throw std::invalid_argument("BilinearForm: leading coefficient must be >= 1");
  return form;
}

PlusThresholds plus_thresholds(const BilinearForm& form) {
  if (form.a < 1) throw std::invalid_argument("plus_thresholds: a must be >= 1");
  BigInt d1 = ceil_div(1 - form.b2, form.a);
  BigInt d2 = ceil_div(1 - form.b1, form.a);
  return {d1 < 1 ? BigInt(1) : d1, d2 < 1 ? BigInt(1) : d2};
}

MinimalSet min_cone_2d(const BilinearForm& form, std::size_t max_enumeration) {
  const auto [d1p, d2p] = plus_thresholds(form);
  const BigInt& a = form.a;
  MinimalSet out;
  if (form(d1p, d2p) >= 0) {
    out.add(LatticePoint(std::vector<BigInt>{d1p, d2p}));
    return out;
  }

  // The corner is infeasible, so the staircase runs over columns d1p..last,
  // closed off by the single point (corner, d2p) on the bottom row.
  const BigInt den = a * d2p + form.b1;
  assert(den >= 1);
  const BigInt num = -(form.c + form.b2 * d2p);
  const BigInt last = floor_div(num, den);
  BigInt corner = ceil_div(num, den);
  if (corner < d1p) corner = d1p;

  if (last >= d1p && BigInt(last - d1p) >= BigInt(static_cast<unsigned long>(max_enumeration)))
    throw ResourceLimitError("min_cone_2d: staircase longer than " + std::to_string(max_enumeration), out);

  for (BigInt d = d1p; d <= last; ++d) {
    const BigInt col_den = a * d + form.b2;
    assert(col_den >= 1);
    BigInt e = ceil_div(-(form.c + form.b1 * d), col_den);
    if (e < d2p) e = d2p;
    out.add(LatticePoint(std::vector<BigInt>{d, e}));
  }
  out.add(LatticePoint(std::vector<BigInt>{corner, d2p}));
  return out;
}

MinimalSet min_cone_1d(const BigInt& a, const BigInt& c) {
  if (a < 1) throw std::invalid_argument("min_cone_1d: a must be >= 1");
  BigInt x = ceil_div(-c, a);
  if (x < 1) x = 1;
  return MinimalSet{LatticePoint(std::vector<BigInt>{x})};
}

}  // namespace arith
