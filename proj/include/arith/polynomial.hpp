#pragma once

#include "arith/bigint.hpp"
#include "arith/lattice.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace arith {

using Exponent = std::uint32_t;

/// Exponent vector of a monomial, one slot per ambient variable.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t n) : exps_(n, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  static Monomial one(std::size_t n) { return Monomial(n); }
  static Monomial variable(std::size_t n, std::size_t i);
  /// Product of the variables whose bit is set in `mask`.
  static Monomial from_mask(std::size_t n, std::uint64_t mask);

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }

  Exponent degree() const;
  bool is_constant() const { return degree() == 0; }
  /// True if this monomial divides `other`.
  bool divides(const Monomial& other) const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

Monomial operator*(const Monomial& a, const Monomial& b);

/// Graded lexicographic, descending: higher total degree first, ties broken
/// by the larger exponent of x1, then x2, ... The constant sorts last.
struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over Z in a fixed number of variables.
/// Zero coefficients are never stored, so term-map equality is polynomial
/// equality.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, BigInt, GradedLexGreater>;

  Polynomial() = default;
  explicit Polynomial(std::size_t n) : n_(n) {}

  static Polynomial constant(std::size_t n, const BigInt& c);
  static Polynomial variable(std::size_t n, std::size_t i);

  std::size_t num_vars() const { return n_; }
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  BigInt coefficient(const Monomial& m) const;
  BigInt constant_term() const;
  Exponent degree() const;

  /// Adds c * m, dropping the term if it cancels.
  void add_term(const Monomial& m, const BigInt& c);

  /// Indices of variables that occur with positive exponent in some term.
  std::vector<std::size_t> used_variables() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const BigInt& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const BigInt& c) { return a *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  void check_same_arity(const Polynomial& other) const;

  std::size_t n_ = 0;
  TermMap terms_;
};

BigInt evaluate(const Polynomial& f, const LatticePoint& p);

/// Formal derivative with respect to variable s (0-based). Arity unchanged.
Polynomial partial_derivative(const Polynomial& f, std::size_t s);

/// f(X + d), by iterated single-variable binomial shifts.
Polynomial shift(const Polynomial& f, const LatticePoint& d);

/// Coefficient of the degree-one monomial x_s.
BigInt linear_coefficient(const Polynomial& f, std::size_t s);

/// Substitutes x_var = value and removes that variable slot (arity n - 1).
Polynomial substitute(const Polynomial& f, std::size_t var, const BigInt& value);

/// Re-indexes f onto the listed variables, in order. Every variable not in
/// `keep` must be absent from f.
Polynomial restrict_variables(const Polynomial& f, std::span<const std::size_t> keep);

/// gcd of all coefficients (0 for the zero polynomial).
BigInt content(const Polynomial& f);

struct DominanceReport {
  bool is_dominated = false;
  std::optional<Monomial> dominant;
  bool is_square_free = false;
  bool dominant_is_full_product = false;
  BigInt leading_coefficient;  // coefficient of the dominant monomial, 0 if none
  std::vector<std::size_t> unused_variables;
};

DominanceReport analyze(const Polynomial& f);

/// How "all non-constant coefficients positive" treats monomials that are
/// absent from f (coefficient zero).
enum class PositivityMode {
  /// Every monomial the shift can create (every nonzero divisor of a
  /// monomial of f) must carry a positive coefficient, plus every x_s.
  Strict,
  /// Only the monomials present in f, plus every x_s, must be positive.
  Lenient,
};

struct PositivityProfile {
  bool all_nonconstant_positive = false;
  /// Variables s with linear_coefficient(f, s) == 0.
  std::vector<std::size_t> zero_linear;
  /// Non-constant monomials that break positivity, in print order.
  std::vector<Monomial> nonpositive;
  BigInt constant_term;
};

PositivityProfile positivity_profile(const Polynomial& f, PositivityMode mode = PositivityMode::Strict);

}  // namespace arith
