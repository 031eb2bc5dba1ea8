#pragma once

#include "arith/bigint.hpp"
#include "arith/lattice.hpp"
#include "arith/polynomial.hpp"
#include "arith/solver.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace arith {

/// Dense square matrix of big integers, row-major.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  explicit IntegerMatrix(std::size_t n) : n_(n), data_(n * n) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  /// Reads "n" followed by n rows of n integers (whitespace separated).
  static IntegerMatrix parse(std::istream& in);
  static IntegerMatrix diagonal(const LatticePoint& d);

  std::size_t size() const { return n_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  IntegerMatrix transpose() const;
  /// Rows and columns listed in `keep`, in order.
  IntegerMatrix submatrix(const std::vector<std::size_t>& keep) const;
  bool is_symmetric() const;

  friend IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<BigInt> data_;
};

std::string to_string(const IntegerMatrix& m);

/// Fraction-free (Bareiss) determinant; det of the 0x0 matrix is 1.
BigInt determinant(const IntegerMatrix& m);

/// Rank by fraction-free elimination.
std::size_t rank(const IntegerMatrix& m);

/// Adjugate: adj(M)(i, j) = (-1)^(i+j) det(M without row j, column i).
IntegerMatrix adjugate(const IntegerMatrix& m);

/// det(Diag(x1..xn) - L) by principal-minor expansion: the coefficient of
/// prod_{i in T} x_i is (-1)^(n-|T|) det(L restricted to the complement of T).
/// Throws std::invalid_argument above `max_dim`.
Polynomial char_like_polynomial(const IntegerMatrix& L, std::size_t max_dim = 16);

/// Primitive positive generator of ker(M) for a rank n-1 matrix, read off a
/// nonzero column of adj(M). Throws KernelError.
LatticePoint kernel_vector(const IntegerMatrix& M);

struct MatrixStructure {
  LatticePoint d;
  LatticePoint r;
  friend bool operator==(const MatrixStructure&, const MatrixStructure&) = default;
};

struct MatrixReport {
  Polynomial polynomial;
  SolveReport solve;
  std::vector<MatrixStructure> structures;
  /// |K| for each entry of `structures`.
  std::vector<BigInt> critical_sizes;
  std::vector<std::string> warnings;
  /// Index into `structures` of (L*1, 1), when it is among them.
  std::optional<std::size_t> canonical;
};

/// Throws PreconditionError unless L is square, non-negative, zero-diagonal
/// and has no zero row or column.
void validate_structure_matrix(const IntegerMatrix& L);

/// True if the directed graph with an edge i -> j for every L(i, j) != 0 is
/// strongly connected.
bool is_irreducible_matrix(const IntegerMatrix& L);

/// All (d, r) with (Diag(d) - L) r^t = 0, d, r positive and gcd(r) = 1,
/// obtained by solving f_L and recovering r from L itself. For reducible L a
/// structure of f_L may have no positive kernel vector; it is skipped with a
/// warning.
MatrixReport matrix_structures(const IntegerMatrix& L, const SolverOptions& options = {});

}  // namespace arith
