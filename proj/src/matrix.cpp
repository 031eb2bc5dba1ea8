#include "arith/matrix.hpp"

#include "arith/errors.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace arith {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) : n_(rows.size()) {
  data_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) throw std::invalid_argument("IntegerMatrix: rows must form a square");
    for (long v : row) data_.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::parse(std::istream& in) {
  std::size_t index = 0;
  std::string tok;
  auto next = [&]() -> BigInt {
    if (!(in >> tok)) throw ParseError("matrix: unexpected end of input", index);
    BigInt v;
    if (v.set_str(tok, 10) != 0) throw ParseError("matrix: not an integer '" + tok + "'", index);
    ++index;
    return v;
  };
  BigInt n_big = next();
  if (n_big < 0 || !n_big.fits_ulong_p()) throw ParseError("matrix: bad dimension", 0);
  IntegerMatrix m(n_big.get_ui());
  for (std::size_t i = 0; i < m.n_; ++i)
    for (std::size_t j = 0; j < m.n_; ++j) m(i, j) = next();
  if (in >> tok) throw ParseError("matrix: trailing data '" + tok + "'", index);
  return m;
}

IntegerMatrix IntegerMatrix::diagonal(const LatticePoint& d) {
  IntegerMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntegerMatrix IntegerMatrix::submatrix(const std::vector<std::size_t>& keep) const {
  IntegerMatrix s(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j) s(i, j) = (*this)(keep[i], keep[j]);
  return s;
}

bool IntegerMatrix::is_symmetric() const { return *this == transpose(); }

IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("IntegerMatrix: dimension mismatch");
  IntegerMatrix r = a;
  for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
  return r;
}

std::string to_string(const IntegerMatrix& m) {
  std::ostringstream out;
  out << m.size() << '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) out << (j ? " " : "") << m(i, j).get_str();
    out << '\n';
  }
  return out.str();
}

namespace {

// In-place fraction-free row echelon form. Returns the rank and the sign of
// the row permutation; pivots are recorded in `pivot_cols`.
std::size_t bareiss_echelon(IntegerMatrix& m, int& sign, std::vector<std::size_t>* pivot_cols = nullptr) {
  const std::size_t n = m.size();
  sign = 1;
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < n; ++col) {
    std::size_t p = r;
    while (p < n && m(p, col) == 0) ++p;
    if (p == n) continue;
    if (p != r) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(r, j));
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < n; ++i) {
      for (std::size_t j = col + 1; j < n; ++j) {
        BigInt t = m(i, j) * m(r, col) - m(i, col) * m(r, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, col) = 0;
    }
    prev = m(r, col);
    if (pivot_cols) pivot_cols->push_back(col);
    ++r;
  }
  return r;
}

}  // namespace

BigInt determinant(const IntegerMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  IntegerMatrix work = m;
  int sign = 1;
  std::vector<std::size_t> pivots;
  if (bareiss_echelon(work, sign, &pivots) < n) return 0;
  return sign * work(n - 1, n - 1);
}

std::size_t rank(const IntegerMatrix& m) {
  IntegerMatrix work = m;
  int sign = 1;
  return bareiss_echelon(work, sign);
}

IntegerMatrix adjugate(const IntegerMatrix& m) {
  const std::size_t n = m.size();
  IntegerMatrix adj(n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // minor without row j, column i
      IntegerMatrix minor(n - 1);
      for (std::size_t a = 0, ra = 0; a < n; ++a) {
        if (a == j) continue;
        for (std::size_t b = 0, cb = 0; b < n; ++b) {
          if (b == i) continue;
          minor(ra, cb++) = m(a, b);
        }
        ++ra;
      }
      BigInt det = determinant(minor);
      adj(i, j) = (i + j) % 2 ? BigInt(-det) : det;
    }
  }
  return adj;
}

Polynomial char_like_polynomial(const IntegerMatrix& L, std::size_t max_dim) {
  const std::size_t n = L.size();
  if (n > max_dim || n >= 63)
    throw std::invalid_argument("char_like_polynomial: dimension " + std::to_string(n) + " exceeds cap");
  Polynomial f(n);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  // One principal minor per subset; mask T selects the variables kept.
  for (std::uint64_t mask = 0; mask <= full; ++mask) {
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < n; ++i)
      if (!(mask >> i & 1)) rest.push_back(i);
    BigInt coeff = determinant(L.submatrix(rest));
    if (rest.size() % 2) coeff = -coeff;
    f.add_term(Monomial::from_mask(n, mask), coeff);
  }
  return f;
}

LatticePoint kernel_vector(const IntegerMatrix& M) {
  const std::size_t n = M.size();
  if (n == 0) throw KernelError(KernelError::Kind::RankDeficient, "kernel_vector: empty matrix");
  const std::size_t r = rank(M);
  if (r == n) throw KernelError(KernelError::Kind::FullRank, "kernel_vector: matrix is non-singular");
  if (r + 1 < n)
    throw KernelError(KernelError::Kind::RankDeficient,
                      "kernel_vector: rank " + std::to_string(r) + " < " + std::to_string(n - 1));

  // rank n-1 => adj(M) has rank one and M * adj(M) = 0, so any nonzero column
  // spans the kernel.
  const IntegerMatrix adj = adjugate(M);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<BigInt> v(n);
    BigInt g = 0;
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = adj(i, j);
      g = gcd(g, v[i]);
    }
    if (g == 0) continue;
    if (v[0] < 0 || (v[0] == 0 && std::any_of(v.begin(), v.end(), [](const BigInt& x) { return x < 0; }))) g = -g;
    for (auto& x : v) {
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
      if (x <= 0)
        throw KernelError(KernelError::Kind::NonPositiveKernel, "kernel_vector: kernel has no strictly positive generator");
    }
    return LatticePoint(std::move(v));
  }
  throw KernelError(KernelError::Kind::RankDeficient, "kernel_vector: adjugate vanished");
}

void validate_structure_matrix(const IntegerMatrix& L) {
  using K = PreconditionError::Kind;
  const std::size_t n = L.size();
  if (n == 0) throw PreconditionError(K::NotSquare, "matrix is empty");
  for (std::size_t i = 0; i < n; ++i) {
    if (L(i, i) != 0) throw PreconditionError(K::NonzeroDiagonal, "diagonal entry " + std::to_string(i + 1) + " is nonzero");
    for (std::size_t j = 0; j < n; ++j)
      if (L(i, j) < 0) throw PreconditionError(K::NegativeEntry, "matrix has a negative entry");
  }
  for (std::size_t i = 0; i < n; ++i) {
    bool row = false, col = false;
    for (std::size_t j = 0; j < n; ++j) {
      row = row || L(i, j) != 0;
      col = col || L(j, i) != 0;
    }
    if (!row || !col)
      throw PreconditionError(K::ZeroRowOrColumn, std::string(row ? "column " : "row ") + std::to_string(i + 1) + " is zero");
  }
}

bool is_irreducible_matrix(const IntegerMatrix& L) {
  const std::size_t n = L.size();
  if (n <= 1) return true;
  auto reaches_all = [&](bool forward) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        const BigInt& e = forward ? L(i, j) : L(j, i);
        if (e != 0 && !seen[j]) {
          seen[j] = true;
          stack.push_back(j);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  };
  return reaches_all(true) && reaches_all(false);
}

MatrixReport matrix_structures(const IntegerMatrix& L, const SolverOptions& options) {
  validate_structure_matrix(L);
  MatrixReport report;
  if (!is_irreducible_matrix(L))
    report.warnings.push_back("matrix is reducible (support digraph not strongly connected); f_L may factor");
  report.polynomial = char_like_polynomial(L);
  report.solve = StructureSolver(options).solve(report.polynomial);

  const std::size_t n = L.size();
  LatticePoint row_sums = LatticePoint::zeros(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) row_sums[i] += L(i, j);

  for (std::size_t k = 0; k < report.solve.structures.size(); ++k) {
    const LatticePoint& d = report.solve.structures[k];
    LatticePoint r;
    try {
      r = kernel_vector(IntegerMatrix::diagonal(d) - L);
    } catch (const KernelError& e) {
      // only possible when L is reducible
      report.warnings.push_back("d = " + to_string(d) + " solves f_L but gives no structure of L: " + e.what());
      continue;
    }
    if (d == row_sums && r == LatticePoint::filled(n, 1)) report.canonical = report.structures.size();
    report.structures.push_back({d, std::move(r)});
    report.critical_sizes.push_back(report.solve.critical_sizes[k]);
  }
  return report;
}

}  // namespace arith
