// Randomised identities. Seeds are fixed; a failure prints the case.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arith/bilinear.hpp"
#include "arith/errors.hpp"
#include "arith/matrix.hpp"
#include "arith/oracle.hpp"
#include "arith/poly_io.hpp"
#include "arith/solver.hpp"
#include "support/gen.hpp"

using namespace arith;

namespace {

constexpr int kCases = 1000;

// f(X + d) the slow way: substitute (x_i + d_i) and multiply out.
Polynomial naive_shift(const Polynomial& f, const LatticePoint& d) {
  const std::size_t n = f.num_vars();
  Polynomial out(n);
  for (const auto& [m, c] : f.terms()) {
    Polynomial term = Polynomial::constant(n, c);
    for (std::size_t i = 0; i < n; ++i) {
      Polynomial lin = Polynomial::variable(n, i) + Polynomial::constant(n, d[i]);
      for (Exponent e = 0; e < m[i]; ++e) term = term * lin;
    }
    out += term;
  }
  return out;
}

Polynomial small_poly(gen::Rng& rng) {
  std::size_t n = gen::uniform(rng, 1, 4);
  return gen::polynomial(rng, n, 6, 3, 40);
}

}  // namespace

TEST_CASE("shift by zero is the identity") {
  gen::Rng rng(1);
  for (int t = 0; t < kCases; ++t) {
    Polynomial f = small_poly(rng);
    CHECK(shift(f, LatticePoint::zeros(f.num_vars())) == f);
  }
}

TEST_CASE("evaluate(shift(f, d), 0) = evaluate(f, d)") {
  gen::Rng rng(2);
  for (int t = 0; t < kCases; ++t) {
    Polynomial f = small_poly(rng);
    LatticePoint d = gen::point(rng, f.num_vars(), -9, 9);
    INFO(to_string(f), " at ", to_string(d));
    CHECK(evaluate(shift(f, d), LatticePoint::zeros(f.num_vars())) == evaluate(f, d));
  }
}

TEST_CASE("shift matches naive expansion and composes additively") {
  gen::Rng rng(3);
  for (int t = 0; t < kCases; ++t) {
    Polynomial f = small_poly(rng);
    const std::size_t n = f.num_vars();
    LatticePoint a = gen::point(rng, n, -5, 5), b = gen::point(rng, n, -5, 5);
    INFO(to_string(f), " by ", to_string(a), " then ", to_string(b));
    CHECK(shift(f, a) == naive_shift(f, a));
    CHECK(shift(shift(f, a), b) == shift(f, a + b));
  }
}

TEST_CASE("derivative commutes with shift") {
  gen::Rng rng(4);
  for (int t = 0; t < kCases; ++t) {
    Polynomial f = small_poly(rng);
    const std::size_t n = f.num_vars();
    LatticePoint d = gen::point(rng, n, -6, 6);
    std::size_t s = gen::uniform(rng, 0, n - 1);
    INFO(to_string(f), " d=", to_string(d), " s=", s);
    CHECK(partial_derivative(shift(f, d), s) == shift(partial_derivative(f, s), d));
  }
}

TEST_CASE("parse(print(f)) = f") {
  gen::Rng rng(5);
  for (int t = 0; t < kCases; ++t) {
    Polynomial f = small_poly(rng);
    auto names = default_var_names(f.num_vars());
    std::string text = to_string(f, names);
    INFO(text);
    CHECK(parse_polynomial(text, names) == f);
    CHECK(to_string(parse_polynomial(text, names), names) == text);
  }
}

TEST_CASE("MinimalSet keeps exactly the minimal elements") {
  gen::Rng rng(6);
  for (int t = 0; t < kCases; ++t) {
    std::size_t n = gen::uniform(rng, 1, 4);
    std::vector<LatticePoint> pts;
    int k = static_cast<int>(gen::uniform(rng, 0, 25));
    for (int i = 0; i < k; ++i) pts.push_back(gen::point(rng, n, 0, 6));
    MinimalSet s;
    for (const auto& p : pts) s.add(p);
    CHECK(s.is_antichain());
    // brute force: p is minimal iff no other point is strictly below it
    MinimalSet expect;
    for (const auto& p : pts) {
      bool minimal = true;
      for (const auto& q : pts) minimal = minimal && !(q.leq(p) && !(q == p));
      if (minimal) expect.add(p);
    }
    CHECK(s == expect);
    for (const auto& p : pts) CHECK(s.covers(p));
  }
}

TEST_CASE("solver output is always an antichain") {
  gen::Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = gen::uniform(rng, 1, 4);
    // dense four-variable inputs with wide coefficients can run for minutes
    Polynomial f = n < 4 ? gen::dominated(rng, n, -15, 15, 1, 5) : gen::dominated(rng, 4, -4, 4, 1, 6);
    SolveReport r = solve(f);
    CHECK(r.min_cone.is_antichain());
  }
}

// ---- oracle equivalence ----------------------------------------------------

TEST_CASE("min_cone_2d equals the brute-force box scan (500 forms)") {
  gen::Rng rng(2302);
  int disagreements = 0;
  for (int t = 0; t < 500; ++t) {
    BilinearForm F = gen::bilinear(rng, 5, 30);
    MinimalSet closed = min_cone_2d(F);
    Polynomial f(2);
    f.add_term(Monomial::from_mask(2, 3), F.a);
    f.add_term(Monomial::from_mask(2, 1), F.b1);
    f.add_term(Monomial::from_mask(2, 2), F.b2);
    f.add_term(Monomial::from_mask(2, 0), F.c);

    oracle::Box box = oracle::Box::cube(2, 1, 30);
    auto inside = [&] {
      for (const auto& p : closed)
        if (!p.leq(box.upper) || p == box.upper || p[0] == box.upper[0] || p[1] == box.upper[1]) return false;
      return true;
    };
    while (!inside())
      for (std::size_t i = 0; i < 2; ++i) box.upper[i] += (box.upper[i] + 1) / 2;
    oracle::BoxScan scan = oracle::min_cone_box(f, box);
    if (!(scan.min_cone == closed)) {
      ++disagreements;
      MESSAGE("counterexample: ", to_string(f), " closed ", to_string(closed), " oracle ", to_string(scan.min_cone));
    }
  }
  CHECK(disagreements == 0);
}

TEST_CASE("solve agrees with the oracle on 100 random trivariates") {
  gen::Rng rng(2025);
  int disagreements = 0, inconclusive = 0;
  for (int t = 0; t < 100; ++t) {
    Polynomial f = gen::dominated(rng, 3, -25, 25, 1, 25);
    SolveReport r = solve(f);
    oracle::VerifyReport v = oracle::cross_check(f, r);
    if (!v.conclusive) {
      ++inconclusive;
      MESSAGE("inconclusive: ", to_string(f), " box ", to_string(v.box.upper));
    }
    if (!v.agree) {
      ++disagreements;
      std::string detail;
      for (const auto& p : v.missed) detail += " missed " + to_string(p);
      for (const auto& p : v.spurious) detail += " spurious " + to_string(p);
      for (const auto& p : v.structures_missed) detail += " D-missed " + to_string(p);
      for (const auto& p : v.structures_spurious) detail += " D-spurious " + to_string(p);
      MESSAGE("counterexample: ", to_string(f), detail);
    }
  }
  CHECK(disagreements == 0);
  CHECK(inconclusive == 0);
}

TEST_CASE("solve agrees with the oracle on random four-variable inputs") {
  // tighter caps than the defaults; a box that doesn't fit is counted, not
  // passed
  gen::Rng rng(44);
  int conclusive = 0;
  for (int t = 0; t < 20; ++t) {
    Polynomial f = gen::dominated(rng, 4, -4, 4, 1, 6);
    SolveReport r = solve(f);
    oracle::VerifyOptions o;
    o.cell_cap = 4'000'000;
    o.column_cap = 1'000'000;
    oracle::VerifyReport v = oracle::cross_check(f, r, o);
    INFO(to_string(f));
    conclusive += v.conclusive;
    if (v.conclusive) CHECK(v.agree);
  }
  MESSAGE("four-variable cross-checks conclusive: ", conclusive, "/20");
  CHECK(conclusive >= 15);
}

// ---- matrices ---------------------------------------------------------------

TEST_CASE("f_L = f_{L^t} and every (d, r) solves the structure equation") {
  gen::Rng rng(88);
  int with_structures = 0;
  for (int t = 0; t < 200; ++t) {
    std::size_t n = gen::uniform(rng, 1, 4);
    IntegerMatrix L = gen::zero_diagonal(rng, n, 3);
    INFO(to_string(L));
    CHECK(char_like_polynomial(L) == char_like_polynomial(L.transpose()));

    try {
      validate_structure_matrix(L);
    } catch (const PreconditionError&) {
      continue;
    }
    MatrixReport rep = matrix_structures(L);
    with_structures += !rep.structures.empty();
    if (is_irreducible_matrix(L)) CHECK(rep.structures.size() == rep.solve.structures.size());
    for (const auto& s : rep.structures) {
      IntegerMatrix M = IntegerMatrix::diagonal(s.d) - L;
      for (std::size_t i = 0; i < n; ++i) {
        BigInt row = 0;
        for (std::size_t j = 0; j < n; ++j) row += M(i, j) * s.r[j];
        CHECK(row == 0);
      }
      BigInt g = 0;
      for (const auto& x : s.r) {
        CHECK(x > 0);
        g = gcd(g, x);
      }
      CHECK(g == 1);
    }
  }
  CHECK(with_structures > 50);
}
