#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arith/errors.hpp"
#include "arith/oracle.hpp"
#include "arith/poly_io.hpp"
#include "support/gen.hpp"

using namespace arith;
using namespace arith::oracle;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }

std::vector<LatticePoint> pts(std::initializer_list<LatticePoint> l) { return l; }

}  // namespace

TEST_CASE("box basics") {
  Box b = Box::cube(2, 1, 30);
  CHECK(b.cells() == 900u);
  CHECK(b.contains({30, 1}));
  CHECK_FALSE(b.contains({31, 1}));
  Box huge{LatticePoint{1, 1, 1}, LatticePoint{1L << 40, 1L << 40, 1L << 40}};
  CHECK_FALSE(huge.cells().has_value());
  CHECK_THROWS_AS(min_cone_box(P("x1*x2 - 3"), Box::cube(3, 1, 5)), std::invalid_argument);
  CHECK_THROWS_AS(min_cone_box(P("x1*x2 - 3"), Box::cube(2, 1, 100), PositivityMode::Strict, 50), ResourceLimitError);
}

TEST_CASE("pointwise predicates") {
  Polynomial f = P("x1*x2*x3 - 19*x1 + 2*x2 + 3*x3 - 23");
  CHECK(is_structure(f, {1, 5, 4}));
  CHECK(in_feasible_region(f, {1, 5, 4}));
  CHECK_FALSE(in_feasible_region(f, {1, 1, 19}));  // x1 coefficient is 0
  CHECK(in_feasible_region(f, {1, 1, 20}));
  CHECK_FALSE(in_feasible_region(f, {0, 5, 4}));
  CHECK_FALSE(is_structure(P("x1*x2 + 17*x1 - 12*x2 + 27"), {11, 214}));
}

TEST_CASE("min_cone_box on the worked examples") {
  CHECK(min_cone_box(P("2*x1*x2 - 7*x1 - 10*x2 + 16"), Box::cube(2, 1, 30)).min_cone ==
        MinimalSet{{6, 13}, {7, 9}, {8, 7}, {9, 6}, {12, 5}, {24, 4}});
  CHECK(min_cone_box(P("x1*x2 + 17*x1 - 12*x2 + 27"), Box::cube(2, 1, 20)).min_cone == MinimalSet{{13, 1}});
  BoxScan s = min_cone_box(P("x1*x2 - 3"), Box::cube(2, 1, 5));
  CHECK(s.min_cone == MinimalSet{{1, 3}, {2, 2}, {3, 1}});
  CHECK_FALSE(s.boundary_touch);
  CHECK(min_cone_box(P("x1*x2 - 3"), Box::cube(2, 1, 3)).boundary_touch);
}

TEST_CASE("structures_box and zeros_box") {
  Polynomial g = P("x1*x2 + 17*x1 - 12*x2 + 27");
  CHECK(structures_box(P("x1*x2*x3 - 19*x1 + 2*x2 + 3*x3 - 23"), Box::cube(3, 1, 10)) == pts({{1, 5, 4}}));
  CHECK(structures_box(g, Box::cube(2, 1, 250)).empty());
  CHECK(zeros_box(g, Box::cube(2, 1, 250)) == pts({{1, 4}, {5, 16}, {9, 60}, {11, 214}}));
  CHECK(structures_box(P("x1*x2 - 3"), Box::cube(2, 1, 4)) == pts({{1, 3}, {3, 1}}));
  CHECK(zeros_box(P("x1*x2 - 3"), Box::cube(2, 1, 4)) == pts({{1, 3}, {3, 1}}));
  CHECK(zeros_box(P("x1*x2 + 1"), Box::cube(2, 1, 9)).empty());
}

TEST_CASE("structures are exactly the zeros passing the predicate") {
  gen::Rng rng(31);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = gen::uniform(rng, 2, 3);
    Polynomial f = gen::dominated(rng, n, -15, 15, 1, 4);
    Box box = Box::cube(n, 1, n == 2 ? 40 : 14);
    std::vector<LatticePoint> expect;
    for (const auto& z : zeros_box(f, box))
      if (is_structure(f, z)) expect.push_back(z);
    CHECK(structures_box(f, box) == expect);
  }
}

TEST_CASE("strict and lenient differ when a shifted coefficient vanishes") {
  // at (1,1,2) the x1*x2 coefficient is -2 + 2 = 0; every other one is positive
  Polynomial f = P("x1*x2*x3 - 2*x1*x2 + x1 + x2 + x3 - 4");
  LatticePoint d{1, 1, 2};
  CHECK(shift(f, d).coefficient(Monomial(std::vector<Exponent>{1, 1, 0})) == 0);
  CHECK(evaluate(f, d) == 0);
  CHECK_FALSE(is_structure(f, d, PositivityMode::Strict));
  CHECK(is_structure(f, d, PositivityMode::Lenient));
  CHECK(is_structure(f, {1, 1, 3}, PositivityMode::Strict) == (evaluate(f, {1, 1, 3}) == 0));
}

TEST_CASE("column scan equals the exhaustive scan") {
  gen::Rng rng(77);
  for (int t = 0; t < 150; ++t) {
    std::size_t n = gen::uniform(rng, 1, 4);
    Polynomial f = gen::dominated(rng, n, -20, 20, 1, 5);
    LatticePoint hi = LatticePoint::zeros(n);
    for (std::size_t i = 0; i < n; ++i) hi[i] = gen::uniform(rng, 3, n <= 2 ? 60 : 16);
    Box box{LatticePoint::filled(n, 1), hi};
    for (PositivityMode mode : {PositivityMode::Strict, PositivityMode::Lenient}) {
      INFO(to_string(f), " box ", to_string(hi));
      BoxScan a = min_cone_box(f, box, mode, kDefaultCellCap, ScanMethod::Exhaustive);
      BoxScan b = min_cone_box(f, box, mode, kDefaultCellCap, ScanMethod::Columns);
      CHECK(a.min_cone == b.min_cone);
      CHECK(a.boundary_touch == b.boundary_touch);
    }
  }
}

TEST_CASE("feasible region is closed upwards (what the column scan relies on)") {
  gen::Rng rng(78);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = gen::uniform(rng, 2, 4);
    Polynomial f = gen::dominated(rng, n, -20, 20, 1, 5);
    for (PositivityMode mode : {PositivityMode::Strict, PositivityMode::Lenient}) {
      for (int k = 0; k < 10; ++k) {
        LatticePoint d = gen::point(rng, n, 1, 12);
        if (!in_feasible_region(f, d, mode)) continue;
        for (std::size_t i = 0; i < n; ++i) CHECK(in_feasible_region(f, d + LatticePoint::unit(n, i), mode));
      }
    }
  }
}

TEST_CASE("cross_check agrees with the solver and flags tampering") {
  Polynomial f = P("2*x1*x2 - 7*x1 - 10*x2 + 16");
  SolveReport r = solve(f);
  VerifyReport ok = cross_check(f, r);
  CHECK(ok.agree);
  CHECK(ok.conclusive);
  CHECK(ok.exhaustive);
  CHECK(ok.box.upper == LatticePoint{30, 30});

  SolveReport bad = r;
  bad.min_cone = MinimalSet{{6, 13}, {7, 9}, {9, 6}, {12, 5}, {24, 4}};
  VerifyReport v = cross_check(f, bad);
  CHECK_FALSE(v.agree);
  CHECK(v.missed == pts({{8, 7}}));

  SolveReport extra = r;
  extra.min_cone.add({5, 30});
  CHECK(cross_check(f, extra).spurious == pts({{5, 30}}));

  VerifyOptions small;
  small.box = Box::cube(2, 1, 10);
  VerifyReport w = cross_check(f, r, small);
  CHECK_FALSE(w.conclusive);
}

TEST_CASE("cross_check grows the box until solver points are inside") {
  Polynomial f = P("x1*x2 - 100");
  SolveReport r = solve(f);
  VerifyReport v = cross_check(f, r);
  CHECK(v.agree);
  CHECK(v.conclusive);
  CHECK(v.grown);
  CHECK(v.box.upper[0] > 100);
  CHECK(v.box.upper[1] > 100);
}

TEST_CASE("cross_check reports other zeros and respects the cell cap") {
  Polynomial g = P("x1*x2 + 17*x1 - 12*x2 + 27");
  VerifyOptions o;
  o.box = Box::cube(2, 1, 250);
  VerifyReport v = cross_check(g, solve(g), o);
  CHECK(v.agree);
  CHECK(v.other_zeros == pts({{1, 4}, {5, 16}, {9, 60}, {11, 214}}));

  VerifyOptions tiny;
  tiny.cell_cap = 10;
  tiny.column_cap = 5;
  VerifyReport w = cross_check(g, solve(g), tiny);
  CHECK_FALSE(w.conclusive);
  CHECK(w.cells == 0u);

  VerifyOptions cols;
  cols.method = ScanMethod::Columns;
  VerifyReport c = cross_check(g, solve(g), cols);
  CHECK(c.agree);
  CHECK_FALSE(c.exhaustive);
}
