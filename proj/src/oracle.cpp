#include "arith/oracle.hpp"

#include "arith/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <set>

namespace arith::oracle {

Box Box::cube(std::size_t n, long lo, long hi) {
  return {LatticePoint::filled(n, lo), LatticePoint::filled(n, hi)};
}

std::optional<std::size_t> Box::cells() const {
  std::size_t total = 1;
  for (std::size_t i = 0; i < dims(); ++i) {
    BigInt len = upper[i] - lower[i] + 1;
    if (len <= 0) return 0;
    if (!len.fits_ulong_p()) return std::nullopt;
    if (__builtin_mul_overflow(total, len.get_ui(), &total)) return std::nullopt;
  }
  return total;
}

namespace {

// Coefficient of x^k in f(X + d) is sum over terms c*x^e with e >= k of
// c * prod_i C(e_i, k_i) * d_i^(e_i - k_i).
struct Part {
  BigInt weight;
  std::vector<Exponent> diff;
  std::int64_t weight64 = 0;
};

struct Target {
  std::vector<Exponent> k;
  Exponent degree = 0;
  std::vector<Part> parts;
};

class ShiftedCoefficients {
 public:
  ShiftedCoefficients(const Polynomial& f, PositivityMode mode)
      : n_(f.num_vars()), strict_(mode == PositivityMode::Strict) {
    std::set<std::vector<Exponent>> wanted;
    for (const auto& [m, c] : f.terms()) {
      std::vector<Exponent> k(n_, 0);
      while (true) {
        wanted.insert(k);
        std::size_t i = 0;
        while (i < n_ && k[i] == m[i]) k[i++] = 0;
        if (i == n_) break;
        ++k[i];
      }
    }
    for (std::size_t s = 0; s < n_; ++s) {
      std::vector<Exponent> k(n_, 0);
      k[s] = 1;
      wanted.insert(k);
    }
    wanted.insert(std::vector<Exponent>(n_, 0));

    for (const auto& k : wanted) {
      Target t;
      t.k = k;
      for (Exponent e : k) t.degree += e;
      for (const auto& [m, c] : f.terms()) {
        bool above = true;
        for (std::size_t i = 0; i < n_; ++i) above = above && m[i] >= k[i];
        if (!above) continue;
        Part p;
        p.weight = c;
        p.diff.resize(n_);
        for (std::size_t i = 0; i < n_; ++i) {
          p.diff[i] = m[i] - k[i];
          BigInt b;
          mpz_bin_uiui(b.get_mpz_t(), m[i], k[i]);
          p.weight *= b;
        }
        if (auto w = to_int64(p.weight))
          p.weight64 = *w;
        else
          fast_ = false;
        t.parts.push_back(std::move(p));
      }
      if (t.degree == 0)
        constant_ = std::move(t);
      else
        targets_.push_back(std::move(t));
    }
  }

  struct Eval {
    bool feasible;
    bool zero;
  };

  Eval at(std::span<const std::int64_t> d) const {
    if (fast_) {
      if (auto r = fast_eval(d)) return *r;
    }
    return slow_eval(d);
  }

 private:
  std::optional<Eval> fast_eval(std::span<const std::int64_t> d) const {
    auto coeff = [&](const Target& t, std::int64_t& out) {
      out = 0;
      for (const Part& p : t.parts) {
        std::int64_t term = p.weight64;
        for (std::size_t i = 0; i < n_; ++i)
          for (Exponent r = 0; r < p.diff[i]; ++r)
            if (__builtin_mul_overflow(term, d[i], &term)) return false;
        if (__builtin_add_overflow(out, term, &out)) return false;
      }
      return true;
    };
    std::int64_t c0;
    if (!coeff(constant_, c0)) return std::nullopt;
    Eval e{c0 >= 0, c0 == 0};
    if (!e.feasible) return e;
    for (const Target& t : targets_) {
      std::int64_t v;
      if (!coeff(t, v)) return std::nullopt;
      if (v < 0 || (v == 0 && (strict_ || t.degree == 1))) {
        e.feasible = false;
        break;
      }
    }
    return e;
  }

  Eval slow_eval(std::span<const std::int64_t> d) const {
    auto coeff = [&](const Target& t) {
      BigInt out = 0;
      for (const Part& p : t.parts) {
        BigInt term = p.weight;
        for (std::size_t i = 0; i < n_; ++i)
          for (Exponent r = 0; r < p.diff[i]; ++r) term *= static_cast<long>(d[i]);
        out += term;
      }
      return out;
    };
    BigInt c0 = coeff(constant_);
    Eval e{c0 >= 0, c0 == 0};
    if (!e.feasible) return e;
    for (const Target& t : targets_) {
      BigInt v = coeff(t);
      if (v < 0 || (v == 0 && (strict_ || t.degree == 1))) {
        e.feasible = false;
        break;
      }
    }
    return e;
  }

  std::size_t n_;
  bool strict_;
  bool fast_ = true;
  Target constant_;
  std::vector<Target> targets_;
};

std::vector<std::int64_t> small_coords(const LatticePoint& p) {
  std::vector<std::int64_t> out;
  for (const auto& c : p) {
    auto v = to_int64(c);
    if (!v) throw std::invalid_argument("oracle: coordinate out of 64-bit range");
    out.push_back(*v);
  }
  return out;
}

LatticePoint to_point(std::span<const std::int64_t> c) {
  std::vector<BigInt> v;
  v.reserve(c.size());
  for (auto x : c) v.emplace_back(static_cast<long>(x));
  return LatticePoint(std::move(v));
}

struct FullScan {
  BoxScan scan;
  std::vector<LatticePoint> structures;
  std::vector<LatticePoint> zeros;
  bool exhaustive = false;
};

struct Layout {
  std::vector<std::int64_t> lo, hi;
  std::vector<std::size_t> stride;
  std::size_t cells = 1;
};

// Row-major layout over the listed axes (last listed axis fastest).
Layout make_layout(const std::vector<std::int64_t>& lo, const std::vector<std::int64_t>& hi,
                   const std::vector<std::size_t>& axes) {
  Layout l;
  for (std::size_t a : axes) {
    l.lo.push_back(lo[a]);
    l.hi.push_back(hi[a]);
  }
  const std::size_t k = axes.size();
  l.stride.assign(k, 1);
  for (std::size_t i = k; i-- > 1;) l.stride[i - 1] = l.stride[i] * static_cast<std::size_t>(l.hi[i] - l.lo[i] + 1);
  for (std::size_t i = 0; i < k; ++i) l.cells *= static_cast<std::size_t>(l.hi[i] - l.lo[i] + 1);
  return l;
}

bool advance(std::vector<std::int64_t>& p, const Layout& l) {
  std::size_t i = p.size();
  while (i-- > 0) {
    if (p[i] < l.hi[i]) {
      ++p[i];
      return true;
    }
    p[i] = l.lo[i];
  }
  return false;
}

// Exhaustive pass over every cell. below[p] records whether some feasible
// q <= p exists inside the box, so p is minimal iff it is feasible and no
// predecessor p - e_i has below set.
FullScan scan_exhaustive(const ShiftedCoefficients& coeffs, const std::vector<std::int64_t>& lo,
                         const std::vector<std::int64_t>& hi, bool want_min) {
  const std::size_t n = lo.size();
  std::vector<std::size_t> axes(n);
  for (std::size_t i = 0; i < n; ++i) axes[i] = i;
  const Layout l = make_layout(lo, hi, axes);

  FullScan out;
  out.exhaustive = true;
  out.scan.cells = l.cells;
  std::vector<std::uint8_t> below(want_min ? l.cells : 0, 0);
  std::vector<std::int64_t> p = lo;
  for (std::size_t idx = 0; idx < l.cells; ++idx, advance(p, l)) {
    const auto e = coeffs.at(p);
    if (e.zero) out.zeros.push_back(to_point(p));
    if (e.zero && e.feasible) out.structures.push_back(to_point(p));
    if (!want_min) continue;
    bool pred = false;
    for (std::size_t i = 0; i < n && !pred; ++i) pred = p[i] > lo[i] && below[idx - l.stride[i]];
    below[idx] = pred || e.feasible;
    if (e.feasible && !pred) {
      out.scan.min_cone.add(to_point(p));
      for (std::size_t i = 0; i < n; ++i) out.scan.boundary_touch = out.scan.boundary_touch || p[i] == hi[i];
    }
  }
  return out;
}

// Column pass along the widest axis. Relies on the feasible region being
// upward closed along that axis, so each column is feasible exactly from a
// height h onwards (found by bisection). A point (y, h(y)) is then minimal iff
// every strictly smaller y' has h(y') > h(y); a prefix-min table decides that.
// Zeros other than structures are not enumerated in this mode.
FullScan scan_columns(const ShiftedCoefficients& coeffs, const std::vector<std::int64_t>& lo,
                      const std::vector<std::int64_t>& hi, std::size_t column_cap) {
  const std::size_t n = lo.size();
  std::size_t axis = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (hi[i] - lo[i] > hi[axis] - lo[axis]) axis = i;
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < n; ++i)
    if (i != axis) others.push_back(i);
  const Layout l = make_layout(lo, hi, others);
  if (l.cells > column_cap)
    throw ResourceLimitError("oracle: box exceeds column cap of " + std::to_string(column_cap));

  constexpr std::int64_t kNever = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> height(l.cells), prefix_min(l.cells);
  std::vector<std::int64_t> q = l.lo, full(n);
  FullScan out;
  out.scan.cells = l.cells;
  for (std::size_t idx = 0; idx < l.cells; ++idx, advance(q, l)) {
    for (std::size_t j = 0; j < others.size(); ++j) full[others[j]] = q[j];
    auto feasible_at = [&](std::int64_t t) {
      full[axis] = t;
      return coeffs.at(full).feasible;
    };
    // a neighbour's height is feasible here too, and usually close
    std::int64_t b = kNever;
    for (std::size_t j = 0; j < others.size(); ++j)
      if (q[j] > l.lo[j]) b = std::min(b, height[idx - l.stride[j]]);
    if (b == kNever && feasible_at(hi[axis])) b = hi[axis];
    std::int64_t h = kNever;
    if (b != kNever) {
      std::int64_t a = lo[axis] - 1;  // infeasible (virtual)
      for (std::int64_t step = 1; b - step > a; step *= 2) {
        if (!feasible_at(b - step)) {
          a = b - step;
          break;
        }
        b -= step;
      }
      while (b - a > 1) {
        std::int64_t mid = a + (b - a) / 2;
        (feasible_at(mid) ? b : a) = mid;
      }
      h = b;
    }
    height[idx] = h;
    std::int64_t smaller = kNever;
    for (std::size_t j = 0; j < others.size(); ++j)
      if (q[j] > l.lo[j]) smaller = std::min(smaller, prefix_min[idx - l.stride[j]]);
    prefix_min[idx] = std::min(h, smaller);
    if (h != kNever && h < smaller) {
      full[axis] = h;
      LatticePoint p = to_point(full);
      if (coeffs.at(full).zero) out.structures.push_back(p);
      out.scan.min_cone.add(p);
      for (std::size_t i = 0; i < n; ++i) out.scan.boundary_touch = out.scan.boundary_touch || full[i] == hi[i];
    }
  }
  std::sort(out.structures.begin(), out.structures.end(), LexLess{});
  return out;
}

FullScan scan_box(const Polynomial& f, const Box& box, PositivityMode mode, std::size_t cell_cap, bool want_min,
                  ScanMethod method = ScanMethod::Exhaustive, std::size_t column_cap = kDefaultColumnCap) {
  if (box.dims() != f.num_vars() || box.upper.size() != box.dims())
    throw std::invalid_argument("oracle: box dimension mismatch");
  if (!box.lower.leq(box.upper)) throw std::invalid_argument("oracle: box lower corner exceeds upper corner");
  const ShiftedCoefficients coeffs(f, mode);
  const auto lo = small_coords(box.lower);
  const auto hi = small_coords(box.upper);
  auto cells = box.cells();
  const bool small = cells && *cells <= cell_cap;
  const bool cheap = small && *cells <= kAutoExhaustiveCells;
  if (method == ScanMethod::Exhaustive || (method == ScanMethod::Auto && cheap)) {
    if (!small) throw ResourceLimitError("oracle: box exceeds cell cap of " + std::to_string(cell_cap));
    return scan_exhaustive(coeffs, lo, hi, want_min);
  }
  if (f.num_vars() == 0) return scan_exhaustive(coeffs, lo, hi, want_min);
  return scan_columns(coeffs, lo, hi, column_cap);
}

}  // namespace

bool in_feasible_region(const Polynomial& f, const LatticePoint& d, PositivityMode mode) {
  if (d.size() != f.num_vars()) throw std::invalid_argument("oracle: dimension mismatch");
  for (const auto& c : d)
    if (c < 1) return false;
  return ShiftedCoefficients(f, mode).at(small_coords(d)).feasible;
}

bool is_structure(const Polynomial& f, const LatticePoint& d, PositivityMode mode) {
  if (d.size() != f.num_vars()) throw std::invalid_argument("oracle: dimension mismatch");
  for (const auto& c : d)
    if (c < 1) return false;
  auto e = ShiftedCoefficients(f, mode).at(small_coords(d));
  return e.feasible && e.zero;
}

BoxScan min_cone_box(const Polynomial& f, const Box& box, PositivityMode mode, std::size_t cell_cap,
                     ScanMethod method, std::size_t column_cap) {
  return scan_box(f, box, mode, cell_cap, true, method, column_cap).scan;
}

std::vector<LatticePoint> structures_box(const Polynomial& f, const Box& box, PositivityMode mode,
                                         std::size_t cell_cap) {
  return scan_box(f, box, mode, cell_cap, false).structures;
}

std::vector<LatticePoint> zeros_box(const Polynomial& f, const Box& box, std::size_t cell_cap) {
  return scan_box(f, box, PositivityMode::Strict, cell_cap, false).zeros;
}

VerifyReport cross_check(const Polynomial& f, const SolveReport& report, const VerifyOptions& options) {
  const Polynomial g = restrict_variables(f, report.variables);
  const std::size_t n = g.num_vars();
  VerifyReport out;

  auto strictly_inside = [&](const Box& box) {
    for (const auto& p : report.min_cone)
      for (std::size_t i = 0; i < n; ++i)
        if (p[i] >= box.upper[i]) return false;
    return true;
  };

  Box box = options.box ? *options.box : Box::cube(n, 1, 30);
  if (!options.box) {
    // fit each short axis to the solver's reach, with a little room past it
    for (std::size_t i = 0; i < n; ++i) {
      BigInt reach = 0;
      for (const auto& p : report.min_cone) reach = std::max(reach, p[i]);
      if (reach >= box.upper[i]) {
        box.upper[i] = reach + 1 + reach / 8;
        out.grown = true;
      }
    }
  }
  out.box = box;

  bool lower_is_one = true;
  for (const auto& c : box.lower) lower_is_one = lower_is_one && c == 1;

  FullScan scan;
  try {
    scan = scan_box(g, box, options.mode, options.cell_cap, true, options.method, options.column_cap);
  } catch (const ResourceLimitError&) {
    return out;
  }
  out.exhaustive = scan.exhaustive;
  out.cells = scan.scan.cells;
  out.conclusive = strictly_inside(box) && lower_is_one;

  for (const auto& p : scan.scan.min_cone)
    if (!report.min_cone.contains(p)) out.missed.push_back(p);
  for (const auto& p : report.min_cone)
    if (box.contains(p) && !scan.scan.min_cone.contains(p)) out.spurious.push_back(p);

  std::set<LatticePoint, LexLess> solver_structs(report.structures.begin(), report.structures.end());
  std::set<LatticePoint, LexLess> oracle_structs(scan.structures.begin(), scan.structures.end());
  for (const auto& p : oracle_structs)
    if (!solver_structs.contains(p)) out.structures_missed.push_back(p);
  for (const auto& p : solver_structs)
    if (box.contains(p) && !oracle_structs.contains(p)) out.structures_spurious.push_back(p);
  for (const auto& z : scan.zeros)
    if (!oracle_structs.contains(z)) out.other_zeros.push_back(z);

  out.agree = out.missed.empty() && out.spurious.empty() && out.structures_missed.empty() &&
              out.structures_spurious.empty();
  return out;
}

}  // namespace arith::oracle
