#include "arith/solver.hpp"

#include "arith/bilinear.hpp"
#include "arith/errors.hpp"
#include "arith/poly_io.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace arith {

const char* to_string(PreconditionError::Kind kind) {
  using K = PreconditionError::Kind;
  switch (kind) {
    case K::NotDominated: return "NotDominated";
    case K::NotSquareFree: return "NotSquareFree";
    case K::NonPositiveLeading: return "NonPositiveLeading";
    case K::DominantNotFullProduct: return "DominantNotFullProduct";
    case K::ThresholdPrecondition: return "ThresholdPrecondition";
    case K::NegativeEntry: return "NegativeEntry";
    case K::NonzeroDiagonal: return "NonzeroDiagonal";
    case K::ZeroRowOrColumn: return "ZeroRowOrColumn";
    case K::NotSquare: return "NotSquare";
  }
  return "Unknown";
}

LatticePoint expand_at(const LatticePoint& d, std::size_t s) {
  if (s > d.size()) throw std::out_of_range("expand_at: index out of range");
  std::vector<BigInt> out;
  out.reserve(d.size() + 1);
  for (std::size_t i = 0; i < s; ++i) out.push_back(d[i]);
  out.emplace_back(1);
  for (std::size_t i = s; i < d.size(); ++i) out.push_back(d[i]);
  return LatticePoint(std::move(out));
}

LatticePoint supremum(std::span<const LatticePoint> points) {
  if (points.empty()) throw std::invalid_argument("supremum: empty list");
  LatticePoint sup = points.front();
  for (const auto& p : points.subspan(1)) {
    if (p.size() != sup.size()) throw std::invalid_argument("supremum: dimension mismatch");
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] > sup[i]) sup[i] = p[i];
  }
  return sup;
}

std::string memo_key(const Polynomial& f) {
  std::string key = std::to_string(f.num_vars()) + ':';
  for (const auto& [m, c] : f.terms()) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i) key += '.';
      key += std::to_string(m[i]);
    }
    key += '=';
    key += c.get_str();
    key += ';';
  }
  return key;
}

namespace {

LatticePoint prepend(const BigInt& head, const LatticePoint& tail) {
  std::vector<BigInt> v;
  v.reserve(tail.size() + 1);
  v.push_back(head);
  v.insert(v.end(), tail.begin(), tail.end());
  return LatticePoint(std::move(v));
}

// Least t >= 0 with g(t, 0, ..., 0) >= 0; g(0) < 0 and g increases in t.
BigInt least_feasible_first_coordinate(const Polynomial& g) {
  LatticePoint p = LatticePoint::zeros(g.num_vars());
  auto value_at = [&](const BigInt& t) {
    p[0] = t;
    return evaluate(g, p);
  };
  BigInt hi = 1;
  while (value_at(hi) < 0) hi *= 2;
  BigInt lo = hi / 2;  // infeasible (or 0, which is infeasible by assumption)
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (value_at(mid) >= 0)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

bool multilinear(const Polynomial& g) {
  for (const auto& [m, c] : g.terms())
    for (std::size_t i = 0; i < g.num_vars(); ++i)
      if (m[i] > 1) return false;
  return true;
}

// Multilinear g as a dense table: bit i of the index is x_i. Fixing x_0 = u
// halves the table.
using Dense = std::vector<BigInt>;

Dense to_dense(const Polynomial& g) {
  Dense t(std::size_t{1} << g.num_vars());
  for (const auto& [m, c] : g.terms()) {
    std::size_t mask = 0;
    for (std::size_t i = 0; i < g.num_vars(); ++i)
      if (m[i]) mask |= std::size_t{1} << i;
    t[mask] = c;
  }
  return t;
}

Dense fix_first(const Dense& t, const BigInt& u) {
  Dense out(t.size() / 2);
  for (std::size_t m = 0; m < out.size(); ++m) out[m] = t[2 * m] + u * t[2 * m + 1];
  return out;
}

// a*u*v + b*u + c*v + k with k < 0, b, c > 0 and a >= 0. Walks the corners
// directly: the next one is the least u whose column drops below v.
std::vector<LatticePoint> plane_corners(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& k) {
  auto least_v = [&](const BigInt& u) {
    const BigInt rest = b * u + k;
    return rest >= 0 ? BigInt(0) : ceil_div(-rest, a * u + c);
  };
  std::vector<LatticePoint> out;
  BigInt u = 0, v = least_v(u);
  while (true) {
    out.push_back(LatticePoint{std::vector<BigInt>{u, v}});
    if (v == 0) break;
    const BigInt t = v - 1;
    u = ceil_div(-k - t * c, b + a * t);
    v = least_v(u);
  }
  return out;
}

std::vector<LatticePoint> dense_staircase(const Dense& t, std::size_t n, std::size_t max_enumeration) {
  if (t[0] >= 0) return {LatticePoint::zeros(n)};
  if (n == 0) return {};
  const BigInt bound = ceil_div(-t[0], t[1]);
  if (n == 1) return {LatticePoint{std::vector<BigInt>{bound}}};
  if (n == 2) return plane_corners(t[3], t[1], t[2], t[0]);
  if (bound >= BigInt(static_cast<unsigned long>(max_enumeration)))
    throw ResourceLimitError("min_threshold: staircase longer than " + std::to_string(max_enumeration));
  std::vector<LatticePoint> out;
  MinimalSet prev;
  for (BigInt u = 0; u <= bound; ++u) {
    std::vector<LatticePoint> col = dense_staircase(fix_first(t, u), n - 1, max_enumeration);
    for (const auto& tail : col)
      if (!prev.covers(tail)) out.push_back(prepend(u, tail));
    prev = MinimalSet::from_antichain(std::move(col));
  }
  return out;
}

// Upward-closed set {u >= 0 : g(u) >= 0}, g increasing in every coordinate:
// fix u1 column by column and recurse on the remaining variables. Columns
// only grow with u1, so a tail is new exactly when the previous column's
// tails don't cover it.
MinimalSet staircase(const Polynomial& g, std::size_t max_enumeration) {
  const std::size_t n = g.num_vars();
  if (n <= 16 && multilinear(g))
    return MinimalSet::from_antichain(dense_staircase(to_dense(g), n, max_enumeration));
  if (g.constant_term() >= 0) return MinimalSet{LatticePoint::zeros(n)};
  if (n == 0) return {};
  const BigInt bound = least_feasible_first_coordinate(g);
  if (n == 1) return MinimalSet{LatticePoint{std::vector<BigInt>{bound}}};
  if (bound >= BigInt(static_cast<unsigned long>(max_enumeration)))
    throw ResourceLimitError("min_threshold: staircase longer than " + std::to_string(max_enumeration));
  std::vector<LatticePoint> out;
  MinimalSet prev;
  for (BigInt u = 0; u <= bound; ++u) {
    MinimalSet col = staircase(substitute(g, 0, u), max_enumeration);
    for (const auto& tail : col)
      if (!prev.covers(tail)) out.push_back(prepend(u, tail));
    prev = std::move(col);
  }
  return MinimalSet::from_antichain(std::move(out));
}

}  // namespace

MinimalSet min_threshold(const Polynomial& g, std::size_t max_enumeration) {
  PositivityProfile prof = positivity_profile(g, PositivityMode::Strict);
  if (!prof.all_nonconstant_positive || !prof.zero_linear.empty())
    throw PreconditionError(PreconditionError::Kind::ThresholdPrecondition,
                            "min_threshold: non-constant coefficients of " + to_string(g) + " are not all positive");
  return staircase(g, max_enumeration);
}

void check_solvable(const Polynomial& f, bool require_full) {
  using K = PreconditionError::Kind;
  DominanceReport rep = analyze(f);
  if (f.is_zero()) throw PreconditionError(K::NotDominated, "zero polynomial has no dominant monomial");
  if (!rep.is_square_free) throw PreconditionError(K::NotSquareFree, "polynomial is not square-free");
  if (!rep.is_dominated) throw PreconditionError(K::NotDominated, "polynomial is not dominated");
  if (rep.leading_coefficient <= 0)
    throw PreconditionError(K::NonPositiveLeading,
                            "leading coefficient " + rep.leading_coefficient.get_str() + " is not positive");
  if (require_full && !rep.dominant_is_full_product)
    throw PreconditionError(K::DominantNotFullProduct, "dominant monomial is not the product of all variables");
}

std::vector<std::string> reducibility_screen(const Polynomial& f) {
  std::vector<std::string> warnings;
  BigInt g = content(f);
  if (g > 1) warnings.push_back("ReducibleSuspected: coefficients share the factor " + g.get_str());

  const std::size_t n = f.num_vars();
  if (n < 2 || n > 12 || f.is_zero()) return warnings;
  // f = g(x_A) * h(x_B) over a partition A | B iff the coefficient table
  // indexed by (A-part, B-part) of each monomial has rank one.
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n) - 1; ++mask) {
    if (!(mask & 1)) continue;  // A always contains variable 0
    std::map<std::pair<Monomial, Monomial>, BigInt> table;
    std::set<Monomial> rows, cols;
    for (const auto& [m, c] : f.terms()) {
      Monomial a(n), b(n);
      for (std::size_t i = 0; i < n; ++i) (mask >> i & 1 ? a : b)[i] = m[i];
      table.emplace(std::pair{a, b}, c);
      rows.insert(a);
      cols.insert(b);
    }
    const auto& [pivot_key, pivot] = *table.begin();
    auto at = [&](const Monomial& r, const Monomial& c) {
      auto it = table.find({r, c});
      return it == table.end() ? BigInt(0) : it->second;
    };
    bool rank_one = true;
    for (const auto& r : rows) {
      for (const auto& c : cols) {
        if (at(r, c) * pivot != at(r, pivot_key.second) * at(pivot_key.first, c)) {
          rank_one = false;
          break;
        }
      }
      if (!rank_one) break;
    }
    if (rank_one) {
      std::string part;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) part += (part.empty() ? "x" : ",x") + std::to_string(i + 1);
      warnings.push_back("ReducibleSuspected: polynomial factors over disjoint variables {" + part + "} | rest");
      break;
    }
  }
  return warnings;
}

struct StructureSolver::State {
  std::mutex mutex;
  std::unordered_map<std::string, MinimalSet> cone_memo;
  std::unordered_map<std::string, MinimalSet> threshold_memo;
  std::atomic<std::size_t> recursive_calls{0};
  std::atomic<std::size_t> memo_hits{0};
  std::atomic<std::size_t> candidate_tuples{0};
  std::atomic<std::size_t> unique_candidates{0};
  std::atomic<std::size_t> threshold_searches{0};
  std::atomic<std::size_t> threshold_memo_hits{0};
  std::atomic<std::size_t> evicted_points{0};
};

StructureSolver::StructureSolver(SolverOptions options)
    : options_(options), state_(std::make_unique<State>()) {
  if (options_.threads == 0) options_.threads = 1;
}

StructureSolver::~StructureSolver() = default;

Diagnostics StructureSolver::diagnostics() const {
  Diagnostics d;
  d.recursive_calls = state_->recursive_calls;
  d.memo_hits = state_->memo_hits;
  d.candidate_tuples = state_->candidate_tuples;
  d.unique_candidates = state_->unique_candidates;
  d.threshold_searches = state_->threshold_searches;
  d.threshold_memo_hits = state_->threshold_memo_hits;
  d.evicted_points = state_->evicted_points;
  return d;
}

MinimalSet StructureSolver::threshold_cached(const Polynomial& g) {
  const std::string key = memo_key(g);
  {
    std::lock_guard lock(state_->mutex);
    auto it = state_->threshold_memo.find(key);
    if (it != state_->threshold_memo.end()) {
      ++state_->threshold_memo_hits;
      return it->second;
    }
  }
  ++state_->threshold_searches;
  MinimalSet result = min_threshold(g, options_.max_enumeration);
  std::lock_guard lock(state_->mutex);
  state_->threshold_memo.emplace(key, result);
  return result;
}

MinimalSet StructureSolver::cone(const Polynomial& f, std::size_t depth, SolveReport* trace) {
  ++state_->recursive_calls;
  if (depth > options_.max_depth)
    throw ResourceLimitError("recursion deeper than " + std::to_string(options_.max_depth));

  const std::string key = memo_key(f);
  if (!trace) {
    std::lock_guard lock(state_->mutex);
    auto it = state_->cone_memo.find(key);
    if (it != state_->cone_memo.end()) {
      ++state_->memo_hits;
      return it->second;
    }
  }

  const std::size_t n = f.num_vars();
  MinimalSet result;
  if (n == 0) {
    if (f.constant_term() >= 0) result.add(LatticePoint{});
  } else if (n == 1) {
    result = min_cone_1d(linear_coefficient(f, 0), f.constant_term());
  } else if (n == 2) {
    result = min_cone_2d(BilinearForm::from_polynomial(f), options_.max_enumeration);
  } else {
    // Minimal sets of the partial derivatives, each with its variable removed,
    // lifted back to n coordinates by inserting 1 at the removed slot.
    std::vector<std::vector<LatticePoint>> lifted(n);
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<std::size_t> keep;
      for (std::size_t i = 0; i < n; ++i)
        if (i != s) keep.push_back(i);
      MinimalSet sub = cone(restrict_variables(partial_derivative(f, s), keep), depth + 1, nullptr);
      for (const auto& p : sub) lifted[s].push_back(expand_at(p, s));
      if (trace) trace->derivative_cones.push_back(std::move(sub));
    }

    std::vector<LatticePoint> candidates;
    bool capped = false;
    bool any_empty = false;
    for (const auto& l : lifted) any_empty = any_empty || l.empty();
    std::size_t visited = 0;
    if (any_empty) {
      // no candidates at all
    } else if (options_.prune_candidates) {
      // A dominated supremum only reaches points some smaller one already
      // reaches, so each round keeps the minimal ones. Small factors first.
      std::vector<std::size_t> order(n);
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t x, std::size_t y) { return lifted[x].size() < lifted[y].size(); });
      std::vector<LatticePoint> acc = minimal_elements(lifted[order[0]]).sorted();
      for (std::size_t k = 1; k < n && !capped; ++k) {
        std::vector<LatticePoint> next;
        for (const auto& a : acc) {
          for (const auto& b : lifted[order[k]]) {
            if (visited == options_.max_candidates) {
              capped = true;
              break;
            }
            ++visited;
            LatticePoint m = a;
            for (std::size_t i = 0; i < n; ++i)
              if (b[i] > m[i]) m[i] = b[i];
            next.push_back(std::move(m));
          }
          if (capped) break;
        }
        // a cut-short last round still holds genuine candidates
        if (capped && k + 1 < n) next.clear();
        acc = minimal_elements(std::move(next)).sorted();
      }
      candidates = std::move(acc);
    } else {
      std::set<LatticePoint, LexLess> unique;
      std::vector<std::size_t> idx(n, 0);
      std::vector<LatticePoint> choice(n);
      while (true) {
        if (visited == options_.max_candidates) {
          capped = true;
          break;
        }
        ++visited;
        for (std::size_t s = 0; s < n; ++s) choice[s] = lifted[s][idx[s]];
        unique.insert(supremum(choice));
        std::size_t s = 0;
        while (s < n && ++idx[s] == lifted[s].size()) idx[s++] = 0;
        if (s == n) break;
      }
      candidates.assign(unique.begin(), unique.end());
    }
    state_->candidate_tuples += visited;
    state_->unique_candidates += candidates.size();
    if (trace) trace->candidates = candidates;

    // Each candidate d has every coefficient of degree >= 2 positive in
    // f(X + d); S collects the linear coefficients that are still zero.
    auto process = [&](const LatticePoint& d, std::vector<LatticePoint>& into) {
      const Polynomial fd = shift(f, d);
      std::vector<std::size_t> zero;
      for (std::size_t s = 0; s < n; ++s)
        if (linear_coefficient(fd, s) == 0) zero.push_back(s);
      std::vector<LatticePoint> branches;
      if (zero.empty()) {
        branches.push_back(d);
      } else {
        for (std::size_t t = 0; t < n; ++t)
          if (std::find(zero.begin(), zero.end(), t) == zero.end()) branches.push_back(d + LatticePoint::unit(n, t));
        for (std::size_t i = 0; i < zero.size(); ++i)
          for (std::size_t j = i + 1; j < zero.size(); ++j)
            branches.push_back(d + LatticePoint::unit(n, zero[i]) + LatticePoint::unit(n, zero[j]));
      }
      for (const auto& b : branches) {
        MinimalSet th = threshold_cached(b == d ? fd : shift(f, b));
        for (const auto& u : th) into.push_back(u + b);
      }
    };

    const std::size_t workers = std::min<std::size_t>(options_.threads, candidates.size());
    std::vector<LatticePoint> collected;
    if (workers <= 1) {
      for (const auto& d : candidates) process(d, collected);
    } else {
      std::vector<std::vector<LatticePoint>> partial(workers);
      std::vector<std::exception_ptr> errors(workers);
      std::vector<std::thread> pool;
      const std::size_t chunk = (candidates.size() + workers - 1) / workers;
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            const std::size_t lo = w * chunk, hi = std::min(candidates.size(), lo + chunk);
            for (std::size_t i = lo; i < hi; ++i) process(candidates[i], partial[w]);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
      for (auto& t : pool) t.join();
      for (auto& e : errors)
        if (e) std::rethrow_exception(e);
      for (auto& p : partial)
        collected.insert(collected.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    }
    const std::size_t total = collected.size();
    result = minimal_elements(std::move(collected));
    state_->evicted_points += total - result.size();

    if (capped)
      throw ResourceLimitError("more than " + std::to_string(options_.max_candidates) + " candidate tuples",
                               depth == 0 ? result : MinimalSet{});
  }

  std::lock_guard lock(state_->mutex);
  state_->cone_memo.emplace(key, result);
  return result;
}

MinimalSet StructureSolver::min_cone(const Polynomial& f) {
  check_solvable(f, true);
  return cone(f, 0, nullptr);
}

SolveReport StructureSolver::solve(const Polynomial& f) {
  check_solvable(f, false);
  SolveReport report;
  report.variables = f.used_variables();
  const Polynomial g = restrict_variables(f, report.variables);
  if (report.variables.size() != f.num_vars()) {
    std::string dropped;
    for (std::size_t i : analyze(f).unused_variables) dropped += (dropped.empty() ? "x" : ", x") + std::to_string(i + 1);
    report.warnings.push_back("stripped unused variables: " + dropped);
  }
  for (auto& w : reducibility_screen(g)) report.warnings.push_back(std::move(w));

  report.min_cone = cone(g, 0, &report);
  for (const auto& d : report.min_cone) {
    if (evaluate(g, d) != 0) continue;
    const Polynomial gd = shift(g, d);
    BigInt k = 0;
    for (std::size_t s = 0; s < g.num_vars(); ++s) k = gcd(k, linear_coefficient(gd, s));
    report.structures.push_back(d);
    report.critical_sizes.push_back(k);
  }
  report.diagnostics = diagnostics();
  return report;
}

}  // namespace arith
