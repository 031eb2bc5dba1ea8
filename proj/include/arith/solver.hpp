#pragma once

#include "arith/lattice.hpp"
#include "arith/polynomial.hpp"

#include <atomic>
#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace arith {

struct SolverOptions {
  /// Cap on supremum tuples visited per recursion level.
  std::size_t max_candidates = 2'000'000;
  /// Build the candidates one factor at a time, dropping dominated suprema
  /// after each round. Off walks the full Cartesian product; both give the
  /// same min_cone, pruning just skips candidates that can't add anything.
  bool prune_candidates = true;
  /// Cap on recursion depth (number of variables eliminated).
  std::size_t max_depth = 64;
  /// Cap on the length of any single staircase enumeration.
  std::size_t max_enumeration = 10'000'000;
  /// Workers for the candidate loop. Results do not depend on this.
  unsigned threads = 1;
};

struct Diagnostics {
  std::size_t recursive_calls = 0;
  std::size_t memo_hits = 0;
  std::size_t candidate_tuples = 0;    // supremum tuples (pairs, when pruning) visited
  std::size_t unique_candidates = 0;   // candidates left after deduplication or pruning
  std::size_t threshold_searches = 0;  // min C evaluations actually run
  std::size_t threshold_memo_hits = 0;
  std::size_t evicted_points = 0;      // threshold points (duplicates included) that were not minimal
};

struct SolveReport {
  /// Original (0-based) indices of the variables the solve ran over; unused
  /// variables are stripped and every point below lives in these coordinates.
  std::vector<std::size_t> variables;
  MinimalSet min_cone;
  /// Points of min_cone with f(d) = 0, sorted.
  std::vector<LatticePoint> structures;
  /// gcd of the linear coefficients of f(X + d), parallel to `structures`.
  std::vector<BigInt> critical_sizes;
  /// Top level only: minimal sets of the partial derivatives (variable s
  /// removed) and the candidate suprema formed from them (deduplicated, and
  /// only the minimal ones when pruning).
  std::vector<MinimalSet> derivative_cones;
  std::vector<LatticePoint> candidates;
  std::vector<std::string> warnings;
  Diagnostics diagnostics;
};

/// Inserts a 1 at position s (0-based): length n-1 -> n.
LatticePoint expand_at(const LatticePoint& d, std::size_t s);

/// Entrywise maximum of a nonempty list of equal-length points.
LatticePoint supremum(std::span<const LatticePoint> points);

/// Minimal antichain of {u in N^n : g(u) >= 0} for g whose non-constant
/// coefficients are all positive (strict sense) and whose linear terms are all
/// present. Zero coordinates are allowed. Throws PreconditionError otherwise.
MinimalSet min_threshold(const Polynomial& g, std::size_t max_enumeration = 10'000'000);

/// Canonical serialization of f, identical for equal polynomials.
std::string memo_key(const Polynomial& f);

/// Throws PreconditionError unless f is square-free, dominated, has a
/// positive leading coefficient and (if `require_full`) its dominant monomial
/// is the product of all variables.
void check_solvable(const Polynomial& f, bool require_full);

/// Warnings from cheap reducibility checks: non-unit content and a
/// factorization into polynomials over disjoint variable sets.
std::vector<std::string> reducibility_screen(const Polynomial& f);

class StructureSolver {
 public:
  explicit StructureSolver(SolverOptions options = {});
  ~StructureSolver();
  StructureSolver(const StructureSolver&) = delete;
  StructureSolver& operator=(const StructureSolver&) = delete;

  /// Minimal elements of D>=0(f). Requires every variable of f to occur.
  MinimalSet min_cone(const Polynomial& f);

  /// min_cone plus D(f), critical-group sizes and the top-level trace.
  /// Unused variables are stripped first.
  SolveReport solve(const Polynomial& f);

  Diagnostics diagnostics() const;
  const SolverOptions& options() const { return options_; }

 private:
  struct State;

  MinimalSet cone(const Polynomial& f, std::size_t depth, SolveReport* trace);
  MinimalSet threshold_cached(const Polynomial& g);

  SolverOptions options_;
  std::unique_ptr<State> state_;
};

inline SolveReport solve(const Polynomial& f, const SolverOptions& options = {}) {
  return StructureSolver(options).solve(f);
}

}  // namespace arith
