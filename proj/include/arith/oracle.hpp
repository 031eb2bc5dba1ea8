#pragma once

#include "arith/lattice.hpp"
#include "arith/polynomial.hpp"
#include "arith/solver.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace arith::oracle {

/// Closed box [lower, upper] of lattice points.
struct Box {
  LatticePoint lower;
  LatticePoint upper;

  /// [lo, hi]^n
  static Box cube(std::size_t n, long lo, long hi);
  std::size_t dims() const { return lower.size(); }
  /// Number of lattice points, or nullopt if it does not fit in 64 bits.
  std::optional<std::size_t> cells() const;
  bool contains(const LatticePoint& p) const { return lower.leq(p) && p.leq(upper); }
};

inline constexpr std::size_t kDefaultCellCap = 80'000'000;
inline constexpr std::size_t kDefaultColumnCap = 20'000'000;
/// Above this Auto prefers columns even when the cell cap would allow more.
inline constexpr std::size_t kAutoExhaustiveCells = 8'000'000;

/// Exhaustive visits every cell. Columns bisects for the first feasible
/// height along the widest axis, which is valid because the feasible region
/// is closed upwards; it cannot list zeros off the feasible region. Auto
/// picks Exhaustive for boxes up to kAutoExhaustiveCells (and the cell cap).
enum class ScanMethod { Auto, Exhaustive, Columns };

/// Membership in D>=0(f), evaluated from scratch: every required coefficient
/// of f(X + d) is expanded term by term with binomial weights.
bool in_feasible_region(const Polynomial& f, const LatticePoint& d, PositivityMode mode = PositivityMode::Strict);

/// d is an arithmetical structure: f(d) = 0 and d is in the feasible region.
bool is_structure(const Polynomial& f, const LatticePoint& d, PositivityMode mode = PositivityMode::Strict);

struct BoxScan {
  /// Minimal feasible points among those in the box.
  MinimalSet min_cone;
  /// Some minimal point sits on the upper face, so points beyond the box
  /// might change the picture.
  bool boundary_touch = false;
  std::size_t cells = 0;
};

/// Scan plus exact antichain reduction. Throws ResourceLimitError if the
/// chosen method would exceed its cap.
BoxScan min_cone_box(const Polynomial& f, const Box& box, PositivityMode mode = PositivityMode::Strict,
                     std::size_t cell_cap = kDefaultCellCap, ScanMethod method = ScanMethod::Exhaustive,
                     std::size_t column_cap = kDefaultColumnCap);

/// All structures in the box, sorted.
std::vector<LatticePoint> structures_box(const Polynomial& f, const Box& box,
                                         PositivityMode mode = PositivityMode::Strict,
                                         std::size_t cell_cap = kDefaultCellCap);

/// All zeros of f in the box, sorted, ignoring coefficient signs.
std::vector<LatticePoint> zeros_box(const Polynomial& f, const Box& box, std::size_t cell_cap = kDefaultCellCap);

struct VerifyOptions {
  /// Fixed box; when absent the box starts at [1, 30]^n and each axis some
  /// solver point reaches grows by half its length, until every solver point
  /// is strictly inside.
  std::optional<Box> box;
  PositivityMode mode = PositivityMode::Strict;
  ScanMethod method = ScanMethod::Auto;
  std::size_t cell_cap = kDefaultCellCap;
  std::size_t column_cap = kDefaultColumnCap;
};

struct VerifyReport {
  bool agree = false;
  /// False when solver points lie on or beyond the box, or the box is too
  /// big for the caps.
  bool conclusive = false;
  Box box;
  bool grown = false;  // some axis was widened to fit the solver's points
  std::vector<LatticePoint> missed;     // oracle-minimal, absent from the solver
  std::vector<LatticePoint> spurious;   // solver points in the box the oracle rejects
  std::vector<LatticePoint> structures_missed;
  std::vector<LatticePoint> structures_spurious;
  /// Zeros of f in the box that are not structures (exhaustive scans only).
  std::vector<LatticePoint> other_zeros;
  bool exhaustive = false;
  std::size_t cells = 0;
};

/// Compares a solve report against the oracle. Points are taken in the
/// report's (stripped) coordinates.
VerifyReport cross_check(const Polynomial& f, const SolveReport& report, const VerifyOptions& options = {});

}  // namespace arith::oracle
