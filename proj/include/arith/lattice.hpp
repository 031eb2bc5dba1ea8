#pragma once

#include "arith/bigint.hpp"

#include <cstddef>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace arith {

/// A point of Z^n. Solver outputs keep every coordinate >= 0; shift offsets
/// may be arbitrary integers, so the type itself does not enforce a sign.
class LatticePoint {
 public:
  LatticePoint() = default;
  LatticePoint(std::initializer_list<long> coords);
  explicit LatticePoint(std::vector<BigInt> coords) : coords_(std::move(coords)) {}

  static LatticePoint filled(std::size_t n, long value);
  static LatticePoint zeros(std::size_t n) { return filled(n, 0); }
  /// Standard unit vector e_i.
  static LatticePoint unit(std::size_t n, std::size_t i);

  std::size_t size() const { return coords_.size(); }
  bool empty() const { return coords_.empty(); }
  const BigInt& operator[](std::size_t i) const { return coords_[i]; }
  BigInt& operator[](std::size_t i) { return coords_[i]; }
  std::span<const BigInt> coords() const { return coords_; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  /// Entrywise partial order: p <= q iff p_i <= q_i for every i.
  bool leq(const LatticePoint& other) const;

  LatticePoint& operator+=(const LatticePoint& other);
  friend LatticePoint operator+(LatticePoint a, const LatticePoint& b) { return a += b; }
  friend LatticePoint operator-(const LatticePoint& a, const LatticePoint& b);

  friend bool operator==(const LatticePoint& a, const LatticePoint& b) = default;

 private:
  std::vector<BigInt> coords_;
};

/// Total order used for canonical output: shorter first, then lexicographic.
struct LexLess {
  bool operator()(const LatticePoint& a, const LatticePoint& b) const;
};

std::string to_string(const LatticePoint& p);

/// An antichain under the entrywise order. `add` keeps only minimal elements:
/// a point is rejected when some member is <= it, otherwise it is inserted and
/// every member >= it is evicted.
class MinimalSet {
 public:
  using Storage = std::set<LatticePoint, LexLess>;

  MinimalSet() = default;
  MinimalSet(std::initializer_list<LatticePoint> points);

  /// Returns true if the point was inserted.
  bool add(const LatticePoint& p);
  void merge(const MinimalSet& other);
  /// Caller promises the points are pairwise incomparable; nothing is checked.
  static MinimalSet from_antichain(std::vector<LatticePoint> points);

  bool contains(const LatticePoint& p) const { return points_.contains(p); }
  /// True if some member is <= p.
  bool covers(const LatticePoint& p) const;
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }
  std::vector<LatticePoint> sorted() const { return {points_.begin(), points_.end()}; }

  std::size_t evicted() const { return evicted_; }

  /// No two members are comparable. Checked from scratch, not trusted.
  bool is_antichain() const;

  friend bool operator==(const MinimalSet& a, const MinimalSet& b) { return a.points_ == b.points_; }

 private:
  Storage points_;
  std::size_t evicted_ = 0;
};

std::string to_string(const MinimalSet& s);

/// Minimal elements of an arbitrary batch, duplicates allowed. Much faster
/// than repeated `add` in three or fewer dimensions.
MinimalSet minimal_elements(std::vector<LatticePoint> points);

}  // namespace arith
