#include "arith/lattice.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace arith {

LatticePoint::LatticePoint(std::initializer_list<long> coords) {
  coords_.reserve(coords.size());
  for (long c : coords) coords_.emplace_back(c);
}

LatticePoint LatticePoint::filled(std::size_t n, long value) {
  return LatticePoint(std::vector<BigInt>(n, BigInt(value)));
}

LatticePoint LatticePoint::unit(std::size_t n, std::size_t i) {
  if (i >= n) throw std::out_of_range("LatticePoint::unit: index out of range");
  LatticePoint p = zeros(n);
  p.coords_[i] = 1;
  return p;
}

bool LatticePoint::leq(const LatticePoint& other) const {
  if (size() != other.size()) throw std::invalid_argument("LatticePoint: dimension mismatch");
  for (std::size_t i = 0; i < size(); ++i)
    if (coords_[i] > other.coords_[i]) return false;
  return true;
}

LatticePoint& LatticePoint::operator+=(const LatticePoint& other) {
  if (size() != other.size()) throw std::invalid_argument("LatticePoint: dimension mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

LatticePoint operator-(const LatticePoint& a, const LatticePoint& b) {
  if (a.size() != b.size()) throw std::invalid_argument("LatticePoint: dimension mismatch");
  LatticePoint r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r.coords_[i] -= b.coords_[i];
  return r;
}

bool LexLess::operator()(const LatticePoint& a, const LatticePoint& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string to_string(const LatticePoint& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += p[i].get_str();
  }
  return out + ")";
}

MinimalSet::MinimalSet(std::initializer_list<LatticePoint> points) {
  for (const auto& p : points) add(p);
}

// q <= p forces q <=lex p, so each scan only needs one side of p.
bool MinimalSet::covers(const LatticePoint& p) const {
  auto stop = points_.upper_bound(p);
  if (p.size() <= 2) {
    // a plane antichain in lex order has strictly falling second coordinates,
    // so the last point not past p is the only candidate
    if (stop == points_.begin()) return false;
    return std::prev(stop)->leq(p);
  }
  for (auto it = points_.begin(); it != stop; ++it)
    if (it->leq(p)) return true;
  return false;
}

bool MinimalSet::add(const LatticePoint& p) {
  if (covers(p)) return false;
  for (auto it = points_.lower_bound(p); it != points_.end();) {
    if (p.leq(*it)) {
      it = points_.erase(it);
      ++evicted_;
    } else if (p.size() == 2) {
      break;  // the dominated ones form a run right after p
    } else {
      ++it;
    }
  }
  points_.insert(p);
  return true;
}

MinimalSet MinimalSet::from_antichain(std::vector<LatticePoint> points) {
  MinimalSet s;
  for (auto& p : points) s.points_.insert(std::move(p));
  return s;
}

void MinimalSet::merge(const MinimalSet& other) {
  for (const auto& p : other.points_) add(p);
}

// Members are distinct, so this is an antichain iff every member is minimal.
bool MinimalSet::is_antichain() const { return minimal_elements(sorted()).size() == size(); }

std::string to_string(const MinimalSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& p : s) {
    if (!first) out += ',';
    first = false;
    out += to_string(p);
  }
  return out + "}";
}

// In lex order every earlier point has a first coordinate no larger, so p is
// dominated iff some kept tail is <= p's tail.
MinimalSet minimal_elements(std::vector<LatticePoint> points) {
  std::sort(points.begin(), points.end(), LexLess{});
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.empty() || points.front().size() == 0) return MinimalSet::from_antichain(std::move(points));
  MinimalSet tails;
  std::vector<LatticePoint> kept;
  for (auto& p : points) {
    LatticePoint tail(std::vector<BigInt>(p.begin() + 1, p.end()));
    if (tails.covers(tail)) continue;
    tails.add(tail);
    kept.push_back(std::move(p));
  }
  return MinimalSet::from_antichain(std::move(kept));
}

}  // namespace arith
