#include "arith/polynomial.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace arith {

Monomial Monomial::variable(std::size_t n, std::size_t i) {
  if (i >= n) throw std::out_of_range("Monomial::variable: index out of range");
  Monomial m(n);
  m.exps_[i] = 1;
  return m;
}

Monomial Monomial::from_mask(std::size_t n, std::uint64_t mask) {
  Monomial m(n);
  for (std::size_t i = 0; i < n; ++i)
    if (mask >> i & 1u) m.exps_[i] = 1;
  return m;
}

Exponent Monomial::degree() const {
  Exponent d = 0;
  for (Exponent e : exps_) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  if (size() != other.size()) return false;
  for (std::size_t i = 0; i < size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Monomial: arity mismatch");
  Monomial r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

bool GradedLexGreater::operator()(const Monomial& a, const Monomial& b) const {
  Exponent da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  auto ea = a.exponents(), eb = b.exponents();
  return std::lexicographical_compare(eb.begin(), eb.end(), ea.begin(), ea.end());
}

Polynomial Polynomial::constant(std::size_t n, const BigInt& c) {
  Polynomial p(n);
  p.add_term(Monomial::one(n), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t n, std::size_t i) {
  Polynomial p(n);
  p.add_term(Monomial::variable(n, i), 1);
  return p;
}

BigInt Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt Polynomial::constant_term() const { return coefficient(Monomial::one(n_)); }

Exponent Polynomial::degree() const {
  // GradedLexGreater puts the highest degree first.
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

void Polynomial::add_term(const Monomial& m, const BigInt& c) {
  if (m.size() != n_) throw std::invalid_argument("Polynomial::add_term: arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::vector<std::size_t> Polynomial::used_variables() const {
  std::vector<bool> used(n_, false);
  for (const auto& [m, c] : terms_)
    for (std::size_t i = 0; i < n_; ++i)
      if (m[i] > 0) used[i] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n_; ++i)
    if (used[i]) out.push_back(i);
  return out;
}

void Polynomial::check_same_arity(const Polynomial& other) const {
  if (n_ != other.n_) throw std::invalid_argument("Polynomial: arity mismatch");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_same_arity(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_same_arity(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same_arity(b);
  Polynomial r(a.n_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, v] : r.terms_) v = -v;
  return r;
}

BigInt evaluate(const Polynomial& f, const LatticePoint& p) {
  if (p.size() != f.num_vars()) throw std::invalid_argument("evaluate: dimension mismatch");
  BigInt sum = 0, pw;
  for (const auto& [m, c] : f.terms()) {
    BigInt term = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      mpz_pow_ui(pw.get_mpz_t(), p[i].get_mpz_t(), m[i]);
      term *= pw;
    }
    sum += term;
  }
  return sum;
}

Polynomial partial_derivative(const Polynomial& f, std::size_t s) {
  if (s >= f.num_vars()) throw std::out_of_range("partial_derivative: index out of range");
  Polynomial r(f.num_vars());
  for (const auto& [m, c] : f.terms()) {
    if (m[s] == 0) continue;
    Monomial dm = m;
    dm[s] -= 1;
    r.add_term(dm, c * m[s]);
  }
  return r;
}

Polynomial shift(const Polynomial& f, const LatticePoint& d) {
  if (d.size() != f.num_vars()) throw std::invalid_argument("shift: dimension mismatch");
  Polynomial cur = f;
  BigInt pw;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) continue;
    Polynomial next(f.num_vars());
    for (const auto& [m, c] : cur.terms()) {
      const Exponent k = m[i];
      if (k == 0) {
        next.add_term(m, c);
        continue;
      }
      // x^k -> sum_j C(k, j) d^(k-j) x^j
      Monomial mj = m;
      for (Exponent j = 0; j <= k; ++j) {
        mj[i] = j;
        mpz_pow_ui(pw.get_mpz_t(), d[i].get_mpz_t(), k - j);
        next.add_term(mj, c * binomial(k, j) * pw);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

BigInt linear_coefficient(const Polynomial& f, std::size_t s) {
  if (s >= f.num_vars()) throw std::out_of_range("linear_coefficient: index out of range");
  return f.coefficient(Monomial::variable(f.num_vars(), s));
}

Polynomial substitute(const Polynomial& f, std::size_t var, const BigInt& value) {
  const std::size_t n = f.num_vars();
  if (var >= n) throw std::out_of_range("substitute: index out of range");
  Polynomial r(n - 1);
  BigInt pw;
  for (const auto& [m, c] : f.terms()) {
    std::vector<Exponent> e;
    e.reserve(n - 1);
    for (std::size_t i = 0; i < n; ++i)
      if (i != var) e.push_back(m[i]);
    mpz_pow_ui(pw.get_mpz_t(), value.get_mpz_t(), m[var]);
    r.add_term(Monomial(std::move(e)), c * pw);
  }
  return r;
}

Polynomial restrict_variables(const Polynomial& f, std::span<const std::size_t> keep) {
  for (std::size_t k : keep)
    if (k >= f.num_vars()) throw std::out_of_range("restrict_variables: index out of range");
  Polynomial r(keep.size());
  for (const auto& [m, c] : f.terms()) {
    std::vector<Exponent> e(keep.size());
    Exponent kept_degree = 0;
    for (std::size_t j = 0; j < keep.size(); ++j) {
      e[j] = m[keep[j]];
      kept_degree += e[j];
    }
    if (kept_degree != m.degree())
      throw std::invalid_argument("restrict_variables: dropped variable occurs in f");
    r.add_term(Monomial(std::move(e)), c);
  }
  return r;
}

BigInt content(const Polynomial& f) {
  BigInt g = 0;
  for (const auto& [m, c] : f.terms()) g = gcd(g, c);
  return g;
}

DominanceReport analyze(const Polynomial& f) {
  DominanceReport rep;
  const std::size_t n = f.num_vars();
  std::vector<std::size_t> used = f.used_variables();
  for (std::size_t i = 0, j = 0; i < n; ++i) {
    if (j < used.size() && used[j] == i)
      ++j;
    else
      rep.unused_variables.push_back(i);
  }

  rep.is_square_free = true;
  Monomial envelope(n);
  for (const auto& [m, c] : f.terms()) {
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] > 1) rep.is_square_free = false;
      envelope[i] = std::max(envelope[i], m[i]);
    }
  }
  if (f.is_zero()) {
    rep.is_dominated = false;
    rep.leading_coefficient = 0;
    return rep;
  }
  // A dominant monomial is divisible by every monomial, so it is at least the
  // exponentwise maximum; being itself a monomial of f, it equals it.
  auto it = f.terms().find(envelope);
  if (it != f.terms().end()) {
    rep.is_dominated = true;
    rep.dominant = envelope;
    rep.leading_coefficient = it->second;
    rep.dominant_is_full_product =
        std::all_of(envelope.exponents().begin(), envelope.exponents().end(), [](Exponent e) { return e == 1; });
  } else {
    rep.leading_coefficient = 0;
  }
  return rep;
}

namespace {

// Every nonzero monomial dividing some monomial of f.
std::set<Monomial, GradedLexGreater> creatable_monomials(const Polynomial& f) {
  std::set<Monomial, GradedLexGreater> out;
  const std::size_t n = f.num_vars();
  for (const auto& [m, c] : f.terms()) {
    Monomial k(n);
    // odometer over 0 <= k <= m
    while (true) {
      if (!k.is_constant()) out.insert(k);
      std::size_t i = 0;
      while (i < n && k[i] == m[i]) k[i++] = 0;
      if (i == n) break;
      ++k[i];
    }
  }
  return out;
}

}  // namespace

PositivityProfile positivity_profile(const Polynomial& f, PositivityMode mode) {
  PositivityProfile prof;
  prof.constant_term = f.constant_term();
  const std::size_t n = f.num_vars();
  std::set<Monomial, GradedLexGreater> checked;
  for (std::size_t s = 0; s < n; ++s) {
    checked.insert(Monomial::variable(n, s));
    if (linear_coefficient(f, s) == 0) prof.zero_linear.push_back(s);
  }
  for (const auto& [m, c] : f.terms())
    if (!m.is_constant()) checked.insert(m);
  if (mode == PositivityMode::Strict)
    for (const Monomial& k : creatable_monomials(f)) checked.insert(k);
  for (const Monomial& k : checked)
    if (f.coefficient(k) <= 0) prof.nonpositive.push_back(k);
  prof.all_nonconstant_positive = prof.nonpositive.empty();
  return prof;
}

}  // namespace arith
