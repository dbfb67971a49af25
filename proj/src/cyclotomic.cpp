#include "qorb/cyclotomic.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace qorb {

namespace {

using Poly = std::vector<Rat>;  // ascending coefficients

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

// quotient/remainder of a by monic-or-not divisor d (exact rational arithmetic)
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& d) {
  trim(a);
  Poly q;
  if (d.empty()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (a.size() >= d.size()) q.assign(a.size() - d.size() + 1, Rat(0));
  while (a.size() >= d.size()) {
    Rat f = a.back() / d.back();
    size_t shift = a.size() - d.size();
    q[shift] = f;
    for (size_t i = 0; i < d.size(); ++i) a[shift + i] -= f * d[i];
    trim(a);
  }
  return {q, a};
}

Poly poly_mod(const Poly& a, const Poly& d) { return poly_divmod(a, d).second; }

}  // namespace

int euler_phi(int n) {
  int result = n, m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<Rat>& cyclotomic_poly(int n) {
  static std::map<int, Poly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed recursively.
  std::function<const Poly&(int)> get = [&](int k) -> const Poly& {
    auto found = cache.find(k);
    if (found != cache.end()) return found->second;
    Poly num(k + 1, Rat(0));
    num[0] = rat(-1);
    num[k] = rat(1);
    for (int d = 1; d < k; ++d) {
      if (k % d != 0) continue;
      auto [q, r] = poly_divmod(num, get(d));
      if (!r.empty()) throw Error(ErrorKind::InvalidInput, "cyclotomic recursion failed");
      num = q;
    }
    return cache.emplace(k, std::move(num)).first->second;
  };
  return get(n);
}

Cyc::Cyc(int order, std::vector<Rat> coeffs) : order_(order), c_(std::move(coeffs)) {
  if (order_ < 1) throw Error(ErrorKind::InvalidInput, "cyclotomic order must be >= 1");
  size_t phi = static_cast<size_t>(euler_phi(order_));
  if (c_.size() != phi)
    throw Error(ErrorKind::InvalidInput, "cyclotomic coefficient vector has wrong length");
}

Cyc Cyc::zero(int order) { return Cyc(order, std::vector<Rat>(euler_phi(order), Rat(0))); }

Cyc Cyc::one(int order) {
  std::vector<Rat> c(euler_phi(order), Rat(0));
  c[0] = rat(1);
  return Cyc(order, c);
}

Cyc Cyc::zeta(int order, long power) {
  long p = power % order;
  if (p < 0) p += order;
  Poly raw(static_cast<size_t>(p) + 1, Rat(0));
  raw[static_cast<size_t>(p)] = rat(1);
  Poly red = poly_mod(raw, cyclotomic_poly(order));
  red.resize(static_cast<size_t>(euler_phi(order)), Rat(0));
  return Cyc(order, red);
}

bool Cyc::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyc::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat Cyc::rational_part() const { return c_[0]; }

Cyc Cyc::promoted(int M) const {
  if (order_ == M) return *this;
  if (order_ == 1) {
    std::vector<Rat> c(euler_phi(M), Rat(0));
    c[0] = c_[0];
    return Cyc(M, c);
  }
  if (is_rational()) {
    std::vector<Rat> c(euler_phi(M), Rat(0));
    c[0] = c_[0];
    return Cyc(M, c);
  }
  throw Error(ErrorKind::IncompatibleField,
              "cannot mix cyclotomic orders " + std::to_string(order_) + " and " +
                  std::to_string(M));
}

namespace {
// Align two elements to a common field per the promotion rule.
std::pair<Cyc, Cyc> aligned(const Cyc& a, const Cyc& b) {
  if (a.order() == b.order()) return {a, b};
  if (a.order() == 1) return {a.promoted(b.order()), b};
  if (b.order() == 1) return {a, b.promoted(a.order())};
  // Allow values that happen to be rational to cross orders.
  if (a.is_rational()) return {a.promoted(b.order()), b};
  if (b.is_rational()) return {a, b.promoted(a.order())};
  throw Error(ErrorKind::IncompatibleField,
              "cannot mix cyclotomic orders " + std::to_string(a.order()) + " and " +
                  std::to_string(b.order()));
}
}  // namespace

Cyc Cyc::operator-() const {
  Cyc r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyc Cyc::operator+(const Cyc& o) const {
  auto [a, b] = aligned(*this, o);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  return a;
}

Cyc Cyc::operator-(const Cyc& o) const { return *this + (-o); }

Cyc Cyc::operator*(const Cyc& o) const {
  auto [a, b] = aligned(*this, o);
  Poly prod = poly_mul(a.c_, b.c_);
  Poly red = poly_mod(prod, cyclotomic_poly(a.order_));
  red.resize(static_cast<size_t>(euler_phi(a.order_)), Rat(0));
  return Cyc(a.order_, std::move(red));
}

Cyc Cyc::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (order_ == 1) return Cyc(order_, {rat(1) / c_[0]});
  // Extended Euclid over Q[x]: u*a + v*Phi = gcd = const, so a^{-1} = u/gcd.
  Poly r0 = cyclotomic_poly(order_), r1 = c_;
  trim(r1);
  Poly s0 = {}, s1 = {rat(1)};  // coefficients of a in the Bezout combination
  while (true) {
    trim(r1);
    if (r1.empty()) throw Error(ErrorKind::DivisionByZero, "not invertible");
    if (r1.size() == 1) break;  // nonzero constant gcd reached
    auto [q, rem] = poly_divmod(r0, r1);
    Poly s2 = s0;
    Poly qs = poly_mul(q, s1);
    s2.resize(std::max(s2.size(), qs.size()), Rat(0));
    for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    trim(s2);
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = s2;
  }
  Rat g = r1[0];
  Poly inv = s1;
  for (auto& x : inv) x /= g;
  inv = poly_mod(inv, cyclotomic_poly(order_));
  inv.resize(static_cast<size_t>(euler_phi(order_)), Rat(0));
  return Cyc(order_, std::move(inv));
}

bool Cyc::operator==(const Cyc& o) const {
  if (order_ == o.order_) return c_ == o.c_;
  if (is_rational() && o.is_rational()) return c_[0] == o.c_[0];
  return false;
}

Cyc Cyc::galois(long k) const {
  if (order_ == 1) return *this;
  if (std::gcd(static_cast<long>(order_), ((k % order_) + order_) % order_) != 1)
    throw Error(ErrorKind::InvalidInput, "galois exponent not coprime to order");
  Cyc r = Cyc::zero(order_);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    r += Cyc(c_[i]) * Cyc::zeta(order_, k * static_cast<long>(i));
  }
  return r;
}

std::string Cyc::str() const {
  std::ostringstream os;
  if (order_ == 1) {
    os << rat_str(c_[0]);
    return os.str();
  }
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    os << rat_str(c_[i]);
    if (i > 0) os << "*z" << order_ << "^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyc& c) { return os << c.str(); }

Cyc random_cyc(std::mt19937_64& rng, int order, long max) {
  std::vector<Rat> c(euler_phi(order));
  for (auto& x : c) x = random_rat(rng, max);
  return Cyc(order, std::move(c));
}

}  // namespace qorb
