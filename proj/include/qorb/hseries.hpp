#pragma once

#include <climits>
#include <map>
#include <ostream>
#include <sstream>

#include "qorb/cyclotomic.hpp"

namespace qorb {

// Truncated Laurent series in the formal parameter h.  Terms live in
// exponents [floor, cap); cap is EXCLUSIVE and INT_MAX means exact
// (untruncated).  Operations propagate caps so that every retained
// coefficient is fully determined by the operands' retained coefficients:
//   mul: cap = min(cap1 + floor2, cap2 + floor1)
//   add: cap = min(cap1, cap2)
//   inverse: cap = cap - 2*lead, where lead is the actual lowest exponent.
class HSeries {
 public:
  static constexpr int kExact = INT_MAX;

  HSeries() : floor_(0), cap_(kExact) {}
  explicit HSeries(const Cyc& c, int floor = 0, int cap = kExact)
      : floor_(floor), cap_(cap) {
    set(floor, c);
  }
  static HSeries zero(int floor = 0, int cap = kExact) {
    HSeries s;
    s.floor_ = floor;
    s.cap_ = cap;
    return s;
  }
  static HSeries monomial(int k, const Cyc& c, int cap = kExact) {
    HSeries s = zero(k, cap);
    s.set(k, c);
    return s;
  }

  int floor() const { return floor_; }
  int cap() const { return cap_; }
  const std::map<int, Cyc>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  Cyc coeff(int k) const {
    auto it = t_.find(k);
    return it == t_.end() ? Cyc() : it->second;
  }

  void set(int k, const Cyc& c) {
    if (k < floor_) floor_ = k;
    if (cap_ != kExact && k >= cap_) return;  // beyond precision: discard
    if (c.is_zero())
      t_.erase(k);
    else
      t_[k] = c;
  }

  // Lowest exponent carrying a nonzero coefficient; floor_ if none.
  int lead() const { return t_.empty() ? floor_ : t_.begin()->first; }

  HSeries operator-() const {
    HSeries r = *this;
    for (auto& [k, c] : r.t_) c = -c;
    return r;
  }

  HSeries operator+(const HSeries& o) const {
    HSeries r = zero(std::min(floor_, o.floor_), std::min(cap_, o.cap_));
    for (const auto& [k, c] : t_) r.set(k, c);
    for (const auto& [k, c] : o.t_) r.set(k, r.coeff(k) + c);
    return r;
  }
  HSeries operator-(const HSeries& o) const { return *this + (-o); }

  HSeries operator*(const HSeries& o) const {
    int cap = kExact;
    if (cap_ != kExact) cap = sat_add(cap_, o.floor_);
    if (o.cap_ != kExact) cap = std::min(cap, sat_add(o.cap_, floor_));
    HSeries r = zero(sat_add(floor_, o.floor_), cap);
    for (const auto& [k1, c1] : t_)
      for (const auto& [k2, c2] : o.t_) r.set(k1 + k2, r.coeff(k1 + k2) + c1 * c2);
    return r;
  }

  // Multiplicative inverse.  A monomial inverts exactly; anything longer
  // must carry a finite cap (truncate first), since its true inverse is an
  // infinite series and silently picking a precision would be dishonest.
  HSeries inverse() const {
    if (t_.empty()) throw Error(ErrorKind::DivisionByZero, "inverse of zero series");
    int m = lead();
    Cyc u_inv = t_.begin()->second.inverse();
    if (is_monomial() && cap_ == kExact) return monomial(-m, u_inv);
    if (cap_ == kExact)
      throw Error(ErrorKind::InvalidInput,
                  "inverse of an exact multi-term series is infinite; truncate first");
    int out_cap = cap_ - 2 * m;
    HSeries r = zero(-m, out_cap);
    if (-m >= out_cap) return r;
    r.t_[-m] = u_inv;
    // Long division: the coefficient of this * r at each product exponent
    // j >= 1 must vanish; the unknown r-coefficient at -m + j pairs with the
    // lead, every earlier r-coefficient pairs with the tail.
    for (int j = 1; -m + j < out_cap; ++j) {
      Cyc acc = Cyc();
      for (const auto& [k, c] : t_) {
        int rk = j - k;
        if (rk >= -m && rk < -m + j) acc += c * r.coeff(rk);
      }
      Cyc val = -(u_inv * acc);
      if (!val.is_zero()) r.t_[-m + j] = val;
    }
    return r;
  }

  HSeries truncated(int cap) const {
    HSeries r = zero(floor_, std::min(cap_, cap));
    for (const auto& [k, c] : t_)
      if (k < r.cap_) r.t_[k] = c;
    return r;
  }

  bool operator==(const HSeries& o) const { return cap_ == o.cap_ && t_ == o.t_; }
  bool operator!=(const HSeries& o) const { return !(*this == o); }

  bool is_monomial() const { return t_.size() <= 1; }

  // Agreement of all coefficients below an explicit bound.
  bool equal_below(const HSeries& o, int bound) const {
    for (int k = std::min(lead(), o.lead()); k < bound; ++k)
      if (coeff(k) != o.coeff(k)) return false;
    return true;
  }

  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : t_) {
      if (!first) os << " + ";
      os << "(" << c.str() << ")h^" << k;
      first = false;
    }
    if (first) os << "0";
    if (cap_ != kExact) os << " [cap " << cap_ << ")";
    return os.str();
  }

 private:
  static int sat_add(int a, int b) {
    if (a == kExact || b == kExact) return kExact;
    long s = static_cast<long>(a) + b;
    return s >= kExact ? kExact : static_cast<int>(s);
  }

  int floor_;
  int cap_;
  std::map<int, Cyc> t_;
};

inline std::ostream& operator<<(std::ostream& os, const HSeries& s) { return os << s.str(); }

}  // namespace qorb
