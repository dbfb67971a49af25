#pragma once

#include <iosfwd>
#include <random>
#include <vector>

#include "qorb/rational.hpp"

namespace qorb {

// Element of the cyclotomic field Q(zeta_N), stored as coefficients of the
// power basis 1, z, ..., z^{phi(N)-1}, always reduced modulo the N-th
// cyclotomic polynomial.  Order 1 is plain Q.
//
// Mixing rule: order 1 promotes to the other operand's order; two distinct
// orders > 1 never mix implicitly and raise IncompatibleField.
class Cyc {
 public:
  Cyc() : order_(1), c_(1) {}
  explicit Cyc(const Rat& r) : order_(1), c_{r} {}
  explicit Cyc(long n) : order_(1), c_{rat(n)} {}
  Cyc(int order, std::vector<Rat> coeffs);  // must have size phi(order)

  static Cyc zero(int order = 1);
  static Cyc one(int order = 1);
  // zeta_N^power as an element of Q(zeta_N)
  static Cyc zeta(int order, long power = 1);

  int order() const { return order_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;  // all basis coefficients beyond the constant vanish
  Rat rational_part() const; // constant coefficient; whole value iff is_rational()

  Cyc operator-() const;
  Cyc operator+(const Cyc& o) const;
  Cyc operator-(const Cyc& o) const;
  Cyc operator*(const Cyc& o) const;
  Cyc inverse() const;       // DivisionByZero on zero
  Cyc operator/(const Cyc& o) const { return *this * o.inverse(); }
  Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
  Cyc& operator-=(const Cyc& o) { return *this = *this - o; }
  Cyc& operator*=(const Cyc& o) { return *this = *this * o; }

  bool operator==(const Cyc& o) const;
  bool operator!=(const Cyc& o) const { return !(*this == o); }

  // Galois conjugate z -> z^k for gcd(k, order) = 1; identity on rationals.
  Cyc galois(long k) const;

  // Re-express in Q(zeta_M); requires this to be rational or M == order.
  Cyc promoted(int M) const;

  std::string str() const;

 private:
  int order_;
  std::vector<Rat> c_;
};

std::ostream& operator<<(std::ostream& os, const Cyc& c);

inline Cyc operator*(const Rat& r, const Cyc& c) { return Cyc(r) * c; }
inline Cyc operator*(long n, const Cyc& c) { return Cyc(n) * c; }

int euler_phi(int n);
// Monic N-th cyclotomic polynomial, ascending coefficients, degree phi(N).
const std::vector<Rat>& cyclotomic_poly(int n);

// Uniform small random element (rational coefficients in [-max, max]).
Cyc random_cyc(std::mt19937_64& rng, int order, long max = 9);

}  // namespace qorb
