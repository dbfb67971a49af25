#pragma once

#include <functional>
#include <map>
#include <memory>
#include <random>
#include <tuple>
#include <utility>

#include "qorb/matrix.hpp"

namespace qorb {

// Multidegree: exponent vector of fixed length equal to the space dimension.
using YDeg = std::vector<int>;

inline int deg_total(const YDeg& a) {
  int s = 0;
  for (int e : a) s += e;
  return s;
}
YDeg deg_add(const YDeg& a, const YDeg& b);

// Cap sentinel shared by all weight-filtered containers: INT_MAX = exact.
constexpr int kUncapped = INT_MAX;
int cap_shift(int cap, int delta);  // saturating cap arithmetic

// Symplectic vector space of dimension 2n with Poisson tensor B^{ij} and its
// inverse omega_{ij} (B * omega = Id).  The standard space uses Darboux pairs
// (1,2), (3,4), ... with B^{12} = 1, omega_{12} = -1.
struct SymplecticSpace {
  int dim;
  Mat B;
  Mat omega;
  std::vector<std::tuple<int, int, Cyc>> b_entries;  // nonzero B entries

  explicit SymplecticSpace(const Mat& form);
};

using SpacePtr = std::shared_ptr<const SymplecticSpace>;
SpacePtr make_space(const Mat& B);
SpacePtr standard_space(int n);  // dimension 2n

// Element of the formal Weyl algebra: sparse sum of terms
// c * h^k * y^alpha with exact scalar c, filtered by weight 2k + |alpha|.
// The cap is exclusive: terms of weight >= cap are not stored and are not
// claimed to be known.  kUncapped means the element is exact.
class Weyl {
 public:
  using Key = std::pair<int, YDeg>;  // (hbar power, y-multidegree)

  Weyl() : cap_(kUncapped) {}
  explicit Weyl(SpacePtr sp, int cap = kUncapped) : sp_(std::move(sp)), cap_(cap) {}
  static Weyl scalar(SpacePtr sp, const Cyc& c, int hbar = 0, int cap = kUncapped);
  static Weyl monomial(SpacePtr sp, int hbar, YDeg deg, const Cyc& c, int cap = kUncapped);
  static Weyl coordinate(SpacePtr sp, int i);  // y^i
  static Weyl linear(SpacePtr sp, const std::vector<Cyc>& v);  // sum v_i y^i

  const SpacePtr& space() const { return sp_; }
  int dim() const { return sp_ ? sp_->dim : 0; }
  int cap() const { return cap_; }
  const std::map<Key, Cyc>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  // Filtration weight: min over stored terms of 2k + |alpha|; kUncapped on 0.
  int weight() const;

  Cyc coeff(int hbar, const YDeg& deg) const;
  void add_term(int hbar, const YDeg& deg, const Cyc& c);  // respects cap

  Weyl operator-() const;
  Weyl operator+(const Weyl& o) const;
  Weyl operator-(const Weyl& o) const;
  Weyl operator*(const Cyc& c) const;
  Weyl& operator+=(const Weyl& o) { return *this = *this + o; }
  Weyl& operator-=(const Weyl& o) { return *this = *this - o; }

  Weyl shifted_hbar(int k) const;  // multiply by h^k (cap shifts by 2k)
  Weyl truncated(int cap) const;
  Weyl with_cap(int cap) const;  // relabel the cap without dropping terms

  bool operator==(const Weyl& o) const { return cap_ == o.cap_ && t_ == o.t_; }
  bool operator!=(const Weyl& o) const { return !(*this == o); }
  // Agreement of all terms of weight < bound.
  bool equal_below(const Weyl& o, int bound) const;

  std::string str() const;

 private:
  SpacePtr sp_;
  int cap_;
  std::map<Key, Cyc> t_;
};

// Exclusive cap of a product of two filtered values: every result term of
// weight < min(cap_a + wmin_b, cap_b + wmin_a) is fully determined.
int product_cap(int cap_a, int wmin_a, int cap_b, int wmin_b);

// Plain commutative product (the symmetric-algebra structure).
Weyl cmul(const Weyl& a, const Weyl& b);
// Moyal product.  The first index of each B contraction differentiates the
// first factor.
Weyl moyal(const Weyl& a, const Weyl& b);
// a o b - b o a
Weyl moyal_comm(const Weyl& a, const Weyl& b);
// partial derivative in y^i
Weyl dy(const Weyl& a, int i);
// substitution y -> S y (an algebra map of the symmetric algebra; it is a
// Moyal automorphism iff S B S^T = B)
Weyl subst(const Weyl& a, const Mat& S);
// Group action a^g = subst(a, g^T), so that (a^h)^g = a^{gh}.
Weyl act_on_weyl(const Mat& g, const Weyl& a);

// Shared Moyal-contraction enumerator.  Enumerates all ways of contracting
// the monomials y^left (differentiated through the first B index) and
// y^right (second index); for each complete assignment calls
// emit(t, c, left_rem, right_rem) where t is the contraction order and c
// collects (1/2)^t, the inverse factorials, the B entries and both falling
// factorials.  The hbar factor h^t is left to the caller.
void moyal_contract(const SymplecticSpace& sp, const YDeg& left, const YDeg& right,
                    const std::function<void(int, const Cyc&, const YDeg&, const YDeg&)>& emit);

// Random polynomial Weyl element: nterms monomials of y-degree <= maxdeg with
// small rational coefficients (hbar power 0).
Weyl random_weyl(std::mt19937_64& rng, const SpacePtr& sp, int maxdeg, int nterms,
                 long cmax = 4);

}  // namespace qorb
