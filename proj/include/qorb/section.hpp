#pragma once

#include "qorb/weyl.hpp"

namespace qorb {

// Term key of an exterior form on affine base coordinates with values in
// the fiberwise Weyl algebra: h^k * x^beta * y^alpha * dx^S.  The dx subset
// is a bitmask, kept canonical (strictly increasing factors); x and dx
// carry filtration weight zero.
struct SecKey {
  int hbar = 0;
  YDeg xdeg;
  YDeg ydeg;
  unsigned dxmask = 0;

  auto operator<=>(const SecKey&) const = default;
};

inline int sec_weight(const SecKey& k) { return 2 * k.hbar + deg_total(k.ydeg); }
inline int form_degree(const SecKey& k) {
  return __builtin_popcount(k.dxmask);
}

// sign of wedging dx^i from the left into the mask; requires i not in mask
inline int wedge_left_sign(unsigned mask, int i) {
  return (__builtin_popcount(mask & ((1u << i) - 1u)) % 2 == 0) ? 1 : -1;
}
// sign of concatenating dx^S dx^T, zero overlap assumed
inline int wedge_merge_sign(unsigned s, unsigned t) {
  int inv = 0;
  for (unsigned rest = t; rest != 0; rest &= rest - 1) {
    int bit = __builtin_ctz(rest);
    inv += __builtin_popcount(s >> (bit + 1));
  }
  return (inv % 2 == 0) ? 1 : -1;
}

// Sparse exact section with the same exclusive weight-cap convention as the
// fiber Weyl algebra: terms of weight >= cap are not stored and are not
// claimed to be known.
class Section {
 public:
  Section() : cap_(kUncapped) {}
  explicit Section(SpacePtr sp, int cap = kUncapped) : sp_(std::move(sp)), cap_(cap) {}
  static Section scalar(SpacePtr sp, const Cyc& c, int cap = kUncapped);
  static Section monomial(SpacePtr sp, const SecKey& k, const Cyc& c, int cap = kUncapped);
  static Section x_coord(SpacePtr sp, int i, int cap = kUncapped);
  static Section y_coord(SpacePtr sp, int i, int cap = kUncapped);

  const SpacePtr& space() const { return sp_; }
  int dim() const { return sp_ ? sp_->dim : 0; }
  int cap() const { return cap_; }
  const std::map<SecKey, Cyc>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  int weight() const;  // min term weight, kUncapped when zero
  Cyc coeff(const SecKey& k) const;
  void add_term(const SecKey& k, const Cyc& c);  // canonical key; respects cap

  Section operator-() const;
  Section operator+(const Section& o) const;
  Section operator-(const Section& o) const;
  Section operator*(const Cyc& c) const;
  Section& operator+=(const Section& o) { return *this = *this + o; }
  Section& operator-=(const Section& o) { return *this = *this - o; }
  bool operator==(const Section& o) const { return t_ == o.t_; }

  Section shifted_hbar(int k) const;    // multiply by h^k, cap shifts by 2k
  Section truncated(int cap) const;     // drop terms of weight >= cap
  Section with_cap(int cap) const;      // relabel only
  bool equal_below(const Section& o, int bound) const;

 private:
  SpacePtr sp_;
  int cap_;
  std::map<SecKey, Cyc> t_;
};

void check_same_space(const Section& a, const Section& b);

// graded product: fiberwise Weyl product in y, commutative in x, wedge in
// dx; caps combine by the min rule through the weight filtration
Section smul(const Section& a, const Section& b);
// graded commutator a b - (-1)^{pq} b a summed over homogeneous form degrees
Section graded_comm(const Section& a, const Section& b);

Section koszul_delta(const Section& a);      // dx^i d/dy^i, cap drops by 1
Section koszul_delta_inv(const Section& a);  // per-monomial homotopy, cap grows by 1
Section sigma(const Section& a);             // restriction to y = 0, dx = 0
Section base_d(const Section& a);            // de Rham differential dx^i d/dx^i

// simultaneous linear substitution of all three variable families:
// x^i -> sum_j S_ij x^j, same for y and dx
Section subst_all(const Section& a, const Mat& S);
// the group action on sections; straight law act(g, act(h, a)) = act(gh, a)
Section act_on_section(const Mat& g, const Section& a);

Section random_section(std::mt19937_64& rng, SpacePtr sp, int maxdeg, int nterms,
                       int cap = kUncapped);

}  // namespace qorb
