#pragma once

#include <map>
#include <random>
#include <tuple>
#include <vector>

#include "qorb/group.hpp"
#include "qorb/weyl.hpp"

namespace qorb {

// V = ker(g - Id) (+) im(g - Id), both symplectic and B-orthogonal to each
// other.  fixed/moving hold basis columns; proj is the matrix of the
// projection onto V_g along the image, expressed in the fixed basis (so
// proj * fixed = Id_{2m}).  form_inv is B^g, the inverse of omega restricted
// to V_g: the Poisson pairing of the V_g coordinates.
struct FixedSplitting {
  Mat fixed;     // 2n x 2m
  Mat moving;    // 2n x (2n - 2m)
  Mat omega_res; // 2m x 2m, (omega_res)_{ab} = v_a^T omega v_b
  Mat form_inv;  // B^g = omega_res^{-1}
  Mat proj;      // 2m x 2n
};

FixedSplitting fixed_splitting(const SymplecticSpace& sp, const Mat& g);

// Hochschild chain of degree q over the Weyl algebra with the g-twisted
// module in slot 0: a sum of pure tensors of monomials sharing one global
// hbar power.  Interior slots (1..q) are normalized: a term whose interior
// slot is constant is dropped on insertion.
class TwistedChain {
 public:
  using Key = std::pair<int, std::vector<YDeg>>;  // (hbar power, q+1 slot degrees)

  TwistedChain(SpacePtr sp, Mat g, int degree, int cap = kUncapped);

  const SpacePtr& space() const { return sp_; }
  const Mat& twist() const { return g_; }
  int degree() const { return degree_; }
  int cap() const { return cap_; }
  const std::map<Key, Cyc>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  // Drops constant interior slots (normalization) and weights >= cap.
  void add_term(int h, const std::vector<YDeg>& slots, const Cyc& c);

  TwistedChain operator+(const TwistedChain& o) const;
  TwistedChain operator-(const TwistedChain& o) const;
  TwistedChain operator*(const Cyc& c) const;
  bool operator==(const TwistedChain& o) const;

  std::string str() const;

 private:
  SpacePtr sp_;
  Mat g_;
  int degree_;
  int cap_;
  std::map<Key, Cyc> t_;
};

// The cycle psi = eps_{a_1...a_{2m}} 1 (x) v^{a_1} (x) ... (x) v^{a_2m} built
// from the Liouville coefficients of the m-fold wedge of B^g in the kernel
// basis of the splitting.  Degree 2m_g.
TwistedChain twisted_cycle_psi(const SpacePtr& sp, const Mat& g);

// Twisted Hochschild boundary: face 0 merges slot 0 with the g-twisted slot
// 1, interior faces merge adjacent slots, the last face merges the final
// slot onto slot 0 from the left, with sign (-1)^q.  Degree 0 maps to zero.
TwistedChain hochschild_b(const TwistedChain& c);

// Polynomial differential form on V_g: terms (hbar power, w-multidegree,
// dw wedge mask) -> coefficient.
class PolyForm {
 public:
  using Key = std::tuple<int, YDeg, unsigned>;

  explicit PolyForm(int nvars) : nvars_(nvars) {}

  int nvars() const { return nvars_; }
  const std::map<Key, Cyc>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  void add_term(int h, const YDeg& wdeg, unsigned mask, const Cyc& c);
  bool operator==(const PolyForm& o) const;
  std::string str() const;

 private:
  int nvars_;
  std::map<Key, Cyc> t_;
};

// mu(a_0,...,a_q) = pr(a_0) d(pr a_1) ^ ... ^ d(pr a_q) where pr projects
// generators onto V_g along im(g - Id).  The chain is read commutatively.
PolyForm antisym_mu(const TwistedChain& c);

// Random chain of the given degree with monomial slots of y-degree <= maxdeg.
TwistedChain random_chain(std::mt19937_64& rng, const SpacePtr& sp, const Mat& g,
                          int degree, int maxdeg, int nterms);

}  // namespace qorb
