#pragma once

#include <string>

#include "qorb/section.hpp"

namespace qorb {

// One term of the symmetric connection data: coeff * x^xdeg on the lower
// index triple (i, j, k).  Total symmetry in (i, j, k) is an input invariant.
struct GammaTerm {
  int i = 0, j = 0, k = 0;
  YDeg xdeg;
  Cyc coeff;
};

// One term of the curvature input: coeff * h^hbar * x^xdeg * dx^i dx^j with
// i < j; the series must be closed and start at hbar >= 1.
struct Omega2Term {
  int hbar = 1;
  int i = 0, j = 1;
  YDeg xdeg;
  Cyc coeff;
};

// Validated geometric data over affine space in global Darboux coordinates.
struct FedosovData {
  SpacePtr sp;  // fiber commutation form B = omega^{-1}
  Mat omega;
  std::vector<GammaTerm> gamma;  // aggregated, totally symmetric
  Section omega_h;               // the closed 2-form series, literal storage
  int weight_cap = 10;           // exclusive internal working precision
};

// Checks: omega antisymmetric and invertible; Gamma totally symmetric;
// omega_h closed, purely hbar-positive, a 2-form.  Throws InvalidInput.
FedosovData make_fedosov_data(const Mat& omega, const std::vector<GammaTerm>& gamma,
                              const std::vector<Omega2Term>& omega_terms, int weight_cap);

// covariant derivative dx^i d/dx^i - dx^i Gamma^k_ij(x) y^j d/dy^k with the
// upper index raised through B; a degree-one derivation of the product
Section nabla(const FedosovData& d, const Section& a);

// curvature section R_hat = (1/4) omega_km R^m_[l ij] y^k y^l dx^i dx^j
// normalized so that nabla(nabla(a)) = (1/h)[R_hat, a] exactly
Section curvature_section(const FedosovData& d);

// the symplectic form as the double-sum two-form sum_ij omega_ij dx^i dx^j
Section omega_double_sum(const FedosovData& d);

// the connection one-form dx^i omega_ij y^j
Section liouville_one_form(const FedosovData& d);

// the connection data encoded as the scalar section (1/2) Gamma_abi y^a y^b dx^i
Section gamma_section(const FedosovData& d);

// Engine state: the recursion fixed point and derived operators.  The
// abelian curvature identity holds in the normalization where the flat
// connection squares against the double-sum form: the recursion solves
//   delta r = R_hat - (1/2) omega_h + nabla r + (1/h) r r
// which is the unique normalization making D flat with curvature
// -omega_double_sum + omega_h.
struct FedosovEngine {
  FedosovData data;
  Section r;       // one-form of weight >= 3
  Section conn_a;  // -liouville + r
  Section r_hat;
  int iterations = 0;

  Section D(const Section& a) const;  // nabla - delta + (1/h)[r, .]
  Section weyl_curvature() const;     // 2 (r_hat + nabla(conn_a) + (1/h) conn_a conn_a)
  // flat lift of a base series (x and h only): sigma(lambda(a)) = a and
  // D(lambda(a)) = 0 below the cap
  Section lambda(const Section& base) const;
  // star product of base series through the flat lift
  Section star(const Section& a, const Section& b) const;
};

// Runs the recursion to its fixed point below the cap.  Throws Internal if
// it fails to stabilize (the weight filtration guarantees it does).
FedosovEngine make_engine(const FedosovData& d);

// closed-form flat-case lift: the fiberwise Taylor expansion of the base
// polynomial, terminating exactly
Section taylor_lift(const FedosovData& d, const Section& base);

// Weyl product taken directly on the base coordinates (the flat oracle for
// the star product)
Section base_weyl_product(const Section& a, const Section& b);

// Per-datum invariance of the inputs under a linear symplectic map, then
// equivariance of the lift and the star product on random polynomials.
struct EquivarianceReport {
  bool data_invariant = true;
  std::vector<std::string> failing;  // "Gamma" / "Omega_h" per failing element
  bool lambda_equivariant = true;
  bool star_equivariant = true;
  bool ok() const { return data_invariant && lambda_equivariant && star_equivariant; }
};
EquivarianceReport equivariance_check(const FedosovEngine& e, const std::vector<Mat>& group,
                                      std::mt19937_64& rng, int trials);

Section random_base_poly(std::mt19937_64& rng, SpacePtr sp, int maxdeg, int nterms,
                         int cap = kUncapped);

}  // namespace qorb
