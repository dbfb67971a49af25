#pragma once

#include "qorb/algebra.hpp"

namespace qorb {

// Normalized bar chain complex C_q = M (x) Abar^{(x) q}, Abar = A / k.unit.
// Basis index of (m, a_1..a_q): m + M.dim * (a_1 + bar*(a_2 + bar*(...))).
struct BarComplex {
  FinAlg A;
  Bimodule M;
  int qmax = 0;
  int bar_dim = 0;
  Mat proj;                // A -> Abar
  Mat lift;                // Abar -> A, proj * lift = Id
  std::vector<long> dims;  // dims[q] = dim C_q, q = 0..qmax
  std::vector<Mat> bnd;    // bnd[q]: C_q -> C_{q-1} for q >= 1; bnd[0] empty
};

BarComplex bar_complex(const FinAlg& A, const Bimodule& M, int qmax, long dim_cap = 200000);

// HH_q(A, M) for q = 0..qmax.
std::vector<int> homology_dims(const FinAlg& A, const Bimodule& M, int qmax,
                               long dim_cap = 200000);
// HH^q(A, M) via the normalized cochain complex Hom(Abar^q, M).
std::vector<int> cohomology_dims(const FinAlg& A, const Bimodule& M, int qmax,
                                 long dim_cap = 200000);

// alpha(h) on C_q(A, A[G]): m (x) a_1 ... a_q -> h m h^{-1} (x) a_1^h ... a_q^h.
// C must be the bar complex of (A, crossed_bimodule(X)).
Mat chain_action(const AlgebraAction& X, const BarComplex& C, int h, int q);

// dim (HH_q(A, A[G]))^G for q = 0..qmax: trace of the averaged action on the
// homology subquotient (exact; the projector preserves kernel and image).
std::vector<int> invariant_homology_dims(const AlgebraAction& X, int qmax);

struct DecompositionReport {
  std::vector<int> lhs;  // HH_q(A[G], A[G]) by the bar complex of A[G]
  std::vector<int> rhs;  // dim (HH_q(A, A[G]))^G
  bool equal = false;
};
DecompositionReport decomposition_check(const AlgebraAction& X, int qmax);

struct MoritaReport {
  bool idempotent = false;       // e = (1/|G|) sum_g g squares to itself
  int dim_fixed = 0;             // dim A^G
  int dim_corner = 0;            // dim e A[G] e
  bool corner_matches_fixed = false;  // u -> u e is multiplicative and spans
  int hh0_fixed = 0;
  int hh0_crossed = 0;
  bool hh0_equal = false;
};
MoritaReport symmetrizer_morita(const AlgebraAction& X);

// Trace of the matrix as an exact integer; throws if it is not one.
long integer_trace(const Mat& m);

}  // namespace qorb
