#pragma once

#include <string>
#include <vector>

#include "qorb/group.hpp"
#include "qorb/matrix.hpp"

namespace qorb {

// Finite-dimensional associative unital algebra over cyclotomic scalars,
// given by structure constants: e_i e_j = sum_k table[i][j][k] e_k.
struct FinAlg {
  int dim = 0;
  std::vector<std::vector<std::vector<Cyc>>> table;
  std::vector<Cyc> unit;
  std::string name;

  std::vector<Cyc> mul(const std::vector<Cyc>& x, const std::vector<Cyc>& y) const;
  std::vector<Cyc> basis_mul(int i, int j) const { return table[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
  Mat left_mat(int i) const;   // matrix of x -> e_i x
  Mat right_mat(int i) const;  // matrix of x -> x e_i
  Mat left_mul_mat(const std::vector<Cyc>& x) const;
  Mat right_mul_mat(const std::vector<Cyc>& x) const;
};

// Associativity on all basis triples plus both unit axioms; throws on failure.
void check_algebra(const FinAlg& A);

FinAlg field_algebra();   // C
FinAlg product_c2();      // C x C componentwise
FinAlg dual_numbers();    // C[x]/(x^2), basis {1, x}
FinAlg mat2();            // 2x2 matrices, basis E11, E12, E21, E22
FinAlg group_algebra(const FinGroup& G);

// Finite group acting on A by algebra automorphisms.  Matrices compose
// straight, act[g] act[h] = act[g h], matching (a^h)^g = a^{gh}.
struct AlgebraAction {
  FinGroup G;
  FinAlg A;
  std::vector<Mat> act;

  std::vector<Cyc> apply(int g, const std::vector<Cyc>& x) const {
    return act[static_cast<size_t>(g)].apply(x);
  }
};

// Identity at e, automorphism + straightness of every matrix; throws on failure.
void check_action(const AlgebraAction& X);

AlgebraAction trivial_action(FinGroup G, FinAlg A);
// C x C with the factors swapped exactly by the elements of negative sign;
// sign must be a {+1,-1}-valued character of G.
AlgebraAction c2_swap_action(const FinGroup& G, const std::vector<int>& sign);
// Dual numbers with x scaled by a multiplicative character chi: G -> scalars.
AlgebraAction dual_scale_action(const FinGroup& G, const std::vector<Cyc>& chi);

// The crossed product A[G]: basis e_i g_l at flat index l * A.dim + i, with
// product (a g)(b h) = a b^g (g h).
FinAlg crossed_product(const AlgebraAction& X);
inline int cp_index(const FinAlg& A, int g, int i) { return g * A.dim + i; }

// Invariant subalgebra A^G: basis columns inside A plus its own structure
// constants on that basis.
struct FixedSubalgebra {
  Mat basis;  // A.dim x k
  FinAlg alg; // dimension k
};
FixedSubalgebra fixed_subalgebra(const AlgebraAction& X);

// Bimodule over A: commuting left and right matrix actions of the basis.
struct Bimodule {
  int dim = 0;
  std::vector<Mat> left;
  std::vector<Mat> right;
};

void check_bimodule(const FinAlg& A, const Bimodule& M);

Bimodule regular_bimodule(const FinAlg& A);
// A with the right action through an automorphism: m . a = m a^g.
Bimodule twisted_bimodule(const FinAlg& A, const Mat& auto_g);
// A[G] as a bimodule over A (A embedded on the identity component).
Bimodule crossed_bimodule(const AlgebraAction& X);

}  // namespace qorb
