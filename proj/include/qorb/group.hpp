#pragma once

#include <vector>

#include "qorb/weyl.hpp"

namespace qorb {

// True iff g preserves the symplectic pairing of basis vectors: g^T B g = B.
bool is_symplectic(const SymplecticSpace& sp, const Mat& g);

// Multiplicative order of an invertible matrix; errors out past the bound
// instead of looping forever on an infinite-order element.
int element_order(const Mat& g, int bound = 10'000);

// A symplectic reflection fixes a codimension-2 subspace and is not the
// identity: rank(g - Id) == 2.
bool is_symplectic_reflection(const Mat& g);

// Finite subgroup of Sp(2n) with multiplication/inverse tables and conjugacy
// classes.  elements[0] is always the identity.
struct SymplecticGroup {
  SpacePtr space;
  std::vector<Mat> elements;
  std::vector<std::vector<int>> mul;      // mul[i][j] = index of elements[i]*elements[j]
  std::vector<int> inv;                   // inverse index
  std::vector<std::vector<int>> classes;  // conjugacy classes, each sorted
  std::vector<int> class_of;              // element index -> class index

  int order() const { return static_cast<int>(elements.size()); }
  int index_of(const Mat& g) const;  // -1 if absent
  int centralizer_order(int i) const;
};

// Closure of the generators under multiplication.  Every generator must be
// symplectic; the closure must stay within max_order elements.
SymplecticGroup close_group(const SpacePtr& sp, const std::vector<Mat>& generators,
                            int max_order = 256);

// Presets used across the test suites. n counts Darboux pairs.
SymplecticGroup trivial_group(int n);
// Z_N acting on C^2 as diag(zeta_N, zeta_N^{-1}).
SymplecticGroup cyclic_diag_group(int N);
// {Id, -Id} on C^{2n}.
SymplecticGroup pm_group(int n);
// Z_2 on C^4 swapping the two Darboux planes: e1<->e3, e2<->e4.
SymplecticGroup plane_swap_group();
// S_3 on C^6 permuting three Darboux planes by blocks.
SymplecticGroup s3_plane_permutation_group();

// Abstract finite group: just the composition data, for modules that do not
// care about the matrix realization.
struct FinGroup {
  int n = 0;
  std::vector<std::vector<int>> mul;
  std::vector<int> inv;
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;
};

FinGroup cyclic_fin_group(int N);
// S_3 with elements ordered e, (01), (02), (12), (012), (021).
FinGroup s3_fin_group();
// Parity character of s3_fin_group: +1, -1, -1, -1, +1, +1.
int s3_parity(int i);
// Forget the matrices of a SymplecticGroup.
FinGroup fin_group_of(const SymplecticGroup& G);

}  // namespace qorb
