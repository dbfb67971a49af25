#pragma once

#include <map>
#include <random>
#include <utility>
#include <vector>

#include "qorb/algebra.hpp"

namespace qorb {

// Basis tensor of the double complex attached to a group action on an
// algebra.  Bidegree (m, q) is read off the key itself: the left and right
// slots each hold a basis element of the crossed product, `mid` holds m
// algebra basis indices, `grp` holds q group elements.
struct MixedKey {
  int la = 0, lg = 0;     // left slot  e_la * lg
  std::vector<int> mid;   // interior algebra slots
  int ra = 0, rg = 0;     // right slot e_ra * rg
  std::vector<int> grp;   // group slots

  auto operator<=>(const MixedKey&) const = default;
};

// An exact linear combination of basis tensors, across bidegrees, together
// with a component in the extra terminal copy of the crossed product that
// the bidegree-(0,0) boundary multiplies into.
struct TotalElement {
  std::map<MixedKey, Cyc> terms;
  std::map<std::pair<int, int>, Cyc> aug;  // (algebra index, group element)

  bool is_zero() const { return terms.empty() && aug.empty(); }
  bool operator==(const TotalElement&) const = default;

  void add_term(const MixedKey& k, const Cyc& c);
  void add_aug(int i, int g, const Cyc& c);
  TotalElement operator+(const TotalElement& o) const;
  TotalElement operator-(const TotalElement& o) const;
};

// Horizontal boundary: contracts adjacent algebra slots with alternating
// signs and an overall sign by the number of group slots; the first face
// twists the contracted slot by the left group part before multiplying it
// in.  Zero in bidegree (0, q > 0); in bidegree (0, 0) it is the crossed
// product multiplication into the terminal slot.
TotalElement beta(const AlgebraAction& X, const TotalElement& c);

// Vertical boundary: the group bar boundary.  Its first face moves the
// leading group slot into the left group part and twists every algebra
// slot to the right of it; interior faces merge adjacent group slots; the
// last face drops the final group slot.
TotalElement beta_prime(const AlgebraAction& X, const TotalElement& c);

// beta + beta_prime, extended by zero on the terminal slot.  Squares to
// zero because the two pieces square to zero and anticommute.
TotalElement total_boundary(const AlgebraAction& X, const TotalElement& c);

// Contracting homotopy: pushes the left slot into a fresh algebra slot
// (twisted back), with a correction in bidegree (0, q) that records the
// left group part as a fresh group slot, and lifts the terminal slot to
// bidegree (0,0).  Satisfies
//     contraction(total_boundary(c)) + total_boundary(contraction(c)) = c.
TotalElement contraction(const AlgebraAction& X, const TotalElement& c);

// Bimodule structure over two copies of the crossed product: the basis
// element e_{a0} g0 acts on the left slot (twisting by g0), e_{b0} h0 on
// the right slot (twisted by its group part).  Both boundaries commute
// with these actions; on the terminal slot they are crossed product
// multiplication.
TotalElement act_left(const AlgebraAction& X, int a0, int g0, const TotalElement& c);
TotalElement act_right(const AlgebraAction& X, const TotalElement& c, int b0, int h0);

// Random combination of nterms basis tensors of exact bidegree (m, q) with
// small rational coefficients.
TotalElement random_mixed(std::mt19937_64& rng, const AlgebraAction& X, int m, int q,
                          int nterms);

}  // namespace qorb
