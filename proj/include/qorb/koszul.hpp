#pragma once

#include <map>
#include <random>
#include <vector>

#include "qorb/matrix.hpp"

namespace qorb {

// Graded Ext of the polynomial ring in d variables over its enveloping
// ring, computed degree by degree from the Koszul complex of the regular
// sequence u_i - v_i: dims[i][p] is the dimension of Ext^i in internal
// polynomial degree p, for i = 0..d and p = 0..cap.  Only i = d can be
// nonzero, where the dimensions are those of the polynomial ring itself.
struct ExtTable {
  int d = 0;
  int cap = 0;
  std::vector<std::vector<int>> dims;
};

// Throws Unsupported for d outside 1..3.
ExtTable koszul_ext(int d, int cap);

// dimension of the degree-p part of the polynomial ring in d variables
long poly_graded_dim(int d, int p);

// Exact polynomial in a fixed number of variables: exponent vector -> coeff.
using Poly = std::map<std::vector<int>, Cyc>;

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_diff(const Poly& a, int var);  // partial derivative
bool poly_is_zero(const Poly& a);
Poly random_poly(std::mt19937_64& rng, int nvars, int maxdeg, int nterms);

// Antisymmetrization cochain attached to the top form dual f: the value on
// a d-tuple is f times the Jacobian determinant of the tuple.
Poly antisym_cochain(const Poly& f, const std::vector<Poly>& a, int d);

// Hochschild cochain boundary of the antisymmetrization cochain, evaluated
// on a (d+1)-tuple; vanishes identically (the cochain is a cocycle).
Poly antisym_coboundary(const Poly& f, const std::vector<Poly>& a, int d);

}  // namespace qorb
