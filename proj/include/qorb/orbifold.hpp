#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qorb/group.hpp"

namespace qorb {

// One conjugacy class worth of degree-shifted cohomology.
struct ClassContribution {
  std::string label;
  std::vector<int> codims;      // one entry per fixed-locus component
  std::map<int, long> degrees;  // total degree -> dimension contributed
};

// Graded dimension count of the orbifold cohomology: a Poincare polynomial
// together with the per-class breakdown that produced it.
struct OrbifoldSpectrum {
  std::map<int, long> poincare;  // degree -> multiplicity, degrees >= 0
  std::vector<ClassContribution> classes;

  long coefficient(int degree) const;
  long total() const;  // evaluation at t = 1
};

// User-supplied cohomology of the fixed locus of one conjugacy class.  The
// Betti numbers must already be centralizer-invariant dimensions; loci whose
// components are permuted nontrivially by the centralizer cannot be described
// in this format and have to be aggregated by the caller first.
struct LocusComponent {
  int codim = 0;             // even: symplectic fixed loci
  std::vector<long> betti;   // b_0, b_1, ...
};

struct FixedLocusDatum {
  std::string label;
  std::vector<LocusComponent> components;
};

// Every fixed space of a finite symplectic matrix group is a symplectic
// subspace, so each class contributes a single generator in degree
// rank(g - Id) and invariants are counted by classes.
OrbifoldSpectrum linear_orbifold_cohomology(const SymplecticGroup& G);

// Degree-shifted sum of supplied Betti data, one datum per conjugacy class.
OrbifoldSpectrum general_orbifold_cohomology(const std::vector<FixedLocusDatum>& data);

// Quadratic coefficient of the spectrum: the number of deformation
// parameters.  For a linear quotient this is the count of conjugacy classes
// of symplectic reflections.
long sra_param_dim(const OrbifoldSpectrum& s);
long sra_param_dim(const SymplecticGroup& G);

// Inputs of the vanishing hypotheses that make the deformation space smooth:
// H^3 of the ambient space and H^1 of every codimension-2 fixed component,
// both as invariant dimensions.
struct Codim2Locus {
  std::string label;
  std::optional<long> h1_invariant;
};

struct UnobstructednessData {
  std::optional<long> h3_invariant;
  std::vector<Codim2Locus> codim2_loci;
};

struct UnobstructednessReport {
  bool hypotheses_met = true;
  std::vector<std::string> failures;  // one line per violated hypothesis
};

// Throws InvalidInput naming every missing field; otherwise reports which
// vanishing hypotheses fail.
UnobstructednessReport unobstructedness_check(const UnobstructednessData& d);

}  // namespace qorb
