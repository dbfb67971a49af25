#include "qorb/orbifold.hpp"

#include "qorb/error.hpp"

namespace qorb {

long OrbifoldSpectrum::coefficient(int degree) const {
  auto it = poincare.find(degree);
  return it == poincare.end() ? 0 : it->second;
}

long OrbifoldSpectrum::total() const {
  long t = 0;
  for (const auto& [d, m] : poincare) t += m;
  return t;
}

OrbifoldSpectrum linear_orbifold_cohomology(const SymplecticGroup& G) {
  const int n = G.space->dim;
  OrbifoldSpectrum s;
  for (const auto& cls : G.classes) {
    int rep = cls.front();
    int codim = (G.elements[static_cast<size_t>(rep)] - Mat::identity(n)).rank();
    ClassContribution c;
    c.label = "g" + std::to_string(rep);
    c.codims.push_back(codim);
    c.degrees[codim] = 1;
    s.poincare[codim] += 1;
    s.classes.push_back(std::move(c));
  }
  return s;
}

OrbifoldSpectrum general_orbifold_cohomology(const std::vector<FixedLocusDatum>& data) {
  OrbifoldSpectrum s;
  for (const FixedLocusDatum& d : data) {
    ClassContribution c;
    c.label = d.label;
    for (const LocusComponent& comp : d.components) {
      if (comp.codim < 0 || comp.codim % 2 != 0)
        throw Error(ErrorKind::InvalidInput,
                    "fixed-locus codimension must be even and non-negative (" + d.label + ")");
      c.codims.push_back(comp.codim);
      for (size_t j = 0; j < comp.betti.size(); ++j) {
        long b = comp.betti[j];
        if (b < 0)
          throw Error(ErrorKind::InvalidInput,
                      "Betti numbers must be non-negative (" + d.label + ")");
        if (b == 0) continue;
        int deg = static_cast<int>(j) + comp.codim;
        c.degrees[deg] += b;
        s.poincare[deg] += b;
      }
    }
    s.classes.push_back(std::move(c));
  }
  return s;
}

long sra_param_dim(const OrbifoldSpectrum& s) { return s.coefficient(2); }

long sra_param_dim(const SymplecticGroup& G) {
  return sra_param_dim(linear_orbifold_cohomology(G));
}

UnobstructednessReport unobstructedness_check(const UnobstructednessData& d) {
  std::vector<std::string> missing;
  if (!d.h3_invariant) missing.push_back("h3_invariant");
  for (const Codim2Locus& l : d.codim2_loci)
    if (!l.h1_invariant) missing.push_back("h1_invariant(" + l.label + ")");
  if (!missing.empty()) {
    std::string msg = "incomplete input, missing:";
    for (const std::string& f : missing) msg += " " + f;
    throw Error(ErrorKind::InvalidInput, msg);
  }
  if (*d.h3_invariant < 0)
    throw Error(ErrorKind::InvalidInput, "invariant dimensions must be non-negative");
  UnobstructednessReport r;
  if (*d.h3_invariant != 0) {
    r.hypotheses_met = false;
    r.failures.push_back("ambient H^3 invariants have dimension " +
                         std::to_string(*d.h3_invariant));
  }
  for (const Codim2Locus& l : d.codim2_loci) {
    if (*l.h1_invariant < 0)
      throw Error(ErrorKind::InvalidInput, "invariant dimensions must be non-negative");
    if (*l.h1_invariant != 0) {
      r.hypotheses_met = false;
      r.failures.push_back("H^1 invariants of " + l.label + " have dimension " +
                           std::to_string(*l.h1_invariant));
    }
  }
  return r;
}

}  // namespace qorb
