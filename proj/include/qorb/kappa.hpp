#pragma once

#include "qorb/fedosov.hpp"

namespace qorb {

// Term key of a fiberwise Hochschild chain over the fixed locus of a linear
// symplectomorphism: h^k * x^beta * dx^S tensor (slot_0 y-monomial) tensor
// ... tensor (slot_q y-monomial).  The base variables x and the form indices
// live on the fixed coordinate subspace; each slot carries a fiber monomial
// over all coordinates.  Slots 1..q are normalized: a term whose interior
// slot is constant is zero.  hbar exponents may be negative (Laurent).
struct KKey {
  int hbar = 0;
  YDeg xdeg;
  unsigned dxmask = 0;
  std::vector<YDeg> slots;

  auto operator<=>(const KKey&) const = default;
};

inline int kkey_weight(const KKey& k) {
  int w = 2 * k.hbar;
  for (const YDeg& s : k.slots) w += deg_total(s);
  return w;
}

// Sparse exact chain with the usual exclusive weight cap.
class KChain {
 public:
  KChain() : cap_(kUncapped) {}
  explicit KChain(SpacePtr sp, int cap = kUncapped) : sp_(std::move(sp)), cap_(cap) {}

  const SpacePtr& space() const { return sp_; }
  int dim() const { return sp_ ? sp_->dim : 0; }
  int cap() const { return cap_; }
  const std::map<KKey, Cyc>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  int weight() const;  // min term weight, kUncapped when zero
  Cyc coeff(const KKey& k) const;
  // respects the cap and the normalization (constant interior slot = zero)
  void add_term(const KKey& k, const Cyc& c);

  KChain operator-() const;
  KChain operator+(const KChain& o) const;
  KChain operator-(const KChain& o) const;
  KChain operator*(const Cyc& c) const;
  bool operator==(const KChain& o) const { return t_ == o.t_; }

  KChain truncated(int cap) const;
  KChain with_cap(int cap) const;
  bool equal_below(const KChain& o, int bound) const;

 private:
  SpacePtr sp_;
  int cap_;
  std::map<KKey, Cyc> t_;
};

// Geometric data bound to one group element: the fixed coordinate set, the
// restricted connection one-form, and the working cap.
struct ChainModel {
  FedosovData data;
  Mat g;
  std::vector<int> tangent;  // sorted coordinate indices spanning the fixed space
  Section a_res;             // connection one-form restricted to the fixed locus
  int cap = kUncapped;
};

// Indices i with g e_i = e_i, required to span the whole fixed space of g;
// throws Unsupported otherwise.
std::vector<int> fixed_coordinate_indices(const SpacePtr& sp, const Mat& g);

// Sets the off-locus base coordinates and their differentials to zero.
Section restrict_to_fixed(const std::vector<int>& tangent, const Section& a);

// Pfaffian of the form restricted to the tangent index set.
Cyc tangent_pfaffian(const Mat& omega, const std::vector<int>& tangent);

// Builds the model for one group element from a ready engine; validates that
// the restricted form is nondegenerate.
ChainModel make_chain_model(const FedosovEngine& e, const Mat& g);

// The volume cycle: eps_{a_1..a_2m} 1 (x) y^{a_1} (x) ... (x) y^{a_2m} with
// the antisymmetric Liouville components of the restricted form.
KChain kappa_zero(const ChainModel& m);

// The one-form chain whose fiberwise boundary is D kappa_zero:
// (1/h) eps sum_k (-1)^k  1 (x) y^{a_1}..y^{a_k} (x) A (x) y^{a_k+1}.. ,
// with A the restricted connection one-form inserted as an extra slot.
KChain nu_two(const ChainModel& m);

// Fiberwise Hochschild boundary: on p-forms it carries the sign (-1)^p; the
// first face twists the incoming slot by the group element, interior faces
// merge neighbours by the fiber product, the last face wraps around.
KChain chain_b(const ChainModel& m, const KChain& c);

// Covariant derivative: base differential over the fixed coordinates plus
// the slotwise connection action and (1/h)[A, .], all wedged from the left.
KChain chain_D(const ChainModel& m, const KChain& c);

KChain random_kchain(std::mt19937_64& rng, const ChainModel& m, int q, int nterms);

}  // namespace qorb
