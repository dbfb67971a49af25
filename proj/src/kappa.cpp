#include "qorb/kappa.hpp"

#include <algorithm>
#include <functional>

#include "qorb/error.hpp"
#include "qorb/group.hpp"

namespace qorb {

int KChain::weight() const {
  int w = kUncapped;
  for (const auto& [k, c] : t_) w = std::min(w, kkey_weight(k));
  return w;
}

Cyc KChain::coeff(const KKey& k) const {
  auto it = t_.find(k);
  return it == t_.end() ? Cyc() : it->second;
}

void KChain::add_term(const KKey& k, const Cyc& c) {
  if (c.is_zero()) return;
  if (cap_ != kUncapped && kkey_weight(k) >= cap_) return;
  for (size_t s = 1; s < k.slots.size(); ++s)
    if (deg_total(k.slots[s]) == 0) return;  // normalized interior slot
  auto [it, fresh] = t_.try_emplace(k, Cyc());
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

KChain KChain::operator-() const {
  KChain r(sp_, cap_);
  for (const auto& [k, c] : t_) r.t_.emplace(k, -c);
  return r;
}

KChain KChain::operator+(const KChain& o) const {
  KChain r(sp_ ? sp_ : o.sp_, std::min(cap_, o.cap_));
  for (const auto& [k, c] : t_) r.add_term(k, c);
  for (const auto& [k, c] : o.t_) r.add_term(k, c);
  return r;
}

KChain KChain::operator-(const KChain& o) const { return *this + (-o); }

KChain KChain::operator*(const Cyc& c) const {
  KChain r(sp_, cap_);
  if (c.is_zero()) return r;
  for (const auto& [k, v] : t_) r.t_.emplace(k, v * c);
  return r;
}

KChain KChain::truncated(int cap) const {
  KChain r(sp_, std::min(cap_, cap));
  for (const auto& [k, c] : t_) r.add_term(k, c);
  return r;
}

KChain KChain::with_cap(int cap) const {
  KChain r(sp_, cap);
  for (const auto& [k, c] : t_) r.t_.emplace(k, c);
  return r;
}

bool KChain::equal_below(const KChain& o, int bound) const {
  KChain d = *this - o;
  for (const auto& [k, c] : d.terms())
    if (kkey_weight(k) < bound) return false;
  return true;
}

std::vector<int> fixed_coordinate_indices(const SpacePtr& sp, const Mat& g) {
  const int n = sp->dim;
  std::vector<int> tan;
  for (int j = 0; j < n; ++j) {
    bool fixed = true;
    for (int i = 0; i < n; ++i)
      if (!(g.at(i, j) == (i == j ? Cyc::one() : Cyc()))) fixed = false;
    if (fixed) tan.push_back(j);
  }
  Mat gm = g - Mat::identity(n);
  if (gm.rank() != n - static_cast<int>(tan.size()))
    throw Error(ErrorKind::Unsupported,
                "fixed space of the group element is not a coordinate subspace");
  return tan;
}

Section restrict_to_fixed(const std::vector<int>& tangent, const Section& a) {
  unsigned tmask = 0;
  for (int i : tangent) tmask |= 1u << i;
  Section r(a.space(), a.cap());
  for (const auto& [k, c] : a.terms()) {
    if (k.dxmask & ~tmask) continue;
    bool off = false;
    for (size_t i = 0; i < k.xdeg.size(); ++i)
      if (k.xdeg[i] != 0 && !(tmask & (1u << i))) off = true;
    if (!off) r.add_term(k, c);
  }
  return r;
}

Cyc tangent_pfaffian(const Mat& omega, const std::vector<int>& tangent) {
  if (tangent.empty()) return Cyc::one();
  if (tangent.size() % 2 != 0) return Cyc();
  // expand along the first index over its matching partner
  Cyc total;
  for (size_t j = 1; j < tangent.size(); ++j) {
    Cyc o = omega.at(tangent[0], tangent[j]);
    if (o.is_zero()) continue;
    std::vector<int> rest;
    for (size_t s = 1; s < tangent.size(); ++s)
      if (s != j) rest.push_back(tangent[s]);
    Cyc sub = tangent_pfaffian(omega, rest);
    Cyc sign = (j % 2 == 1) ? Cyc::one() : -Cyc::one();
    total += sign * o * sub;
  }
  return total;
}

ChainModel make_chain_model(const FedosovEngine& e, const Mat& g) {
  const SpacePtr& sp = e.data.sp;
  if (!is_symplectic(*sp, g))
    throw Error(ErrorKind::InvalidInput, "group element must preserve the form");
  ChainModel m;
  m.data = e.data;
  m.g = g;
  m.tangent = fixed_coordinate_indices(sp, g);
  if (m.tangent.size() % 2 != 0 ||
      tangent_pfaffian(e.data.omega, m.tangent).is_zero())
    throw Error(ErrorKind::InvalidInput, "restricted form is degenerate");
  m.a_res = restrict_to_fixed(m.tangent, e.conn_a);
  m.cap = e.data.weight_cap;
  return m;
}

namespace {

// signed permutations of the tangent set
void for_each_perm(const std::vector<int>& tan,
                   const std::function<void(const std::vector<int>&, int)>& fn) {
  std::vector<int> p = tan;
  std::sort(p.begin(), p.end());
  do {
    int inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
      for (size_t j = i + 1; j < p.size(); ++j)
        if (p[i] > p[j]) ++inv;
    fn(p, inv % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(p.begin(), p.end()));
}

YDeg unit_deg(int n, int i) {
  YDeg d(static_cast<size_t>(n), 0);
  d[static_cast<size_t>(i)] = 1;
  return d;
}

}  // namespace

KChain kappa_zero(const ChainModel& m) {
  const int n = m.data.sp->dim;
  Cyc pf = tangent_pfaffian(m.data.omega, m.tangent);
  KChain r(m.data.sp, m.cap);
  for_each_perm(m.tangent, [&](const std::vector<int>& p, int sign) {
    KKey k;
    k.xdeg.assign(static_cast<size_t>(n), 0);
    k.slots.push_back(YDeg(static_cast<size_t>(n), 0));
    for (int a : p) k.slots.push_back(unit_deg(n, a));
    r.add_term(k, pf * Cyc(static_cast<long>(sign)));
  });
  return r;
}

KChain nu_two(const ChainModel& m) {
  const int n = m.data.sp->dim;
  const int m2 = static_cast<int>(m.tangent.size());
  Cyc pf = tangent_pfaffian(m.data.omega, m.tangent);
  KChain r(m.data.sp, cap_shift(m.a_res.cap(), m2 - 2));
  for_each_perm(m.tangent, [&](const std::vector<int>& p, int sign) {
    for (int k = 0; k <= m2; ++k) {
      Cyc base = pf * Cyc(static_cast<long>(sign * (k % 2 == 0 ? 1 : -1)));
      for (const auto& [sk, sc] : m.a_res.terms()) {
        KKey key;
        key.hbar = sk.hbar - 1;
        key.xdeg = sk.xdeg;
        key.dxmask = sk.dxmask;
        key.slots.push_back(YDeg(static_cast<size_t>(n), 0));
        for (int s = 0; s < k; ++s) key.slots.push_back(unit_deg(n, p[static_cast<size_t>(s)]));
        key.slots.push_back(sk.ydeg);
        for (int s = k; s < m2; ++s) key.slots.push_back(unit_deg(n, p[static_cast<size_t>(s)]));
        r.add_term(key, base * sc);
      }
    }
  });
  return r;
}

KChain chain_b(const ChainModel& m, const KChain& c) {
  const SpacePtr& sp = c.space() ? c.space() : m.data.sp;
  KChain r(sp, c.cap());
  for (const auto& [key, cf] : c.terms()) {
    const int q = static_cast<int>(key.slots.size()) - 1;
    if (q == 0) continue;
    Cyc sg = (__builtin_popcount(key.dxmask) % 2 == 0) ? cf : -cf;
    auto emit_face = [&](int f, const YDeg& left, const YDeg& right, const Cyc& extra,
                         int slot_at) {
      // merge y^left o y^right into position slot_at, other slots kept
      moyal_contract(*sp, left, right, [&](int t, const Cyc& mc, const YDeg& la,
                                           const YDeg& rb) {
        KKey nk;
        nk.hbar = key.hbar + t;
        nk.xdeg = key.xdeg;
        nk.dxmask = key.dxmask;
        for (int s = 0; s <= q; ++s) {
          if (s == f && f < q) continue;    // the merged-away neighbour
          if (f == q && s == q) continue;   // last slot folds into slot 0
          nk.slots.push_back(key.slots[static_cast<size_t>(s)]);
        }
        YDeg merged = deg_add(la, rb);
        nk.slots[static_cast<size_t>(slot_at)] = merged;
        Cyc sign = (f % 2 == 0) ? Cyc::one() : -Cyc::one();
        r.add_term(nk, sg * extra * mc * sign);
      });
    };
    // face 0: slot0 times the twisted first interior slot
    Weyl tw = act_on_weyl(m.g, Weyl::monomial(sp, 0, key.slots[1], Cyc::one()));
    for (const auto& [wk, wc] : tw.terms()) {
      moyal_contract(*sp, key.slots[0], wk.second, [&](int t, const Cyc& mc, const YDeg& la,
                                                       const YDeg& rb) {
        KKey nk;
        nk.hbar = key.hbar + wk.first + t;
        nk.xdeg = key.xdeg;
        nk.dxmask = key.dxmask;
        nk.slots.push_back(deg_add(la, rb));
        for (int s = 2; s <= q; ++s) nk.slots.push_back(key.slots[static_cast<size_t>(s)]);
        r.add_term(nk, sg * wc * mc);
      });
    }
    // interior faces: merge slot f with slot f+1
    for (int f = 1; f < q; ++f)
      emit_face(f, key.slots[static_cast<size_t>(f)], key.slots[static_cast<size_t>(f + 1)],
                Cyc::one(), f);
    // last face: the final slot folds into slot 0 from the left
    emit_face(q, key.slots[static_cast<size_t>(q)], key.slots[0], Cyc::one(), 0);
  }
  return r;
}

KChain chain_D(const ChainModel& m, const KChain& c) {
  const SpacePtr& sp = c.space() ? c.space() : m.data.sp;
  const int n = sp->dim;
  unsigned tmask = 0;
  for (int i : m.tangent) tmask |= 1u << i;
  int ad_cap = cap_shift(product_cap(m.a_res.cap(), m.a_res.weight(), c.cap(), c.weight()), -2);
  KChain r(sp, std::min(c.cap(), ad_cap));
  for (const auto& [key, cf] : c.terms()) {
    // base differential over the fixed coordinates
    for (int a : m.tangent) {
      if (key.xdeg[static_cast<size_t>(a)] == 0) continue;
      if (key.dxmask & (1u << a)) continue;
      KKey nk = key;
      nk.xdeg[static_cast<size_t>(a)] -= 1;
      nk.dxmask |= 1u << a;
      r.add_term(nk, cf * Cyc(static_cast<long>(key.xdeg[static_cast<size_t>(a)])) *
                         Cyc(static_cast<long>(wedge_left_sign(key.dxmask, a))));
    }
    // slotwise connection action - dx^i Gamma^k_ij y^j d/dy^k on the locus
    for (const GammaTerm& gt : m.data.gamma) {
      int dxi = gt.j, ysrc = gt.k;  // total symmetry: roles interchangeable
      if (!(tmask & (1u << dxi))) continue;
      if (key.dxmask & (1u << dxi)) continue;
      bool off = false;
      for (size_t s = 0; s < gt.xdeg.size(); ++s)
        if (gt.xdeg[s] != 0 && !(tmask & (1u << s))) off = true;
      if (off) continue;
      for (int k = 0; k < n; ++k) {
        Cyc bkl = sp->B.at(k, gt.i);
        if (bkl.is_zero()) continue;
        for (size_t j = 0; j < key.slots.size(); ++j) {
          int cnt = key.slots[j][static_cast<size_t>(k)];
          if (cnt == 0) continue;
          KKey nk = key;
          nk.slots[j][static_cast<size_t>(k)] -= 1;
          nk.slots[j][static_cast<size_t>(ysrc)] += 1;
          for (size_t s = 0; s < nk.xdeg.size(); ++s) nk.xdeg[s] += gt.xdeg[s];
          unsigned old = key.dxmask;
          nk.dxmask |= 1u << dxi;
          r.add_term(nk, -(cf * bkl * gt.coeff) * Cyc(static_cast<long>(cnt)) *
                             Cyc(static_cast<long>(wedge_left_sign(old, dxi))));
        }
      }
    }
    // slotwise (1/h)[A, .]
    for (const auto& [sk, sc] : m.a_res.terms()) {
      if (sk.dxmask & key.dxmask) continue;
      Cyc wsign = Cyc(static_cast<long>(wedge_merge_sign(sk.dxmask, key.dxmask)));
      for (size_t j = 0; j < key.slots.size(); ++j) {
        auto emit = [&](int t, const Cyc& mc, const YDeg& la, const YDeg& rb, int osign) {
          KKey nk = key;
          nk.hbar += sk.hbar + t - 1;
          nk.slots[j] = deg_add(la, rb);
          for (size_t s = 0; s < nk.xdeg.size(); ++s) nk.xdeg[s] += sk.xdeg[s];
          nk.dxmask |= sk.dxmask;
          r.add_term(nk, cf * sc * mc * wsign * Cyc(static_cast<long>(osign)));
        };
        moyal_contract(*sp, sk.ydeg, key.slots[j],
                       [&](int t, const Cyc& mc, const YDeg& la, const YDeg& rb) {
                         emit(t, mc, la, rb, 1);
                       });
        moyal_contract(*sp, key.slots[j], sk.ydeg,
                       [&](int t, const Cyc& mc, const YDeg& la, const YDeg& rb) {
                         emit(t, mc, la, rb, -1);
                       });
      }
    }
  }
  return r;
}

KChain random_kchain(std::mt19937_64& rng, const ChainModel& m, int q, int nterms) {
  const int n = m.data.sp->dim;
  std::uniform_int_distribution<int> dh(0, 1);
  std::uniform_int_distribution<int> dv(0, n - 1);
  std::uniform_int_distribution<int> dd(0, 2);
  // over a point locus there are no base variables to sample
  std::uniform_int_distribution<size_t> dt(0, m.tangent.empty() ? 0 : m.tangent.size() - 1);
  KChain r(m.data.sp, m.cap);
  for (int t = 0; t < nterms; ++t) {
    KKey k;
    k.hbar = dh(rng);
    k.xdeg.assign(static_cast<size_t>(n), 0);
    if (!m.tangent.empty()) {
      int xd = dd(rng);
      for (int s = 0; s < xd; ++s) k.xdeg[static_cast<size_t>(m.tangent[dt(rng)])] += 1;
      if (dh(rng)) k.dxmask |= 1u << m.tangent[dt(rng)];
    }
    k.slots.push_back(YDeg(static_cast<size_t>(n), 0));
    for (int s = 0; s < dd(rng); ++s)
      k.slots[0][static_cast<size_t>(dv(rng))] += 1;
    for (int s = 0; s < q; ++s) {
      YDeg d(static_cast<size_t>(n), 0);
      d[static_cast<size_t>(dv(rng))] += 1;
      if (dh(rng)) d[static_cast<size_t>(dv(rng))] += 1;
      k.slots.push_back(d);
    }
    r.add_term(k, random_cyc(rng, 1));
  }
  return r;
}

}  // namespace qorb
