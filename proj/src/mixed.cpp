#include "qorb/mixed.hpp"

namespace qorb {

namespace {

// nonzero entries of column j of act[g]: e_j^g = sum_i c_i e_i
std::vector<std::pair<int, Cyc>> act_col(const AlgebraAction& X, int g, int j) {
  std::vector<std::pair<int, Cyc>> out;
  const Mat& m = X.act[static_cast<size_t>(g)];
  for (int i = 0; i < m.rows(); ++i) {
    Cyc c = m.at(i, j);
    if (!c.is_zero()) out.emplace_back(i, c);
  }
  return out;
}

int parity_sign(int k) { return (k % 2 == 0) ? 1 : -1; }

// beta on a single basis tensor, scaled by c
void beta_term(const AlgebraAction& X, const MixedKey& k, const Cyc& c, TotalElement& out) {
  const int m = static_cast<int>(k.mid.size());
  const int q = static_cast<int>(k.grp.size());
  if (m == 0) {
    if (q != 0) return;
    // terminal multiplication (e_la lg)(e_ra rg) = e_la e_ra^{lg} (lg rg)
    int gprod = X.G.mul[static_cast<size_t>(k.lg)][static_cast<size_t>(k.rg)];
    for (auto [i, ci] : act_col(X, k.lg, k.ra)) {
      const auto& prod = X.A.basis_mul(k.la, i);
      for (int p = 0; p < X.A.dim; ++p)
        out.add_aug(p, gprod, c * ci * prod[static_cast<size_t>(p)]);
    }
    return;
  }
  const Cyc sq = Cyc(static_cast<long>(parity_sign(q)));
  // face 0: multiply the twisted first slot into the left algebra part
  for (auto [i, ci] : act_col(X, k.lg, k.mid[0])) {
    const auto& prod = X.A.basis_mul(k.la, i);
    for (int p = 0; p < X.A.dim; ++p) {
      if (prod[static_cast<size_t>(p)].is_zero()) continue;
      MixedKey nk = k;
      nk.la = p;
      nk.mid.erase(nk.mid.begin());
      out.add_term(nk, c * sq * ci * prod[static_cast<size_t>(p)]);
    }
  }
  // interior faces f = 1..m-1: merge slots f-1 and f, sign (-1)^f
  for (int f = 1; f <= m - 1; ++f) {
    const Cyc sf = Cyc(static_cast<long>(parity_sign(f)));
    const auto& prod = X.A.basis_mul(k.mid[static_cast<size_t>(f - 1)], k.mid[static_cast<size_t>(f)]);
    for (int p = 0; p < X.A.dim; ++p) {
      if (prod[static_cast<size_t>(p)].is_zero()) continue;
      MixedKey nk = k;
      nk.mid[static_cast<size_t>(f - 1)] = p;
      nk.mid.erase(nk.mid.begin() + f);
      out.add_term(nk, c * sq * sf * prod[static_cast<size_t>(p)]);
    }
  }
  // face m: multiply the last slot into the right algebra part, sign (-1)^m
  {
    const Cyc sm = Cyc(static_cast<long>(parity_sign(m)));
    const auto& prod = X.A.basis_mul(k.mid[static_cast<size_t>(m - 1)], k.ra);
    for (int p = 0; p < X.A.dim; ++p) {
      if (prod[static_cast<size_t>(p)].is_zero()) continue;
      MixedKey nk = k;
      nk.ra = p;
      nk.mid.pop_back();
      out.add_term(nk, c * sq * sm * prod[static_cast<size_t>(p)]);
    }
  }
}

// beta_prime on a single basis tensor, scaled by c
void beta_prime_term(const AlgebraAction& X, const MixedKey& k, const Cyc& c,
                     TotalElement& out) {
  const int m = static_cast<int>(k.mid.size());
  const int q = static_cast<int>(k.grp.size());
  if (q == 0) return;
  // face 0: absorb grp[0] into the left group part and twist every algebra
  // slot to its right by its inverse
  {
    const int g1 = k.grp[0];
    const int gi = X.G.inv[static_cast<size_t>(g1)];
    MixedKey base = k;
    base.lg = X.G.mul[static_cast<size_t>(k.lg)][static_cast<size_t>(g1)];
    base.rg = X.G.mul[static_cast<size_t>(gi)][static_cast<size_t>(k.rg)];
    base.grp.erase(base.grp.begin());
    std::vector<std::pair<MixedKey, Cyc>> acc;
    acc.emplace_back(base, c);
    for (int s = 0; s < m; ++s) {
      std::vector<std::pair<MixedKey, Cyc>> next;
      for (const auto& [kk, cc] : acc)
        for (auto [i, ci] : act_col(X, gi, k.mid[static_cast<size_t>(s)])) {
          MixedKey nk = kk;
          nk.mid[static_cast<size_t>(s)] = i;
          next.emplace_back(nk, cc * ci);
        }
      acc.swap(next);
    }
    std::vector<std::pair<MixedKey, Cyc>> next;
    for (const auto& [kk, cc] : acc)
      for (auto [i, ci] : act_col(X, gi, k.ra)) {
        MixedKey nk = kk;
        nk.ra = i;
        next.emplace_back(nk, cc * ci);
      }
    for (const auto& [kk, cc] : next) out.add_term(kk, cc);
  }
  // interior faces f = 1..q-1: merge group slots f-1 and f, sign (-1)^f
  for (int f = 1; f <= q - 1; ++f) {
    MixedKey nk = k;
    nk.grp[static_cast<size_t>(f - 1)] =
        X.G.mul[static_cast<size_t>(k.grp[static_cast<size_t>(f - 1)])]
               [static_cast<size_t>(k.grp[static_cast<size_t>(f)])];
    nk.grp.erase(nk.grp.begin() + f);
    out.add_term(nk, c * Cyc(static_cast<long>(parity_sign(f))));
  }
  // face q: drop the last group slot, sign (-1)^q
  {
    MixedKey nk = k;
    nk.grp.pop_back();
    out.add_term(nk, c * Cyc(static_cast<long>(parity_sign(q))));
  }
}

// contraction on a single basis tensor, scaled by c
void contraction_term(const AlgebraAction& X, const MixedKey& k, const Cyc& c,
                      TotalElement& out) {
  const int m = static_cast<int>(k.mid.size());
  const int q = static_cast<int>(k.grp.size());
  const Cyc sq = Cyc(static_cast<long>(parity_sign(q)));
  const int gi = X.G.inv[static_cast<size_t>(k.lg)];
  // push the left algebra part, twisted back, into a fresh first slot
  for (int u = 0; u < X.A.dim; ++u) {
    const Cyc& cu = X.A.unit[static_cast<size_t>(u)];
    if (cu.is_zero()) continue;
    for (auto [i, ci] : act_col(X, gi, k.la)) {
      MixedKey nk = k;
      nk.la = u;
      nk.mid.insert(nk.mid.begin(), i);
      out.add_term(nk, c * sq * cu * ci);
    }
  }
  if (m != 0) return;
  // bidegree (0, q) correction: multiply the slots together and record the
  // left group part as a fresh leading group slot
  const int gh = X.G.mul[static_cast<size_t>(k.lg)][static_cast<size_t>(k.rg)];
  for (int u = 0; u < X.A.dim; ++u) {
    const Cyc& cu = X.A.unit[static_cast<size_t>(u)];
    if (cu.is_zero()) continue;
    for (auto [i, ci] : act_col(X, k.lg, k.ra)) {
      const auto& prod = X.A.basis_mul(k.la, i);
      for (int p = 0; p < X.A.dim; ++p) {
        if (prod[static_cast<size_t>(p)].is_zero()) continue;
        MixedKey nk;
        nk.la = u;
        nk.lg = 0;
        nk.ra = p;
        nk.rg = gh;
        nk.grp = k.grp;
        nk.grp.insert(nk.grp.begin(), k.lg);
        out.add_term(nk, c * cu * ci * prod[static_cast<size_t>(p)]);
      }
    }
  }
}

}  // namespace

void TotalElement::add_term(const MixedKey& k, const Cyc& c) {
  if (c.is_zero()) return;
  auto it = terms.find(k);
  if (it == terms.end()) {
    terms.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

void TotalElement::add_aug(int i, int g, const Cyc& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(i, g);
  auto it = aug.find(key);
  if (it == aug.end()) {
    aug.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) aug.erase(it);
  }
}

TotalElement TotalElement::operator+(const TotalElement& o) const {
  TotalElement out = *this;
  for (const auto& [k, c] : o.terms) out.add_term(k, c);
  for (const auto& [k, c] : o.aug) out.add_aug(k.first, k.second, c);
  return out;
}

TotalElement TotalElement::operator-(const TotalElement& o) const {
  TotalElement out = *this;
  for (const auto& [k, c] : o.terms) out.add_term(k, -c);
  for (const auto& [k, c] : o.aug) out.add_aug(k.first, k.second, -c);
  return out;
}

TotalElement beta(const AlgebraAction& X, const TotalElement& c) {
  TotalElement out;
  for (const auto& [k, v] : c.terms) beta_term(X, k, v, out);
  return out;
}

TotalElement beta_prime(const AlgebraAction& X, const TotalElement& c) {
  TotalElement out;
  for (const auto& [k, v] : c.terms) beta_prime_term(X, k, v, out);
  return out;
}

TotalElement total_boundary(const AlgebraAction& X, const TotalElement& c) {
  TotalElement out;
  for (const auto& [k, v] : c.terms) {
    beta_term(X, k, v, out);
    beta_prime_term(X, k, v, out);
  }
  return out;
}

TotalElement contraction(const AlgebraAction& X, const TotalElement& c) {
  TotalElement out;
  for (const auto& [k, v] : c.terms) contraction_term(X, k, v, out);
  // lift the terminal slot to bidegree (0,0): a g -> 1 (x) a g
  for (const auto& [k, v] : c.aug) {
    for (int u = 0; u < X.A.dim; ++u) {
      const Cyc& cu = X.A.unit[static_cast<size_t>(u)];
      if (cu.is_zero()) continue;
      MixedKey nk;
      nk.la = u;
      nk.lg = 0;
      nk.ra = k.first;
      nk.rg = k.second;
      out.add_term(nk, v * cu);
    }
  }
  return out;
}

TotalElement act_left(const AlgebraAction& X, int a0, int g0, const TotalElement& c) {
  TotalElement out;
  for (const auto& [k, v] : c.terms)
    for (auto [i, ci] : act_col(X, g0, k.la)) {
      const auto& prod = X.A.basis_mul(a0, i);
      for (int p = 0; p < X.A.dim; ++p) {
        if (prod[static_cast<size_t>(p)].is_zero()) continue;
        MixedKey nk = k;
        nk.la = p;
        nk.lg = X.G.mul[static_cast<size_t>(g0)][static_cast<size_t>(k.lg)];
        out.add_term(nk, v * ci * prod[static_cast<size_t>(p)]);
      }
    }
  for (const auto& [k, v] : c.aug)
    for (auto [i, ci] : act_col(X, g0, k.first)) {
      const auto& prod = X.A.basis_mul(a0, i);
      for (int p = 0; p < X.A.dim; ++p)
        out.add_aug(p, X.G.mul[static_cast<size_t>(g0)][static_cast<size_t>(k.second)],
                    v * ci * prod[static_cast<size_t>(p)]);
    }
  return out;
}

TotalElement act_right(const AlgebraAction& X, const TotalElement& c, int b0, int h0) {
  TotalElement out;
  for (const auto& [k, v] : c.terms)
    for (auto [i, ci] : act_col(X, k.rg, b0)) {
      const auto& prod = X.A.basis_mul(k.ra, i);
      for (int p = 0; p < X.A.dim; ++p) {
        if (prod[static_cast<size_t>(p)].is_zero()) continue;
        MixedKey nk = k;
        nk.ra = p;
        nk.rg = X.G.mul[static_cast<size_t>(k.rg)][static_cast<size_t>(h0)];
        out.add_term(nk, v * ci * prod[static_cast<size_t>(p)]);
      }
    }
  for (const auto& [k, v] : c.aug)
    for (auto [i, ci] : act_col(X, k.second, b0)) {
      const auto& prod = X.A.basis_mul(k.first, i);
      for (int p = 0; p < X.A.dim; ++p)
        out.add_aug(p, X.G.mul[static_cast<size_t>(k.second)][static_cast<size_t>(h0)],
                    v * ci * prod[static_cast<size_t>(p)]);
    }
  return out;
}

TotalElement random_mixed(std::mt19937_64& rng, const AlgebraAction& X, int m, int q,
                          int nterms) {
  std::uniform_int_distribution<int> da(0, X.A.dim - 1);
  std::uniform_int_distribution<int> dg(0, X.G.n - 1);
  TotalElement out;
  for (int t = 0; t < nterms; ++t) {
    MixedKey k;
    k.la = da(rng);
    k.lg = dg(rng);
    k.ra = da(rng);
    k.rg = dg(rng);
    for (int s = 0; s < m; ++s) k.mid.push_back(da(rng));
    for (int s = 0; s < q; ++s) k.grp.push_back(dg(rng));
    out.add_term(k, random_cyc(rng, 1));
  }
  return out;
}

}  // namespace qorb
