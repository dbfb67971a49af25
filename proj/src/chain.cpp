#include "qorb/chain.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "qorb/error.hpp"

namespace qorb {

namespace {

bool is_constant(const YDeg& d) {
  for (int e : d)
    if (e != 0) return false;
  return true;
}

int permutation_sign(const std::vector<int>& p) {
  int inv = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return (inv % 2) ? -1 : 1;
}

}  // namespace

FixedSplitting fixed_splitting(const SymplecticSpace& sp, const Mat& g) {
  if (!is_symplectic(sp, g))
    throw Error(ErrorKind::NonSymplectic, "splitting requires a symplectic element");
  int n = sp.dim;
  Mat d = g - Mat::identity(n);
  FixedSplitting fs{Mat::zero(n, 0), Mat::zero(n, 0), Mat::zero(0, 0), Mat::zero(0, 0),
                    Mat::zero(0, n)};
  fs.fixed = d.kernel_basis();
  // Image basis: columns of (g - Id) filtered by incremental rank.
  for (int j = 0; j < n; ++j) {
    Mat cand = hcat(fs.moving, d.col(j));
    if (cand.rank() > fs.moving.cols()) fs.moving = cand;
  }
  int tm = fs.fixed.cols();
  if (tm + fs.moving.cols() != n || hcat(fs.fixed, fs.moving).rank() != n)
    throw Error(ErrorKind::NonSymplectic, "kernel and image do not split the space");
  if (!(fs.fixed.transpose() * sp.B * fs.moving).is_zero())
    throw Error(ErrorKind::NonSymplectic, "splitting summands are not B-orthogonal");
  fs.omega_res = fs.fixed.transpose() * sp.omega * fs.fixed;
  if (tm > 0) {
    auto inv = fs.omega_res.inverse();
    if (!inv) throw Error(ErrorKind::NonSymplectic, "restricted form is degenerate");
    fs.form_inv = *inv;
  }
  auto whole = hcat(fs.fixed, fs.moving).inverse();
  if (!whole) throw Error(ErrorKind::NonSymplectic, "splitting basis is singular");
  fs.proj = Mat::zero(tm, n);
  for (int a = 0; a < tm; ++a)
    for (int i = 0; i < n; ++i) fs.proj.at(a, i) = whole->at(a, i);
  return fs;
}

TwistedChain::TwistedChain(SpacePtr sp, Mat g, int degree, int cap)
    : sp_(std::move(sp)), g_(std::move(g)), degree_(degree), cap_(cap) {
  if (degree_ < 0) throw Error(ErrorKind::InvalidInput, "negative chain degree");
}

void TwistedChain::add_term(int h, const std::vector<YDeg>& slots, const Cyc& c) {
  if (static_cast<int>(slots.size()) != degree_ + 1)
    throw Error(ErrorKind::DimensionMismatch, "slot count does not match chain degree");
  if (c.is_zero()) return;
  for (int j = 1; j <= degree_; ++j)
    if (is_constant(slots[j])) return;  // normalized complex
  if (cap_ != kUncapped) {
    int w = 2 * h;
    for (const YDeg& s : slots) w += deg_total(s);
    if (w >= cap_) return;
  }
  Key k{h, slots};
  auto it = t_.find(k);
  if (it == t_.end()) {
    t_.emplace(std::move(k), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

TwistedChain TwistedChain::operator+(const TwistedChain& o) const {
  if (degree_ != o.degree_ || !(g_ == o.g_))
    throw Error(ErrorKind::DimensionMismatch, "chain mismatch in addition");
  TwistedChain r(sp_, g_, degree_, std::min(cap_, o.cap_));
  for (const auto& [k, c] : t_) r.add_term(k.first, k.second, c);
  for (const auto& [k, c] : o.t_) r.add_term(k.first, k.second, c);
  return r;
}

TwistedChain TwistedChain::operator-(const TwistedChain& o) const {
  return *this + (o * Cyc(-1));
}

TwistedChain TwistedChain::operator*(const Cyc& c) const {
  TwistedChain r(sp_, g_, degree_, cap_);
  if (c.is_zero()) return r;
  for (const auto& [k, v] : t_) r.add_term(k.first, k.second, v * c);
  return r;
}

bool TwistedChain::operator==(const TwistedChain& o) const {
  return degree_ == o.degree_ && g_ == o.g_ && t_ == o.t_;
}

std::string TwistedChain::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (k.first != 0) os << "*h^" << k.first;
    for (size_t s = 0; s < k.second.size(); ++s) {
      os << (s == 0 ? " [" : " (x) [");
      bool any = false;
      for (size_t i = 0; i < k.second[s].size(); ++i)
        for (int rep = 0; rep < k.second[s][i]; ++rep) {
          os << (any ? " " : "") << "y" << i + 1;
          any = true;
        }
      if (!any) os << "1";
      os << "]";
    }
  }
  return os.str();
}

TwistedChain twisted_cycle_psi(const SpacePtr& sp, const Mat& g) {
  FixedSplitting fs = fixed_splitting(*sp, g);
  int tm = fs.fixed.cols();
  TwistedChain psi(sp, g, tm);
  if (tm == 0) {
    psi.add_term(0, {YDeg(sp->dim, 0)}, Cyc(1));
    return psi;
  }
  // Top coefficient of the m-fold wedge of B^g on the sorted kernel basis.
  std::map<unsigned, Cyc> wedge{{0u, Cyc(1)}};
  for (int step = 0; step < tm / 2; ++step) {
    std::map<unsigned, Cyc> next;
    for (const auto& [mask, co] : wedge)
      for (int a = 0; a < tm; ++a)
        for (int b = a + 1; b < tm; ++b) {
          const Cyc& bg = fs.form_inv.at(a, b);
          if (bg.is_zero()) continue;
          if (mask & ((1u << a) | (1u << b))) continue;
          int swaps = std::popcount(mask >> (a + 1)) + std::popcount(mask >> (b + 1));
          Cyc add = co * bg;
          if (swaps % 2) add = -add;
          next[mask | (1u << a) | (1u << b)] += add;
        }
    wedge = std::move(next);
  }
  Cyc top = wedge[(1u << tm) - 1];
  if (top.is_zero())
    throw Error(ErrorKind::NonSymplectic, "degenerate Liouville coefficient");

  std::vector<int> perm(tm);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    Cyc base = top;
    if (permutation_sign(perm) < 0) base = -base;
    // Expand each slot lin(v_{perm[k]}) distributively over its components.
    std::vector<YDeg> slots(tm + 1, YDeg(sp->dim, 0));
    std::function<void(int, const Cyc&)> rec = [&](int k, const Cyc& coeff) {
      if (k == tm) {
        psi.add_term(0, slots, coeff);
        return;
      }
      for (int i = 0; i < sp->dim; ++i) {
        const Cyc& vi = fs.fixed.at(i, perm[k]);
        if (vi.is_zero()) continue;
        slots[k + 1][i] = 1;
        rec(k + 1, coeff * vi);
        slots[k + 1][i] = 0;
      }
    };
    rec(0, base);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return psi;
}

TwistedChain hochschild_b(const TwistedChain& c) {
  int q = c.degree();
  TwistedChain r(c.space(), c.twist(), q > 0 ? q - 1 : 0, c.cap());
  if (q == 0) return r;
  auto mono = [&](const YDeg& d) { return Weyl::monomial(c.space(), 0, d, Cyc(1)); };
  for (const auto& [key, coeff] : c.terms()) {
    const auto& [h, slots] = key;
    // face 0: slot0 o twist(slot1), sign +1
    {
      Weyl prod = moyal(mono(slots[0]), act_on_weyl(c.twist(), mono(slots[1])));
      for (const auto& [mk, mc] : prod.terms()) {
        std::vector<YDeg> ns;
        ns.push_back(mk.second);
        for (int j = 2; j <= q; ++j) ns.push_back(slots[j]);
        r.add_term(h + mk.first, ns, coeff * mc);
      }
    }
    // interior face j merges slots j and j+1, sign (-1)^j
    for (int j = 1; j < q; ++j) {
      Weyl prod = moyal(mono(slots[j]), mono(slots[j + 1]));
      for (const auto& [mk, mc] : prod.terms()) {
        std::vector<YDeg> ns;
        for (int s = 0; s < j; ++s) ns.push_back(slots[s]);
        ns.push_back(mk.second);
        for (int s = j + 2; s <= q; ++s) ns.push_back(slots[s]);
        Cyc add = coeff * mc;
        if (j % 2) add = -add;
        r.add_term(h + mk.first, ns, add);
      }
    }
    // last face: slot q o slot 0 onto slot 0, sign (-1)^q
    {
      Weyl prod = moyal(mono(slots[q]), mono(slots[0]));
      for (const auto& [mk, mc] : prod.terms()) {
        std::vector<YDeg> ns;
        ns.push_back(mk.second);
        for (int s = 1; s < q; ++s) ns.push_back(slots[s]);
        Cyc add = coeff * mc;
        if (q % 2) add = -add;
        r.add_term(h + mk.first, ns, add);
      }
    }
  }
  return r;
}

void PolyForm::add_term(int h, const YDeg& wdeg, unsigned mask, const Cyc& c) {
  if (c.is_zero()) return;
  Key k{h, wdeg, mask};
  auto it = t_.find(k);
  if (it == t_.end()) {
    t_.emplace(std::move(k), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

bool PolyForm::operator==(const PolyForm& o) const {
  return nvars_ == o.nvars_ && t_ == o.t_;
}

std::string PolyForm::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : t_) {
    const auto& [h, wdeg, mask] = k;
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (h != 0) os << "*h^" << h;
    for (size_t i = 0; i < wdeg.size(); ++i)
      if (wdeg[i] != 0) {
        os << "*w" << i + 1;
        if (wdeg[i] != 1) os << "^" << wdeg[i];
      }
    for (int a = 0; a < nvars_; ++a)
      if (mask & (1u << a)) os << "*dw" << a + 1;
  }
  return os.str();
}

namespace {

using WPoly = std::map<YDeg, Cyc>;  // polynomial in the w variables

void wpoly_add(WPoly& p, const YDeg& d, const Cyc& c) {
  if (c.is_zero()) return;
  auto it = p.find(d);
  if (it == p.end()) {
    p.emplace(d, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

WPoly wpoly_mul(const WPoly& a, const WPoly& b) {
  WPoly r;
  for (const auto& [da, ca] : a)
    for (const auto& [db, cb] : b) wpoly_add(r, deg_add(da, db), ca * cb);
  return r;
}

// pr of the monomial y^alpha: product over i of (sum_a P_{ai} w^a)^{alpha_i}.
WPoly pr_monomial(const Mat& proj, int tm, const YDeg& alpha) {
  WPoly r{{YDeg(tm, 0), Cyc(1)}};
  for (size_t i = 0; i < alpha.size(); ++i)
    for (int rep = 0; rep < alpha[i]; ++rep) {
      WPoly lin;
      for (int a = 0; a < tm; ++a) {
        const Cyc& p = proj.at(a, static_cast<int>(i));
        if (p.is_zero()) continue;
        YDeg d(tm, 0);
        d[a] = 1;
        lin.emplace(std::move(d), p);
      }
      r = wpoly_mul(r, lin);
      if (r.empty()) return r;
    }
  return r;
}

}  // namespace

PolyForm antisym_mu(const TwistedChain& c) {
  FixedSplitting fs = fixed_splitting(*c.space(), c.twist());
  int tm = fs.fixed.cols();
  PolyForm out(tm);
  int q = c.degree();
  for (const auto& [key, coeff] : c.terms()) {
    const auto& [h, slots] = key;
    // Accumulator over (w-degree, wedge mask).
    std::map<std::pair<YDeg, unsigned>, Cyc> acc;
    for (const auto& [d0, c0] : pr_monomial(fs.proj, tm, slots[0]))
      acc[{d0, 0u}] = c0;
    for (int j = 1; j <= q && !acc.empty(); ++j) {
      WPoly pj = pr_monomial(fs.proj, tm, slots[j]);
      // d(pr s_j): list of (variable a, reduced degree, coefficient)
      std::vector<std::tuple<int, YDeg, Cyc>> diff;
      for (const auto& [d, co] : pj)
        for (int a = 0; a < tm; ++a)
          if (d[a] > 0) {
            YDeg rd = d;
            rd[a] -= 1;
            diff.emplace_back(a, rd, co * Cyc(d[a]));
          }
      std::map<std::pair<YDeg, unsigned>, Cyc> next;
      for (const auto& [kk, co] : acc)
        for (const auto& [a, rd, co2] : diff) {
          if (kk.second & (1u << a)) continue;
          int swaps = std::popcount(kk.second >> (a + 1));
          Cyc add = co * co2;
          if (swaps % 2) add = -add;
          auto nk = std::make_pair(deg_add(kk.first, rd), kk.second | (1u << a));
          auto it = next.find(nk);
          if (it == next.end()) {
            next.emplace(nk, add);
          } else {
            it->second += add;
            if (it->second.is_zero()) next.erase(it);
          }
        }
      acc = std::move(next);
    }
    for (const auto& [kk, co] : acc) out.add_term(h, kk.first, kk.second, coeff * co);
  }
  return out;
}

TwistedChain random_chain(std::mt19937_64& rng, const SpacePtr& sp, const Mat& g,
                          int degree, int maxdeg, int nterms) {
  TwistedChain c(sp, g, degree);
  std::uniform_int_distribution<int> coord(0, sp->dim - 1);
  std::uniform_int_distribution<int> deg(1, maxdeg);
  std::uniform_int_distribution<int> deg0(0, maxdeg);
  for (int t = 0; t < nterms; ++t) {
    std::vector<YDeg> slots;
    for (int s = 0; s <= degree; ++s) {
      YDeg d(sp->dim, 0);
      int total = (s == 0) ? deg0(rng) : deg(rng);
      for (int k = 0; k < total; ++k) d[coord(rng)] += 1;
      slots.push_back(std::move(d));
    }
    c.add_term(0, slots, random_cyc(rng, 1));
  }
  return c;
}

}  // namespace qorb
