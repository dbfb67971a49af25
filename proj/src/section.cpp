#include "qorb/section.hpp"

#include "qorb/error.hpp"

namespace qorb {

Section Section::scalar(SpacePtr sp, const Cyc& c, int cap) {
  Section r(std::move(sp), cap);
  SecKey k;
  k.xdeg.assign(static_cast<size_t>(r.dim()), 0);
  k.ydeg.assign(static_cast<size_t>(r.dim()), 0);
  r.add_term(k, c);
  return r;
}

Section Section::monomial(SpacePtr sp, const SecKey& k, const Cyc& c, int cap) {
  Section r(std::move(sp), cap);
  r.add_term(k, c);
  return r;
}

Section Section::x_coord(SpacePtr sp, int i, int cap) {
  Section r(std::move(sp), cap);
  SecKey k;
  k.xdeg.assign(static_cast<size_t>(r.dim()), 0);
  k.ydeg.assign(static_cast<size_t>(r.dim()), 0);
  k.xdeg[static_cast<size_t>(i)] = 1;
  r.add_term(k, Cyc(1));
  return r;
}

Section Section::y_coord(SpacePtr sp, int i, int cap) {
  Section r(std::move(sp), cap);
  SecKey k;
  k.xdeg.assign(static_cast<size_t>(r.dim()), 0);
  k.ydeg.assign(static_cast<size_t>(r.dim()), 0);
  k.ydeg[static_cast<size_t>(i)] = 1;
  r.add_term(k, Cyc(1));
  return r;
}

int Section::weight() const {
  int w = kUncapped;
  for (const auto& [k, c] : t_) w = std::min(w, sec_weight(k));
  return w;
}

Cyc Section::coeff(const SecKey& k) const {
  auto it = t_.find(k);
  return it == t_.end() ? Cyc() : it->second;
}

void Section::add_term(const SecKey& k, const Cyc& c) {
  if (c.is_zero()) return;
  if (cap_ != kUncapped && sec_weight(k) >= cap_) return;
  auto it = t_.find(k);
  if (it == t_.end()) {
    t_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

Section Section::operator-() const {
  Section r(sp_, cap_);
  for (const auto& [k, c] : t_) r.t_.emplace(k, -c);
  return r;
}

Section Section::operator+(const Section& o) const {
  check_same_space(*this, o);
  Section r(sp_ ? sp_ : o.sp_, std::min(cap_, o.cap_));
  for (const auto& [k, c] : t_) r.add_term(k, c);
  for (const auto& [k, c] : o.t_) r.add_term(k, c);
  return r;
}

Section Section::operator-(const Section& o) const { return *this + (-o); }

Section Section::operator*(const Cyc& c) const {
  Section r(sp_, cap_);
  if (c.is_zero()) return r;
  for (const auto& [k, v] : t_) r.t_.emplace(k, v * c);
  return r;
}

Section Section::shifted_hbar(int k) const {
  Section r(sp_, cap_shift(cap_, 2 * k));
  for (const auto& [key, c] : t_) {
    SecKey nk = key;
    nk.hbar += k;
    r.t_.emplace(nk, c);
  }
  return r;
}

Section Section::truncated(int cap) const {
  Section r(sp_, std::min(cap_, cap));
  for (const auto& [k, c] : t_)
    if (sec_weight(k) < cap) r.t_.emplace(k, c);
  return r;
}

Section Section::with_cap(int cap) const {
  Section r(sp_, cap);
  r.t_ = t_;
  return r;
}

bool Section::equal_below(const Section& o, int bound) const {
  Section d = *this - o;
  for (const auto& [k, c] : d.terms())
    if (sec_weight(k) < bound) return false;
  return true;
}

void check_same_space(const Section& a, const Section& b) {
  if (!a.space() || !b.space()) return;
  if (!(a.space()->B == b.space()->B))
    throw Error(ErrorKind::DimensionMismatch, "sections over different spaces");
}

Section smul(const Section& a, const Section& b) {
  check_same_space(a, b);
  const SpacePtr& sp = a.space() ? a.space() : b.space();
  Section r(sp, product_cap(a.cap(), a.weight(), b.cap(), b.weight()));
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      // every contraction preserves the weight sum, so pairs at or above the
      // output cap contribute nothing
      if (r.cap() != kUncapped && sec_weight(ka) + sec_weight(kb) >= r.cap()) continue;
      if (ka.dxmask & kb.dxmask) continue;
      Cyc prod = ca * cb * Cyc(static_cast<long>(wedge_merge_sign(ka.dxmask, kb.dxmask)));
      SecKey base;
      base.xdeg = ka.xdeg;
      for (size_t i = 0; i < base.xdeg.size(); ++i) base.xdeg[i] += kb.xdeg[i];
      base.dxmask = ka.dxmask | kb.dxmask;
      moyal_contract(*sp, ka.ydeg, kb.ydeg,
                     [&](int t, const Cyc& c, const YDeg& ya, const YDeg& yb) {
                       SecKey nk = base;
                       nk.hbar = ka.hbar + kb.hbar + t;
                       nk.ydeg = deg_add(ya, yb);
                       r.add_term(nk, prod * c);
                     });
    }
  return r;
}

Section graded_comm(const Section& a, const Section& b) {
  check_same_space(a, b);
  const SpacePtr& sp = a.space() ? a.space() : b.space();
  // split by form degree so the Koszul sign is a scalar on each pair
  Section r(sp, product_cap(a.cap(), a.weight(), b.cap(), b.weight()));
  std::map<int, Section> pa, pb;
  for (const auto& [k, c] : a.terms()) {
    auto [it, fresh] = pa.try_emplace(form_degree(k), Section(sp, a.cap()));
    it->second.add_term(k, c);
  }
  for (const auto& [k, c] : b.terms()) {
    auto [it, fresh] = pb.try_emplace(form_degree(k), Section(sp, b.cap()));
    it->second.add_term(k, c);
  }
  for (const auto& [p, ax] : pa)
    for (const auto& [q, bx] : pb) {
      Section s = smul(ax, bx);
      Section t = smul(bx, ax);
      r += (p * q) % 2 == 0 ? s - t : s + t;
    }
  return r.with_cap(product_cap(a.cap(), a.weight(), b.cap(), b.weight()));
}

Section koszul_delta(const Section& a) {
  Section r(a.space(), cap_shift(a.cap(), -1));
  for (const auto& [k, c] : a.terms())
    for (int i = 0; i < a.dim(); ++i) {
      if (k.ydeg[static_cast<size_t>(i)] == 0) continue;
      if (k.dxmask & (1u << i)) continue;
      SecKey nk = k;
      nk.ydeg[static_cast<size_t>(i)] -= 1;
      nk.dxmask |= 1u << i;
      r.add_term(nk, c * Cyc(static_cast<long>(k.ydeg[static_cast<size_t>(i)])) *
                         Cyc(static_cast<long>(wedge_left_sign(k.dxmask, i))));
    }
  return r;
}

Section koszul_delta_inv(const Section& a) {
  Section r(a.space(), cap_shift(a.cap(), 1));
  for (const auto& [k, c] : a.terms()) {
    int p = deg_total(k.ydeg);
    int q = form_degree(k);
    if (p + q == 0) continue;
    Cyc f = c * Cyc(rat(1, p + q));
    for (unsigned rest = k.dxmask; rest != 0; rest &= rest - 1) {
      int i = __builtin_ctz(rest);
      SecKey nk = k;
      nk.dxmask &= ~(1u << i);
      nk.ydeg[static_cast<size_t>(i)] += 1;
      // contraction sign: the removed factor moves past the lower ones
      r.add_term(nk, f * Cyc(static_cast<long>(wedge_left_sign(nk.dxmask, i))));
    }
  }
  return r;
}

Section sigma(const Section& a) {
  Section r(a.space(), a.cap());
  for (const auto& [k, c] : a.terms())
    if (deg_total(k.ydeg) == 0 && k.dxmask == 0) r.add_term(k, c);
  return r;
}

Section base_d(const Section& a) {
  Section r(a.space(), a.cap());
  for (const auto& [k, c] : a.terms())
    for (int i = 0; i < a.dim(); ++i) {
      if (k.xdeg[static_cast<size_t>(i)] == 0) continue;
      if (k.dxmask & (1u << i)) continue;
      SecKey nk = k;
      nk.xdeg[static_cast<size_t>(i)] -= 1;
      nk.dxmask |= 1u << i;
      r.add_term(nk, c * Cyc(static_cast<long>(k.xdeg[static_cast<size_t>(i)])) *
                         Cyc(static_cast<long>(wedge_left_sign(k.dxmask, i))));
    }
  return r;
}

namespace {

// expand a commutative monomial substitution variable by variable
std::map<YDeg, Cyc> subst_poly(const Mat& S, const YDeg& deg) {
  int n = static_cast<int>(deg.size());
  std::map<YDeg, Cyc> acc;
  acc.emplace(YDeg(static_cast<size_t>(n), 0), Cyc(1));
  for (int i = 0; i < n; ++i)
    for (int rep = 0; rep < deg[static_cast<size_t>(i)]; ++rep) {
      std::map<YDeg, Cyc> next;
      for (const auto& [d, c] : acc)
        for (int j = 0; j < n; ++j) {
          Cyc sij = S.at(i, j);
          if (sij.is_zero()) continue;
          YDeg nd = d;
          nd[static_cast<size_t>(j)] += 1;
          auto it = next.find(nd);
          if (it == next.end()) {
            next.emplace(std::move(nd), c * sij);
          } else {
            it->second += c * sij;
            if (it->second.is_zero()) next.erase(it);
          }
        }
      acc.swap(next);
    }
  return acc;
}

// expand the wedge factors of a mask, keeping (mask, sign) combinations
std::map<unsigned, Cyc> subst_wedge(const Mat& S, unsigned mask) {
  std::map<unsigned, Cyc> acc;
  acc.emplace(0u, Cyc(1));
  for (unsigned rest = mask; rest != 0; rest &= rest - 1) {
    int i = __builtin_ctz(rest);
    std::map<unsigned, Cyc> next;
    for (const auto& [m, c] : acc)
      for (int j = 0; j < S.cols(); ++j) {
        Cyc sij = S.at(i, j);
        if (sij.is_zero()) continue;
        if (m & (1u << j)) continue;
        // wedge dx^j onto the right end of the accumulated factor
        int sign = (__builtin_popcount(m >> (j + 1)) % 2 == 0) ? 1 : -1;
        unsigned nm = m | (1u << j);
        Cyc v = c * sij * Cyc(static_cast<long>(sign));
        auto it = next.find(nm);
        if (it == next.end()) {
          next.emplace(nm, v);
        } else {
          it->second += v;
          if (it->second.is_zero()) next.erase(it);
        }
      }
    acc.swap(next);
  }
  return acc;
}

}  // namespace

Section subst_all(const Section& a, const Mat& S) {
  Section r(a.space(), a.cap());
  for (const auto& [k, c] : a.terms()) {
    auto xs = subst_poly(S, k.xdeg);
    auto ys = subst_poly(S, k.ydeg);
    auto ws = subst_wedge(S, k.dxmask);
    for (const auto& [xd, xc] : xs)
      for (const auto& [yd, yc] : ys)
        for (const auto& [m, wc] : ws) {
          SecKey nk;
          nk.hbar = k.hbar;
          nk.xdeg = xd;
          nk.ydeg = yd;
          nk.dxmask = m;
          r.add_term(nk, c * xc * yc * wc);
        }
  }
  return r;
}

Section act_on_section(const Mat& g, const Section& a) {
  return subst_all(a, g.transpose());
}

Section random_section(std::mt19937_64& rng, SpacePtr sp, int maxdeg, int nterms,
                       int cap) {
  int n = sp->dim;
  std::uniform_int_distribution<int> dh(0, 1);
  std::uniform_int_distribution<int> dd(0, maxdeg);
  std::uniform_int_distribution<int> dv(0, n - 1);
  std::uniform_int_distribution<unsigned> dm(0u, (1u << n) - 1u);
  Section r(sp, cap);
  for (int t = 0; t < nterms; ++t) {
    SecKey k;
    k.hbar = dh(rng);
    k.xdeg.assign(static_cast<size_t>(n), 0);
    k.ydeg.assign(static_cast<size_t>(n), 0);
    int dx = dd(rng), dy = dd(rng);
    for (int s = 0; s < dx; ++s) k.xdeg[static_cast<size_t>(dv(rng))] += 1;
    for (int s = 0; s < dy; ++s) k.ydeg[static_cast<size_t>(dv(rng))] += 1;
    k.dxmask = dm(rng);
    r.add_term(k, random_cyc(rng, 1));
  }
  return r;
}

}  // namespace qorb
