#include "qorb/fedosov.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "qorb/error.hpp"
#include "qorb/koszul.hpp"

namespace qorb {

namespace {

using GKey = std::tuple<int, int, int>;

// aggregated lower-index connection coefficients as x-polynomials
std::map<GKey, Poly> aggregate_gamma(const std::vector<GammaTerm>& gamma, int n) {
  std::map<GKey, Poly> out;
  for (const GammaTerm& t : gamma) {
    if (t.i < 0 || t.i >= n || t.j < 0 || t.j >= n || t.k < 0 || t.k >= n)
      throw Error(ErrorKind::InvalidInput, "connection index out of range");
    if (static_cast<int>(t.xdeg.size()) != n)
      throw Error(ErrorKind::InvalidInput, "connection x-degree has wrong length");
    Poly mono;
    mono.emplace(t.xdeg, t.coeff);
    auto [it, fresh] = out.try_emplace(GKey{t.i, t.j, t.k});
    it->second = poly_add(it->second, mono);
  }
  return out;
}

Poly lookup(const std::map<GKey, Poly>& m, int i, int j, int k) {
  auto it = m.find(GKey{i, j, k});
  return it == m.end() ? Poly{} : it->second;
}

long choose(int n, int k) {
  long r = 1;
  for (int t = 0; t < k; ++t) r = r * (n - t) / (t + 1);
  return r;
}

}  // namespace

FedosovData make_fedosov_data(const Mat& omega, const std::vector<GammaTerm>& gamma,
                              const std::vector<Omega2Term>& omega_terms, int weight_cap) {
  if (weight_cap < 1 || weight_cap == kUncapped)
    throw Error(ErrorKind::InvalidInput, "weight cap must be a positive finite bound");
  std::optional<Mat> binv = omega.inverse();
  if (!binv || !(omega.transpose() == -omega))
    throw Error(ErrorKind::InvalidInput, "form must be antisymmetric and invertible");
  FedosovData d;
  d.sp = make_space(*binv);
  d.omega = omega;
  d.gamma = gamma;
  d.weight_cap = weight_cap;
  const int n = d.sp->dim;

  // total symmetry of the aggregated lower-index coefficients
  std::map<GKey, Poly> agg = aggregate_gamma(gamma, n);
  for (const auto& [key, p] : agg) {
    auto [i, j, k] = key;
    int perm[3] = {i, j, k};
    std::sort(perm, perm + 3);
    do {
      if (!poly_is_zero(poly_sub(p, lookup(agg, perm[0], perm[1], perm[2]))))
        throw Error(ErrorKind::InvalidInput, "connection coefficients are not symmetric");
    } while (std::next_permutation(perm, perm + 3));
  }

  Section oh(d.sp, weight_cap);
  for (const Omega2Term& t : omega_terms) {
    if (t.hbar < 1)
      throw Error(ErrorKind::InvalidInput, "curvature series must start at hbar^1");
    if (t.i < 0 || t.j < 0 || t.i >= n || t.j >= n || t.i == t.j)
      throw Error(ErrorKind::InvalidInput, "curvature form index out of range");
    if (static_cast<int>(t.xdeg.size()) != n)
      throw Error(ErrorKind::InvalidInput, "curvature x-degree has wrong length");
    SecKey k;
    k.hbar = t.hbar;
    k.xdeg = t.xdeg;
    k.ydeg.assign(static_cast<size_t>(n), 0);
    int sign = 1;
    int lo = t.i, hi = t.j;
    if (lo > hi) {
      std::swap(lo, hi);
      sign = -1;
    }
    k.dxmask = (1u << lo) | (1u << hi);
    oh.add_term(k, t.coeff * Cyc(static_cast<long>(sign)));
  }
  if (!base_d(oh).is_zero())
    throw Error(ErrorKind::InvalidInput, "curvature series is not closed");
  d.omega_h = oh;
  return d;
}

Section nabla(const FedosovData& d, const Section& a) {
  const int n = d.sp->dim;
  Section r(a.space() ? a.space() : d.sp, a.cap());
  // flat part dx^i d/dx^i
  r += base_d(a);
  // connection part -dx^i Gamma^k_ij y^j d/dy^k, the upper index raised by B
  std::map<GKey, Poly> agg = aggregate_gamma(d.gamma, n);
  for (const auto& [key, p] : agg) {
    auto [l, i, j] = key;  // one lower-index term Gamma_lij x^deg
    for (int k = 0; k < n; ++k) {
      Cyc bkl = d.sp->B.at(k, l);
      if (bkl.is_zero()) continue;
      for (const auto& [xd, pc] : p) {
        Cyc base_coeff = -(bkl * pc);
        for (const auto& [term, c] : a.terms()) {
          if (term.ydeg[static_cast<size_t>(k)] == 0) continue;
          if (term.dxmask & (1u << i)) continue;
          SecKey nk = term;
          nk.ydeg[static_cast<size_t>(k)] -= 1;
          nk.ydeg[static_cast<size_t>(j)] += 1;
          for (size_t s = 0; s < nk.xdeg.size(); ++s) nk.xdeg[s] += xd[s];
          unsigned old_mask = term.dxmask;
          nk.dxmask |= 1u << i;
          r.add_term(nk, base_coeff * c *
                             Cyc(static_cast<long>(term.ydeg[static_cast<size_t>(k)])) *
                             Cyc(static_cast<long>(wedge_left_sign(old_mask, i))));
        }
      }
    }
  }
  return r;
}

Section curvature_section(const FedosovData& d) {
  const int n = d.sp->dim;
  std::map<GKey, Poly> agg = aggregate_gamma(d.gamma, n);
  // raised coefficients as polynomials
  auto chris = [&](int k, int i, int j) {
    Poly out;
    for (int l = 0; l < n; ++l) {
      Cyc bkl = d.sp->B.at(k, l);
      if (bkl.is_zero()) continue;
      Poly p = lookup(agg, l, i, j);
      Poly scaled;
      for (const auto& [xd, c] : p) scaled.emplace(xd, c * bkl);
      out = poly_add(out, scaled);
    }
    return out;
  };
  Section rhat(d.sp, d.weight_cap);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (int m = 0; m < n; ++m)
        for (int l = 0; l < n; ++l) {
          // (R_ij)^m_l = d_i G^m_jl - d_j G^m_il + G^m_is G^s_jl - G^m_js G^s_il
          Poly rm = poly_sub(poly_diff(chris(m, j, l), i), poly_diff(chris(m, i, l), j));
          for (int s = 0; s < n; ++s) {
            rm = poly_add(rm, poly_mul(chris(m, i, s), chris(s, j, l)));
            rm = poly_sub(rm, poly_mul(chris(m, j, s), chris(s, i, l)));
          }
          if (poly_is_zero(rm)) continue;
          for (int k = 0; k < n; ++k) {
            Cyc okm = d.omega.at(k, m);
            if (okm.is_zero()) continue;
            int sign = 1;
            int lo = i, hi = j;
            if (lo > hi) {
              std::swap(lo, hi);
              sign = -1;
            }
            for (const auto& [xd, c] : rm) {
              SecKey key;
              key.hbar = 0;
              key.xdeg = xd;
              key.ydeg.assign(static_cast<size_t>(n), 0);
              key.ydeg[static_cast<size_t>(k)] += 1;
              key.ydeg[static_cast<size_t>(l)] += 1;
              key.dxmask = (1u << lo) | (1u << hi);
              rhat.add_term(key, okm * c * Cyc(rat(sign, 4)));
            }
          }
        }
    }
  return rhat;
}

Section omega_double_sum(const FedosovData& d) {
  const int n = d.sp->dim;
  Section out(d.sp, d.weight_cap);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Cyc c = d.omega.at(i, j) - d.omega.at(j, i);
      if (c.is_zero()) continue;
      SecKey k;
      k.xdeg.assign(static_cast<size_t>(n), 0);
      k.ydeg.assign(static_cast<size_t>(n), 0);
      k.dxmask = (1u << i) | (1u << j);
      out.add_term(k, c);
    }
  return out;
}

Section liouville_one_form(const FedosovData& d) {
  const int n = d.sp->dim;
  Section out(d.sp, d.weight_cap);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Cyc c = d.omega.at(i, j);
      if (c.is_zero()) continue;
      SecKey k;
      k.xdeg.assign(static_cast<size_t>(n), 0);
      k.ydeg.assign(static_cast<size_t>(n), 0);
      k.ydeg[static_cast<size_t>(j)] = 1;
      k.dxmask = 1u << i;
      out.add_term(k, c);
    }
  return out;
}

Section gamma_section(const FedosovData& d) {
  const int n = d.sp->dim;
  Section out(d.sp, d.weight_cap);
  for (const GammaTerm& t : d.gamma) {
    SecKey k;
    k.xdeg = t.xdeg;
    k.ydeg.assign(static_cast<size_t>(n), 0);
    k.ydeg[static_cast<size_t>(t.i)] += 1;
    k.ydeg[static_cast<size_t>(t.j)] += 1;
    k.dxmask = 1u << t.k;
    out.add_term(k, t.coeff * Cyc(rat(1, 2)));
  }
  return out;
}

Section FedosovEngine::D(const Section& a) const {
  return nabla(data, a) - koszul_delta(a) + graded_comm(r, a).shifted_hbar(-1);
}

Section FedosovEngine::weyl_curvature() const {
  Section quad = smul(conn_a, conn_a).shifted_hbar(-1);
  return (r_hat + nabla(data, conn_a) + quad) * Cyc(2);
}

FedosovEngine make_engine(const FedosovData& d) {
  FedosovEngine e;
  e.data = d;
  e.r_hat = curvature_section(d).truncated(d.weight_cap).with_cap(d.weight_cap);
  const int W = d.weight_cap;
  Section half_omega = d.omega_h * Cyc(rat(1, 2));
  Section r(d.sp, W);
  // each pass settles one more weight layer, so W + 2 passes always suffice
  bool stable = false;
  for (int pass = 0; pass <= W + 2; ++pass) {
    Section arg = e.r_hat - half_omega + nabla(d, r) +
                  smul(r, r).shifted_hbar(-1);
    Section rn = koszul_delta_inv(arg).truncated(W).with_cap(W);
    ++e.iterations;
    if (rn == r) {
      stable = true;
      break;
    }
    r = rn;
  }
  if (!stable) throw Error(ErrorKind::Internal, "curvature recursion failed to stabilize");
  e.r = r;
  e.conn_a = -liouville_one_form(d) + r;
  return e;
}

Section FedosovEngine::lambda(const Section& base) const {
  const int W = data.weight_cap;
  for (const auto& [k, c] : base.terms())
    if (deg_total(k.ydeg) != 0 || k.dxmask != 0)
      throw Error(ErrorKind::InvalidInput, "flat lift input must be a base series");
  Section u = base.truncated(W).with_cap(W);
  // the correction map is linear and raises weight, so iterating on the
  // increment alone reaches the same fixed point one settled layer per pass
  Section du = u;
  for (int pass = 0; pass <= W + 2 && !du.is_zero(); ++pass) {
    du = koszul_delta_inv(nabla(data, du) + graded_comm(r, du).shifted_hbar(-1))
             .truncated(W)
             .with_cap(W);
    u += du;
  }
  if (!du.is_zero()) throw Error(ErrorKind::Internal, "flat lift failed to stabilize");
  return u;
}

Section FedosovEngine::star(const Section& a, const Section& b) const {
  return sigma(smul(lambda(a), lambda(b)));
}

Section taylor_lift(const FedosovData& d, const Section& base) {
  const int n = d.sp->dim;
  Section out(d.sp, d.weight_cap);
  for (const auto& [k, c] : base.terms()) {
    // expand every x_i into x_i + y_i
    std::vector<std::pair<SecKey, Cyc>> acc;
    SecKey start;
    start.hbar = k.hbar;
    start.xdeg.assign(static_cast<size_t>(n), 0);
    start.ydeg.assign(static_cast<size_t>(n), 0);
    acc.emplace_back(start, c);
    for (int i = 0; i < n; ++i) {
      int e = k.xdeg[static_cast<size_t>(i)];
      if (e == 0) continue;
      std::vector<std::pair<SecKey, Cyc>> next;
      for (const auto& [kk, cc] : acc)
        for (int t = 0; t <= e; ++t) {
          SecKey nk = kk;
          nk.xdeg[static_cast<size_t>(i)] += e - t;
          nk.ydeg[static_cast<size_t>(i)] += t;
          next.emplace_back(nk, cc * Cyc(choose(e, t)));
        }
      acc.swap(next);
    }
    for (const auto& [kk, cc] : acc) out.add_term(kk, cc);
  }
  return out;
}

Section base_weyl_product(const Section& a, const Section& b) {
  check_same_space(a, b);
  const SpacePtr& sp = a.space() ? a.space() : b.space();
  Weyl wa(sp), wb(sp);
  for (const auto& [k, c] : a.terms()) {
    if (deg_total(k.ydeg) != 0 || k.dxmask != 0)
      throw Error(ErrorKind::InvalidInput, "base product input must be a base series");
    wa.add_term(k.hbar, k.xdeg, c);
  }
  for (const auto& [k, c] : b.terms()) {
    if (deg_total(k.ydeg) != 0 || k.dxmask != 0)
      throw Error(ErrorKind::InvalidInput, "base product input must be a base series");
    wb.add_term(k.hbar, k.xdeg, c);
  }
  Weyl prod = moyal(wa, wb);
  Section out(sp, prod.cap());
  for (const auto& [k, c] : prod.terms()) {
    SecKey nk;
    nk.hbar = k.first;
    nk.xdeg = k.second;
    nk.ydeg.assign(static_cast<size_t>(sp->dim), 0);
    out.add_term(nk, c);
  }
  return out;
}

EquivarianceReport equivariance_check(const FedosovEngine& e, const std::vector<Mat>& group,
                                      std::mt19937_64& rng, int trials) {
  EquivarianceReport rep;
  Section gsec = gamma_section(e.data);
  const Section& oh = e.data.omega_h;
  bool gamma_bad = false, omega_bad = false;
  for (const Mat& g : group) {
    if (!(act_on_section(g, gsec) == gsec)) gamma_bad = true;
    if (!(act_on_section(g, oh) == oh)) omega_bad = true;
  }
  if (gamma_bad) rep.failing.push_back("Gamma");
  if (omega_bad) rep.failing.push_back("Omega_h");
  rep.data_invariant = rep.failing.empty();
  if (!rep.data_invariant) return rep;
  const int W = e.data.weight_cap;
  const Mat id = Mat::identity(e.data.sp->dim);
  for (int t = 0; t < trials; ++t) {
    Section a = random_base_poly(rng, e.data.sp, 2, 3, W);
    Section b = random_base_poly(rng, e.data.sp, 2, 3, W);
    Section la = e.lambda(a), lb = e.lambda(b);
    Section sab = sigma(smul(la, lb));
    for (const Mat& g : group) {
      if (g == id) continue;
      Section lga = e.lambda(act_on_section(g, a));
      Section lgb = e.lambda(act_on_section(g, b));
      if (!act_on_section(g, la).equal_below(lga, W)) rep.lambda_equivariant = false;
      if (!act_on_section(g, sab).equal_below(sigma(smul(lga, lgb)), W))
        rep.star_equivariant = false;
    }
  }
  return rep;
}

Section random_base_poly(std::mt19937_64& rng, SpacePtr sp, int maxdeg, int nterms,
                         int cap) {
  const int n = sp->dim;
  std::uniform_int_distribution<int> dd(0, maxdeg);
  std::uniform_int_distribution<int> dv(0, n - 1);
  Section r(sp, cap);
  for (int t = 0; t < nterms; ++t) {
    SecKey k;
    k.xdeg.assign(static_cast<size_t>(n), 0);
    k.ydeg.assign(static_cast<size_t>(n), 0);
    int deg = dd(rng);
    for (int s = 0; s < deg; ++s) k.xdeg[static_cast<size_t>(dv(rng))] += 1;
    r.add_term(k, random_cyc(rng, 1));
  }
  return r;
}

}  // namespace qorb
