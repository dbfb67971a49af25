#include "qorb/hochschild.hpp"

#include "qorb/error.hpp"

namespace qorb {

namespace {

long ipow(long b, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

std::vector<int> decode_tuple(long idx, int bar, int q) {
  std::vector<int> t(static_cast<size_t>(q));
  for (int i = 0; i < q; ++i) {
    t[static_cast<size_t>(i)] = static_cast<int>(idx % bar);
    idx /= bar;
  }
  return t;
}

long encode_tuple(const std::vector<int>& t, int bar) {
  long idx = 0;
  for (size_t i = t.size(); i-- > 0;) idx = idx * bar + t[i];
  return idx;
}

// Independent columns of m, kept in order of first appearance.
Mat image_basis(const Mat& m) {
  Mat basis = Mat::zero(m.rows(), 0);
  for (int j = 0; j < m.cols(); ++j) {
    Mat cand = hcat(basis, m.col(j));
    if (cand.rank() > basis.cols()) basis = cand;
  }
  return basis;
}

// Trace of P restricted to the column span of the full-column-rank basis B.
Rat trace_on(const Mat& P, const Mat& B) {
  Rat tr(0);
  for (int j = 0; j < B.cols(); ++j) {
    std::vector<Cyc> img(static_cast<size_t>(B.rows()));
    for (int i = 0; i < B.rows(); ++i) {
      Cyc s;
      for (int k = 0; k < B.rows(); ++k)
        if (!P.at(i, k).is_zero()) s += P.at(i, k) * B.at(k, j);
      img[static_cast<size_t>(i)] = s;
    }
    auto x = B.solve(img);
    if (!x) throw Error(ErrorKind::Internal, "projector does not preserve the subspace");
    if (!(*x)[static_cast<size_t>(j)].is_rational())
      throw Error(ErrorKind::Internal, "irrational trace on invariant subspace");
    tr += (*x)[static_cast<size_t>(j)].rational_part();
  }
  return tr;
}

long rat_to_integer(const Rat& r) {
  if (r.get_den() != 1) throw Error(ErrorKind::Internal, "expected an integer");
  return r.get_num().get_si();
}

}  // namespace

BarComplex bar_complex(const FinAlg& A, const Bimodule& M, int qmax, long dim_cap) {
  BarComplex C;
  C.A = A;
  C.M = M;
  C.qmax = qmax;
  C.bar_dim = A.dim - 1;
  // Pivot: first nonzero coordinate of the unit; Abar coordinates are the
  // remaining ones, proj(v)_j = v_j - (v_p / U_p) U_j.
  int pivot = -1;
  for (int i = 0; i < A.dim && pivot < 0; ++i)
    if (!A.unit[static_cast<size_t>(i)].is_zero()) pivot = i;
  if (pivot < 0) throw Error(ErrorKind::InvalidInput, "algebra unit is zero");
  C.proj = Mat::zero(C.bar_dim, A.dim);
  C.lift = Mat::zero(A.dim, C.bar_dim);
  Cyc up_inv = A.unit[static_cast<size_t>(pivot)].inverse();
  int row = 0;
  for (int j = 0; j < A.dim; ++j) {
    if (j == pivot) continue;
    C.proj.at(row, j) = Cyc(1);
    C.proj.at(row, pivot) = -(A.unit[static_cast<size_t>(j)] * up_inv);
    C.lift.at(j, row) = Cyc(1);
    ++row;
  }

  for (int q = 0; q <= qmax; ++q) {
    long d = M.dim * ipow(C.bar_dim, q);
    if (d > dim_cap)
      throw Error(ErrorKind::ResourceLimit, "bar chain space exceeds the dimension cap");
    C.dims.push_back(d);
  }

  // Per-bar-basis action matrices on M and merge vectors in Abar.
  std::vector<Mat> lft(static_cast<size_t>(C.bar_dim), Mat::zero(M.dim, M.dim));
  std::vector<Mat> rgt(static_cast<size_t>(C.bar_dim), Mat::zero(M.dim, M.dim));
  for (int a = 0; a < C.bar_dim; ++a)
    for (int k = 0; k < A.dim; ++k) {
      const Cyc& c = C.lift.at(k, a);
      if (c.is_zero()) continue;
      lft[static_cast<size_t>(a)] = lft[static_cast<size_t>(a)] + M.left[static_cast<size_t>(k)] * c;
      rgt[static_cast<size_t>(a)] = rgt[static_cast<size_t>(a)] + M.right[static_cast<size_t>(k)] * c;
    }
  // merge[a][b] = proj(lift(a) lift(b)) coordinates in Abar
  std::vector<std::vector<std::vector<Cyc>>> merge(
      static_cast<size_t>(C.bar_dim),
      std::vector<std::vector<Cyc>>(static_cast<size_t>(C.bar_dim)));
  for (int a = 0; a < C.bar_dim; ++a)
    for (int b = 0; b < C.bar_dim; ++b) {
      std::vector<Cyc> va(static_cast<size_t>(A.dim)), vb(static_cast<size_t>(A.dim));
      for (int k = 0; k < A.dim; ++k) {
        va[static_cast<size_t>(k)] = C.lift.at(k, a);
        vb[static_cast<size_t>(k)] = C.lift.at(k, b);
      }
      merge[static_cast<size_t>(a)][static_cast<size_t>(b)] = C.proj.apply(A.mul(va, vb));
    }

  C.bnd.push_back(Mat::zero(0, 0));
  for (int q = 1; q <= qmax; ++q) {
    Mat b(static_cast<int>(C.dims[static_cast<size_t>(q - 1)]),
          static_cast<int>(C.dims[static_cast<size_t>(q)]));
    long tuples = ipow(C.bar_dim, q);
    for (long tidx = 0; tidx < tuples; ++tidx) {
      std::vector<int> t = decode_tuple(tidx, C.bar_dim, q);
      for (int m = 0; m < M.dim; ++m) {
        long col = m + M.dim * tidx;
        // face 0: m . a_1
        {
          std::vector<int> rest(t.begin() + 1, t.end());
          long base = M.dim * encode_tuple(rest, C.bar_dim);
          const Mat& R = rgt[static_cast<size_t>(t[0])];
          for (int mm = 0; mm < M.dim; ++mm)
            if (!R.at(mm, m).is_zero())
              b.at(static_cast<int>(base + mm), static_cast<int>(col)) += R.at(mm, m);
        }
        // interior faces: merge a_i a_{i+1}, sign (-1)^i
        for (int i = 1; i < q; ++i) {
          const auto& mg = merge[static_cast<size_t>(t[static_cast<size_t>(i - 1)])]
                                [static_cast<size_t>(t[static_cast<size_t>(i)])];
          std::vector<int> rest;
          for (int s = 0; s < q; ++s)
            if (s != i - 1 && s != i) rest.push_back(t[static_cast<size_t>(s)]);
          rest.insert(rest.begin() + (i - 1), 0);
          for (int u = 0; u < C.bar_dim; ++u) {
            if (mg[static_cast<size_t>(u)].is_zero()) continue;
            rest[static_cast<size_t>(i - 1)] = u;
            long ridx = m + M.dim * encode_tuple(rest, C.bar_dim);
            Cyc add = mg[static_cast<size_t>(u)];
            if (i % 2) add = -add;
            b.at(static_cast<int>(ridx), static_cast<int>(col)) += add;
          }
        }
        // last face: (-1)^q a_q . m
        {
          std::vector<int> rest(t.begin(), t.end() - 1);
          long base = M.dim * encode_tuple(rest, C.bar_dim);
          const Mat& L = lft[static_cast<size_t>(t[static_cast<size_t>(q - 1)])];
          for (int mm = 0; mm < M.dim; ++mm) {
            if (L.at(mm, m).is_zero()) continue;
            Cyc add = L.at(mm, m);
            if (q % 2) add = -add;
            b.at(static_cast<int>(base + mm), static_cast<int>(col)) += add;
          }
        }
      }
    }
    C.bnd.push_back(std::move(b));
  }
  return C;
}

std::vector<int> homology_dims(const FinAlg& A, const Bimodule& M, int qmax, long dim_cap) {
  BarComplex C = bar_complex(A, M, qmax + 1, dim_cap);
  std::vector<int> out;
  std::vector<int> ranks(static_cast<size_t>(qmax) + 2, 0);
  for (int q = 1; q <= qmax + 1; ++q) ranks[static_cast<size_t>(q)] = C.bnd[static_cast<size_t>(q)].rank();
  for (int q = 0; q <= qmax; ++q)
    out.push_back(static_cast<int>(C.dims[static_cast<size_t>(q)]) -
                  ranks[static_cast<size_t>(q)] - ranks[static_cast<size_t>(q + 1)]);
  return out;
}

std::vector<int> cohomology_dims(const FinAlg& A, const Bimodule& M, int qmax, long dim_cap) {
  int bar = A.dim - 1;
  BarComplex C = bar_complex(A, M, 0, dim_cap);  // reuse proj/lift only
  // delta[q]: Hom(Abar^q, M) -> Hom(Abar^{q+1}, M) for q = 0..qmax
  std::vector<Mat> lft(static_cast<size_t>(bar), Mat::zero(M.dim, M.dim));
  std::vector<Mat> rgt(static_cast<size_t>(bar), Mat::zero(M.dim, M.dim));
  for (int a = 0; a < bar; ++a)
    for (int k = 0; k < A.dim; ++k) {
      const Cyc& c = C.lift.at(k, a);
      if (c.is_zero()) continue;
      lft[static_cast<size_t>(a)] = lft[static_cast<size_t>(a)] + M.left[static_cast<size_t>(k)] * c;
      rgt[static_cast<size_t>(a)] = rgt[static_cast<size_t>(a)] + M.right[static_cast<size_t>(k)] * c;
    }
  std::vector<std::vector<std::vector<Cyc>>> merge(
      static_cast<size_t>(bar), std::vector<std::vector<Cyc>>(static_cast<size_t>(bar)));
  for (int a = 0; a < bar; ++a)
    for (int b = 0; b < bar; ++b) {
      std::vector<Cyc> va(static_cast<size_t>(A.dim)), vb(static_cast<size_t>(A.dim));
      for (int k = 0; k < A.dim; ++k) {
        va[static_cast<size_t>(k)] = C.lift.at(k, a);
        vb[static_cast<size_t>(k)] = C.lift.at(k, b);
      }
      merge[static_cast<size_t>(a)][static_cast<size_t>(b)] = C.proj.apply(A.mul(va, vb));
    }

  std::vector<int> ranks(static_cast<size_t>(qmax) + 2, 0);
  std::vector<long> dims(static_cast<size_t>(qmax) + 1);
  for (int q = 0; q <= qmax; ++q) {
    long dq = M.dim * ipow(bar, q);
    long dq1 = M.dim * ipow(bar, q + 1);
    if (dq1 > dim_cap)
      throw Error(ErrorKind::ResourceLimit, "cochain space exceeds the dimension cap");
    dims[static_cast<size_t>(q)] = dq;
    Mat d(static_cast<int>(dq1), static_cast<int>(dq));
    long tuples = ipow(bar, q);
    for (long tidx = 0; tidx < tuples; ++tidx) {
      std::vector<int> t = decode_tuple(tidx, bar, q);
      for (int m = 0; m < M.dim; ++m) {
        long col = m + M.dim * tidx;
        // first face: b_1 . f(...)
        for (int u = 0; u < bar; ++u) {
          std::vector<int> in = t;
          in.insert(in.begin(), u);
          long base = M.dim * encode_tuple(in, bar);
          const Mat& L = lft[static_cast<size_t>(u)];
          for (int mm = 0; mm < M.dim; ++mm)
            if (!L.at(mm, m).is_zero())
              d.at(static_cast<int>(base + mm), static_cast<int>(col)) += L.at(mm, m);
        }
        // interior faces: f evaluated on a merged pair, sign (-1)^i
        for (int i = 1; i <= q; ++i)
          for (int u = 0; u < bar; ++u)
            for (int v = 0; v < bar; ++v) {
              const Cyc& c = merge[static_cast<size_t>(u)][static_cast<size_t>(v)]
                                  [static_cast<size_t>(t[static_cast<size_t>(i - 1)])];
              if (c.is_zero()) continue;
              std::vector<int> in = t;
              in[static_cast<size_t>(i - 1)] = u;
              in.insert(in.begin() + i, v);
              long ridx = m + M.dim * encode_tuple(in, bar);
              Cyc add = c;
              if (i % 2) add = -add;
              d.at(static_cast<int>(ridx), static_cast<int>(col)) += add;
            }
        // last face: (-1)^{q+1} f(...) . b_{q+1}
        for (int u = 0; u < bar; ++u) {
          std::vector<int> in = t;
          in.push_back(u);
          long base = M.dim * encode_tuple(in, bar);
          const Mat& R = rgt[static_cast<size_t>(u)];
          for (int mm = 0; mm < M.dim; ++mm) {
            if (R.at(mm, m).is_zero()) continue;
            Cyc add = R.at(mm, m);
            if ((q + 1) % 2) add = -add;
            d.at(static_cast<int>(base + mm), static_cast<int>(col)) += add;
          }
        }
      }
    }
    ranks[static_cast<size_t>(q + 1)] = d.rank();
  }
  std::vector<int> out;
  for (int q = 0; q <= qmax; ++q)
    out.push_back(static_cast<int>(dims[static_cast<size_t>(q)]) -
                  ranks[static_cast<size_t>(q + 1)] - ranks[static_cast<size_t>(q)]);
  return out;
}

Mat chain_action(const AlgebraAction& X, const BarComplex& C, int h, int q) {
  FinAlg CP = crossed_product(X);
  if (C.M.dim != CP.dim)
    throw Error(ErrorKind::DimensionMismatch, "complex coefficients are not A[G]");
  // conjugation by h on A[G]
  std::vector<Cyc> hv(static_cast<size_t>(CP.dim)), hiv(static_cast<size_t>(CP.dim));
  int hinv = X.G.inv[static_cast<size_t>(h)];
  for (int i = 0; i < X.A.dim; ++i) {
    hv[static_cast<size_t>(cp_index(X.A, h, i))] = X.A.unit[static_cast<size_t>(i)];
    hiv[static_cast<size_t>(cp_index(X.A, hinv, i))] = X.A.unit[static_cast<size_t>(i)];
  }
  Mat conj = CP.left_mul_mat(hv) * CP.right_mul_mat(hiv);
  Mat bar_h = C.proj * X.act[static_cast<size_t>(h)] * C.lift;

  long dq = C.dims[static_cast<size_t>(q)];
  Mat out(static_cast<int>(dq), static_cast<int>(dq));
  long tuples = ipow(C.bar_dim, q);
  for (long tidx = 0; tidx < tuples; ++tidx) {
    std::vector<int> t = decode_tuple(tidx, C.bar_dim, q);
    // expand the product of bar_h columns over all output tuples
    std::vector<std::pair<std::vector<int>, Cyc>> parts = {{{}, Cyc(1)}};
    for (int i = 0; i < q; ++i) {
      std::vector<std::pair<std::vector<int>, Cyc>> next;
      for (const auto& [tup, c] : parts)
        for (int u = 0; u < C.bar_dim; ++u) {
          const Cyc& e = bar_h.at(u, t[static_cast<size_t>(i)]);
          if (e.is_zero()) continue;
          auto ext = tup;
          ext.push_back(u);
          next.emplace_back(std::move(ext), c * e);
        }
      parts = std::move(next);
    }
    for (int m = 0; m < C.M.dim; ++m) {
      long col = m + C.M.dim * tidx;
      for (const auto& [tup, c] : parts) {
        long base = C.M.dim * encode_tuple(tup, C.bar_dim);
        for (int mm = 0; mm < C.M.dim; ++mm)
          if (!conj.at(mm, m).is_zero())
            out.at(static_cast<int>(base + mm), static_cast<int>(col)) += conj.at(mm, m) * c;
      }
    }
  }
  return out;
}

std::vector<int> invariant_homology_dims(const AlgebraAction& X, int qmax) {
  BarComplex C = bar_complex(X.A, crossed_bimodule(X), qmax + 1);
  std::vector<int> out;
  Cyc inv_order = Cyc(static_cast<long>(X.G.n)).inverse();
  for (int q = 0; q <= qmax; ++q) {
    long dq = C.dims[static_cast<size_t>(q)];
    Mat P = Mat::zero(static_cast<int>(dq), static_cast<int>(dq));
    for (int h = 0; h < X.G.n; ++h) P = P + chain_action(X, C, h, q);
    P = P * inv_order;
    Mat K = (q == 0) ? Mat::identity(static_cast<int>(dq))
                     : C.bnd[static_cast<size_t>(q)].kernel_basis();
    Mat I = image_basis(C.bnd[static_cast<size_t>(q + 1)]);
    Rat tr = trace_on(P, K) - trace_on(P, I);
    out.push_back(static_cast<int>(rat_to_integer(tr)));
  }
  return out;
}

DecompositionReport decomposition_check(const AlgebraAction& X, int qmax) {
  DecompositionReport r;
  FinAlg CP = crossed_product(X);
  r.lhs = homology_dims(CP, regular_bimodule(CP), qmax);
  r.rhs = invariant_homology_dims(X, qmax);
  r.equal = r.lhs == r.rhs;
  return r;
}

MoritaReport symmetrizer_morita(const AlgebraAction& X) {
  MoritaReport r;
  FinAlg CP = crossed_product(X);
  Cyc inv_order = Cyc(static_cast<long>(X.G.n)).inverse();
  std::vector<Cyc> e(static_cast<size_t>(CP.dim));
  for (int g = 0; g < X.G.n; ++g)
    for (int i = 0; i < X.A.dim; ++i)
      e[static_cast<size_t>(cp_index(X.A, g, i))] = X.A.unit[static_cast<size_t>(i)] * inv_order;
  auto ee = CP.mul(e, e);
  r.idempotent = true;
  for (int i = 0; i < CP.dim; ++i)
    if (ee[static_cast<size_t>(i)] != e[static_cast<size_t>(i)]) r.idempotent = false;

  FixedSubalgebra F = fixed_subalgebra(X);
  r.dim_fixed = F.alg.dim;

  // corner e A[G] e
  Mat corner(CP.dim, CP.dim);
  for (int j = 0; j < CP.dim; ++j) {
    std::vector<Cyc> x(static_cast<size_t>(CP.dim));
    x[static_cast<size_t>(j)] = Cyc(1);
    auto exe = CP.mul(CP.mul(e, x), e);
    for (int i = 0; i < CP.dim; ++i) corner.at(i, j) = exe[static_cast<size_t>(i)];
  }
  r.dim_corner = corner.rank();

  // u -> u e respects the fixed-subalgebra structure constants
  auto embed = [&](int a) {
    std::vector<Cyc> u(static_cast<size_t>(CP.dim));
    for (int i = 0; i < X.A.dim; ++i) u[static_cast<size_t>(i)] = F.basis.at(i, a);
    return CP.mul(u, e);
  };
  Mat phi(CP.dim, F.alg.dim);
  for (int a = 0; a < F.alg.dim; ++a) {
    auto ua = embed(a);
    for (int i = 0; i < CP.dim; ++i) phi.at(i, a) = ua[static_cast<size_t>(i)];
  }
  bool mult_ok = phi.rank() == F.alg.dim && r.dim_corner == r.dim_fixed;
  for (int a = 0; a < F.alg.dim && mult_ok; ++a)
    for (int b = 0; b < F.alg.dim && mult_ok; ++b) {
      auto prod = CP.mul(embed(a), embed(b));
      std::vector<Cyc> expect(static_cast<size_t>(CP.dim));
      for (int c = 0; c < F.alg.dim; ++c) {
        const Cyc& s = F.alg.table[static_cast<size_t>(a)][static_cast<size_t>(b)][static_cast<size_t>(c)];
        if (s.is_zero()) continue;
        auto uc = embed(c);
        for (int i = 0; i < CP.dim; ++i) expect[static_cast<size_t>(i)] += s * uc[static_cast<size_t>(i)];
      }
      for (int i = 0; i < CP.dim; ++i)
        if (prod[static_cast<size_t>(i)] != expect[static_cast<size_t>(i)]) mult_ok = false;
    }
  r.corner_matches_fixed = mult_ok;

  r.hh0_fixed = homology_dims(F.alg, regular_bimodule(F.alg), 0)[0];
  r.hh0_crossed = homology_dims(CP, regular_bimodule(CP), 0)[0];
  r.hh0_equal = r.hh0_fixed == r.hh0_crossed;
  return r;
}

long integer_trace(const Mat& m) {
  Cyc t = m.trace();
  if (!t.is_rational()) throw Error(ErrorKind::Internal, "non-rational trace");
  return rat_to_integer(t.rational_part());
}

}  // namespace qorb
