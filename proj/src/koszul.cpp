#include "qorb/koszul.hpp"

#include <algorithm>

#include "qorb/error.hpp"

namespace qorb {

namespace {

// all exponent vectors in nvars variables of total degree p, in lex order
void monomials_rec(int nvars, int p, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == nvars - 1) {
    cur.push_back(p);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = p; e >= 0; --e) {
    cur.push_back(e);
    monomials_rec(nvars, p - e, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> monomials(int nvars, int p) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  monomials_rec(nvars, p, cur, out);
  return out;
}

long index_of(const std::vector<std::vector<int>>& basis, const std::vector<int>& m) {
  auto it = std::lower_bound(basis.begin(), basis.end(), m,
                             [](const std::vector<int>& a, const std::vector<int>& b) {
                               return a > b;  // generated in descending lex order
                             });
  return it - basis.begin();
}

// subsets of {0..d-1} of size j, as bitmasks in increasing numeric order
std::vector<int> masks_of_size(int d, int j) {
  std::vector<int> out;
  for (int m = 0; m < (1 << d); ++m)
    if (__builtin_popcount(static_cast<unsigned>(m)) == j) out.push_back(m);
  return out;
}

int mask_index(const std::vector<int>& masks, int m) {
  return static_cast<int>(std::lower_bound(masks.begin(), masks.end(), m) - masks.begin());
}

// matrix of exterior multiplication by w = sum_i (u_i - v_i) e_i from
// (poly degree p, wedge degree j) to (p+1, j+1), over 2d variables
Mat wedge_matrix(int d, int p, int j) {
  std::vector<std::vector<int>> src = monomials(2 * d, p);
  std::vector<std::vector<int>> dst = monomials(2 * d, p + 1);
  std::vector<int> msrc = masks_of_size(d, j);
  std::vector<int> mdst = masks_of_size(d, j + 1);
  Mat out = Mat::zero(static_cast<int>(dst.size() * mdst.size()),
                      static_cast<int>(src.size() * msrc.size()));
  for (size_t cm = 0; cm < src.size(); ++cm)
    for (size_t cj = 0; cj < msrc.size(); ++cj) {
      long col = static_cast<long>(cm) * static_cast<long>(msrc.size()) + static_cast<long>(cj);
      int mask = msrc[cj];
      for (int i = 0; i < d; ++i) {
        if (mask & (1 << i)) continue;
        // e_i wedged from the left moves past the lower set bits
        int sign = (__builtin_popcount(static_cast<unsigned>(mask) & ((1u << i) - 1u)) % 2 == 0)
                       ? 1
                       : -1;
        int nmask = mask | (1 << i);
        long rj = mask_index(mdst, nmask);
        std::vector<int> mu = src[cm];
        mu[static_cast<size_t>(i)] += 1;  // multiply by u_i
        std::vector<int> mv = src[cm];
        mv[static_cast<size_t>(d + i)] += 1;  // multiply by v_i
        long rowu = index_of(dst, mu) * static_cast<long>(mdst.size()) + rj;
        long rowv = index_of(dst, mv) * static_cast<long>(mdst.size()) + rj;
        out.at(static_cast<int>(rowu), static_cast<int>(col)) += Cyc(static_cast<long>(sign));
        out.at(static_cast<int>(rowv), static_cast<int>(col)) += Cyc(static_cast<long>(-sign));
      }
    }
  return out;
}

long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long t = 0; t < k; ++t) r = r * (n - t) / (t + 1);
  return r;
}

}  // namespace

long poly_graded_dim(int d, int p) { return binom(p + d - 1, d - 1); }

namespace {

// every insertion goes through here so the maps never hold zero coefficients
void poly_accum(Poly& out, std::vector<int> k, const Cyc& c) {
  if (c.is_zero()) return;
  auto it = out.find(k);
  if (it == out.end()) {
    out.emplace(std::move(k), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  }
}

}  // namespace

ExtTable koszul_ext(int d, int cap) {
  if (d < 1 || d > 3)
    throw Error(ErrorKind::Unsupported, "koszul_ext handles 1 to 3 variables");
  if (cap < 0) throw Error(ErrorKind::InvalidInput, "negative degree cap");
  ExtTable out;
  out.d = d;
  out.cap = cap;
  out.dims.assign(static_cast<size_t>(d) + 1, std::vector<int>(static_cast<size_t>(cap) + 1, 0));
  for (int i = 0; i <= d; ++i)
    for (int p = 0; p <= cap; ++p) {
      long space = poly_graded_dim(2 * d, p) * binom(d, i);
      long rank_out = 0;
      if (i < d) {
        Mat w = wedge_matrix(d, p, i);
        rank_out = w.rank();
      }
      long rank_in = 0;
      if (i > 0 && p > 0) {
        Mat w = wedge_matrix(d, p - 1, i - 1);
        rank_in = w.rank();
      }
      out.dims[static_cast<size_t>(i)][static_cast<size_t>(p)] =
          static_cast<int>(space - rank_out - rank_in);
    }
  return out;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly out = a;
  for (const auto& [k, c] : b) poly_accum(out, k, c);
  return out;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly nb;
  for (const auto& [k, c] : b) nb.emplace(k, -c);
  return poly_add(a, nb);
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      std::vector<int> k = ka;
      for (size_t i = 0; i < k.size(); ++i) k[i] += kb[i];
      poly_accum(out, std::move(k), ca * cb);
    }
  return out;
}

Poly poly_diff(const Poly& a, int var) {
  Poly out;
  for (const auto& [k, c] : a) {
    int e = k[static_cast<size_t>(var)];
    if (e == 0) continue;
    std::vector<int> nk = k;
    nk[static_cast<size_t>(var)] -= 1;
    poly_accum(out, std::move(nk), c * Cyc(static_cast<long>(e)));
  }
  return out;
}

bool poly_is_zero(const Poly& a) { return a.empty(); }

Poly random_poly(std::mt19937_64& rng, int nvars, int maxdeg, int nterms) {
  std::uniform_int_distribution<int> de(0, maxdeg);
  Poly out;
  for (int t = 0; t < nterms; ++t) {
    int deg = de(rng);
    std::vector<int> k(static_cast<size_t>(nvars), 0);
    std::uniform_int_distribution<int> dv(0, nvars - 1);
    for (int s = 0; s < deg; ++s) k[static_cast<size_t>(dv(rng))] += 1;
    poly_accum(out, std::move(k), random_cyc(rng, 1));
  }
  return out;
}

Poly antisym_cochain(const Poly& f, const std::vector<Poly>& a, int d) {
  // f times the Jacobian determinant, expanded over permutations
  std::vector<int> perm(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) perm[static_cast<size_t>(i)] = i;
  Poly det;
  do {
    int inv = 0;
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) ++inv;
    Poly term;
    term.emplace(std::vector<int>(static_cast<size_t>(d), 0),
                 Cyc(static_cast<long>(inv % 2 == 0 ? 1 : -1)));
    for (int i = 0; i < d; ++i)
      term = poly_mul(term, poly_diff(a[static_cast<size_t>(i)], perm[static_cast<size_t>(i)]));
    det = poly_add(det, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return poly_mul(f, det);
}

Poly antisym_coboundary(const Poly& f, const std::vector<Poly>& a, int d) {
  if (static_cast<int>(a.size()) != d + 1)
    throw Error(ErrorKind::InvalidInput, "coboundary needs d+1 arguments");
  auto drop_and_eval = [&](const std::vector<Poly>& args) {
    return antisym_cochain(f, args, d);
  };
  // first face: a_1 times the value on the tail
  std::vector<Poly> tail(a.begin() + 1, a.end());
  Poly out = poly_mul(a[0], drop_and_eval(tail));
  // interior faces merge adjacent arguments
  for (int i = 1; i <= d; ++i) {
    std::vector<Poly> args;
    for (int t = 0; t < i - 1; ++t) args.push_back(a[static_cast<size_t>(t)]);
    args.push_back(poly_mul(a[static_cast<size_t>(i - 1)], a[static_cast<size_t>(i)]));
    for (int t = i + 1; t <= d; ++t) args.push_back(a[static_cast<size_t>(t)]);
    Poly piece = drop_and_eval(args);
    if (i % 2 == 1)
      out = poly_sub(out, piece);
    else
      out = poly_add(out, piece);
  }
  // last face: the value on the head times a_{d+1}
  std::vector<Poly> head(a.begin(), a.end() - 1);
  Poly last = poly_mul(drop_and_eval(head), a[static_cast<size_t>(d)]);
  if ((d + 1) % 2 == 1)
    out = poly_sub(out, last);
  else
    out = poly_add(out, last);
  return out;
}

}  // namespace qorb
