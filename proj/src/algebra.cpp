#include "qorb/algebra.hpp"

#include "qorb/error.hpp"

namespace qorb {

std::vector<Cyc> FinAlg::mul(const std::vector<Cyc>& x, const std::vector<Cyc>& y) const {
  if (static_cast<int>(x.size()) != dim || static_cast<int>(y.size()) != dim)
    throw Error(ErrorKind::DimensionMismatch, "algebra element length mismatch");
  std::vector<Cyc> r(static_cast<size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    if (x[static_cast<size_t>(i)].is_zero()) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[static_cast<size_t>(j)].is_zero()) continue;
      Cyc f = x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
      const auto& row = table[static_cast<size_t>(i)][static_cast<size_t>(j)];
      for (int k = 0; k < dim; ++k)
        if (!row[static_cast<size_t>(k)].is_zero()) r[static_cast<size_t>(k)] += f * row[static_cast<size_t>(k)];
    }
  }
  return r;
}

Mat FinAlg::left_mat(int i) const {
  Mat m(dim, dim);
  for (int j = 0; j < dim; ++j) {
    const auto& col = table[static_cast<size_t>(i)][static_cast<size_t>(j)];
    for (int k = 0; k < dim; ++k) m.at(k, j) = col[static_cast<size_t>(k)];
  }
  return m;
}

Mat FinAlg::right_mat(int i) const {
  Mat m(dim, dim);
  for (int j = 0; j < dim; ++j) {
    const auto& col = table[static_cast<size_t>(j)][static_cast<size_t>(i)];
    for (int k = 0; k < dim; ++k) m.at(k, j) = col[static_cast<size_t>(k)];
  }
  return m;
}

Mat FinAlg::left_mul_mat(const std::vector<Cyc>& x) const {
  Mat m = Mat::zero(dim, dim);
  for (int i = 0; i < dim; ++i)
    if (!x[static_cast<size_t>(i)].is_zero()) m = m + left_mat(i) * x[static_cast<size_t>(i)];
  return m;
}

Mat FinAlg::right_mul_mat(const std::vector<Cyc>& x) const {
  Mat m = Mat::zero(dim, dim);
  for (int i = 0; i < dim; ++i)
    if (!x[static_cast<size_t>(i)].is_zero()) m = m + right_mat(i) * x[static_cast<size_t>(i)];
  return m;
}

namespace {

std::vector<Cyc> basis_vec(int dim, int i) {
  std::vector<Cyc> v(static_cast<size_t>(dim));
  v[static_cast<size_t>(i)] = Cyc(1);
  return v;
}

bool vec_eq(const std::vector<Cyc>& a, const std::vector<Cyc>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

}  // namespace

void check_algebra(const FinAlg& A) {
  if (A.dim <= 0 || static_cast<int>(A.table.size()) != A.dim ||
      static_cast<int>(A.unit.size()) != A.dim)
    throw Error(ErrorKind::InvalidInput, "malformed algebra data");
  for (const auto& row : A.table) {
    if (static_cast<int>(row.size()) != A.dim)
      throw Error(ErrorKind::InvalidInput, "malformed structure-constant table");
    for (const auto& cell : row)
      if (static_cast<int>(cell.size()) != A.dim)
        throw Error(ErrorKind::InvalidInput, "malformed structure-constant table");
  }
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j)
      for (int k = 0; k < A.dim; ++k) {
        auto lhs = A.mul(A.basis_mul(i, j), basis_vec(A.dim, k));
        auto rhs = A.mul(basis_vec(A.dim, i), A.basis_mul(j, k));
        if (!vec_eq(lhs, rhs))
          throw Error(ErrorKind::InvalidInput, "structure constants are not associative");
      }
  for (int i = 0; i < A.dim; ++i) {
    auto e = basis_vec(A.dim, i);
    if (!vec_eq(A.mul(A.unit, e), e) || !vec_eq(A.mul(e, A.unit), e))
      throw Error(ErrorKind::InvalidInput, "unit axioms fail");
  }
}

FinAlg field_algebra() {
  FinAlg A;
  A.dim = 1;
  A.table = {{{Cyc(1)}}};
  A.unit = {Cyc(1)};
  A.name = "C";
  return A;
}

FinAlg product_c2() {
  FinAlg A;
  A.dim = 2;
  A.table.assign(2, std::vector<std::vector<Cyc>>(2, std::vector<Cyc>(2)));
  A.table[0][0][0] = Cyc(1);
  A.table[1][1][1] = Cyc(1);
  A.unit = {Cyc(1), Cyc(1)};
  A.name = "CxC";
  return A;
}

FinAlg dual_numbers() {
  FinAlg A;
  A.dim = 2;
  A.table.assign(2, std::vector<std::vector<Cyc>>(2, std::vector<Cyc>(2)));
  A.table[0][0][0] = Cyc(1);  // 1*1
  A.table[0][1][1] = Cyc(1);  // 1*x
  A.table[1][0][1] = Cyc(1);  // x*1
  // x*x = 0
  A.unit = {Cyc(1), Cyc()};
  A.name = "C[x]/(x^2)";
  return A;
}

FinAlg mat2() {
  FinAlg A;
  A.dim = 4;
  A.table.assign(4, std::vector<std::vector<Cyc>>(4, std::vector<Cyc>(4)));
  // basis E11, E12, E21, E22 at indices 0..3; E_{ab} E_{cd} = delta_{bc} E_{ad}
  auto idx = [](int a, int b) { return 2 * a + b; };
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d)
          if (b == c)
            A.table[static_cast<size_t>(idx(a, b))][static_cast<size_t>(idx(c, d))]
                   [static_cast<size_t>(idx(a, d))] = Cyc(1);
  A.unit = {Cyc(1), Cyc(), Cyc(), Cyc(1)};
  A.name = "Mat2";
  return A;
}

FinAlg group_algebra(const FinGroup& G) {
  FinAlg A;
  A.dim = G.n;
  A.table.assign(static_cast<size_t>(G.n),
                 std::vector<std::vector<Cyc>>(static_cast<size_t>(G.n),
                                               std::vector<Cyc>(static_cast<size_t>(G.n))));
  for (int i = 0; i < G.n; ++i)
    for (int j = 0; j < G.n; ++j)
      A.table[static_cast<size_t>(i)][static_cast<size_t>(j)]
             [static_cast<size_t>(G.mul[static_cast<size_t>(i)][static_cast<size_t>(j)])] = Cyc(1);
  A.unit = basis_vec(G.n, 0);
  A.name = "C[G]";
  return A;
}

void check_action(const AlgebraAction& X) {
  if (static_cast<int>(X.act.size()) != X.G.n)
    throw Error(ErrorKind::InvalidInput, "action matrix count mismatch");
  if (X.act[0] != Mat::identity(X.A.dim))
    throw Error(ErrorKind::InvalidInput, "identity element must act as the identity");
  for (int g = 0; g < X.G.n; ++g) {
    const Mat& m = X.act[static_cast<size_t>(g)];
    if (m.rows() != X.A.dim || m.cols() != X.A.dim)
      throw Error(ErrorKind::DimensionMismatch, "action matrix shape mismatch");
    if (!vec_eq(m.apply(X.A.unit), X.A.unit))
      throw Error(ErrorKind::InvalidInput, "action does not fix the unit");
    for (int i = 0; i < X.A.dim; ++i)
      for (int j = 0; j < X.A.dim; ++j) {
        auto lhs = m.apply(X.A.basis_mul(i, j));
        auto rhs = X.A.mul(m.apply(basis_vec(X.A.dim, i)), m.apply(basis_vec(X.A.dim, j)));
        if (!vec_eq(lhs, rhs))
          throw Error(ErrorKind::InvalidInput, "action matrix is not an algebra automorphism");
      }
    for (int h = 0; h < X.G.n; ++h) {
      int gh = X.G.mul[static_cast<size_t>(g)][static_cast<size_t>(h)];
      if (m * X.act[static_cast<size_t>(h)] != X.act[static_cast<size_t>(gh)])
        throw Error(ErrorKind::InvalidInput, "action matrices do not compose with the group");
    }
  }
}

AlgebraAction trivial_action(FinGroup G, FinAlg A) {
  AlgebraAction X{std::move(G), std::move(A), {}};
  X.act.assign(static_cast<size_t>(X.G.n), Mat::identity(X.A.dim));
  return X;
}

AlgebraAction c2_swap_action(const FinGroup& G, const std::vector<int>& sign) {
  if (static_cast<int>(sign.size()) != G.n)
    throw Error(ErrorKind::InvalidInput, "character length mismatch");
  AlgebraAction X{G, product_c2(), {}};
  Mat swap = Mat::from_rows({{0, 1}, {1, 0}});
  for (int g = 0; g < G.n; ++g)
    X.act.push_back(sign[static_cast<size_t>(g)] < 0 ? swap : Mat::identity(2));
  check_action(X);
  return X;
}

AlgebraAction dual_scale_action(const FinGroup& G, const std::vector<Cyc>& chi) {
  if (static_cast<int>(chi.size()) != G.n)
    throw Error(ErrorKind::InvalidInput, "character length mismatch");
  AlgebraAction X{G, dual_numbers(), {}};
  for (int g = 0; g < G.n; ++g) {
    Mat m = Mat::identity(2);
    m.at(1, 1) = chi[static_cast<size_t>(g)];
    X.act.push_back(m);
  }
  check_action(X);
  return X;
}

FinAlg crossed_product(const AlgebraAction& X) {
  const FinAlg& A = X.A;
  int n = X.G.n;
  FinAlg C;
  C.dim = n * A.dim;
  C.table.assign(static_cast<size_t>(C.dim),
                 std::vector<std::vector<Cyc>>(static_cast<size_t>(C.dim),
                                               std::vector<Cyc>(static_cast<size_t>(C.dim))));
  for (int l = 0; l < n; ++l)
    for (int i = 0; i < A.dim; ++i)
      for (int k = 0; k < n; ++k)
        for (int j = 0; j < A.dim; ++j) {
          // (e_i g_l)(e_j g_k) = e_i (e_j)^{g_l} (g_l g_k)
          auto bj = X.apply(l, basis_vec(A.dim, j));
          auto prod = A.mul(basis_vec(A.dim, i), bj);
          int gl = X.G.mul[static_cast<size_t>(l)][static_cast<size_t>(k)];
          auto& cell = C.table[static_cast<size_t>(cp_index(A, l, i))]
                              [static_cast<size_t>(cp_index(A, k, j))];
          for (int t = 0; t < A.dim; ++t)
            cell[static_cast<size_t>(cp_index(A, gl, t))] = prod[static_cast<size_t>(t)];
        }
  C.unit.assign(static_cast<size_t>(C.dim), Cyc());
  for (int i = 0; i < A.dim; ++i) C.unit[static_cast<size_t>(i)] = A.unit[static_cast<size_t>(i)];
  C.name = A.name + "[G]";
  return C;
}

FixedSubalgebra fixed_subalgebra(const AlgebraAction& X) {
  // Kernel of the stacked (act[g] - Id).
  Mat stack(X.G.n * X.A.dim, X.A.dim);
  for (int g = 0; g < X.G.n; ++g) {
    Mat d = X.act[static_cast<size_t>(g)] - Mat::identity(X.A.dim);
    for (int i = 0; i < X.A.dim; ++i)
      for (int j = 0; j < X.A.dim; ++j) stack.at(g * X.A.dim + i, j) = d.at(i, j);
  }
  FixedSubalgebra F;
  F.basis = stack.kernel_basis();
  int k = F.basis.cols();
  F.alg.dim = k;
  F.alg.name = X.A.name + "^G";
  F.alg.table.assign(static_cast<size_t>(k),
                     std::vector<std::vector<Cyc>>(static_cast<size_t>(k),
                                                   std::vector<Cyc>(static_cast<size_t>(k))));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      std::vector<Cyc> ui(static_cast<size_t>(X.A.dim)), uj(static_cast<size_t>(X.A.dim));
      for (int r = 0; r < X.A.dim; ++r) {
        ui[static_cast<size_t>(r)] = F.basis.at(r, i);
        uj[static_cast<size_t>(r)] = F.basis.at(r, j);
      }
      auto prod = X.A.mul(ui, uj);
      auto coords = F.basis.solve(prod);
      if (!coords)
        throw Error(ErrorKind::InvalidInput, "fixed subspace is not closed under the product");
      F.alg.table[static_cast<size_t>(i)][static_cast<size_t>(j)] = *coords;
    }
  auto unit_coords = F.basis.solve(X.A.unit);
  if (!unit_coords)
    throw Error(ErrorKind::InvalidInput, "unit is not fixed by the action");
  F.alg.unit = *unit_coords;
  return F;
}

void check_bimodule(const FinAlg& A, const Bimodule& M) {
  if (static_cast<int>(M.left.size()) != A.dim || static_cast<int>(M.right.size()) != A.dim)
    throw Error(ErrorKind::InvalidInput, "bimodule action count mismatch");
  Mat lu = Mat::zero(M.dim, M.dim), ru = Mat::zero(M.dim, M.dim);
  for (int i = 0; i < A.dim; ++i) {
    lu = lu + M.left[static_cast<size_t>(i)] * A.unit[static_cast<size_t>(i)];
    ru = ru + M.right[static_cast<size_t>(i)] * A.unit[static_cast<size_t>(i)];
  }
  if (lu != Mat::identity(M.dim) || ru != Mat::identity(M.dim))
    throw Error(ErrorKind::InvalidInput, "bimodule unit axioms fail");
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j) {
      Mat lprod = Mat::zero(M.dim, M.dim), rprod = Mat::zero(M.dim, M.dim);
      const auto& cell = A.basis_mul(i, j);
      for (int k = 0; k < A.dim; ++k) {
        if (cell[static_cast<size_t>(k)].is_zero()) continue;
        lprod = lprod + M.left[static_cast<size_t>(k)] * cell[static_cast<size_t>(k)];
        rprod = rprod + M.right[static_cast<size_t>(k)] * cell[static_cast<size_t>(k)];
      }
      if (lprod != M.left[static_cast<size_t>(i)] * M.left[static_cast<size_t>(j)])
        throw Error(ErrorKind::InvalidInput, "left action is not multiplicative");
      if (rprod != M.right[static_cast<size_t>(j)] * M.right[static_cast<size_t>(i)])
        throw Error(ErrorKind::InvalidInput, "right action is not multiplicative");
      if (M.left[static_cast<size_t>(i)] * M.right[static_cast<size_t>(j)] !=
          M.right[static_cast<size_t>(j)] * M.left[static_cast<size_t>(i)])
        throw Error(ErrorKind::InvalidInput, "left and right actions do not commute");
    }
}

Bimodule regular_bimodule(const FinAlg& A) {
  Bimodule M;
  M.dim = A.dim;
  for (int i = 0; i < A.dim; ++i) {
    M.left.push_back(A.left_mat(i));
    M.right.push_back(A.right_mat(i));
  }
  return M;
}

Bimodule twisted_bimodule(const FinAlg& A, const Mat& auto_g) {
  Bimodule M;
  M.dim = A.dim;
  for (int i = 0; i < A.dim; ++i) {
    M.left.push_back(A.left_mat(i));
    // m . e_i = m (e_i)^g
    std::vector<Cyc> img(static_cast<size_t>(A.dim));
    for (int k = 0; k < A.dim; ++k) img[static_cast<size_t>(k)] = auto_g.at(k, i);
    M.right.push_back(A.right_mul_mat(img));
  }
  return M;
}

Bimodule crossed_bimodule(const AlgebraAction& X) {
  FinAlg C = crossed_product(X);
  Bimodule M;
  M.dim = C.dim;
  for (int i = 0; i < X.A.dim; ++i) {
    M.left.push_back(C.left_mat(cp_index(X.A, 0, i)));
    M.right.push_back(C.right_mat(cp_index(X.A, 0, i)));
  }
  return M;
}

}  // namespace qorb
