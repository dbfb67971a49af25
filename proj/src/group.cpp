#include "qorb/group.hpp"

#include <algorithm>
#include <numeric>

#include "qorb/error.hpp"

namespace qorb {

bool is_symplectic(const SymplecticSpace& sp, const Mat& g) {
  if (g.rows() != sp.dim || g.cols() != sp.dim) return false;
  return g.transpose() * sp.B * g == sp.B;
}

int element_order(const Mat& g, int bound) {
  Mat id = Mat::identity(g.rows());
  Mat p = g;
  for (int k = 1; k <= bound; ++k) {
    if (p == id) return k;
    p = p * g;
  }
  throw Error(ErrorKind::GroupExplosion, "element order exceeds bound");
}

bool is_symplectic_reflection(const Mat& g) {
  Mat d = g - Mat::identity(g.rows());
  if (d.is_zero()) return false;
  return d.rank() == 2;
}

int SymplecticGroup::index_of(const Mat& g) const {
  for (size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == g) return static_cast<int>(i);
  return -1;
}

int SymplecticGroup::centralizer_order(int i) const {
  int c = 0;
  for (int j = 0; j < order(); ++j)
    if (mul[j][i] == mul[i][j]) ++c;
  return c;
}

namespace {

// Fill mul/inv/classes of a group whose element list is closed.
void finish_tables(SymplecticGroup& G) {
  int n = G.order();
  G.mul.assign(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int k = G.index_of(G.elements[i] * G.elements[j]);
      if (k < 0) throw Error(ErrorKind::InvalidInput, "element list is not closed");
      G.mul[i][j] = k;
    }
  G.inv.assign(n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (G.mul[i][j] == 0) G.inv[i] = j;
  G.class_of.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    if (G.class_of[i] >= 0) continue;
    int c = static_cast<int>(G.classes.size());
    std::vector<int> orbit;
    for (int h = 0; h < n; ++h) {
      int j = G.mul[G.mul[h][i]][G.inv[h]];
      if (G.class_of[j] < 0) {
        G.class_of[j] = c;
        orbit.push_back(j);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    G.classes.push_back(std::move(orbit));
  }
}

}  // namespace

SymplecticGroup close_group(const SpacePtr& sp, const std::vector<Mat>& generators,
                            int max_order) {
  for (const Mat& g : generators)
    if (!is_symplectic(*sp, g))
      throw Error(ErrorKind::NonSymplectic, "generator does not preserve the form");
  SymplecticGroup G;
  G.space = sp;
  G.elements.push_back(Mat::identity(sp->dim));
  std::vector<Mat> frontier = G.elements;
  while (!frontier.empty()) {
    std::vector<Mat> next;
    for (const Mat& h : frontier)
      for (const Mat& g : generators) {
        Mat p = h * g;
        if (G.index_of(p) < 0) {
          if (static_cast<int>(G.elements.size()) >= max_order)
            throw Error(ErrorKind::GroupExplosion, "group closure exceeds max order");
          G.elements.push_back(p);
          next.push_back(p);
        }
      }
    frontier = std::move(next);
  }
  finish_tables(G);
  return G;
}

SymplecticGroup trivial_group(int n) {
  return close_group(standard_space(n), {}, 1);
}

SymplecticGroup cyclic_diag_group(int N) {
  if (N < 1) throw Error(ErrorKind::InvalidInput, "cyclic group order must be positive");
  SpacePtr sp = standard_space(1);
  Mat g = Mat::zero(2, 2);
  g.at(0, 0) = Cyc::zeta(N);
  g.at(1, 1) = Cyc::zeta(N).inverse();
  return close_group(sp, {g}, N + 1);
}

SymplecticGroup pm_group(int n) {
  SpacePtr sp = standard_space(n);
  Mat m = Mat::identity(2 * n);
  return close_group(sp, {m * Cyc(-1)}, 2);
}

SymplecticGroup plane_swap_group() {
  SpacePtr sp = standard_space(2);
  Mat g = Mat::zero(4, 4);
  g.at(0, 2) = Cyc(1);
  g.at(2, 0) = Cyc(1);
  g.at(1, 3) = Cyc(1);
  g.at(3, 1) = Cyc(1);
  return close_group(sp, {g}, 2);
}

SymplecticGroup s3_plane_permutation_group() {
  SpacePtr sp = standard_space(3);
  auto plane_perm = [](int p0, int p1, int p2) {
    Mat g = Mat::zero(6, 6);
    int to[3] = {p0, p1, p2};
    for (int p = 0; p < 3; ++p)
      for (int c = 0; c < 2; ++c) g.at(2 * to[p] + c, 2 * p + c) = Cyc(1);
    return g;
  };
  return close_group(sp, {plane_perm(1, 0, 2), plane_perm(1, 2, 0)}, 6);
}

FinGroup cyclic_fin_group(int N) {
  if (N < 1) throw Error(ErrorKind::InvalidInput, "cyclic group order must be positive");
  FinGroup G;
  G.n = N;
  G.mul.assign(N, std::vector<int>(N));
  G.inv.assign(N, 0);
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) G.mul[i][j] = (i + j) % N;
    G.inv[i] = (N - i) % N;
  }
  G.class_of.resize(N);
  for (int i = 0; i < N; ++i) {
    G.class_of[i] = i;
    G.classes.push_back({i});
  }
  return G;
}

namespace {

// Permutations of {0,1,2} in the fixed element order e,(01),(02),(12),(012),(021).
const int kS3Perm[6][3] = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0},
                           {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};

int s3_index(const int p[3]) {
  for (int i = 0; i < 6; ++i)
    if (kS3Perm[i][0] == p[0] && kS3Perm[i][1] == p[1] && kS3Perm[i][2] == p[2]) return i;
  return -1;
}

}  // namespace

FinGroup s3_fin_group() {
  FinGroup G;
  G.n = 6;
  G.mul.assign(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      int p[3];
      for (int x = 0; x < 3; ++x) p[x] = kS3Perm[i][kS3Perm[j][x]];
      G.mul[i][j] = s3_index(p);
    }
  G.inv.assign(6, -1);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (G.mul[i][j] == 0) G.inv[i] = j;
  G.class_of.assign(6, -1);
  for (int i = 0; i < 6; ++i) {
    if (G.class_of[i] >= 0) continue;
    int c = static_cast<int>(G.classes.size());
    std::vector<int> orbit;
    for (int h = 0; h < 6; ++h) {
      int j = G.mul[G.mul[h][i]][G.inv[h]];
      if (G.class_of[j] < 0) {
        G.class_of[j] = c;
        orbit.push_back(j);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    G.classes.push_back(std::move(orbit));
  }
  return G;
}

int s3_parity(int i) {
  static const int parity[6] = {1, -1, -1, -1, 1, 1};
  return parity[i];
}

FinGroup fin_group_of(const SymplecticGroup& G) {
  FinGroup F;
  F.n = G.order();
  F.mul = G.mul;
  F.inv = G.inv;
  F.classes = G.classes;
  F.class_of = G.class_of;
  return F;
}

}  // namespace qorb
