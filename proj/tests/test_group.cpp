#include "doctest.h"

#include "qorb/error.hpp"
#include "qorb/group.hpp"

using namespace qorb;

namespace {

Mat transvection(const SymplecticSpace& sp, const std::vector<long>& v) {
  Mat col(sp.dim, 1);
  for (int i = 0; i < sp.dim; ++i) col.at(i, 0) = Cyc(v[static_cast<size_t>(i)]);
  return Mat::identity(sp.dim) + col * col.transpose() * sp.B;
}

}  // namespace

TEST_CASE("cyclic diagonal group") {
  SymplecticGroup G = cyclic_diag_group(4);
  CHECK(G.order() == 4);
  for (const Mat& g : G.elements) CHECK(is_symplectic(*G.space, g));
  // abelian: four singleton classes
  CHECK(G.classes.size() == 4);
  // some element has order 4
  bool found = false;
  for (const Mat& g : G.elements) found = found || element_order(g) == 4;
  CHECK(found);
  // mul/inv tables consistent
  for (int i = 0; i < G.order(); ++i) {
    CHECK(G.mul[i][G.inv[i]] == 0);
    CHECK(G.mul[0][i] == i);
    CHECK(G.elements[G.mul[i][i]] == G.elements[i] * G.elements[i]);
  }
}

TEST_CASE("plus minus and plane swap") {
  SymplecticGroup P1 = pm_group(1);
  CHECK(P1.order() == 2);
  CHECK(is_symplectic_reflection(P1.elements[1]));  // -Id on C^2 fixes only 0

  SymplecticGroup P2 = pm_group(2);
  CHECK(P2.order() == 2);
  CHECK(!is_symplectic_reflection(P2.elements[1]));  // rank(g - Id) = 4

  SymplecticGroup W = plane_swap_group();
  CHECK(W.order() == 2);
  CHECK(is_symplectic_reflection(W.elements[1]));
  CHECK(element_order(W.elements[1]) == 2);
}

TEST_CASE("plane permutation S3") {
  SymplecticGroup G = s3_plane_permutation_group();
  REQUIRE(G.order() == 6);
  // class sizes 1, 3, 2 and the class equation
  std::vector<int> sizes;
  int total = 0;
  for (const auto& cl : G.classes) {
    sizes.push_back(static_cast<int>(cl.size()));
    total += static_cast<int>(cl.size());
  }
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<int>{1, 2, 3});
  CHECK(total == G.order());
  // |class(g)| * |centralizer(g)| = |G|
  for (int i = 0; i < G.order(); ++i) {
    int csize = static_cast<int>(G.classes[static_cast<size_t>(G.class_of[i])].size());
    CHECK(csize * G.centralizer_order(i) == G.order());
  }
  // conjugation preserves the class
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < G.order(); ++h) {
      int conj = G.mul[G.mul[h][g]][G.inv[h]];
      CHECK(G.class_of[conj] == G.class_of[g]);
    }
  CHECK(G.index_of(Mat::identity(6)) == 0);
  CHECK(G.index_of(Mat::identity(6) * Cyc(2)) == -1);
}

TEST_CASE("closure errors") {
  SpacePtr sp = standard_space(1);
  Mat bad = Mat::from_rows({{2, 0}, {0, 1}});
  CHECK_THROWS_AS(close_group(sp, {bad}), Error);

  SpacePtr sp2 = standard_space(2);
  Mat t = transvection(*sp2, {1, 1, 1, 0});
  REQUIRE(is_symplectic(*sp2, t));
  CHECK_THROWS_AS(close_group(sp2, {t}, 32), Error);  // infinite order
  CHECK_THROWS_AS(element_order(t, 50), Error);
}

TEST_CASE("abstract groups") {
  FinGroup C3 = cyclic_fin_group(3);
  CHECK(C3.n == 3);
  CHECK(C3.classes.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(C3.mul[i][C3.inv[i]] == 0);

  FinGroup S3 = s3_fin_group();
  CHECK(S3.n == 6);
  CHECK(S3.classes.size() == 3);
  // parity is a homomorphism
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) CHECK(s3_parity(S3.mul[i][j]) == s3_parity(i) * s3_parity(j));
  // associativity of the table
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      for (int k = 0; k < 6; ++k) CHECK(S3.mul[S3.mul[i][j]][k] == S3.mul[i][S3.mul[j][k]]);

  FinGroup F = fin_group_of(s3_plane_permutation_group());
  CHECK(F.n == 6);
  CHECK(F.classes.size() == 3);
}
