#include "doctest.h"

#include <random>

#include "qorb/matrix.hpp"

using namespace qorb;

namespace {

Mat from_longs(const std::vector<std::vector<long>>& rows) {
  Mat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j)
      m.at(static_cast<int>(i), static_cast<int>(j)) = Cyc(rows[i][j]);
  return m;
}

}  // namespace

TEST_CASE("kernel of a rank-one matrix") {
  Mat m = from_longs({{1, 1}, {1, 1}});
  Mat k = m.kernel_basis();
  CHECK(k.cols() == 1);
  CHECK((m * k).is_zero());
  // deterministic free-variable convention: second coordinate set to 1
  CHECK(k.at(1, 0) == Cyc(1));
  CHECK(k.at(0, 0) == Cyc(-1));
}

TEST_CASE("rank-nullity on random matrices") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 40; ++t) {
    int r = 1 + static_cast<int>(rng() % 4);
    int c = 1 + static_cast<int>(rng() % 4);
    Mat m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.at(i, j) = random_cyc(rng, 4, 3);
    Mat k = m.kernel_basis();
    CHECK(m.rank() + k.cols() == c);
    if (k.cols() > 0) CHECK((m * k).is_zero());
  }
}

TEST_CASE("inverse and determinant") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 25; ++t) {
    int n = 1 + static_cast<int>(rng() % 4);
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = random_cyc(rng, 3, 3);
    Cyc d = m.det();
    auto inv = m.inverse();
    if (d.is_zero()) {
      CHECK(!inv);
    } else {
      REQUIRE(inv);
      CHECK(m * *inv == Mat::identity(n));
      CHECK(*inv * m == Mat::identity(n));
    }
  }
}

TEST_CASE("solve") {
  Mat a = from_longs({{2, 0}, {0, 3}, {0, 0}});
  std::vector<Cyc> b = {Cyc(4), Cyc(6), Cyc(0)};
  auto x = a.solve(b);
  REQUIRE(x);
  CHECK((*x)[0] == Cyc(2));
  CHECK((*x)[1] == Cyc(2));
  b[2] = Cyc(1);
  CHECK(!a.solve(b));
}

TEST_CASE("determinant is multiplicative") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 20; ++t) {
    Mat a(3, 3), b(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        a.at(i, j) = random_cyc(rng, 4, 2);
        b.at(i, j) = random_cyc(rng, 4, 2);
      }
    CHECK((a * b).det() == a.det() * b.det());
  }
}
