#include "doctest.h"

#include "qorb/error.hpp"
#include "qorb/koszul.hpp"

using namespace qorb;

TEST_CASE("ext of the polynomial ring over its enveloping ring") {
  ExtTable t1 = koszul_ext(1, 4);
  CHECK(t1.dims[0] == std::vector<int>{0, 0, 0, 0, 0});
  CHECK(t1.dims[1] == std::vector<int>{1, 1, 1, 1, 1});

  ExtTable t2 = koszul_ext(2, 2);
  CHECK(t2.dims[0] == std::vector<int>{0, 0, 0});
  CHECK(t2.dims[1] == std::vector<int>{0, 0, 0});
  CHECK(t2.dims[2] == std::vector<int>{1, 2, 3});

  ExtTable t3 = koszul_ext(3, 2);
  for (int i = 0; i <= 2; ++i) CHECK(t3.dims[static_cast<size_t>(i)] == std::vector<int>{0, 0, 0});
  CHECK(t3.dims[3] == std::vector<int>{1, 3, 6});

  // the top Ext reproduces the graded dimensions of the ring itself
  for (int d = 1; d <= 2; ++d) {
    ExtTable t = koszul_ext(d, 3);
    for (int p = 0; p <= 3; ++p)
      CHECK(t.dims[static_cast<size_t>(d)][static_cast<size_t>(p)] == poly_graded_dim(d, p));
  }

  CHECK_THROWS_AS(koszul_ext(4, 1), Error);
  CHECK_THROWS_AS(koszul_ext(0, 1), Error);
}

TEST_CASE("polynomial helpers") {
  std::mt19937_64 rng(99);
  for (int rep = 0; rep < 10; ++rep) {
    Poly a = random_poly(rng, 2, 3, 4);
    Poly b = random_poly(rng, 2, 3, 4);
    CHECK(poly_is_zero(poly_sub(poly_mul(a, b), poly_mul(b, a))));
    // Leibniz rule
    Poly lhs = poly_diff(poly_mul(a, b), 0);
    Poly rhs = poly_add(poly_mul(poly_diff(a, 0), b), poly_mul(a, poly_diff(b, 0)));
    CHECK(poly_is_zero(poly_sub(lhs, rhs)));
  }
}

TEST_CASE("antisymmetrization lands in cocycles") {
  std::mt19937_64 rng(2024);
  for (int d = 1; d <= 3; ++d)
    for (int rep = 0; rep < 8; ++rep) {
      Poly f = random_poly(rng, d, 2, 3);
      std::vector<Poly> args;
      for (int i = 0; i <= d; ++i) args.push_back(random_poly(rng, d, 4, 3));
      CHECK(poly_is_zero(antisym_coboundary(f, args, d)));
    }
  // hand value: d = 1, f = 1, a = x^2 gives derivative 2x
  Poly one;
  one.emplace(std::vector<int>{0}, Cyc(1));
  Poly x2;
  x2.emplace(std::vector<int>{2}, Cyc(1));
  Poly val = antisym_cochain(one, {x2}, 1);
  Poly expect;
  expect.emplace(std::vector<int>{1}, Cyc(2));
  CHECK(poly_is_zero(poly_sub(val, expect)));
  // d = 2 determinant antisymmetry
  std::mt19937_64 rng2(7);
  Poly g = random_poly(rng2, 2, 2, 3);
  Poly p = random_poly(rng2, 2, 3, 3);
  Poly q = random_poly(rng2, 2, 3, 3);
  CHECK(poly_is_zero(poly_add(antisym_cochain(g, {p, q}, 2), antisym_cochain(g, {q, p}, 2))));
}
