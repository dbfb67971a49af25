#include "doctest.h"

#include <random>

#include "qorb/cyclotomic.hpp"
#include "qorb/error.hpp"
#include "qorb/hseries.hpp"

using namespace qorb;

TEST_CASE("cyclotomic basics") {
  Cyc z4 = Cyc::zeta(4);
  CHECK(z4 * z4 == Cyc(-1));
  Cyc z3 = Cyc::zeta(3);
  // (1 + z3)(1 + z3^2) = 1 + z3 + z3^2 + z3^3 = 0 + 1 = 1
  CHECK((Cyc(1) + z3) * (Cyc(1) + z3.galois(2)) == Cyc(1));
  CHECK(Cyc::zeta(3, 3) == Cyc(1));
  CHECK((z3 * z3 * z3) == Cyc(1));
  // zeta_2 = -1 reduces to the rational -1
  CHECK(Cyc::zeta(2) == Cyc(-1));
  CHECK(Cyc::zeta(2).is_rational());
  // inside Q(zeta_6): zeta_6 = -zeta_6^4 (= -zeta_3^2) and zeta_6^3 = -1
  CHECK(Cyc::zeta(6) == -Cyc::zeta(6, 4));
  CHECK(Cyc::zeta(6, 3) == Cyc(-1));
  CHECK(Cyc::zeta(6, 3).is_rational());
}

TEST_CASE("cyclotomic field axioms on random elements") {
  std::mt19937_64 rng(20260816);
  for (int t = 0; t < 1000; ++t) {
    Cyc a = random_cyc(rng, 12, 5);
    Cyc b = random_cyc(rng, 12, 5);
    Cyc c = random_cyc(rng, 12, 5);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    if (!a.is_zero()) CHECK(a * a.inverse() == Cyc(1));
  }
}

TEST_CASE("galois maps are automorphisms") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    Cyc a = random_cyc(rng, 5, 5);
    Cyc b = random_cyc(rng, 5, 5);
    for (int k : {2, 3, 4}) {
      CHECK((a * b).galois(k) == a.galois(k) * b.galois(k));
      CHECK((a + b).galois(k) == a.galois(k) + b.galois(k));
    }
  }
}

TEST_CASE("field mixing rules") {
  // rational values promote freely
  CHECK(Cyc::zeta(4) + Cyc(1) == Cyc(4, {rat(1), rat(1)}));
  CHECK(Cyc::zeta(2) * Cyc::zeta(4) == -Cyc::zeta(4));
  // distinct non-rational orders are rejected
  CHECK_THROWS_AS(Cyc::zeta(3) + Cyc::zeta(4), Error);
  CHECK_THROWS_AS(Cyc::zeta(3) * Cyc::zeta(4), Error);
}

TEST_CASE("h-series arithmetic and caps") {
  HSeries h = HSeries::monomial(1, Cyc(1));
  HSeries hinv = HSeries::monomial(-1, Cyc(1));
  CHECK(h * hinv == HSeries(Cyc(1)));
  CHECK(HSeries::monomial(3, Cyc(2)).inverse() == HSeries::monomial(-3, Cyc(rat(1, 2))));

  // geometric series: (1 - h)^{-1} = 1 + h + h^2 + ... below the cap
  HSeries one_minus_h = (HSeries(Cyc(1)) - h).truncated(5);
  HSeries inv = one_minus_h.inverse();
  CHECK(inv.cap() == 5);
  for (int k = 0; k < 5; ++k) CHECK(inv.coeff(k) == Cyc(1));
  CHECK((one_minus_h * inv).truncated(5) == HSeries(Cyc(1), 0, 5));

  // nonzero lead: (h - h^2)^{-1} = h^{-1} + 1 + h + ... ; cap drops by 2*lead
  HSeries s = (h - h * h).truncated(6);
  HSeries si = s.inverse();
  CHECK(si.cap() == 4);
  CHECK(si.coeff(-1) == Cyc(1));
  CHECK(si.coeff(0) == Cyc(1));
  CHECK(si.coeff(2) == Cyc(1));
  HSeries prod = s * si;
  CHECK(prod.coeff(0) == Cyc(1));
  for (int k = 1; k < prod.cap(); ++k) CHECK(prod.coeff(k).is_zero());

  // exact multi-term inverse must be refused; zero has no inverse
  CHECK_THROWS_AS((HSeries(Cyc(1)) - h).inverse(), Error);
  CHECK_THROWS_AS(HSeries().inverse(), Error);

  // cap propagation: mul cap = min(cap1 + floor2, cap2 + floor1)
  HSeries a = HSeries::monomial(2, Cyc(3), 7);
  HSeries b = HSeries::monomial(-1, Cyc(5), 4);
  CHECK((a * b).cap() == std::min(7 + (-1), 4 + 2));
  CHECK((a + a).cap() == 7);
}

TEST_CASE("euler phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(2) == 1);
  CHECK(euler_phi(3) == 2);
  CHECK(euler_phi(4) == 2);
  CHECK(euler_phi(6) == 2);
  CHECK(euler_phi(12) == 4);
}
