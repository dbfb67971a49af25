#include "doctest.h"

#include <random>

#include "qorb/chain.hpp"
#include "qorb/error.hpp"

using namespace qorb;

namespace {

Mat transvection(const SymplecticSpace& sp, const std::vector<long>& v) {
  Mat col(sp.dim, 1);
  for (int i = 0; i < sp.dim; ++i) col.at(i, 0) = Cyc(v[static_cast<size_t>(i)]);
  return Mat::identity(sp.dim) + col * col.transpose() * sp.B;
}

// The skewed reflection S (diag(-1,-1,1,1)) S^{-1} on C^4: symplectic of
// order two with a non-coordinate fixed plane and g != g^T.
Mat skewed_reflection(const SymplecticSpace& sp) {
  Mat s = transvection(sp, {1, 1, 1, 0});
  Mat sigma = Mat::from_rows({{-1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  return s * sigma * s.inverse().value();
}

// Slotwise action of h on a twisted chain; the twist moves to h g h^{-1}.
TwistedChain slotwise_act(const Mat& h, const TwistedChain& c, const Mat& new_twist) {
  const SpacePtr& sp = c.space();
  TwistedChain out(sp, new_twist, c.degree(), c.cap());
  for (const auto& [key, coeff] : c.terms()) {
    std::vector<std::pair<std::vector<YDeg>, Cyc>> partial = {{{}, coeff}};
    for (const YDeg& deg : key.second) {
      Weyl w = act_on_weyl(h, Weyl::monomial(sp, 0, deg, Cyc(1)));
      std::vector<std::pair<std::vector<YDeg>, Cyc>> next;
      for (const auto& [slots, c0] : partial)
        for (const auto& [wk, wc] : w.terms()) {
          auto ext = slots;
          ext.push_back(wk.second);
          next.emplace_back(std::move(ext), c0 * wc);
        }
      partial = std::move(next);
    }
    for (const auto& [slots, c0] : partial) out.add_term(key.first, slots, c0);
  }
  return out;
}

TwistedChain single(const SpacePtr& sp, const Mat& g, int h, std::vector<YDeg> slots,
                    long c = 1) {
  TwistedChain out(sp, g, static_cast<int>(slots.size()) - 1);
  out.add_term(h, slots, Cyc(c));
  return out;
}

}  // namespace

TEST_CASE("fixed splitting oracles") {
  SpacePtr sp2 = standard_space(1);
  SpacePtr sp4 = standard_space(2);

  FixedSplitting id = fixed_splitting(*sp2, Mat::identity(2));
  CHECK(id.fixed == Mat::identity(2));
  CHECK(id.moving.cols() == 0);
  CHECK(id.form_inv == sp2->B);
  CHECK(id.proj == Mat::identity(2));

  FixedSplitting minus = fixed_splitting(*sp2, -Mat::identity(2));
  CHECK(minus.fixed.cols() == 0);
  CHECK(minus.moving.cols() == 2);

  Mat sigma = Mat::from_rows({{-1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  FixedSplitting half = fixed_splitting(*sp4, sigma);
  CHECK(half.fixed == hcat(Mat::identity(4).col(2), Mat::identity(4).col(3)));
  CHECK(half.form_inv == Mat::from_rows({{0, 1}, {-1, 0}}));
  CHECK(half.proj == Mat::from_rows({{0, 0, 1, 0}, {0, 0, 0, 1}}));

  Mat swap = Mat::from_rows({{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}});
  FixedSplitting diag = fixed_splitting(*sp4, swap);
  CHECK(diag.fixed == Mat::from_rows({{1, 0}, {0, 1}, {1, 0}, {0, 1}}));
  CHECK(diag.omega_res.at(0, 1) == Cyc(-2));
  CHECK(diag.form_inv.at(0, 1) == Cyc(rat(1, 2)));
  CHECK((diag.proj * diag.fixed) == Mat::identity(2));
  CHECK((diag.fixed.transpose() * sp4->B * diag.moving).is_zero());
  // projection along im(g - Id): proj o g = proj
  CHECK((diag.proj * swap) == diag.proj);

  Mat g = skewed_reflection(*sp4);
  REQUIRE(is_symplectic(*sp4, g));
  REQUIRE(element_order(g) == 2);
  REQUIRE(g != g.transpose());
  FixedSplitting sk = fixed_splitting(*sp4, g);
  CHECK(sk.fixed.cols() == 2);
  CHECK((sk.proj * sk.fixed) == Mat::identity(2));
  CHECK((sk.proj * g) == sk.proj);
  CHECK((sk.fixed.transpose() * sp4->B * sk.moving).is_zero());
  CHECK(sk.form_inv == sk.omega_res.inverse().value());

  CHECK_THROWS_AS(fixed_splitting(*sp2, Mat::from_rows({{2, 0}, {0, 1}})), Error);
}

TEST_CASE("liouville cycle oracles") {
  SpacePtr sp2 = standard_space(1);
  SpacePtr sp4 = standard_space(2);

  TwistedChain psi_id = twisted_cycle_psi(sp2, Mat::identity(2));
  TwistedChain expect(sp2, Mat::identity(2), 2);
  expect.add_term(0, {{0, 0}, {1, 0}, {0, 1}}, Cyc(1));
  expect.add_term(0, {{0, 0}, {0, 1}, {1, 0}}, Cyc(-1));
  CHECK(psi_id == expect);

  TwistedChain psi_minus = twisted_cycle_psi(sp2, -Mat::identity(2));
  CHECK(psi_minus.degree() == 0);
  TwistedChain one(sp2, -Mat::identity(2), 0);
  one.add_term(0, {{0, 0}}, Cyc(1));
  CHECK(psi_minus == one);

  Mat sigma = Mat::from_rows({{-1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  TwistedChain psi_half = twisted_cycle_psi(sp4, sigma);
  TwistedChain expect_half(sp4, sigma, 2);
  expect_half.add_term(0, {{0, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, Cyc(1));
  expect_half.add_term(0, {{0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}, Cyc(-1));
  CHECK(psi_half == expect_half);

  Mat swap = Mat::from_rows({{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}});
  TwistedChain psi_swap = twisted_cycle_psi(sp4, swap);
  CHECK(psi_swap.degree() == 2);
  CHECK(psi_swap.terms().size() == 8);
  // coefficients are antisymmetric in the two interior slots
  for (const auto& [key, c] : psi_swap.terms()) {
    auto flipped = key;
    std::swap(flipped.second[1], flipped.second[2]);
    auto it = psi_swap.terms().find(flipped);
    REQUIRE(it != psi_swap.terms().end());
    CHECK(it->second == -c);
  }
  CHECK(psi_swap.terms().at({0, {{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}}}) == Cyc(rat(1, 2)));
  CHECK(psi_swap.terms().at({0, {{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}}}) == Cyc(rat(1, 2)));
}

TEST_CASE("twisted boundary on small chains") {
  SpacePtr sp2 = standard_space(1);

  // g = -Id: b(1 (x) y1) = -2 y1
  TwistedChain c = single(sp2, -Mat::identity(2), 0, {{0, 0}, {1, 0}});
  TwistedChain bc = hochschild_b(c);
  TwistedChain expect(sp2, -Mat::identity(2), 0);
  expect.add_term(0, {{1, 0}}, Cyc(-2));
  CHECK(bc == expect);

  // g = Id: the same chain is a cycle
  CHECK(hochschild_b(single(sp2, Mat::identity(2), 0, {{0, 0}, {1, 0}})).is_zero());

  // degree 0 maps to zero
  CHECK(hochschild_b(single(sp2, Mat::identity(2), 0, {{2, 1}})).is_zero());
}

TEST_CASE("liouville cycles are killed by the twisted boundary") {
  std::vector<SymplecticGroup> groups;
  groups.push_back(cyclic_diag_group(4));
  groups.push_back(plane_swap_group());
  groups.push_back(pm_group(2));
  groups.push_back(s3_plane_permutation_group());
  for (const SymplecticGroup& G : groups)
    for (const Mat& g : G.elements) {
      TwistedChain psi = twisted_cycle_psi(G.space, g);
      CHECK(hochschild_b(psi).is_zero());
    }

  // skewed order-two reflection with a non-coordinate fixed plane
  SpacePtr sp4 = standard_space(2);
  Mat g = skewed_reflection(*sp4);
  SymplecticGroup Z2 = close_group(sp4, {g});
  CHECK(Z2.order() == 2);
  TwistedChain psi = twisted_cycle_psi(sp4, g);
  CHECK(!psi.is_zero());
  CHECK(hochschild_b(psi).is_zero());
}

TEST_CASE("boundary squares to zero") {
  std::mt19937_64 rng(99);
  SpacePtr sp4 = standard_space(2);
  Mat swap = Mat::from_rows({{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}});
  std::vector<Mat> twists = {Mat::identity(4), swap, skewed_reflection(*sp4)};
  for (const Mat& g : twists)
    for (int t = 0; t < 12; ++t) {
      TwistedChain c = random_chain(rng, sp4, g, 3, 3, 3);
      CHECK(hochschild_b(hochschild_b(c)).is_zero());
    }
}

TEST_CASE("cycle construction is equivariant") {
  // slotwise action of h carries psi(g) to psi(h g h^{-1}); in particular the
  // chain does not depend on the basis chosen for the fixed subspace.
  SpacePtr sp4 = standard_space(2);
  Mat sigma = Mat::from_rows({{-1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  Mat s = transvection(*sp4, {1, 1, 1, 0});
  Mat g = s * sigma * s.inverse().value();
  CHECK(slotwise_act(s, twisted_cycle_psi(sp4, sigma), g) == twisted_cycle_psi(sp4, g));

  SymplecticGroup S3 = s3_plane_permutation_group();
  for (int hi = 0; hi < S3.order(); ++hi)
    for (int gi = 0; gi < S3.order(); ++gi) {
      const Mat& h = S3.elements[static_cast<size_t>(hi)];
      const Mat& gg = S3.elements[static_cast<size_t>(gi)];
      Mat conj = S3.elements[static_cast<size_t>(S3.mul[S3.mul[hi][gi]][S3.inv[hi]])];
      CHECK(slotwise_act(h, twisted_cycle_psi(S3.space, gg), conj) ==
            twisted_cycle_psi(S3.space, conj));
    }
}

TEST_CASE("antisymmetrization map") {
  SpacePtr sp2 = standard_space(1);
  SpacePtr sp4 = standard_space(2);

  // mu(1 (x) y1) = dw1 for g = Id
  PolyForm f = antisym_mu(single(sp2, Mat::identity(2), 0, {{0, 0}, {1, 0}}));
  PolyForm e1(2);
  e1.add_term(0, {0, 0}, 1u, Cyc(1));
  CHECK(f == e1);

  // mu(1 (x) y1^2) = 2 w1 dw1
  PolyForm f2 = antisym_mu(single(sp2, Mat::identity(2), 0, {{0, 0}, {2, 0}}));
  PolyForm e2(2);
  e2.add_term(0, {1, 0}, 1u, Cyc(2));
  CHECK(f2 == e2);

  // g = -Id kills every positive-degree generator
  CHECK(antisym_mu(single(sp2, -Mat::identity(2), 0, {{0, 0}, {1, 0}})).is_zero());

  // mu(psi) = sum eps_{ab} dw^a dw^b = 2 (B^g)_{12} dw1 ^ dw2
  PolyForm fid = antisym_mu(twisted_cycle_psi(sp2, Mat::identity(2)));
  PolyForm eid(2);
  eid.add_term(0, {0, 0}, 3u, Cyc(2));
  CHECK(fid == eid);

  Mat swap = Mat::from_rows({{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}});
  PolyForm fsw = antisym_mu(twisted_cycle_psi(sp4, swap));
  PolyForm esw(2);
  esw.add_term(0, {0, 0}, 3u, Cyc(1));
  CHECK(fsw == esw);

  Mat g = skewed_reflection(*sp4);
  PolyForm fsk = antisym_mu(twisted_cycle_psi(sp4, g));
  PolyForm esk(2);
  esk.add_term(0, {0, 0}, 3u, Cyc(2) * fixed_splitting(*sp4, g).form_inv.at(0, 1));
  CHECK(fsk == esk);
}

TEST_CASE("antisymmetrization kills classical boundaries") {
  std::mt19937_64 rng(1234);
  SpacePtr sp4 = standard_space(2);
  Mat swap = Mat::from_rows({{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}});
  std::vector<Mat> twists = {Mat::identity(4), swap, skewed_reflection(*sp4)};
  for (const Mat& g : twists)
    for (int t = 0; t < 10; ++t) {
      TwistedChain c = random_chain(rng, sp4, g, 3, 3, 3);
      PolyForm f = antisym_mu(hochschild_b(c));
      for (const auto& [key, coeff] : f.terms()) {
        CHECK(std::get<0>(key) > 0);  // order-zero part is exact
        (void)coeff;
      }
    }
}

TEST_CASE("chain container normalization") {
  SpacePtr sp2 = standard_space(1);
  TwistedChain c(sp2, Mat::identity(2), 1);
  c.add_term(0, {{1, 0}, {0, 0}}, Cyc(1));  // constant interior slot: dropped
  CHECK(c.is_zero());

  TwistedChain capped(sp2, Mat::identity(2), 1, 3);
  capped.add_term(1, {{0, 0}, {1, 0}}, Cyc(1));  // weight 3 >= cap
  CHECK(capped.is_zero());
  TwistedChain roomy(sp2, Mat::identity(2), 1, 4);
  roomy.add_term(1, {{0, 0}, {1, 0}}, Cyc(1));
  CHECK(!roomy.is_zero());
}
