#include <algorithm>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qorb/chain.hpp"
#include "qorb/error.hpp"
#include "qorb/hochschild.hpp"
#include "qorb/json_io.hpp"
#include "qorb/kappa.hpp"
#include "qorb/koszul.hpp"
#include "qorb/mixed.hpp"
#include "qorb/report.hpp"

namespace {

using namespace qorb;

struct Options {
  std::string input;
  std::string output;
  std::string group_file;
  std::string data_file;
  int weight_cap = -1;
  int hbar_cap = -1;
  int max_group = 256;
  int trials = -1;
  std::uint64_t seed = 0;
};

int trials_or(const Options& o, int dflt) { return o.trials > 0 ? o.trials : dflt; }

// ---- finite-group and action presets shared by the algebraic commands ----

FinGroup fin_group_preset(const std::string& name) {
  if (name == "S3") return s3_fin_group();
  if (name.size() >= 2 && name[0] == 'Z') {
    int N = 0;
    try {
      N = std::stoi(name.substr(1));
    } catch (const std::exception&) {
      N = 0;
    }
    if (N >= 1 && N <= 12) return cyclic_fin_group(N);
  }
  throw Error(ErrorKind::InvalidInput, "unknown group preset: " + name + " (use Z<n> or S3)");
}

std::vector<int> sign_character(const FinGroup& G, const std::string& name) {
  if (name == "S3") {
    std::vector<int> s;
    for (int i = 0; i < G.n; ++i) s.push_back(s3_parity(i));
    return s;
  }
  int N = G.n;  // cyclic: element k is the k-th power of the generator
  std::vector<int> s;
  for (int k = 0; k < N; ++k) s.push_back((N % 2 == 0 && k % 2 == 1) ? -1 : 1);
  return s;
}

std::vector<Cyc> scale_character(const FinGroup& G, const std::string& name) {
  std::vector<Cyc> chi;
  if (name == "S3") {
    for (int i = 0; i < G.n; ++i) chi.push_back(Cyc(static_cast<long>(s3_parity(i))));
    return chi;
  }
  for (int k = 0; k < G.n; ++k) chi.push_back(Cyc::zeta(G.n, k));
  return chi;
}

struct AlgebraConfig {
  AlgebraAction X;
  std::string group_name;  // empty when no group was requested
  int qmax = 2;
};

AlgebraConfig algebra_config_from_json(const Json& doc) {
  require_schema(doc, "config document");
  std::string algebra, group, action;
  int qmax = 2;
  try {
    algebra = doc.at("algebra").get<std::string>();
    if (doc.contains("group")) group = doc.at("group").get<std::string>();
    if (doc.contains("action")) action = doc.at("action").get<std::string>();
    if (doc.contains("q_max")) qmax = doc.at("q_max").get<int>();
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("config document: ") + e.what());
  }
  if (qmax < 0 || qmax > 6)
    throw Error(ErrorKind::InvalidInput, "q_max must lie between 0 and 6");

  FinGroup G = fin_group_preset(group.empty() ? "Z1" : group);
  FinAlg A;
  std::string dflt;
  if (algebra == "C") {
    A = field_algebra();
    dflt = "trivial";
  } else if (algebra == "C2") {
    A = product_c2();
    dflt = "swap";
  } else if (algebra == "dual-numbers") {
    A = dual_numbers();
    dflt = "scale";
  } else if (algebra == "mat2") {
    A = mat2();
    dflt = "trivial";
  } else {
    throw Error(ErrorKind::InvalidInput,
                "unknown algebra preset: " + algebra + " (use C, C2, dual-numbers, or mat2)");
  }
  if (action.empty()) action = group.empty() ? "trivial" : dflt;

  AlgebraConfig cfg{AlgebraAction{}, group, qmax};
  if (action == "trivial") {
    cfg.X = trivial_action(G, A);
  } else if (action == "swap") {
    if (algebra != "C2")
      throw Error(ErrorKind::InvalidInput, "the swap action needs the C2 algebra");
    cfg.X = c2_swap_action(G, sign_character(G, group.empty() ? "Z1" : group));
  } else if (action == "scale") {
    if (algebra != "dual-numbers")
      throw Error(ErrorKind::InvalidInput, "the scale action needs the dual-numbers algebra");
    cfg.X = dual_scale_action(G, scale_character(G, group.empty() ? "Z1" : group));
  } else {
    throw Error(ErrorKind::InvalidInput,
                "unknown action preset: " + action + " (use trivial, swap, or scale)");
  }
  return cfg;
}

// ---- commands ----

RunReport run_chen_ruan(const Options& o) {
  RunReport rep;
  if (o.group_file.empty() == o.data_file.empty())
    throw Error(ErrorKind::InvalidInput, "provide exactly one of --group and --data");
  if (!o.group_file.empty()) {
    SymplecticGroup G = group_from_json(load_json_file(o.group_file), o.max_group);
    OrbifoldSpectrum s = linear_orbifold_cohomology(G);
    CheckResult conj{"Ch-R", "codimension is conjugation invariant and spectrum counts classes",
                     G.order(), true, ""};
    const int n = G.space->dim;
    for (size_t ci = 0; ci < G.classes.size(); ++ci) {
      int codim = -1;
      for (int i : G.classes[ci]) {
        int r = (G.elements[static_cast<size_t>(i)] - Mat::identity(n)).rank();
        if (codim < 0) codim = r;
        if (r != codim) {
          conj.pass = false;
          conj.detail = "class " + std::to_string(ci) + " mixes codimensions";
        }
      }
    }
    if (s.total() != static_cast<long>(G.classes.size())) {
      conj.pass = false;
      conj.detail = "spectrum total differs from the class count";
    }
    rep.checks.push_back(std::move(conj));
    rep.extra = spectrum_to_json(s);
  } else {
    Json doc = load_json_file(o.data_file);
    require_schema(doc, "loci document");
    std::vector<FixedLocusDatum> loci = loci_from_json(doc);
    OrbifoldSpectrum s = general_orbifold_cohomology(loci);
    CheckResult agg{"Ch-R", "spectrum aggregates the per-class contributions",
                    static_cast<long>(loci.size()), true, ""};
    long sum = 0;
    for (const ClassContribution& c : s.classes)
      for (const auto& [deg, mult] : c.degrees) sum += mult;
    if (sum != s.total()) {
      agg.pass = false;
      agg.detail = "per-class totals disagree with the spectrum";
    }
    rep.checks.push_back(std::move(agg));
    rep.extra = spectrum_to_json(s);
    if (doc.contains("unobstructedness")) {
      UnobstructednessReport u =
          unobstructedness_check(unobstructedness_from_json(doc.at("unobstructedness")));
      rep.extra["unobstructedness"] =
          Json{{"hypotheses_met", u.hypotheses_met}, {"failures", u.failures}};
    }
  }
  return rep;
}

Section hbar_filtered(const Section& s, int hbar_cap) {
  if (hbar_cap < 0) return s;
  Section out(s.space(), s.cap());
  for (const auto& [k, c] : s.terms())
    if (k.hbar <= hbar_cap) out.add_term(k, c);
  return out;
}

RunReport run_fedosov_star(const Options& o) {
  Json doc = load_json_file(o.input);
  FedosovData d = fedosov_data_from_json(doc, o.weight_cap);
  FedosovEngine e = make_engine(d);
  const int W = d.weight_cap;
  Section a = base_series_from_json(
      doc.contains("a") ? doc.at("a") : throw Error(ErrorKind::InvalidInput, "missing \"a\""),
      d.sp, W, "a");
  Section b = base_series_from_json(
      doc.contains("b") ? doc.at("b") : throw Error(ErrorKind::InvalidInput, "missing \"b\""),
      d.sp, W, "b");
  Section prod = e.star(a, b);
  RunReport rep;
  rep.extra["weight_cap"] = W - 1;
  rep.extra["product"] = base_series_to_json(hbar_filtered(prod, o.hbar_cap));
  return rep;
}

RunReport run_fedosov_verify(const Options& o) {
  Json doc = load_json_file(o.input);
  FedosovData d = fedosov_data_from_json(doc, o.weight_cap);
  FedosovEngine e = make_engine(d);
  const int W = d.weight_cap;
  std::mt19937_64 rng(o.seed);
  const int t = trials_or(o, 3);
  RunReport rep;
  rep.extra["weight_cap"] = W - 1;

  Section zero(d.sp, W);
  Section r_hat = curvature_section(d);

  {
    CheckResult c{"Weyl-c", "curvature of the flat structure equals the input series", 1, true, ""};
    c.pass = e.weyl_curvature().equal_below(-omega_double_sum(d) + d.omega_h, W - 1);
    if (!c.pass) c.detail = "curvature series mismatch";
    rep.checks.push_back(std::move(c));
  }
  {
    CheckResult c{"nado", "squared covariant derivative is the curvature bracket", t, true, ""};
    for (int i = 0; i < t && c.pass; ++i) {
      Section a = random_section(rng, d.sp, 2, 4, W);
      Section lhs = nabla(d, nabla(d, a));
      Section rhs = graded_comm(r_hat, a).shifted_hbar(-1);
      if (!lhs.equal_below(rhs, W - 2)) {
        c.pass = false;
        c.detail = "trial " + std::to_string(i);
      }
    }
    rep.checks.push_back(std::move(c));
  }
  {
    CheckResult c{"DDD", "flat derivative squares to zero and kills its curvature", t + 1, true, ""};
    for (int i = 0; i < t && c.pass; ++i) {
      Section a = random_section(rng, d.sp, 2, 4, W);
      if (!e.D(e.D(a)).equal_below(zero, W - 2)) {
        c.pass = false;
        c.detail = "trial " + std::to_string(i);
      }
    }
    if (c.pass && !e.D(e.weyl_curvature()).equal_below(zero, W - 2)) {
      c.pass = false;
      c.detail = "curvature series is not flat-closed";
    }
    rep.checks.push_back(std::move(c));
  }
  {
    CheckResult c{"Hodge", "fiber differential, homotopy, and projection decompose the identity",
                  t, true, ""};
    for (int i = 0; i < t && c.pass; ++i) {
      Section a = random_section(rng, d.sp, 2, 4, W);
      Section rebuilt = koszul_delta(koszul_delta_inv(a)) + koszul_delta_inv(koszul_delta(a)) +
                        sigma(a);
      if (!(rebuilt == a)) {
        c.pass = false;
        c.detail = "trial " + std::to_string(i);
      }
    }
    rep.checks.push_back(std::move(c));
  }
  const int lam_trials = std::min(t, 3);
  std::vector<Section> lifts;
  {
    CheckResult c{"la", "flat lift splits the projection and is covariantly constant",
                  lam_trials, true, ""};
    for (int i = 0; i < lam_trials && c.pass; ++i) {
      Section a = random_base_poly(rng, d.sp, 2, 3, W);
      Section la = e.lambda(a);
      lifts.push_back(la);
      if (!(sigma(la) == a.truncated(W)) || !e.D(la).equal_below(zero, W - 1)) {
        c.pass = false;
        c.detail = "trial " + std::to_string(i);
      }
    }
    rep.checks.push_back(std::move(c));
  }
  {
    CheckResult c{"star", "the induced base product is associative", 1, true, ""};
    Section a = random_base_poly(rng, d.sp, 2, 2, W);
    Section b = random_base_poly(rng, d.sp, 2, 2, W);
    Section cc = random_base_poly(rng, d.sp, 2, 2, W);
    int bound = std::min(W - 2, 8);
    if (!e.star(e.star(a, b), cc).equal_below(e.star(a, e.star(b, cc)), bound)) {
      c.pass = false;
      c.detail = "associativity fails below weight " + std::to_string(bound);
    }
    if (c.pass && d.gamma.empty() && d.omega_h.is_zero()) {
      if (!(e.star(a, b) == base_weyl_product(a, b).truncated(W))) {
        c.pass = false;
        c.detail = "flat product differs from the fiber product of the base";
      }
    }
    rep.checks.push_back(std::move(c));
  }

  if (doc.contains("group")) {
    SymplecticGroup G = group_from_matrix_list(doc.at("group"), d.sp, o.max_group);
    {
      EquivarianceReport er = equivariance_check(e, G.elements, rng, std::min(t, 2));
      CheckResult c{"action-G", "group invariance of the data, the lift, and the product",
                    std::min(t, 2), er.ok(), ""};
      if (!er.ok()) {
        c.detail = er.failing.empty() ? "lift or product equivariance fails"
                                      : "non-invariant data: " + er.failing.front();
        for (size_t i = 1; i < er.failing.size(); ++i) c.detail += ", " + er.failing[i];
      }
      rep.checks.push_back(std::move(c));
    }
    CheckResult kb{"ka-mb", "the volume cycle of each fixed locus is a fiber cycle", 0, true, ""};
    CheckResult kn{"nuu-1", "the connection chain bounds the derivative of the cycle", 0, true, ""};
    CheckResult kc{"cC-mb", "the fiber boundary squares to zero over each fixed locus", 0, true, ""};
    std::string skipped;
    for (int gi = 1; gi < G.order(); ++gi) {
      ChainModel m;
      try {
        m = make_chain_model(e, G.elements[static_cast<size_t>(gi)]);
      } catch (const Error& err) {
        if (err.kind() == ErrorKind::Unsupported) {
          skipped += (skipped.empty() ? "skipped elements: " : ", ") + std::to_string(gi);
          continue;
        }
        throw;
      }
      ++kb.trials;
      ++kn.trials;
      kc.trials += 2;
      if (!chain_b(m, kappa_zero(m)).is_zero()) {
        kb.pass = false;
        kb.detail = "element " + std::to_string(gi);
      }
      if (!chain_D(m, kappa_zero(m)).equal_below(chain_b(m, nu_two(m)), W - 2)) {
        kn.pass = false;
        kn.detail = "element " + std::to_string(gi);
      }
      for (int i = 0; i < 2; ++i) {
        KChain c = random_kchain(rng, m, 2, 3);
        if (!chain_b(m, chain_b(m, c)).is_zero()) {
          kc.pass = false;
          kc.detail = "element " + std::to_string(gi);
        }
      }
    }
    if (!skipped.empty()) {
      kb.detail = kb.detail.empty() ? skipped : kb.detail + "; " + skipped;
      kn.detail = kn.detail.empty() ? skipped : kn.detail + "; " + skipped;
    }
    rep.checks.push_back(std::move(kb));
    rep.checks.push_back(std::move(kn));
    rep.checks.push_back(std::move(kc));
  }
  return rep;
}

RunReport run_hochschild(const Options& o) {
  Json doc = load_json_file(o.input);
  AlgebraConfig cfg = algebra_config_from_json(doc);
  RunReport rep;
  rep.extra["algebra"] = cfg.X.A.name;
  rep.extra["homology"] = homology_dims(cfg.X.A, regular_bimodule(cfg.X.A), cfg.qmax);
  rep.extra["cohomology"] = cohomology_dims(cfg.X.A, regular_bimodule(cfg.X.A), cfg.qmax);
  if (!cfg.group_name.empty()) {
    DecompositionReport dr = decomposition_check(cfg.X, cfg.qmax);
    rep.extra["crossed_homology"] = dr.lhs;
    rep.extra["invariant_homology"] = dr.rhs;
    CheckResult c{"FLT", "crossed-product homology equals the invariant twisted homology",
                  cfg.qmax + 1, dr.equal, ""};
    if (!dr.equal) c.detail = "dimension tables differ";
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

RunReport run_decomposition_check(const Options& o) {
  Json doc = load_json_file(o.input);
  AlgebraConfig cfg = algebra_config_from_json(doc);
  if (cfg.group_name.empty())
    throw Error(ErrorKind::InvalidInput, "decomposition-check needs a \"group\" in the config");
  RunReport rep;
  DecompositionReport dr = decomposition_check(cfg.X, cfg.qmax);
  rep.extra["crossed_homology"] = dr.lhs;
  rep.extra["invariant_homology"] = dr.rhs;
  {
    CheckResult c{"FLT", "crossed-product homology equals the invariant twisted homology",
                  cfg.qmax + 1, dr.equal, ""};
    if (!dr.equal) c.detail = "dimension tables differ";
    rep.checks.push_back(std::move(c));
  }
  MoritaReport mr = symmetrizer_morita(cfg.X);
  rep.extra["fixed_dim"] = mr.dim_fixed;
  rep.extra["corner_dim"] = mr.dim_corner;
  rep.extra["hh0_fixed"] = mr.hh0_fixed;
  rep.extra["hh0_crossed"] = mr.hh0_crossed;
  rep.extra["hh0_equal"] = mr.hh0_equal;
  {
    CheckResult c{"Morita", "symmetrizer corner matches the invariant subalgebra", 1,
                  mr.idempotent && mr.corner_matches_fixed, ""};
    if (!c.pass)
      c.detail = mr.idempotent ? "corner algebra differs from the invariants"
                               : "symmetrizer is not idempotent";
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

RunReport run_homotopy_check(const Options& o) {
  Json doc = load_json_file(o.input);
  AlgebraConfig cfg = algebra_config_from_json(doc);
  if (cfg.group_name.empty())
    throw Error(ErrorKind::InvalidInput, "homotopy-check needs a \"group\" in the config");
  const AlgebraAction& X = cfg.X;
  std::mt19937_64 rng(o.seed);
  const int t = trials_or(o, 100);
  CheckResult cb{"beta-a", "horizontal boundary squares to zero", t, true, ""};
  CheckResult cp{"beta'-a", "vertical boundary squares to zero", t, true, ""};
  CheckResult ct{"C-dot-dot", "total boundary squares to zero", t, true, ""};
  CheckResult ch{"hom-op-pro", "contraction is a homotopy from the identity to zero", t, true, ""};
  CheckResult cm{"B-B-mod", "two-sided module actions commute with the boundary", t, true, ""};
  std::uniform_int_distribution<int> dm(0, 3);
  std::uniform_int_distribution<int> da(0, X.A.dim - 1);
  std::uniform_int_distribution<int> dg(0, X.G.n - 1);
  for (int i = 0; i < t; ++i) {
    TotalElement c = random_mixed(rng, X, dm(rng), dm(rng), 3);
    std::string at = "trial " + std::to_string(i);
    if (cb.pass && !beta(X, beta(X, c)).is_zero()) {
      cb.pass = false;
      cb.detail = at;
    }
    if (cp.pass && !beta_prime(X, beta_prime(X, c)).is_zero()) {
      cp.pass = false;
      cp.detail = at;
    }
    if (ct.pass && !total_boundary(X, total_boundary(X, c)).is_zero()) {
      ct.pass = false;
      ct.detail = at;
    }
    if (ch.pass) {
      TotalElement lhs = contraction(X, total_boundary(X, c)) + total_boundary(X, contraction(X, c));
      if (!(lhs == c)) {
        ch.pass = false;
        ch.detail = at;
      }
    }
    if (cm.pass) {
      int a0 = da(rng), g0 = dg(rng), b0 = da(rng), h0 = dg(rng);
      bool left_ok = total_boundary(X, act_left(X, a0, g0, c)) ==
                     act_left(X, a0, g0, total_boundary(X, c));
      bool right_ok = total_boundary(X, act_right(X, c, b0, h0)) ==
                      act_right(X, total_boundary(X, c), b0, h0);
      bool sides_ok = act_left(X, a0, g0, act_right(X, c, b0, h0)) ==
                      act_right(X, act_left(X, a0, g0, c), b0, h0);
      if (!left_ok || !right_ok || !sides_ok) {
        cm.pass = false;
        cm.detail = at;
      }
    }
  }
  RunReport rep;
  rep.checks = {cb, cp, ct, ch, cm};
  return rep;
}

RunReport run_weyl_cycle_check(const Options& o) {
  SymplecticGroup G = group_from_json(load_json_file(o.input), o.max_group);
  const SpacePtr& sp = G.space;
  std::mt19937_64 rng(o.seed);
  const int t = trials_or(o, 100);
  RunReport rep;
  {
    CheckResult c{"circ", "fiber product is associative with the declared commutators", t, true,
                  ""};
    for (int i = 0; i < t && c.pass; ++i) {
      Weyl a = random_weyl(rng, sp, 4, 3);
      Weyl b = random_weyl(rng, sp, 4, 3);
      Weyl cc = random_weyl(rng, sp, 4, 3);
      if (!(moyal(moyal(a, b), cc) == moyal(a, moyal(b, cc)))) {
        c.pass = false;
        c.detail = "associativity trial " + std::to_string(i);
      }
    }
    for (int i = 0; i < sp->dim && c.pass; ++i)
      for (int j = i + 1; j < sp->dim && c.pass; ++j) {
        YDeg ei(static_cast<size_t>(sp->dim), 0), ej(static_cast<size_t>(sp->dim), 0);
        ei[static_cast<size_t>(i)] = 1;
        ej[static_cast<size_t>(j)] = 1;
        Weyl comm = moyal_comm(Weyl::monomial(sp, 0, ei, Cyc::one()),
                               Weyl::monomial(sp, 0, ej, Cyc::one()));
        if (!(comm == Weyl::scalar(sp, sp->B.at(i, j), 1))) {
          c.pass = false;
          c.detail = "commutator of coordinates " + std::to_string(i) + "," + std::to_string(j);
        }
      }
    rep.checks.push_back(std::move(c));
  }
  {
    CheckResult cy{"ON", "the twisted volume chain is a cycle for every element", G.order(),
                   true, ""};
    CheckResult mu{"anti-sym", "the top-form shadow of the cycle is nonvanishing", G.order(),
                   true, ""};
    for (int gi = 0; gi < G.order(); ++gi) {
      TwistedChain psi = twisted_cycle_psi(sp, G.elements[static_cast<size_t>(gi)]);
      if (!hochschild_b(psi).is_zero()) {
        cy.pass = false;
        cy.detail = "element " + std::to_string(gi);
      }
      if (antisym_mu(psi).is_zero()) {
        mu.pass = false;
        mu.detail = "element " + std::to_string(gi);
      }
    }
    rep.checks.push_back(std::move(cy));
    rep.checks.push_back(std::move(mu));
  }
  return rep;
}

RunReport run_koszul_ext(const Options& o) {
  Json doc = load_json_file(o.input);
  require_schema(doc, "config document");
  int d = 0, cap = 4;
  try {
    d = doc.at("vars").get<int>();
    if (doc.contains("max_degree")) cap = doc.at("max_degree").get<int>();
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("config document: ") + e.what());
  }
  if (cap < 0 || cap > 12)
    throw Error(ErrorKind::InvalidInput, "max_degree must lie between 0 and 12");
  ExtTable ext = koszul_ext(d, cap);
  std::mt19937_64 rng(o.seed);
  const int t = trials_or(o, 20);
  RunReport rep;
  rep.extra["ext_dims"] = ext.dims;
  {
    CheckResult c{"Ext-A-0", "graded self-extensions live in the top row with polynomial sizes",
                  (d + 1) * (cap + 1), true, ""};
    for (int i = 0; i < d && c.pass; ++i)
      for (int p = 0; p <= cap; ++p)
        if (ext.dims[static_cast<size_t>(i)][static_cast<size_t>(p)] != 0) {
          c.pass = false;
          c.detail = "row " + std::to_string(i) + " degree " + std::to_string(p);
        }
    for (int p = 0; p <= cap && c.pass; ++p)
      if (ext.dims[static_cast<size_t>(d)][static_cast<size_t>(p)] != poly_graded_dim(d, p)) {
        c.pass = false;
        c.detail = "top row degree " + std::to_string(p);
      }
    rep.checks.push_back(std::move(c));
  }
  {
    CheckResult c{"HKR", "the antisymmetrization cochain is a cocycle", t, true, ""};
    for (int i = 0; i < t && c.pass; ++i) {
      Poly f = random_poly(rng, d, 2, 2);
      std::vector<Poly> tuple;
      for (int s = 0; s < d + 1; ++s) tuple.push_back(random_poly(rng, d, 3, 2));
      if (!poly_is_zero(antisym_coboundary(f, tuple, d))) {
        c.pass = false;
        c.detail = "trial " + std::to_string(i);
      }
    }
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact identity checks for quantized symplectic quotients"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* c, bool needs_input) {
    if (needs_input)
      c->add_option("--input", o.input, "input document (JSON)")->required();
    c->add_option("--output", o.output, "write the report here instead of stdout");
    c->add_option("--seed", o.seed, "seed for the randomized checks");
    c->add_option("--weight-cap", o.weight_cap,
                  "highest retained total weight (overrides the input document)");
    c->add_option("--hbar-cap", o.hbar_cap, "highest hbar power kept in series output");
    c->add_option("--max-group", o.max_group, "bound on the group closure size");
    c->add_option("--trials", o.trials, "number of randomized trials per check");
  };

  CLI::App* cr = app.add_subcommand("chen-ruan", "orbifold cohomology spectrum");
  add_common(cr, false);
  cr->add_option("--group", o.group_file, "matrix group document (JSON)");
  cr->add_option("--data", o.data_file, "fixed-locus Betti document (JSON)");
  add_common(app.add_subcommand("fedosov-star", "multiply two base series"), true);
  add_common(app.add_subcommand("fedosov-verify", "run the flat-structure identity suite"), true);
  add_common(app.add_subcommand("hochschild", "homology of an algebra and its crossed product"),
             true);
  add_common(app.add_subcommand("decomposition-check",
                                "match crossed-product homology with invariants"),
             true);
  add_common(app.add_subcommand("homotopy-check", "boundary and homotopy identity suite"), true);
  add_common(app.add_subcommand("weyl-cycle-check", "fiber product and twisted cycle suite"),
             true);
  add_common(app.add_subcommand("koszul-ext", "graded self-extension table and cocycle check"),
             true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    RunReport rep;
    if (cmd == "chen-ruan") rep = run_chen_ruan(o);
    else if (cmd == "fedosov-star") rep = run_fedosov_star(o);
    else if (cmd == "fedosov-verify") rep = run_fedosov_verify(o);
    else if (cmd == "hochschild") rep = run_hochschild(o);
    else if (cmd == "decomposition-check") rep = run_decomposition_check(o);
    else if (cmd == "homotopy-check") rep = run_homotopy_check(o);
    else if (cmd == "weyl-cycle-check") rep = run_weyl_cycle_check(o);
    else rep = run_koszul_ext(o);
    rep.command = cmd;
    rep.seed = o.seed;
    write_output(rep.to_json(), o.output);
    return rep.all_pass() ? 0 : 1;
  } catch (const Error& e) {
    Json err{{"schema", "1"},
             {"command", cmd},
             {"error", Json{{"kind", error_kind_name(e.kind())}, {"message", e.what()}}}};
    std::cerr << err.dump(1) << "\n";
    switch (e.kind()) {
      case ErrorKind::ResourceLimit:
      case ErrorKind::GroupExplosion:
        return 3;
      case ErrorKind::Internal:
        return 1;
      default:
        return 2;
    }
  }
}
