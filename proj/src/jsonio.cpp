#include "qorb/json_io.hpp"

#include <fstream>
#include <iostream>

#include "qorb/error.hpp"
#include "qorb/report.hpp"

namespace qorb {

namespace {

// translate access/type errors into input errors carrying the field context
template <typename F>
auto guarded(const std::string& where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidInput, where + ": " + e.what());
  }
}

Rat rat_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return rat(j.get<long>());
  if (j.is_string()) return rat_parse(j.get<std::string>());
  throw Error(ErrorKind::InvalidInput, where + ": expected an integer or a \"p/q\" string");
}

YDeg ydeg_from_json(const Json& j, int n, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw Error(ErrorKind::InvalidInput,
                where + ": expected an array of " + std::to_string(n) + " exponents");
  YDeg d;
  for (const Json& e : j) {
    int v = guarded(where, [&] { return e.get<int>(); });
    if (v < 0) throw Error(ErrorKind::InvalidInput, where + ": exponents must be >= 0");
    d.push_back(v);
  }
  return d;
}

int int_field(const Json& j, const std::string& key, const std::string& where) {
  return guarded(where + "." + key, [&] { return j.at(key).get<int>(); });
}

}  // namespace

Json cyc_to_json(const Cyc& c) {
  if (c.is_rational()) return Json(rat_str(c.rational_part()));
  Json coeffs = Json::array();
  for (const Rat& r : c.coeffs()) coeffs.push_back(rat_str(r));
  return Json{{"order", c.order()}, {"coeffs", coeffs}};
}

Cyc cyc_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer() || j.is_string()) return Cyc(rat_from_json(j, where));
  if (j.is_object()) {
    int order = int_field(j, "order", where);
    const Json& raw = guarded(where, [&]() -> const Json& { return j.at("coeffs"); });
    if (!raw.is_array())
      throw Error(ErrorKind::InvalidInput, where + ".coeffs: expected an array");
    std::vector<Rat> coeffs;
    for (const Json& e : raw) coeffs.push_back(rat_from_json(e, where + ".coeffs"));
    return Cyc(order, std::move(coeffs));
  }
  throw Error(ErrorKind::InvalidInput,
              where + ": expected a scalar or {\"order\", \"coeffs\"}");
}

Json mat_to_json(const Mat& m) {
  Json rows = Json::array();
  for (int i = 0; i < static_cast<int>(m.rows()); ++i) {
    Json row = Json::array();
    for (int j = 0; j < static_cast<int>(m.cols()); ++j) row.push_back(cyc_to_json(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Mat mat_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty())
    throw Error(ErrorKind::InvalidInput, where + ": expected a non-empty array of rows");
  std::vector<std::vector<Cyc>> rows;
  for (const Json& r : j) {
    if (!r.is_array() || r.size() != j[0].size())
      throw Error(ErrorKind::InvalidInput, where + ": rows must be arrays of equal length");
    std::vector<Cyc> row;
    for (const Json& e : r) row.push_back(cyc_from_json(e, where));
    rows.push_back(std::move(row));
  }
  return Mat::from_cyc_rows(rows);
}

Section base_series_from_json(const Json& j, const SpacePtr& sp, int cap,
                              const std::string& where) {
  if (!j.is_array())
    throw Error(ErrorKind::InvalidInput, where + ": expected an array of terms");
  Section s(sp, cap);
  for (const Json& t : j) {
    int hbar = t.contains("hbar") ? int_field(t, "hbar", where) : 0;
    if (hbar < 0)
      throw Error(ErrorKind::InvalidInput, where + ": base series must have hbar >= 0");
    const Json& xj = guarded(where, [&]() -> const Json& { return t.at("xdeg"); });
    YDeg xdeg = ydeg_from_json(xj, sp->dim, where + ".xdeg");
    Cyc c = cyc_from_json(guarded(where, [&]() -> const Json& { return t.at("coeff"); }),
                          where + ".coeff");
    s.add_term(SecKey{hbar, std::move(xdeg), YDeg(static_cast<size_t>(sp->dim), 0), 0u}, c);
  }
  return s;
}

Json base_series_to_json(const Section& s) {
  Json out = Json::array();
  for (const auto& [k, c] : s.terms()) {
    if (deg_total(k.ydeg) != 0 || k.dxmask != 0)
      throw Error(ErrorKind::Internal, "series to serialize is not a base series");
    out.push_back(Json{{"hbar", k.hbar}, {"xdeg", k.xdeg}, {"coeff", cyc_to_json(c)}});
  }
  return out;
}

SymplecticGroup group_from_json(const Json& j, int max_group) {
  require_schema(j, "group document");
  int dim = int_field(j, "dim", "group document");
  if (dim < 2 || dim % 2 != 0 || dim > 30)
    throw Error(ErrorKind::InvalidInput,
                "group document.dim: expected an even dimension between 2 and 30");
  SpacePtr sp = standard_space(dim / 2);
  const Json& gens = guarded("group document", [&]() -> const Json& { return j.at("generators"); });
  return group_from_matrix_list(gens, sp, max_group);
}

SymplecticGroup group_from_matrix_list(const Json& j, const SpacePtr& sp, int max_group) {
  if (!j.is_array())
    throw Error(ErrorKind::InvalidInput, "generators: expected an array of matrices");
  std::vector<Mat> mats;
  for (const Json& m : j) {
    Mat g = mat_from_json(m, "generators");
    if (static_cast<int>(g.rows()) != sp->dim || static_cast<int>(g.cols()) != sp->dim)
      throw Error(ErrorKind::InvalidInput, "generators: matrix size does not match dim");
    mats.push_back(std::move(g));
  }
  return close_group(sp, mats, max_group);
}

FedosovData fedosov_data_from_json(const Json& j, int weight_cap_override) {
  require_schema(j, "geometry document");
  int dim = int_field(j, "dim", "geometry document");
  if (dim < 2 || dim % 2 != 0 || dim > 30)
    throw Error(ErrorKind::InvalidInput,
                "geometry document.dim: expected an even dimension between 2 and 30");
  Mat omega = mat_from_json(guarded("geometry document",
                                    [&]() -> const Json& { return j.at("omega"); }),
                            "omega");
  if (static_cast<int>(omega.rows()) != dim || static_cast<int>(omega.cols()) != dim)
    throw Error(ErrorKind::InvalidInput, "omega: matrix size does not match dim");

  std::vector<GammaTerm> gamma;
  if (j.contains("Gamma")) {
    for (const Json& t : j.at("Gamma")) {
      const Json& ijk = guarded("Gamma", [&]() -> const Json& { return t.at("ijk"); });
      if (!ijk.is_array() || ijk.size() != 3)
        throw Error(ErrorKind::InvalidInput, "Gamma.ijk: expected three indices");
      GammaTerm g;
      g.i = guarded("Gamma.ijk", [&] { return ijk[0].get<int>(); });
      g.j = guarded("Gamma.ijk", [&] { return ijk[1].get<int>(); });
      g.k = guarded("Gamma.ijk", [&] { return ijk[2].get<int>(); });
      g.xdeg = ydeg_from_json(guarded("Gamma", [&]() -> const Json& { return t.at("xdeg"); }),
                              dim, "Gamma.xdeg");
      g.coeff = cyc_from_json(guarded("Gamma", [&]() -> const Json& { return t.at("coeff"); }),
                              "Gamma.coeff");
      gamma.push_back(std::move(g));
    }
  }

  std::vector<Omega2Term> oh;
  if (j.contains("Omega_h")) {
    for (const Json& t : j.at("Omega_h")) {
      const Json& ij = guarded("Omega_h", [&]() -> const Json& { return t.at("ij"); });
      if (!ij.is_array() || ij.size() != 2)
        throw Error(ErrorKind::InvalidInput, "Omega_h.ij: expected two indices");
      Omega2Term o;
      o.hbar = int_field(t, "hbar", "Omega_h");
      o.i = guarded("Omega_h.ij", [&] { return ij[0].get<int>(); });
      o.j = guarded("Omega_h.ij", [&] { return ij[1].get<int>(); });
      o.xdeg = ydeg_from_json(guarded("Omega_h", [&]() -> const Json& { return t.at("xdeg"); }),
                              dim, "Omega_h.xdeg");
      o.coeff = cyc_from_json(guarded("Omega_h", [&]() -> const Json& { return t.at("coeff"); }),
                              "Omega_h.coeff");
      oh.push_back(std::move(o));
    }
  }

  int cap = weight_cap_override > 0 ? weight_cap_override
                                    : int_field(j, "weight_cap", "geometry document");
  if (cap < 1)
    throw Error(ErrorKind::InvalidInput, "weight_cap: expected a positive weight");
  return make_fedosov_data(omega, gamma, oh, cap + 1);
}

std::vector<FixedLocusDatum> loci_from_json(const Json& j) {
  const Json& arr = guarded("loci document", [&]() -> const Json& { return j.at("loci"); });
  if (!arr.is_array())
    throw Error(ErrorKind::InvalidInput, "loci: expected an array of class data");
  std::vector<FixedLocusDatum> out;
  for (const Json& d : arr) {
    FixedLocusDatum datum;
    datum.label = guarded("loci", [&] { return d.at("label").get<std::string>(); });
    const Json& comps = guarded("loci", [&]() -> const Json& { return d.at("components"); });
    for (const Json& c : comps) {
      LocusComponent comp;
      comp.codim = int_field(c, "codim", "loci.components");
      for (const Json& b : guarded("loci.components",
                                   [&]() -> const Json& { return c.at("betti"); }))
        comp.betti.push_back(guarded("loci.components.betti", [&] { return b.get<long>(); }));
      datum.components.push_back(std::move(comp));
    }
    out.push_back(std::move(datum));
  }
  return out;
}

UnobstructednessData unobstructedness_from_json(const Json& j) {
  UnobstructednessData d;
  if (j.contains("h3_invariant"))
    d.h3_invariant = guarded("unobstructedness", [&] { return j.at("h3_invariant").get<long>(); });
  if (j.contains("codim2_loci")) {
    for (const Json& l : j.at("codim2_loci")) {
      Codim2Locus loc;
      loc.label = guarded("codim2_loci", [&] { return l.at("label").get<std::string>(); });
      if (l.contains("h1_invariant"))
        loc.h1_invariant =
            guarded("codim2_loci", [&] { return l.at("h1_invariant").get<long>(); });
      d.codim2_loci.push_back(std::move(loc));
    }
  }
  return d;
}

Json spectrum_to_json(const OrbifoldSpectrum& s) {
  Json poincare = Json::object();
  for (const auto& [deg, mult] : s.poincare) poincare[std::to_string(deg)] = mult;
  Json classes = Json::array();
  for (const ClassContribution& c : s.classes) {
    Json degrees = Json::object();
    for (const auto& [deg, mult] : c.degrees) degrees[std::to_string(deg)] = mult;
    classes.push_back(Json{{"label", c.label}, {"codims", c.codims}, {"degrees", degrees}});
  }
  return Json{{"poincare", poincare}, {"classes", classes}, {"sra_dim", sra_param_dim(s)}};
}

void require_schema(const Json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("schema") || !j.at("schema").is_string() ||
      j.at("schema").get<std::string>() != "1")
    throw Error(ErrorKind::InvalidInput, where + ": expected \"schema\": \"1\"");
}

Json load_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::InvalidInput, "cannot open input file: " + path);
  try {
    return Json::parse(f);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput, "malformed JSON in " + path + ": " + e.what());
  }
}

void write_output(const Json& doc, const std::string& path) {
  std::string text = doc.dump(1) + "\n";
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::InvalidInput, "cannot open output file: " + path);
  f << text;
}

bool RunReport::all_pass() const {
  for (const CheckResult& c : checks)
    if (!c.pass) return false;
  return true;
}

Json RunReport::to_json() const {
  Json j = extra;
  j["schema"] = "1";
  j["command"] = command;
  j["seed"] = seed;
  Json arr = Json::array();
  for (const CheckResult& c : checks) {
    Json e{{"tag", c.tag},
           {"description", c.description},
           {"trials", c.trials},
           {"pass", c.pass}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    arr.push_back(e);
  }
  j["checks"] = arr;
  j["status"] = all_pass() ? "pass" : "fail";
  return j;
}

}  // namespace qorb
