#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "qorb/fedosov.hpp"
#include "qorb/group.hpp"
#include "qorb/orbifold.hpp"

namespace qorb {

using Json = nlohmann::json;

// Scalars travel as "p/q" strings or plain integers; cyclotomic values as
// {"order": N, "coeffs": ["p/q", ...]} with phi(N) coefficients.
Json cyc_to_json(const Cyc& c);
Cyc cyc_from_json(const Json& j, const std::string& where);

Json mat_to_json(const Mat& m);
Mat mat_from_json(const Json& j, const std::string& where);

// Base series: [{"hbar": k, "xdeg": [...], "coeff": scalar}, ...].
Section base_series_from_json(const Json& j, const SpacePtr& sp, int cap,
                              const std::string& where);
Json base_series_to_json(const Section& s);

// {"schema": "1", "dim": 2n, "generators": [matrix, ...]} over the standard
// form; the closure is bounded by max_group.
SymplecticGroup group_from_json(const Json& j, int max_group);

// List of matrices closed into a group over the data's space.
SymplecticGroup group_from_matrix_list(const Json& j, const SpacePtr& sp, int max_group);

// {"schema": "1", "dim", "omega", "Gamma", "Omega_h", "weight_cap"}.  The
// document's weight_cap is the highest weight kept (inclusive); a positive
// override replaces it.  Internally the cap is exclusive, hence the +1.
FedosovData fedosov_data_from_json(const Json& j, int weight_cap_override = -1);

// {"schema": "1", "loci": [{"label", "components": [{"codim", "betti"}]}]}.
std::vector<FixedLocusDatum> loci_from_json(const Json& j);
// Optional sibling block {"h3_invariant", "codim2_loci": [{"label",
// "h1_invariant"}]}.
UnobstructednessData unobstructedness_from_json(const Json& j);

Json spectrum_to_json(const OrbifoldSpectrum& s);

// Every input document must carry "schema": "1".
void require_schema(const Json& j, const std::string& where);

// Parses the file; parse failures surface as InvalidInput with the line and
// column of the offending byte.
Json load_json_file(const std::string& path);

// Writes the document (pretty, trailing newline) to the path, or to stdout
// when the path is empty.
void write_output(const Json& doc, const std::string& path);

}  // namespace qorb
