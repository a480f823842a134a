#pragma once

#include <string>

#include "json.hpp"

#include "schottky/builders.hpp"
#include "schottky/cubic.hpp"
#include "schottky/modular.hpp"
#include "schottky/theta.hpp"

namespace schottky {

using json = nlohmann::json;

// {"g": n, "re": [[..]], "im": [[..]]}
json omega_to_json(const SiegelPoint& omega);
SiegelPoint omega_from_json(const json& j, const Tolerances& tol = {});

// {"a": [..], "b": [..]} with 0/1 entries
json characteristic_to_json(const ThetaCharacteristic& xi);
ThetaCharacteristic characteristic_from_json(const json& j);

// {"n": k, "coeffs": [{"alpha": [..], "re": x, "im": y}, ..]}; omitted
// indices are zero, "im" defaults to 0.
json cubic_to_json(const CubicForm& f);
CubicForm cubic_from_json(const json& j);

json complex_to_json(cplx z);          // {"re": x, "im": y}
cplx complex_from_json(const json& j);

json vector_to_json(const VectorXcd& v);

// {"branch_points": [..]}
json curve_to_json(const HyperellipticCurve& c);
HyperellipticCurve curve_from_json(const json& j);

json jet_to_json(const OddJet& jet);
json modular_value_to_json(const ModularValue& mv, InvariantKind kind, int genus);
json sweep_to_json(const SweepReport& r);
json weight_report_to_json(const WeightReport& r);
json transform_report_to_json(const TransformReport& r);
json period_result_to_json(const PeriodResult& r);

// {"g": n, "rows": [[..], ..]} for an integer symplectic matrix (2g x 2g).
json symplectic_to_json(const SymplecticInt& m);
SymplecticInt symplectic_from_json(const json& j);

std::string canonical_dump(const json& j);  // 2-space indent, '\n' terminated

json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace schottky
