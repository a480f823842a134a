#include "schottky/json_io.hpp"

#include <fstream>

namespace schottky {

namespace {

json matrix_to_rows(const MatrixXd& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

MatrixXd rows_to_matrix(const json& j, int g, const char* name) {
    if (!j.is_array() || static_cast<int>(j.size()) != g)
        throw BadInput(std::string(name) + " must be a " + std::to_string(g) + "-row array");
    MatrixXd m(g, g);
    for (int i = 0; i < g; ++i) {
        const json& row = j[i];
        if (!row.is_array() || static_cast<int>(row.size()) != g)
            throw BadInput(std::string(name) + " row " + std::to_string(i) + " has wrong length");
        for (int k = 0; k < g; ++k) {
            if (!row[k].is_number()) throw BadInput(std::string(name) + " entries must be numbers");
            m(i, k) = row[k].get<double>();
        }
    }
    return m;
}

json cplx_matrix_json(const MatrixXcd& m) {
    json o;
    o["re"] = matrix_to_rows(m.real());
    o["im"] = matrix_to_rows(m.imag());
    return o;
}

VectorXi bits_from_json(const json& j, const char* name) {
    if (!j.is_array() || j.empty()) throw BadInput(std::string(name) + " must be a bit array");
    VectorXi v(static_cast<int>(j.size()));
    for (size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_integer()) throw BadInput(std::string(name) + " entries must be 0/1");
        const int b = j[i].get<int>();
        if (b != 0 && b != 1) throw BadInput(std::string(name) + " entries must be 0/1");
        v[static_cast<int>(i)] = b;
    }
    return v;
}

}  // namespace

json omega_to_json(const SiegelPoint& omega) {
    json o;
    o["g"] = omega.genus();
    o["re"] = matrix_to_rows(omega.real_part());
    o["im"] = matrix_to_rows(omega.imag_part());
    return o;
}

SiegelPoint omega_from_json(const json& j, const Tolerances& tol) {
    if (!j.contains("g") || !j["g"].is_number_integer()) throw BadInput("omega JSON needs int g");
    const int g = j["g"].get<int>();
    if (g < 1 || g > 16) throw BadInput("unreasonable genus in omega JSON");
    if (!j.contains("re") || !j.contains("im")) throw BadInput("omega JSON needs re and im");
    const MatrixXd re = rows_to_matrix(j["re"], g, "re");
    const MatrixXd im = rows_to_matrix(j["im"], g, "im");
    return SiegelPoint::validate(re.cast<cplx>() + cplx(0, 1) * im.cast<cplx>(), tol);
}

json characteristic_to_json(const ThetaCharacteristic& xi) {
    json o;
    o["a"] = std::vector<int>(xi.a.data(), xi.a.data() + xi.a.size());
    o["b"] = std::vector<int>(xi.b.data(), xi.b.data() + xi.b.size());
    return o;
}

ThetaCharacteristic characteristic_from_json(const json& j) {
    if (!j.contains("a") || !j.contains("b")) throw BadInput("characteristic JSON needs a and b");
    ThetaCharacteristic xi;
    xi.a = bits_from_json(j["a"], "a");
    xi.b = bits_from_json(j["b"], "b");
    if (xi.a.size() != xi.b.size()) throw BadInput("characteristic a/b length mismatch");
    return xi;
}

json complex_to_json(cplx z) {
    json o;
    o["re"] = z.real();
    o["im"] = z.imag();
    return o;
}

cplx complex_from_json(const json& j) {
    if (j.is_number()) return cplx(j.get<double>(), 0.0);
    if (!j.is_object()) throw BadInput("complex value must be a number or {re, im}");
    const double re = j.contains("re") ? j["re"].get<double>() : 0.0;
    const double im = j.contains("im") ? j["im"].get<double>() : 0.0;
    return cplx(re, im);
}

json vector_to_json(const VectorXcd& v) {
    json a = json::array();
    for (int i = 0; i < v.size(); ++i) a.push_back(complex_to_json(v[i]));
    return a;
}

json cubic_to_json(const CubicForm& f) {
    json o;
    o["n"] = f.n();
    json coeffs = json::array();
    const auto& table = CubicForm::index_table(f.n());
    for (size_t i = 0; i < table.size(); ++i) {
        json item;
        item["alpha"] = table[i];
        item["re"] = f.coeffs()[i].real();
        item["im"] = f.coeffs()[i].imag();
        coeffs.push_back(std::move(item));
    }
    o["coeffs"] = std::move(coeffs);
    return o;
}

CubicForm cubic_from_json(const json& j) {
    if (!j.contains("n") || !j["n"].is_number_integer()) throw BadInput("cubic JSON needs int n");
    CubicForm f(j["n"].get<int>());
    if (!j.contains("coeffs") || !j["coeffs"].is_array())
        throw BadInput("cubic JSON needs a coeffs array");
    for (const json& item : j["coeffs"]) {
        if (!item.contains("alpha")) throw BadInput("cubic coefficient needs alpha");
        std::vector<int> alpha = item["alpha"].get<std::vector<int>>();
        int total = 0;
        for (int a : alpha) {
            if (a < 0) throw BadInput("alpha entries must be nonnegative");
            total += a;
        }
        if (total != 3) throw BadInput("alpha must have degree 3");
        const double re = item.contains("re") ? item["re"].get<double>() : 0.0;
        const double im = item.contains("im") ? item["im"].get<double>() : 0.0;
        f.at(alpha) = cplx(re, im);
    }
    return f;
}

json curve_to_json(const HyperellipticCurve& c) {
    json o;
    o["branch_points"] = c.branch_points;
    return o;
}

HyperellipticCurve curve_from_json(const json& j) {
    if (!j.contains("branch_points") || !j["branch_points"].is_array())
        throw BadInput("curve JSON needs a branch_points array");
    HyperellipticCurve c;
    c.branch_points = j["branch_points"].get<std::vector<double>>();
    c.validate();
    return c;
}

json jet_to_json(const OddJet& jet) {
    json o;
    o["ell"] = vector_to_json(jet.ell);
    o["cubic"] = cubic_to_json(jet.cubic);
    o["residual_even"] = jet.residual_even;
    return o;
}

namespace {

json flags_of(const ModularValue& mv) {
    json f = json::array();
    if (mv.singular_odd_theta) f.push_back("singular_odd_theta");
    if (mv.cubic_degenerate) f.push_back("cubic_degenerate");
    return f;
}

json rational_to_json(const Rational& r) {
    json o;
    o["num"] = r.num;
    o["den"] = r.den;
    return o;
}

}  // namespace

json modular_value_to_json(const ModularValue& mv, InvariantKind kind, int genus) {
    json o;
    o["xi_index"] = mv.xi_index;
    o["invariant"] = invariant_name(kind);
    o["weight"] = rational_to_json(invariant_weight(kind, genus));
    o["raw"] = complex_to_json(mv.raw);
    o["scale_free"] = mv.scale_free;
    o["flags"] = flags_of(mv);
    return o;
}

json period_result_to_json(const PeriodResult& r) {
    json o;
    o["omega"] = omega_to_json(r.omega);
    o["a_periods"] = cplx_matrix_json(r.a_periods);
    o["b_periods"] = cplx_matrix_json(r.b_periods);
    o["symmetry_residual"] = r.symmetry_residual;
    o["quadrature_error"] = r.quadrature_error;
    o["symplectic_corrected"] = r.symplectic_corrected;
    return o;
}

json sweep_to_json(const SweepReport& r) {
    json o;
    o["omega_hash"] = r.omega_hash;
    o["invariant"] = invariant_name(r.kind);
    json entries = json::array();
    for (const ModularValue& mv : r.entries) {
        json e;
        e["xi_index"] = mv.xi_index;
        e["raw"] = complex_to_json(mv.raw);
        e["scale_free"] = mv.scale_free;
        e["flags"] = flags_of(mv);
        entries.push_back(std::move(e));
    }
    o["entries"] = std::move(entries);
    json s;
    s["max_scale_free"] = r.summary.max_scale_free;
    s["min_scale_free"] = r.summary.min_scale_free;
    s["max_abs_raw"] = r.summary.max_abs_raw;
    s["singular_count"] = r.summary.n_singular;
    s["degenerate_count"] = r.summary.n_degenerate;
    o["summary"] = std::move(s);
    return o;
}

json weight_report_to_json(const WeightReport& r) {
    json o;
    o["xi_index"] = r.xi_index;
    o["weight"] = rational_to_json(r.weight);
    o["value_at_omega"] = complex_to_json(r.value_at_omega);
    o["value_at_image"] = complex_to_json(r.value_at_image);
    o["det_cd"] = complex_to_json(r.det_cd);
    o["rel_residual"] = r.rel_residual;
    o["characteristic_fixed"] = r.characteristic_fixed;
    return o;
}

json transform_report_to_json(const TransformReport& r) {
    json o;
    o["samples"] = r.samples;
    o["mean_ratio"] = complex_to_json(r.mean_ratio);
    o["max_dev_from_mean"] = r.max_dev_from_mean;
    o["det_cd"] = complex_to_json(r.det_cd);
    o["det_residual"] = r.det_residual;
    return o;
}

json symplectic_to_json(const SymplecticInt& m) {
    json o;
    o["g"] = m.g;
    const MatrixXi full = m.full();
    json rows = json::array();
    for (int i = 0; i < full.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < full.cols(); ++j) row.push_back(full(i, j));
        rows.push_back(std::move(row));
    }
    o["rows"] = std::move(rows);
    return o;
}

SymplecticInt symplectic_from_json(const json& j) {
    if (!j.contains("rows") || !j["rows"].is_array()) throw BadInput("symplectic JSON needs rows");
    const auto& rows = j["rows"];
    const int n = static_cast<int>(rows.size());
    MatrixXi m(n, n);
    for (int i = 0; i < n; ++i) {
        if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != n)
            throw BadInput("symplectic matrix must be square");
        for (int k = 0; k < n; ++k) m(i, k) = rows[i][k].get<int>();
    }
    return SymplecticInt::from_full(m);
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadInput("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw BadInput("JSON parse failure in " + path + ": " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw BadInput("cannot open file for writing: " + path);
    out << canonical_dump(j);
}

}  // namespace schottky
