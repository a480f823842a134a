#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "schottky/builders.hpp"
#include "schottky/json_io.hpp"
#include "schottky/kernels.hpp"
#include "schottky/modular.hpp"

namespace {

using namespace schottky;

void emit(const json& j, const std::string& output) {
    if (output.empty()) {
        std::fputs(canonical_dump(j).c_str(), stdout);
    } else {
        write_json_file(output, j);
    }
}

ThetaCharacteristic xi_by_index(int g, int index, Parity parity) {
    const auto list = enumerate_characteristics(g, parity);
    if (index < 0 || index >= static_cast<int>(list.size()))
        throw BadInput("xi index " + std::to_string(index) + " outside 0.." +
                       std::to_string(list.size() - 1));
    return list[index];
}

VectorXcd z_from_file(const std::string& path, int g) {
    const json j = load_json_file(path);
    if (!j.is_array() || static_cast<int>(j.size()) != g)
        throw BadInput("z must be an array of " + std::to_string(g) + " complex numbers");
    VectorXcd z(g);
    for (int i = 0; i < g; ++i) z[i] = complex_from_json(j[i]);
    return z;
}

Parity parity_from_name(const std::string& name) {
    if (name == "odd") return Parity::odd;
    if (name == "even") return Parity::even;
    if (name == "all") return Parity::all;
    throw BadInput("parity must be odd, even, or all");
}

ExtensionStrategy extension_from_name(const std::string& name) {
    if (name == "unitary") return ExtensionStrategy::unitary;
    if (name == "random") return ExtensionStrategy::random;
    throw BadInput("extension must be unitary or random");
}

ThetaCharacteristic all_ones_but_last(int g) {
    ThetaCharacteristic xi;
    xi.a = VectorXi::Ones(g);
    xi.b = VectorXi::Ones(g);
    xi.a[g - 1] = 0;
    xi.b[g - 1] = 0;
    return xi;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"theta pipeline: odd theta jets, restricted cubic invariants, Schottky sweeps"};
    app.require_subcommand(1);

    std::string output;
    double eps = 1e-14;
    std::string backend = "auto";
    app.add_option("--output", output, "write the JSON report to this path instead of stdout");
    app.add_option("--eps", eps, "theta series tail target (default 1e-14)");
    app.add_option("--backend", backend, "kernel backend: auto, scalar, avx2");

    auto theta_settings = [&]() {
        kernels::force_backend(backend);
        ThetaSettings s;
        if (eps <= 0.0) throw BadInput("--eps must be positive");
        s.eps = eps;
        return s;
    };

    // theta-eval
    auto* c_theta = app.add_subcommand("theta-eval", "evaluate theta[xi](z, Omega)");
    std::string te_omega, te_z, te_parity = "all";
    int te_xi = 0;
    c_theta->add_option("--omega", te_omega, "period matrix JSON")->required();
    c_theta->add_option("--xi-index", te_xi, "characteristic index in the chosen parity list");
    c_theta->add_option("--parity", te_parity, "characteristic list to index: odd, even, all");
    c_theta->add_option("--z", te_z, "JSON array of g complex numbers (default 0)");
    c_theta->callback([&]() {
        const SiegelPoint om = omega_from_json(load_json_file(te_omega));
        const ThetaCharacteristic xi = xi_by_index(om.genus(), te_xi, parity_from_name(te_parity));
        VectorXcd z = VectorXcd::Zero(om.genus());
        if (!te_z.empty()) z = z_from_file(te_z, om.genus());
        const cplx v = theta(xi, z, om, theta_settings());
        json o;
        o["xi"] = characteristic_to_json(xi);
        o["value"] = complex_to_json(v);
        emit(o, output);
    });

    // jet
    auto* c_jet = app.add_subcommand("jet", "linear and cubic Taylor data of an odd theta");
    std::string j_omega;
    int j_xi = 0;
    c_jet->add_option("--omega", j_omega, "period matrix JSON")->required();
    c_jet->add_option("--xi-index", j_xi, "index in the odd characteristic list");
    c_jet->callback([&]() {
        const SiegelPoint om = omega_from_json(load_json_file(j_omega));
        const ThetaCharacteristic xi = xi_by_index(om.genus(), j_xi, Parity::odd);
        const OddJet jet = odd_jet(xi, om, theta_settings());
        json o = jet_to_json(jet);
        o["xi"] = characteristic_to_json(xi);
        emit(o, output);
    });

    // restrict
    auto* c_restrict = app.add_subcommand("restrict", "restrict the cubic to the hyperplane ell = 0");
    std::string r_omega, r_extension = "unitary";
    int r_xi = 0;
    unsigned long long r_seed = 0;
    c_restrict->add_option("--omega", r_omega, "period matrix JSON")->required();
    c_restrict->add_option("--xi-index", r_xi, "index in the odd characteristic list");
    c_restrict->add_option("--extension", r_extension, "basis extension: unitary or random");
    c_restrict->add_option("--seed", r_seed, "seed for the random extension");
    c_restrict->callback([&]() {
        const SiegelPoint om = omega_from_json(load_json_file(r_omega));
        const ThetaCharacteristic xi = xi_by_index(om.genus(), r_xi, Parity::odd);
        const OddJet jet = odd_jet(xi, om, theta_settings());
        const RestrictedCubic rc = restrict_cubic(jet, extension_from_name(r_extension), r_seed);
        json o;
        o["xi"] = characteristic_to_json(xi);
        json basis;
        basis["re"] = json::array();
        basis["im"] = json::array();
        for (int i = 0; i < rc.basis.rows(); ++i) {
            json re_row = json::array(), im_row = json::array();
            for (int k = 0; k < rc.basis.cols(); ++k) {
                re_row.push_back(rc.basis(i, k).real());
                im_row.push_back(rc.basis(i, k).imag());
            }
            basis["re"].push_back(std::move(re_row));
            basis["im"].push_back(std::move(im_row));
        }
        o["basis"] = std::move(basis);
        o["det_basis"] = complex_to_json(rc.det_basis);
        o["m_bar"] = cubic_to_json(rc.m_bar);
        emit(o, output);
    });

    // invariants
    auto* c_inv = app.add_subcommand("invariants", "ternary invariants S, T, delta, j of a cubic");
    std::string i_cubic;
    c_inv->add_option("--cubic", i_cubic, "CubicForm JSON")->required();
    c_inv->callback([&]() {
        const CubicForm f = cubic_from_json(load_json_file(i_cubic));
        const cplx s = aronhold_S(f);
        const cplx t = aronhold_T(f);
        const cplx d = t * t + 64.0 * s * s * s;
        json o;
        o["S"] = complex_to_json(s);
        o["T"] = complex_to_json(t);
        o["delta"] = complex_to_json(d);
        try {
            o["j"] = complex_to_json(j_invariant(f));
        } catch (const SingularCubic&) {
            o["j"] = nullptr;
        }
        const double n2 = f.norm2();
        json sf;
        sf["S"] = n2 > 0.0 ? std::abs(s) / std::pow(n2, 4) : 0.0;
        sf["T"] = n2 > 0.0 ? std::abs(t) / std::pow(n2, 6) : 0.0;
        sf["delta"] = n2 > 0.0 ? std::abs(d) / std::pow(n2, 12) : 0.0;
        o["scale_free"] = std::move(sf);
        o["cone_defect"] = cone_defect(f);
        emit(o, output);
    });

    // schottky
    auto* c_schottky = app.add_subcommand("schottky", "modular value for one odd characteristic");
    std::string s_omega, s_invariant = "S", s_extension = "unitary";
    int s_xi = 0;
    unsigned long long s_seed = 0;
    c_schottky->add_option("--omega", s_omega, "period matrix JSON")->required();
    c_schottky->add_option("--xi-index", s_xi, "index in the odd characteristic list");
    c_schottky->add_option("--invariant", s_invariant, "S, T, or delta");
    c_schottky->add_option("--extension", s_extension, "basis extension: unitary or random");
    c_schottky->add_option("--seed", s_seed, "seed for the random extension");
    c_schottky->callback([&]() {
        const SiegelPoint om = omega_from_json(load_json_file(s_omega));
        const ThetaCharacteristic xi = xi_by_index(om.genus(), s_xi, Parity::odd);
        const InvariantKind kind = invariant_from_name(s_invariant);
        EvalSettings es;
        es.theta = theta_settings();
        es.extension = extension_from_name(s_extension);
        es.basis_seed = s_seed;
        const ModularValue mv = evaluate_h(xi, om, kind, es);
        emit(modular_value_to_json(mv, kind, om.genus()), output);
    });

    // sweep
    auto* c_sweep = app.add_subcommand("sweep", "evaluate every odd characteristic");
    std::string w_omega, w_invariant = "S", w_extension = "unitary";
    unsigned long long w_seed = 0;
    int w_parallelism = 1;
    c_sweep->add_option("--omega", w_omega, "period matrix JSON")->required();
    c_sweep->add_option("--invariant", w_invariant, "S, T, or delta");
    c_sweep->add_option("--extension", w_extension, "basis extension: unitary or random");
    c_sweep->add_option("--seed", w_seed, "seed for the random extension");
    c_sweep->add_option("--parallelism", w_parallelism, "worker threads (<= 0: hardware)");
    c_sweep->callback([&]() {
        const SiegelPoint om = omega_from_json(load_json_file(w_omega));
        const InvariantKind kind = invariant_from_name(w_invariant);
        EvalSettings es;
        es.theta = theta_settings();
        es.extension = extension_from_name(w_extension);
        es.basis_seed = w_seed;
        emit(sweep_to_json(sweep_odd(om, kind, es, w_parallelism)), output);
    });

    // transform-check
    auto* c_tc = app.add_subcommand("transform-check", "verify the theta transformation law");
    std::string t_omega;
    int t_xi = 0, t_samples = 8, t_word = 3;
    unsigned long long t_seed = 0;
    c_tc->add_option("--omega", t_omega, "period matrix JSON")->required();
    c_tc->add_option("--xi-index", t_xi, "index in the odd characteristic list");
    c_tc->add_option("--seed", t_seed, "seed for the congruence word and z samples")->required();
    c_tc->add_option("--samples", t_samples, "number of z samples");
    c_tc->add_option("--word-length", t_word, "generator word length");
    c_tc->callback([&]() {
        const SiegelPoint om = omega_from_json(load_json_file(t_omega));
        const ThetaCharacteristic xi = xi_by_index(om.genus(), t_xi, Parity::odd);
        const SymplecticInt gamma =
            random_gamma48_word(om.genus(), t_word, t_seed, &om, 0.05, 500);
        const TransformReport rep =
            check_transformation(xi, gamma, om, t_samples, t_seed + 1, theta_settings());
        json o;
        o["gamma"] = symplectic_to_json(gamma);
        o["report"] = transform_report_to_json(rep);
        emit(o, output);
    });

    // weight-check
    auto* c_wc = app.add_subcommand("weight-check", "verify modular weight of the assembled form");
    std::string wc_omega, wc_invariant = "S";
    int wc_xi = -1, wc_word = 2;
    unsigned long long wc_seed = 0;
    bool wc_probe = false;
    c_wc->add_option("--omega", wc_omega, "period matrix JSON")->required();
    c_wc->add_option("--xi-index", wc_xi, "index in the odd characteristic list");
    c_wc->add_option("--invariant", wc_invariant, "S, T, or delta");
    c_wc->add_option("--seed", wc_seed, "seed for the congruence word")->required();
    c_wc->add_option("--word-length", wc_word, "generator word length");
    c_wc->add_flag("--level-one-probe", wc_probe,
                   "advisory: gamma = [[0,I],[-I,0]] on a swap-fixed odd characteristic");
    c_wc->callback([&]() {
        const SiegelPoint om = omega_from_json(load_json_file(wc_omega));
        const int g = om.genus();
        const InvariantKind kind = invariant_from_name(wc_invariant);
        EvalSettings es;
        es.theta = theta_settings();
        SymplecticInt gamma = SymplecticInt::identity(g);
        ThetaCharacteristic xi;
        bool allow_moved = false;
        if (wc_probe) {
            MatrixXi full = MatrixXi::Zero(2 * g, 2 * g);
            full.topRightCorner(g, g) = MatrixXi::Identity(g, g);
            full.bottomLeftCorner(g, g) = -MatrixXi::Identity(g, g);
            gamma = SymplecticInt::from_full(full);
            // odd and fixed by (a, b) -> (b, a)
            xi = wc_xi >= 0 ? xi_by_index(g, wc_xi, Parity::odd) : all_ones_but_last(g);
            allow_moved = true;
        } else {
            gamma = random_gamma48_word(g, wc_word, wc_seed, &om, 0.05, 500);
            xi = xi_by_index(g, wc_xi >= 0 ? wc_xi : 0, Parity::odd);
        }
        const WeightReport rep = weight_check(xi, gamma, om, kind, es, allow_moved);
        json o;
        o["gamma"] = symplectic_to_json(gamma);
        o["report"] = weight_report_to_json(rep);
        emit(o, output);
    });

    // periods
    auto* c_periods = app.add_subcommand("periods", "hyperelliptic period matrix");
    std::string p_curve;
    int p_nodes = 400;
    c_periods->add_option("--curve", p_curve, "curve JSON with branch_points")->required();
    c_periods->add_option("--nodes", p_nodes, "initial quadrature nodes per segment");
    c_periods->callback([&]() {
        const HyperellipticCurve curve = curve_from_json(load_json_file(p_curve));
        QuadratureSettings q;
        q.nodes = p_nodes;
        emit(period_result_to_json(hyperelliptic_periods(curve, q)), output);
    });

    // random-omega
    auto* c_random = app.add_subcommand("random-omega", "seeded random Siegel point");
    int ro_genus = 4;
    unsigned long long ro_seed = 0;
    double ro_spread = 0.3;
    c_random->add_option("--genus", ro_genus, "genus (default 4)");
    c_random->add_option("--seed", ro_seed, "seed")->required();
    c_random->add_option("--spread", ro_spread, "entry spread (default 0.3)");
    c_random->callback([&]() {
        emit(omega_to_json(random_siegel(ro_genus, ro_seed, ro_spread)), output);
    });

    // product-omega
    auto* c_product = app.add_subcommand("product-omega", "block-diagonal product point");
    std::vector<std::string> po_parts;
    c_product->add_option("--omega", po_parts, "period matrix JSON (repeat >= 2 times)")
        ->required()
        ->expected(-2);
    c_product->callback([&]() {
        std::vector<SiegelPoint> parts;
        json partition = json::array();
        for (const auto& path : po_parts) {
            parts.push_back(omega_from_json(load_json_file(path)));
            partition.push_back(parts.back().genus());
        }
        json o;
        o["omega"] = omega_to_json(product_point(parts));
        o["partition"] = std::move(partition);
        emit(o, output);
    });

    for (CLI::App* sc : {c_theta, c_jet, c_restrict, c_inv, c_schottky, c_sweep, c_tc, c_wc,
                         c_periods, c_random, c_product})
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        json err;
        err["error"] = "Usage";
        err["detail"] = e.what();
        std::fputs(canonical_dump(err).c_str(), stdout);
        return 2;
    } catch (const Error& e) {
        json err;
        err["error"] = e.code();
        err["detail"] = e.what();
        std::fputs(canonical_dump(err).c_str(), stdout);
        return 1;
    } catch (const std::exception& e) {
        json err;
        err["error"] = "Internal";
        err["detail"] = e.what();
        std::fputs(canonical_dump(err).c_str(), stdout);
        return 1;
    }
    return 0;
}
