#include "schottky/modular.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <exception>
#include <thread>

namespace schottky {

int invariant_degree(InvariantKind k) {
    switch (k) {
        case InvariantKind::S: return 4;
        case InvariantKind::T: return 6;
        case InvariantKind::delta: return 12;
    }
    throw BadInput("unknown invariant");
}

std::string invariant_name(InvariantKind k) {
    switch (k) {
        case InvariantKind::S: return "S";
        case InvariantKind::T: return "T";
        case InvariantKind::delta: return "delta";
    }
    throw BadInput("unknown invariant");
}

InvariantKind invariant_from_name(const std::string& name) {
    if (name == "S") return InvariantKind::S;
    if (name == "T") return InvariantKind::T;
    if (name == "delta") return InvariantKind::delta;
    throw BadInput("unknown invariant name: " + name);
}

Rational invariant_weight(InvariantKind k, int g) {
    return Rational::reduced(static_cast<long long>(g + 8) * invariant_degree(k),
                             2LL * (g - 1));
}

namespace {

cplx apply_invariant(InvariantKind k, const CubicForm& f) {
    switch (k) {
        case InvariantKind::S: return aronhold_S(f);
        case InvariantKind::T: return aronhold_T(f);
        case InvariantKind::delta: return discriminant3(f);
    }
    throw BadInput("unknown invariant");
}

cplx ipow(cplx base, int e) {
    cplx r = 1.0;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

int odd_index_of(const ThetaCharacteristic& xi) {
    const auto odd = enumerate_characteristics(xi.genus(), Parity::odd);
    for (size_t i = 0; i < odd.size(); ++i)
        if (odd[i] == xi) return static_cast<int>(i);
    return -1;
}

}  // namespace

ModularValue evaluate_h(const ThetaCharacteristic& xi, const SiegelPoint& omega,
                        InvariantKind kind, const EvalSettings& s) {
    if (omega.genus() != 4)
        throw GenusUnsupported("ternary invariants need genus 4, got " +
                               std::to_string(omega.genus()));
    ModularValue mv;
    mv.xi_index = odd_index_of(xi);

    OddJet jet;
    try {
        jet = odd_jet(xi, omega, s.theta, s.singular_tol);
    } catch (const SingularOddTheta&) {
        mv.singular_odd_theta = true;
        return mv;
    }

    // scale_free is always reported in the unitary-extension basis; raw may
    // use the caller's strategy.
    const RestrictedCubic rc_unit = restrict_cubic(jet, ExtensionStrategy::unitary);
    if (rc_unit.m_bar.norm2() < s.degenerate_tol * jet.cubic.norm2()) {
        mv.cubic_degenerate = true;
        return mv;
    }

    const int d = invariant_degree(kind);
    const RestrictedCubic& rc_raw_ref = rc_unit;
    RestrictedCubic rc_rand;
    const RestrictedCubic* rc = &rc_raw_ref;
    if (s.extension == ExtensionStrategy::random) {
        rc_rand = restrict_cubic(jet, ExtensionStrategy::random, s.basis_seed);
        rc = &rc_rand;
    }

    const cplx phi_raw = apply_invariant(kind, rc->m_bar);
    mv.raw = ipow(rc->det_basis, rc->p_exponent(d)) * phi_raw;

    const cplx phi_unit = (rc == &rc_raw_ref) ? phi_raw : apply_invariant(kind, rc_unit.m_bar);
    mv.scale_free = std::abs(phi_unit) / std::pow(rc_unit.m_bar.norm2(), d);
    return mv;
}

SweepReport sweep_odd(const SiegelPoint& omega, InvariantKind kind, const EvalSettings& s,
                      int parallelism) {
    const auto odd = enumerate_characteristics(omega.genus(), Parity::odd);
    const int n = static_cast<int>(odd.size());

    SweepReport rep;
    rep.omega_hash = omega_hash(omega);
    rep.kind = kind;
    rep.entries.resize(n);

    int workers = parallelism;
    if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
    workers = std::max(1, std::min(workers, n));

    std::exception_ptr first_error;
    auto body = [&](int t) {
        try {
            for (int i = t; i < n; i += workers) {
                rep.entries[i] = evaluate_h(odd[i], omega, kind, s);
                rep.entries[i].xi_index = i;
            }
        } catch (...) {
            if (!first_error) first_error = std::current_exception();
        }
    };
    if (workers == 1) {
        body(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int t = 0; t < workers; ++t) pool.emplace_back(body, t);
        for (auto& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    SweepSummary& sum = rep.summary;
    sum.min_scale_free = 0.0;
    bool have_clean = false;
    for (const ModularValue& mv : rep.entries) {
        sum.max_abs_raw = std::max(sum.max_abs_raw, std::abs(mv.raw));
        if (mv.singular_odd_theta) {
            ++sum.n_singular;
            continue;
        }
        if (mv.cubic_degenerate) {
            ++sum.n_degenerate;
            continue;
        }
        sum.max_scale_free = std::max(sum.max_scale_free, mv.scale_free);
        sum.min_scale_free = have_clean ? std::min(sum.min_scale_free, mv.scale_free)
                                        : mv.scale_free;
        have_clean = true;
    }
    return rep;
}

std::string omega_hash(const SiegelPoint& omega) {
    const int g = omega.genus();
    std::string text = "g=" + std::to_string(g) + ";";
    char buf[80];
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g,%.17g;", omega.omega()(i, j).real(),
                          omega.omega()(i, j).imag());
            text += buf;
        }
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    std::snprintf(buf, sizeof(buf), "%016" PRIx64, h);
    return buf;
}

WeightReport weight_check(const ThetaCharacteristic& xi, const SymplecticInt& gamma,
                          const SiegelPoint& omega, InvariantKind kind, const EvalSettings& s,
                          bool allow_moved) {
    const int g = omega.genus();
    if (gamma.g != g || xi.genus() != g) throw BadInput("genus mismatch");

    WeightReport rep;
    rep.characteristic_fixed = gamma.in_gamma2();
    if (!rep.characteristic_fixed && !allow_moved)
        throw CharacteristicMoved(
            "gamma is not in Gamma(2); the moved characteristic is out of scope");

    rep.weight = invariant_weight(kind, g);
    if (!rep.weight.is_integer()) throw GenusUnsupported("non-integral weight");

    const SiegelPoint image = sp_action_omega(gamma, omega);
    rep.xi_index = odd_index_of(xi);
    rep.value_at_omega = evaluate_h(xi, omega, kind, s).raw;
    rep.value_at_image = evaluate_h(xi, image, kind, s).raw;
    rep.det_cd = cocycle_cd(gamma, omega).determinant();

    const cplx predicted = ipow(rep.det_cd, static_cast<int>(rep.weight.num)) *
                           rep.value_at_omega;
    const double scale = std::max({std::abs(rep.value_at_image), std::abs(predicted), 1e-300});
    rep.rel_residual = std::abs(rep.value_at_image - predicted) / scale;
    return rep;
}

}  // namespace schottky
