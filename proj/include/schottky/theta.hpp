#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "schottky/characteristics.hpp"
#include "schottky/siegel.hpp"
#include "schottky/symplectic.hpp"
#include "schottky/types.hpp"

namespace schottky {

struct ThetaSettings {
    double eps = 1e-14;     // absolute error target, split tail/rounding
    int max_radius = 60;    // cap on the summation radius
    double eval_ball = 2.0; // ||z||_inf beyond which reduction is forced
};

// Value, gradient, Hessian and symmetric third-derivative tensor of
// theta[xi](z, Omega) at z = 0, by the term-wise differentiated series.
struct ThetaJetRaw {
    int g = 0;
    cplx value{};
    VectorXcd gradient;
    MatrixXcd hessian;
    // Third derivatives d^3 theta / dz_j dz_k dz_l for j <= k <= l in
    // lexicographic order (see third_index_table).
    std::vector<cplx> third;

    cplx third_at(int j, int k, int l) const;
};

// Deterministic j <= k <= l enumeration used by ThetaJetRaw::third.
const std::vector<std::array<int, 3>>& third_index_table(int g);

// Smallest N whose lattice tail bound at derivative order `deriv_order` is
// below eps: sum_{k >= N} (2k+5)^g (2pi(k+1))^order exp(-pi lambda_min k^2).
int truncation_radius(const SiegelPoint& omega, const VectorXi& a, double eps, int deriv_order,
                      const ThetaSettings& s = {});

// Shifted variant used internally for z != 0 after argument reduction; the
// tail is bounded by completing the square: with r = (Im Omega)^{-1} Im z,
// exp(-pi v' M v + 2pi v' y) <= exp(pi |y||r|) exp(-pi lambda (|v|-|r|)^2).
int truncation_radius_shifted(double lambda_min, int g, double eps, int deriv_order, double y_norm,
                              double r_norm, int max_radius);

cplx theta(const ThetaCharacteristic& xi, const VectorXcd& z, const SiegelPoint& omega,
           const ThetaSettings& s = {});

ThetaJetRaw theta_jet(const ThetaCharacteristic& xi, const SiegelPoint& omega,
                      const ThetaSettings& s = {});

struct TransformReport {
    int samples = 0;
    cplx mean_ratio{};
    double max_dev_from_mean = 0.0;  // constancy of r(z) in z
    double det_residual = 0.0;       // | mean(r)^2 - det(C Omega + D) |
    cplx det_cd{};
};

// Samples z and checks theta[xi](z^, Omega^) = det(C Omega + D)^{1/2}
// exp(pi i z'(C Omega + D)^{-1} C z) theta[xi](z, Omega) through the ratio
// r(z), which must be constant with r^2 = det(C Omega + D). This sidesteps
// the square-root sign.
TransformReport check_transformation(const ThetaCharacteristic& xi, const SymplecticInt& gamma,
                                     const SiegelPoint& omega, int sample_count,
                                     std::uint64_t seed, const ThetaSettings& s = {});

}  // namespace schottky
