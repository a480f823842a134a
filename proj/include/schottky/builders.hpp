#pragma once

#include <vector>

#include "schottky/siegel.hpp"
#include "schottky/symplectic.hpp"

namespace schottky {

// Real hyperelliptic curve y^2 = prod (x - e_i) with 2g+2 distinct real
// branch points, kept sorted ascending.
struct HyperellipticCurve {
    std::vector<double> branch_points;

    int genus() const;  // (count - 2) / 2; throws WrongArity on odd/short input
    void validate() const;
};

struct QuadratureSettings {
    int nodes = 400;          // Gauss-Chebyshev midpoint nodes per segment
    double rel_tol = 1e-11;   // node-doubling target on max |entry| change
    int max_doublings = 6;
    double gap_guard = 1e-8;  // min segment length relative to spread
};

struct PeriodResult {
    SiegelPoint omega;
    MatrixXcd a_periods;            // column i: a_i-cycle integrals of x^{k-1} dx/y
    MatrixXcd b_periods;
    double symmetry_residual = 0.0;
    double quadrature_error = 0.0;  // node-doubling estimate, max entry
    bool symplectic_corrected = false;
};

// Period matrix of the curve in the standard real-cut homology basis:
// a-cycles around (e_{2i-1}, e_{2i}), b-cycles threading the gaps.
PeriodResult hyperelliptic_periods(const HyperellipticCurve& curve,
                                   const QuadratureSettings& q = {},
                                   const Tolerances& tol = {});

// tau for the genus-1 curve through four sorted branch points via the
// arithmetic-geometric mean; used as an independent cross-check.
cplx elliptic_tau_agm(const std::vector<double>& e);

double agm(double a, double b);

// X + i (Y Y^T + I) with X symmetric and X, Y entries uniform on
// [-spread, spread]; deterministic in (g, seed, spread).
SiegelPoint random_siegel(int g, unsigned long long seed, double spread = 0.3,
                          const Tolerances& tol = {});

// Block-diagonal join of two or more Siegel points.
SiegelPoint product_point(const std::vector<SiegelPoint>& parts,
                          const Tolerances& tol = {});

// Random word in the standard generator set of Gamma(4,8) (upper and lower
// unipotent blocks 4B, 4C with even diagonals, and GL twists I + 4E_ij).
// Rejects words whose action on omega drops lambda_min below lambda_floor.
SymplecticInt random_gamma48_word(int g, int length, unsigned long long seed,
                                  const SiegelPoint* omega = nullptr,
                                  double lambda_floor = 0.02, int max_tries = 200);

}  // namespace schottky
