#include "schottky/siegel.hpp"

#include <Eigen/Eigenvalues>

namespace schottky {

SiegelPoint SiegelPoint::validate(const MatrixXcd& raw, const Tolerances& tol) {
    if (raw.rows() != raw.cols() || raw.rows() < 1)
        throw BadInput("omega must be a nonempty square matrix");
    const double scale = std::max(1.0, raw.cwiseAbs().maxCoeff());
    const double asym = (raw - raw.transpose()).cwiseAbs().maxCoeff();
    if (asym > tol.sym_tol * scale)
        throw NotSymmetric("max |Omega - Omega^T| = " + std::to_string(asym));

    const MatrixXcd sym = 0.5 * (raw + raw.transpose());
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(sym.imag());
    const double lmin = es.eigenvalues().minCoeff();
    if (lmin <= tol.pos_tol)
        throw NotPositive("lambda_min(Im Omega) = " + std::to_string(lmin));
    return SiegelPoint(sym, lmin);
}

SiegelPoint block_diag(const SiegelPoint& a, const SiegelPoint& b) {
    const int ga = a.genus(), gb = b.genus();
    MatrixXcd m = MatrixXcd::Zero(ga + gb, ga + gb);
    m.topLeftCorner(ga, ga) = a.omega();
    m.bottomRightCorner(gb, gb) = b.omega();
    return SiegelPoint::validate(m);
}

}  // namespace schottky
