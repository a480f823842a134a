#include "schottky/jet.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "schottky/rng.hpp"

namespace schottky {

OddJet odd_jet(const ThetaCharacteristic& xi, const SiegelPoint& omega, const ThetaSettings& s,
               double singular_tol) {
    if (!xi.is_odd()) throw EvenCharacteristic("odd_jet requires an odd characteristic");
    const int g = omega.genus();
    const ThetaJetRaw raw = theta_jet(xi, omega, s);

    OddJet jet;
    jet.ell = raw.gradient;
    jet.cubic = CubicForm(g);
    const auto& triples = third_index_table(g);
    for (size_t t = 0; t < triples.size(); ++t) {
        std::vector<int> alpha(g, 0);
        double fact = 1.0;
        for (int r = 0; r < 3; ++r) ++alpha[triples[t][r]];
        for (int j = 0; j < g; ++j)
            for (int k = 2; k <= alpha[j]; ++k) fact *= k;
        jet.cubic.at(alpha) = raw.third[t] / fact;
    }
    jet.residual_even = std::max(std::abs(raw.value), raw.hessian.cwiseAbs().maxCoeff());

    if (jet.ell.cwiseAbs().maxCoeff() < singular_tol * jet.cubic.max_abs())
        throw SingularOddTheta("theta gradient vanishes at 0 relative to the cubic scale");
    return jet;
}

int RestrictedCubic::p_exponent(int invariant_degree) const {
    const int g = genus();
    if (g < 2 || (3 * invariant_degree) % (g - 1) != 0)
        throw GenusUnsupported("p = 3d/(g-1) is not an integer here");
    return 3 * invariant_degree / (g - 1);
}

RestrictedCubic restrict_cubic(const OddJet& jet, ExtensionStrategy strategy,
                               unsigned long long seed, int max_tries) {
    const int g = static_cast<int>(jet.ell.size());
    if (g < 2) throw GenusUnsupported("restriction needs genus >= 2");
    const double ell_norm = jet.ell.norm();
    if (jet.ell.cwiseAbs().maxCoeff() < 1e-10 * jet.cubic.max_abs() || ell_norm == 0.0)
        throw SingularOddTheta("cannot restrict: ell below the singularity threshold");

    MatrixXcd B(g, g);
    B.row(0) = jet.ell.transpose();
    if (strategy == ExtensionStrategy::unitary) {
        // Unitary frame with first column parallel to conj(ell); the adjoint
        // rows of the remaining columns are orthogonal to ell under B B^H,
        // giving singular values ||ell||, 1, ..., 1.
        MatrixXcd col = jet.ell.conjugate();
        Eigen::HouseholderQR<MatrixXcd> qr(col);
        const MatrixXcd q = qr.householderQ();
        for (int i = 1; i < g; ++i) B.row(i) = q.col(i).adjoint();
    } else {
        Rng rng(seed);
        bool ok = false;
        for (int attempt = 0; attempt < max_tries && !ok; ++attempt) {
            for (int i = 1; i < g; ++i) {
                VectorXcd row(g);
                for (int j = 0; j < g; ++j) row[j] = rng.cnormal();
                B.row(i) = row.transpose() * (ell_norm / row.norm());
            }
            Eigen::JacobiSVD<MatrixXcd> svd(B);
            const double smin = svd.singularValues().minCoeff();
            ok = smin > 0.0 && svd.singularValues().maxCoeff() / smin <= 6.5;
        }
        if (!ok) throw SingularBasis("no well-conditioned random extension found");
    }

    const cplx det = B.determinant();
    double row_prod = 1.0;
    for (int i = 0; i < g; ++i) row_prod *= B.row(i).norm();
    if (std::abs(det) <= 1e-12 * row_prod) throw SingularBasis("extension basis nearly singular");

    const MatrixXcd V = B.inverse();
    const MatrixXcd L = V.rightCols(g - 1);

    const int h = g - 1;
    std::vector<cplx> src(static_cast<size_t>(g) * g * g);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            for (int k = 0; k < g; ++k)
                src[(static_cast<size_t>(i) * g + j) * g + k] = jet.cubic.tensor(i, j, k);

    std::vector<cplx> dst(static_cast<size_t>(h) * h * h, cplx(0.0, 0.0));
    for (int p = 0; p < h; ++p)
        for (int q = 0; q < h; ++q)
            for (int r = 0; r < h; ++r) {
                cplx acc = 0.0;
                for (int i = 0; i < g; ++i)
                    for (int j = 0; j < g; ++j)
                        for (int k = 0; k < g; ++k)
                            acc += src[(static_cast<size_t>(i) * g + j) * g + k] * L(i, p) *
                                   L(j, q) * L(k, r);
                dst[(static_cast<size_t>(p) * h + q) * h + r] = acc;
            }

    RestrictedCubic rc;
    rc.basis = std::move(B);
    rc.det_basis = det;
    rc.m_bar = CubicForm::from_tensor(h, dst);
    return rc;
}

}  // namespace schottky
