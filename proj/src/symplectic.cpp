#include "schottky/symplectic.hpp"

#include <Eigen/LU>

namespace schottky {

namespace {

MatrixXi standard_j(int g) {
    MatrixXi j = MatrixXi::Zero(2 * g, 2 * g);
    j.topRightCorner(g, g) = MatrixXi::Identity(g, g);
    j.bottomLeftCorner(g, g) = -MatrixXi::Identity(g, g);
    return j;
}

}  // namespace

MatrixXi SymplecticInt::full() const {
    MatrixXi m(2 * g, 2 * g);
    m.topLeftCorner(g, g) = A;
    m.topRightCorner(g, g) = B;
    m.bottomLeftCorner(g, g) = C;
    m.bottomRightCorner(g, g) = D;
    return m;
}

SymplecticInt SymplecticInt::identity(int g) {
    SymplecticInt s;
    s.g = g;
    s.A = MatrixXi::Identity(g, g);
    s.B = MatrixXi::Zero(g, g);
    s.C = MatrixXi::Zero(g, g);
    s.D = MatrixXi::Identity(g, g);
    return s;
}

SymplecticInt SymplecticInt::from_full(const MatrixXi& m) {
    if (m.rows() != m.cols() || m.rows() % 2 != 0 || m.rows() == 0)
        throw BadInput("symplectic matrix must be square of even size");
    if (!is_symplectic(m)) throw NotSymplectic("matrix fails M^T J M = J");
    SymplecticInt s;
    s.g = static_cast<int>(m.rows()) / 2;
    s.A = m.topLeftCorner(s.g, s.g);
    s.B = m.topRightCorner(s.g, s.g);
    s.C = m.bottomLeftCorner(s.g, s.g);
    s.D = m.bottomRightCorner(s.g, s.g);
    return s;
}

SymplecticInt SymplecticInt::operator*(const SymplecticInt& o) const {
    if (g != o.g) throw BadInput("genus mismatch in symplectic product");
    SymplecticInt s;
    s.g = g;
    s.A = A * o.A + B * o.C;
    s.B = A * o.B + B * o.D;
    s.C = C * o.A + D * o.C;
    s.D = C * o.B + D * o.D;
    return s;
}

bool SymplecticInt::in_gamma2() const {
    const MatrixXi r = full() - MatrixXi::Identity(2 * g, 2 * g);
    for (int i = 0; i < r.rows(); ++i)
        for (int j = 0; j < r.cols(); ++j)
            if (r(i, j) % 2 != 0) return false;
    return true;
}

bool is_symplectic(const MatrixXi& m) {
    if (m.rows() != m.cols() || m.rows() % 2 != 0 || m.rows() == 0) return false;
    const int g = static_cast<int>(m.rows()) / 2;
    const MatrixXi j = standard_j(g);
    return (m.transpose() * j * m) == j;
}

bool in_gamma_4_8(const SymplecticInt& gamma) {
    const MatrixXi r = gamma.full() - MatrixXi::Identity(2 * gamma.g, 2 * gamma.g);
    for (int i = 0; i < r.rows(); ++i)
        for (int j = 0; j < r.cols(); ++j)
            if (r(i, j) % 4 != 0) return false;
    const MatrixXi ab = gamma.A * gamma.B.transpose();
    const MatrixXi cd = gamma.C * gamma.D.transpose();
    for (int i = 0; i < gamma.g; ++i)
        if (ab(i, i) % 8 != 0 || cd(i, i) % 8 != 0) return false;
    return true;
}

MatrixXcd cocycle_cd(const SymplecticInt& gamma, const SiegelPoint& omega) {
    return gamma.C.cast<double>().cast<cplx>() * omega.omega() +
           gamma.D.cast<double>().cast<cplx>();
}

namespace {

MatrixXcd checked_inverse(const MatrixXcd& m, double cond_guard) {
    Eigen::JacobiSVD<MatrixXcd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const double smin = svd.singularValues().minCoeff();
    const double smax = svd.singularValues().maxCoeff();
    if (smin <= 0.0 || smax / smin > cond_guard)
        throw IllConditioned("cocycle condition number " +
                             std::to_string(smin > 0.0 ? smax / smin : 0.0));
    return m.inverse();
}

}  // namespace

SiegelPoint sp_action_omega(const SymplecticInt& gamma, const SiegelPoint& omega,
                            const Tolerances& tol) {
    if (gamma.g != omega.genus()) throw BadInput("genus mismatch in symplectic action");
    const MatrixXcd cd = cocycle_cd(gamma, omega);
    const MatrixXcd inv = checked_inverse(cd, tol.cond_guard);
    const MatrixXcd ab = gamma.A.cast<double>().cast<cplx>() * omega.omega() +
                         gamma.B.cast<double>().cast<cplx>();
    return SiegelPoint::validate(ab * inv, tol);
}

std::pair<VectorXcd, SiegelPoint> sp_action_z(const SymplecticInt& gamma, const VectorXcd& z,
                                              const SiegelPoint& omega, const Tolerances& tol) {
    const MatrixXcd cd = cocycle_cd(gamma, omega);
    const MatrixXcd inv = checked_inverse(cd, tol.cond_guard);
    SiegelPoint im = sp_action_omega(gamma, omega, tol);
    // z transforms by the inverse transpose of the cocycle.
    VectorXcd zh = inv.transpose() * z;
    return {std::move(zh), std::move(im)};
}

}  // namespace schottky
