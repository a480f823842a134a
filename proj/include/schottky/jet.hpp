#pragma once

#include "schottky/characteristics.hpp"
#include "schottky/cubic.hpp"
#include "schottky/siegel.hpp"
#include "schottky/theta.hpp"

namespace schottky {

// Taylor data of an odd theta at z = 0: the value and all even-order terms
// vanish by parity, so the expansion starts with a linear term ell . z and a
// cubic term m(z).
struct OddJet {
    VectorXcd ell;         // gradient coefficients, ell_j = d theta / dz_j
    CubicForm cubic;       // cubic Taylor coefficients c_alpha of z^alpha
    double residual_even;  // max |value|, |hessian entries| (diagnostic)

    OddJet() : cubic(1), residual_even(0.0) {}
};

// Throws EvenCharacteristic on even xi and SingularOddTheta when
// ||ell||_inf < singular_tol * max|cubic coefficient| (theta divisor singular
// at the origin).
OddJet odd_jet(const ThetaCharacteristic& xi, const SiegelPoint& omega,
               const ThetaSettings& s = {}, double singular_tol = 1e-10);

enum class ExtensionStrategy { unitary, random };

// Restriction of the cubic m to the hyperplane ell . z = 0, expressed through
// a completed covector basis B whose first row is ell.  With V = B^{-1} and
// L = the last g-1 columns of V, m_bar(x) = m(sum_j x_j v_{j+1}).
struct RestrictedCubic {
    MatrixXcd basis;  // g x g covector rows, row 0 = ell
    cplx det_basis = 0.0;
    CubicForm m_bar;  // cubic in g-1 variables

    RestrictedCubic() : m_bar(1) {}

    int genus() const { return static_cast<int>(basis.rows()); }

    // det(B)^{p(d)} multiplies a degree-d invariant of m_bar to make the
    // product basis independent; p(d) = 3d/(g-1) (= +d when g = 4).
    int p_exponent(int invariant_degree) const;
};

// strategy == unitary completes ell with the adjoint rows of a unitary frame
// orthogonal to it (singular values of B are then ||ell||, 1, ..., 1);
// strategy == random draws rows from seed, scales them to ||ell||, and
// retries (up to max_tries) until cond(B) <= 6.5, else throws SingularBasis.
RestrictedCubic restrict_cubic(const OddJet& jet,
                               ExtensionStrategy strategy = ExtensionStrategy::unitary,
                               unsigned long long seed = 0, int max_tries = 64);

}  // namespace schottky
