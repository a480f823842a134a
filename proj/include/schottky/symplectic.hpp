#pragma once

#include <utility>

#include "schottky/siegel.hpp"
#include "schottky/types.hpp"

namespace schottky {

// Integer symplectic matrix in g x g blocks [[A, B], [C, D]].
struct SymplecticInt {
    int g = 0;
    MatrixXi A, B, C, D;

    MatrixXi full() const;
    static SymplecticInt identity(int g);
    // Validates the symplectic relation exactly over the integers.
    static SymplecticInt from_full(const MatrixXi& m);

    SymplecticInt operator*(const SymplecticInt& o) const;

    // gamma == I (mod 2); such gamma fix every theta characteristic.
    bool in_gamma2() const;
};

bool is_symplectic(const MatrixXi& m);

// Igusa congruence subgroup Gamma(4,8): gamma == I (mod 4) and the diagonals
// of A*B^T and C*D^T vanish mod 8.
bool in_gamma_4_8(const SymplecticInt& gamma);

MatrixXcd cocycle_cd(const SymplecticInt& gamma, const SiegelPoint& omega);

SiegelPoint sp_action_omega(const SymplecticInt& gamma, const SiegelPoint& omega,
                            const Tolerances& tol = {});

std::pair<VectorXcd, SiegelPoint> sp_action_z(const SymplecticInt& gamma, const VectorXcd& z,
                                              const SiegelPoint& omega, const Tolerances& tol = {});

}  // namespace schottky
