#pragma once

#include "schottky/errors.hpp"
#include "schottky/types.hpp"

namespace schottky {

struct Tolerances {
    double sym_tol = 1e-12;    // max allowed |Omega_jk - Omega_kj|
    double pos_tol = 1e-10;    // reject lambda_min(Im Omega) <= pos_tol
    double cond_guard = 1e12;  // condition-number guard on C*Omega + D
};

// Point of the Siegel upper half space: symmetric g x g complex matrix with
// positive-definite imaginary part. Construct through validate().
class SiegelPoint {
  public:
    static SiegelPoint validate(const MatrixXcd& raw, const Tolerances& tol = {});

    int genus() const { return static_cast<int>(omega_.rows()); }
    const MatrixXcd& omega() const { return omega_; }
    double lambda_min() const { return lambda_min_; }

    MatrixXd real_part() const { return omega_.real(); }
    MatrixXd imag_part() const { return omega_.imag(); }

  private:
    SiegelPoint(MatrixXcd omega, double lambda_min)
        : omega_(std::move(omega)), lambda_min_(lambda_min) {}

    MatrixXcd omega_;
    double lambda_min_;
};

SiegelPoint block_diag(const SiegelPoint& a, const SiegelPoint& b);

}  // namespace schottky
