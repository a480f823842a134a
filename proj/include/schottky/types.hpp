#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace schottky {

using cplx = std::complex<double>;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::MatrixXi;
using Eigen::VectorXcd;
using Eigen::VectorXd;
using Eigen::VectorXi;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Exact rational, used for modular weights m*d = (g+8)d / (2(g-1)).
struct Rational {
    long long num = 0;
    long long den = 1;

    static Rational reduced(long long n, long long d);
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool is_integer() const { return den == 1; }
};

}  // namespace schottky
