#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "schottky/builders.hpp"
#include "schottky/rng.hpp"
#include "schottky/theta.hpp"

using namespace schottky;

namespace {

constexpr cplx kI{0.0, 1.0};

// Plain ascending-order reference sum, deliberately sharing no code with the
// engine (no phase splitting, no compensation, no kernel dispatch).
cplx brute_theta_g1(const ThetaCharacteristic& xi, cplx z, cplx tau, int n_max) {
    cplx sum = 0.0;
    for (int n = -n_max; n <= n_max; ++n) {
        const double v = n + 0.5 * xi.a[0];
        sum += std::exp(kPi * kI * (v * v * tau + 2.0 * v * (z + 0.5 * xi.b[0])));
    }
    return sum;
}

struct BruteJet {
    cplx value{};
    VectorXcd grad;
    MatrixXcd hess;
    cplx third_111{}, third_122{}, third_222{};
};

BruteJet brute_jet_g2(const ThetaCharacteristic& xi, const MatrixXcd& om, int n_max) {
    BruteJet out;
    out.grad = VectorXcd::Zero(2);
    out.hess = MatrixXcd::Zero(2, 2);
    const cplx c1 = 2.0 * kPi * kI;
    for (int n0 = -n_max; n0 <= n_max; ++n0)
        for (int n1 = -n_max; n1 <= n_max; ++n1) {
            Eigen::Vector2d v(n0 + 0.5 * xi.a[0], n1 + 0.5 * xi.a[1]);
            cplx q = 0.0;
            for (int j = 0; j < 2; ++j) {
                q += v[j] * xi.b[j];
                for (int k = 0; k < 2; ++k) q += v[j] * om(j, k) * v[k];
            }
            const cplx t = std::exp(kPi * kI * q);
            out.value += t;
            for (int j = 0; j < 2; ++j) out.grad[j] += c1 * v[j] * t;
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) out.hess(j, k) += c1 * c1 * v[j] * v[k] * t;
            out.third_111 += c1 * c1 * c1 * v[0] * v[0] * v[0] * t;
            out.third_122 += c1 * c1 * c1 * v[0] * v[1] * v[1] * t;
            out.third_222 += c1 * c1 * c1 * v[1] * v[1] * v[1] * t;
        }
    return out;
}

ThetaCharacteristic make_xi(std::initializer_list<int> a, std::initializer_list<int> b) {
    ThetaCharacteristic xi;
    xi.a.resize(static_cast<int>(a.size()));
    xi.b.resize(static_cast<int>(b.size()));
    int i = 0;
    for (int x : a) xi.a[i++] = x;
    i = 0;
    for (int x : b) xi.b[i++] = x;
    return xi;
}

VectorXcd random_z(Rng& rng, int g, double box) {
    VectorXcd z(g);
    for (int j = 0; j < g; ++j) z[j] = cplx(rng.uniform(-box, box), rng.uniform(-box, box));
    return z;
}

}  // namespace

TEST_CASE("genus 1 value matches the plain reference sum") {
    const SiegelPoint om = SiegelPoint::validate(kI * MatrixXcd::Identity(1, 1));
    const cplx z(0.1, 0.05);
    for (unsigned bits = 0; bits < 4; ++bits) {
        const ThetaCharacteristic xi = characteristic_from_bits(1, bits);
        VectorXcd zv(1);
        zv[0] = z;
        const cplx got = theta(xi, zv, om);
        const cplx ref = brute_theta_g1(xi, z, om.omega()(0, 0), 50);
        CHECK(std::abs(got - ref) < 1e-13 * (1.0 + std::abs(ref)));
    }
}

TEST_CASE("genus 2 value matches a box-summed reference") {
    MatrixXcd m(2, 2);
    m << cplx(0.3, 1.1), cplx(0.3, 0.2), cplx(0.3, 0.2), cplx(-0.4, 0.9);
    const SiegelPoint om = SiegelPoint::validate(m);
    Rng rng(5);
    for (unsigned bits : {0u, 5u, 9u, 15u}) {
        const ThetaCharacteristic xi = characteristic_from_bits(2, bits);
        const VectorXcd z = random_z(rng, 2, 0.3);
        cplx ref = 0.0;
        for (int n0 = -20; n0 <= 20; ++n0)
            for (int n1 = -20; n1 <= 20; ++n1) {
                Eigen::Vector2d v(n0 + 0.5 * xi.a[0], n1 + 0.5 * xi.a[1]);
                cplx q = 0.0;
                for (int j = 0; j < 2; ++j) {
                    q += 2.0 * v[j] * (z[j] + 0.5 * xi.b[j]);
                    for (int k = 0; k < 2; ++k) q += v[j] * m(j, k) * v[k];
                }
                ref += std::exp(kPi * kI * q);
            }
        const cplx got = theta(xi, z, om);
        CHECK(std::abs(got - ref) < 1e-12 * (1.0 + std::abs(ref)));
    }
}

TEST_CASE("parity under z -> -z") {
    Rng rng(11);
    for (int g = 1; g <= 4; ++g) {
        const SiegelPoint om = random_siegel(g, 100 + g);
        const auto all = enumerate_characteristics(g, Parity::all);
        for (int rep = 0; rep < 6; ++rep) {
            const auto& xi = all[rng.uniform_int(0, static_cast<int>(all.size()) - 1)];
            const VectorXcd z = random_z(rng, g, 0.6);
            const cplx plus = theta(xi, z, om);
            const cplx minus = theta(xi, -z, om);
            const double sign = xi.is_odd() ? -1.0 : 1.0;
            CHECK(std::abs(minus - sign * plus) < 1e-12 * (1.0 + std::abs(plus)));
        }
    }
}

TEST_CASE("quasi-periodicity in both lattice directions") {
    const int g = 3;
    const SiegelPoint om = random_siegel(g, 42);
    Rng rng(13);
    const auto all = enumerate_characteristics(g, Parity::all);
    for (int rep = 0; rep < 5; ++rep) {
        const auto& xi = all[rng.uniform_int(0, static_cast<int>(all.size()) - 1)];
        const VectorXcd z = random_z(rng, g, 0.4);
        const cplx base = theta(xi, z, om);
        for (int j = 0; j < g; ++j) {
            VectorXcd ze = z;
            ze[j] += 1.0;
            const cplx integer_shift = theta(xi, ze, om);
            const cplx f1 = std::exp(kPi * kI * static_cast<double>(xi.a[j]));
            CHECK(std::abs(integer_shift - f1 * base) < 1e-12 * (1.0 + std::abs(base)));

            VectorXcd zo = z + om.omega().col(j);
            const cplx lattice_shift = theta(xi, zo, om);
            const cplx f2 =
                std::exp(kPi * kI * (-om.omega()(j, j) - 2.0 * z[j] - static_cast<double>(xi.b[j])));
            CHECK(std::abs(lattice_shift - f2 * base) < 1e-11 * (1.0 + std::abs(f2 * base)));
        }
    }
}

TEST_CASE("far arguments reduce to the fundamental domain") {
    const int g = 2;
    const SiegelPoint om = random_siegel(g, 4);
    const ThetaCharacteristic xi = make_xi({1, 0}, {1, 1});
    Rng rng(3);
    const VectorXcd z = random_z(rng, g, 0.3);
    const cplx base = theta(xi, z, om);

    // z + 3 e_0 + 2 Omega e_1, prefactors composed by hand
    VectorXcd zs = z;
    zs[0] += 3.0;
    cplx expect = base * std::exp(kPi * kI * (3.0 * static_cast<double>(xi.a[0])));
    for (int rep = 0; rep < 2; ++rep) {
        const cplx f =
            std::exp(kPi * kI * (-om.omega()(1, 1) - 2.0 * zs[1] - static_cast<double>(xi.b[1])));
        zs += om.omega().col(1);
        expect *= f;
    }
    const cplx got = theta(xi, zs, om);
    CHECK(std::abs(got - expect) < 1e-10 * (1.0 + std::abs(expect)));
}

TEST_CASE("jet matches the reference derivative sums at genus 2") {
    MatrixXcd m(2, 2);
    m << cplx(0.2, 1.0), cplx(-0.3, 0.25), cplx(-0.3, 0.25), cplx(0.1, 1.2);
    const SiegelPoint om = SiegelPoint::validate(m);
    const ThetaCharacteristic xi = make_xi({0, 1}, {0, 1});
    REQUIRE(xi.is_odd());
    const ThetaJetRaw jet = theta_jet(xi, om);
    const BruteJet ref = brute_jet_g2(xi, m, 25);
    const double scale = ref.grad.cwiseAbs().maxCoeff();
    CHECK(std::abs(jet.value - ref.value) < 1e-12 * scale);
    CHECK((jet.gradient - ref.grad).cwiseAbs().maxCoeff() < 1e-12 * scale);
    CHECK((jet.hessian - ref.hess).cwiseAbs().maxCoeff() < 1e-11 * scale);
    CHECK(std::abs(jet.third_at(0, 0, 0) - ref.third_111) < 1e-10 * scale);
    CHECK(std::abs(jet.third_at(0, 1, 1) - ref.third_122) < 1e-10 * scale);
    CHECK(std::abs(jet.third_at(1, 1, 1) - ref.third_222) < 1e-10 * scale);
    // index symmetry
    CHECK(jet.third_at(1, 0, 1) == jet.third_at(0, 1, 1));
    CHECK(jet.third_at(1, 1, 0) == jet.third_at(0, 1, 1));
}

TEST_CASE("finite differences confirm gradient and pure third derivative") {
    const int g = 3;
    const SiegelPoint om = random_siegel(g, 9);
    const ThetaCharacteristic xi = make_xi({1, 0, 0}, {1, 0, 0});
    REQUIRE(xi.is_odd());
    const ThetaJetRaw jet = theta_jet(xi, om);
    for (int j = 0; j < g; ++j) {
        const double h = 1e-4;  // truncation O(h^2 |D^3|), rounding O(eps/h)
        VectorXcd zp = VectorXcd::Zero(g), zm = VectorXcd::Zero(g);
        zp[j] = h;
        zm[j] = -h;
        const cplx fd = (theta(xi, zp, om) - theta(xi, zm, om)) / (2.0 * h);
        CHECK(std::abs(fd - jet.gradient[j]) < 1e-6 * (1.0 + std::abs(jet.gradient[j])));

        const double h3 = 1e-3;
        VectorXcd z1p = VectorXcd::Zero(g), z1m = VectorXcd::Zero(g);
        z1p[j] = h3;
        z1m[j] = -h3;
        VectorXcd z2p = VectorXcd::Zero(g), z2m = VectorXcd::Zero(g);
        z2p[j] = 2.0 * h3;
        z2m[j] = -2.0 * h3;
        const cplx fd3 = (theta(xi, z2p, om) - 2.0 * theta(xi, z1p, om) +
                          2.0 * theta(xi, z1m, om) - theta(xi, z2m, om)) /
                         (2.0 * h3 * h3 * h3);
        CHECK(std::abs(fd3 - jet.third_at(j, j, j)) < 1e-4 * (1.0 + std::abs(jet.third_at(j, j, j))));
    }
}

TEST_CASE("even characteristics have even jets") {
    const int g = 4;
    const SiegelPoint om = random_siegel(g, 21);
    const ThetaCharacteristic xi = make_xi({0, 0, 0, 0}, {1, 0, 1, 0});
    REQUIRE(!xi.is_odd());
    const ThetaJetRaw jet = theta_jet(xi, om);
    CHECK(std::abs(jet.value) > 0.1);
    CHECK(jet.gradient.cwiseAbs().maxCoeff() < 1e-12 * std::abs(jet.value));
    double third_max = 0.0;
    for (const auto& t : jet.third) third_max = std::max(third_max, std::abs(t));
    CHECK(third_max < 1e-10 * std::abs(jet.value));
    // and the jet value agrees with a direct evaluation
    CHECK(std::abs(jet.value - theta(xi, VectorXcd::Zero(g), om)) < 1e-13 * std::abs(jet.value));
}

TEST_CASE("truncation radius shrinks with looser eps and stays small at i*I") {
    const SiegelPoint om = SiegelPoint::validate(kI * MatrixXcd::Identity(4, 4));
    const VectorXi a = VectorXi::Zero(4);
    const int tight = truncation_radius(om, a, 1e-14, 0);
    const int loose = truncation_radius(om, a, 1e-6, 0);
    CHECK(loose <= tight);
    CHECK(tight <= 8);
    CHECK(loose >= 1);
    const int with_derivs = truncation_radius(om, a, 1e-14, 3);
    CHECK(with_derivs >= tight);
}

TEST_CASE("radius cap raises and a flat direction is rejected") {
    MatrixXcd m = kI * MatrixXcd::Identity(3, 3);
    m(2, 2) = cplx(0.0, 0.004);
    const SiegelPoint om = SiegelPoint::validate(m);
    ThetaSettings s;
    s.max_radius = 4;
    CHECK_THROWS_AS(truncation_radius(om, VectorXi::Zero(3), 1e-14, 0, s), RadiusCapExceeded);
}

TEST_CASE("theta rejects the wrong genus") {
    const SiegelPoint om = random_siegel(2, 1);
    const ThetaCharacteristic xi = make_xi({1, 1, 1}, {1, 1, 1});
    CHECK_THROWS_AS(theta(xi, VectorXcd::Zero(3), om), BadInput);
}
