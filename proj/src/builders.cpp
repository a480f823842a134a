#include "schottky/builders.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include <Eigen/Dense>

#include "schottky/rng.hpp"

namespace schottky {

int HyperellipticCurve::genus() const {
    const int n = static_cast<int>(branch_points.size());
    if (n < 4 || n % 2 != 0)
        throw WrongArity("need an even number (>= 4) of branch points, got " + std::to_string(n));
    return (n - 2) / 2;
}

void HyperellipticCurve::validate() const {
    genus();
    for (size_t i = 0; i + 1 < branch_points.size(); ++i) {
        const double gap = branch_points[i + 1] - branch_points[i];
        if (gap <= 0.0) throw BadInput("branch points must be strictly increasing");
        if (gap <= 1e-8) throw NearDegenerateGaps("branch-point gap " + std::to_string(gap));
    }
}

double agm(double a, double b) {
    if (a <= 0.0 || b <= 0.0) throw BadInput("agm needs positive arguments");
    for (int i = 0; i < 64 && std::abs(a - b) > 1e-17 * a; ++i) {
        const double m = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = m;
    }
    return 0.5 * (a + b);
}

cplx elliptic_tau_agm(const std::vector<double>& e) {
    if (e.size() != 4) throw WrongArity("elliptic oracle needs exactly 4 branch points");
    for (int i = 0; i < 3; ++i)
        if (e[i + 1] <= e[i]) throw BadInput("branch points must be strictly increasing");
    const double k2 = ((e[1] - e[0]) * (e[3] - e[2])) / ((e[2] - e[0]) * (e[3] - e[1]));
    const double k = std::sqrt(k2);
    const double kp = std::sqrt(1.0 - k2);
    return cplx(0.0, agm(1.0, kp) / agm(1.0, k));
}

namespace {

// Integrals of x^{k-1} dx / y over each real segment (e_j, e_{j+1}) on the
// sheet continued from the upper half plane, absorbing the inverse-sqrt
// endpoint behavior with Gauss-Chebyshev midpoint nodes.  Above segment j
// (1-based) the product under the root has nu_j = 2g+2-j negative factors,
// so y = i^{nu_j} sqrt(|prod|) there and 1/y carries i^{-nu_j}.
MatrixXcd basic_integrals(const std::vector<double>& e, int g, int nodes) {
    static const cplx kInvPowI[4] = {cplx(1, 0), cplx(0, -1), cplx(-1, 0), cplx(0, 1)};
    const int nseg = 2 * g + 1;
    MatrixXcd I = MatrixXcd::Zero(g, nseg);
    for (int j = 0; j < nseg; ++j) {
        const double c = 0.5 * (e[j] + e[j + 1]);
        const double r = 0.5 * (e[j + 1] - e[j]);
        const int nu = 2 * g + 2 - (j + 1);
        const cplx phase = kInvPowI[nu % 4];
        VectorXd acc = VectorXd::Zero(g);
        for (int m = 0; m < nodes; ++m) {
            const double theta = (m + 0.5) * kPi / nodes;
            const double x = c + r * std::cos(theta);
            double rest = 1.0;
            for (int i = 0; i < static_cast<int>(e.size()); ++i) {
                if (i == j || i == j + 1) continue;
                rest *= std::abs(x - e[i]);
            }
            const double w = 1.0 / std::sqrt(rest);
            double xp = 1.0;
            for (int k = 0; k < g; ++k) {
                acc[k] += xp * w;
                xp *= x;
            }
        }
        for (int k = 0; k < g; ++k) I(k, j) = phase * (kPi / nodes) * acc[k];
    }
    return I;
}

MatrixXcd omega_candidate(const std::vector<double>& e, int g, int nodes, MatrixXcd* a_out,
                          MatrixXcd* b_out) {
    const MatrixXcd I = basic_integrals(e, g, nodes);
    MatrixXcd A(g, g), B(g, g);
    for (int i = 0; i < g; ++i) {
        // a_i encircles the cut (e_{2i-1}, e_{2i}): segment index 2i-1 (1-based)
        A.col(i) = 2.0 * I.col(2 * i);
        // b_i threads the gaps from e_{2i} out to e_{2g+1}
        VectorXcd acc = VectorXcd::Zero(g);
        for (int j = 2 * i + 1; j < 2 * g; j += 2) acc += I.col(j);
        B.col(i) = 2.0 * acc;
    }
    if (a_out) *a_out = A;
    if (b_out) *b_out = B;
    return A.fullPivLu().solve(B).eval();
}

// A few cheap relabelings of cycle orientation and complex structure; tried
// in order until validation passes.
std::vector<MatrixXcd> symplectic_candidates(const MatrixXcd& om) {
    return {om, om.conjugate(), -om, -om.conjugate()};
}

}  // namespace

PeriodResult hyperelliptic_periods(const HyperellipticCurve& curve, const QuadratureSettings& q,
                                   const Tolerances& tol) {
    curve.validate();
    const int g = curve.genus();
    const auto& e = curve.branch_points;
    if (q.nodes < 4) throw BadInput("need at least 4 quadrature nodes");

    int nodes = q.nodes;
    MatrixXcd a_mat, b_mat;
    MatrixXcd prev = omega_candidate(e, g, nodes, &a_mat, &b_mat);
    MatrixXcd best = prev;
    double err = 0.0;
    bool converged = false;
    for (int d = 0; d < q.max_doublings; ++d) {
        nodes *= 2;
        const MatrixXcd next = omega_candidate(e, g, nodes, &a_mat, &b_mat);
        err = (next - prev).cwiseAbs().maxCoeff();
        best = next;
        const double scale = std::max(1.0, next.cwiseAbs().maxCoeff());
        if (err < q.rel_tol * scale) {
            converged = true;
            break;
        }
        prev = next;
    }
    if (!converged)
        throw QuadratureDivergence("node doubling stalled at estimate " + std::to_string(err));

    std::optional<SiegelPoint> found;
    int which = 0;
    const auto candidates = symplectic_candidates(best);
    for (size_t c = 0; c < candidates.size() && !found; ++c) {
        try {
            found = SiegelPoint::validate(candidates[c], tol);
            which = static_cast<int>(c);
        } catch (const Error&) {
        }
    }
    if (!found)
        throw SymplecticBasisNotFound(
            "no orientation of the computed periods lies in the Siegel space");

    PeriodResult res{*found,
                     a_mat,
                     b_mat,
                     (best - best.transpose()).cwiseAbs().maxCoeff(),
                     err,
                     which != 0};
    return res;
}

SiegelPoint random_siegel(int g, unsigned long long seed, double spread, const Tolerances& tol) {
    if (g < 1) throw BadInput("genus must be positive");
    if (spread < 0.0) throw BadInput("spread must be nonnegative");
    Rng rng(seed);
    MatrixXd x(g, g);
    for (int i = 0; i < g; ++i)
        for (int j = i; j < g; ++j) {
            const double v = rng.uniform(-spread, spread);
            x(i, j) = v;
            x(j, i) = v;
        }
    MatrixXd y(g, g);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) y(i, j) = rng.uniform(-spread, spread);
    const MatrixXd im = y * y.transpose() + MatrixXd::Identity(g, g);
    MatrixXcd om = x.cast<cplx>() + cplx(0.0, 1.0) * im.cast<cplx>();
    return SiegelPoint::validate(om, tol);
}

SiegelPoint product_point(const std::vector<SiegelPoint>& parts, const Tolerances& tol) {
    if (parts.size() < 2) throw BadInput("product point needs at least two factors");
    int g = 0;
    for (const auto& p : parts) g += p.genus();
    MatrixXcd om = MatrixXcd::Zero(g, g);
    int off = 0;
    for (const auto& p : parts) {
        om.block(off, off, p.genus(), p.genus()) = p.omega();
        off += p.genus();
    }
    return SiegelPoint::validate(om, tol);
}

SymplecticInt random_gamma48_word(int g, int length, unsigned long long seed,
                                  const SiegelPoint* omega, double lambda_floor, int max_tries) {
    if (g < 1 || length < 1) throw BadInput("need g >= 1 and length >= 1");
    Rng rng(seed);

    auto sym_even_diag = [&]() {
        MatrixXi m = MatrixXi::Zero(g, g);
        for (int i = 0; i < g; ++i)
            for (int j = i; j < g; ++j) {
                const int v = (i == j) ? 2 * rng.uniform_int(-1, 1) : rng.uniform_int(-1, 1);
                m(i, j) = v;
                m(j, i) = v;
            }
        return m;
    };

    auto generator = [&]() {
        SymplecticInt s = SymplecticInt::identity(g);
        const int type = rng.uniform_int(0, 2);
        if (type == 0) {
            s.B = 4 * sym_even_diag();
        } else if (type == 1) {
            s.C = 4 * sym_even_diag();
        } else {
            int i = rng.uniform_int(0, g - 1);
            int j = rng.uniform_int(0, g - 1);
            if (g == 1) return s;
            while (j == i) j = rng.uniform_int(0, g - 1);
            s.A(i, j) += 4;
            s.D(j, i) -= 4;
        }
        return s;
    };

    for (int attempt = 0; attempt < max_tries; ++attempt) {
        SymplecticInt w = SymplecticInt::identity(g);
        for (int step = 0; step < length; ++step) w = w * generator();
        if (!omega) return w;
        try {
            const SiegelPoint image = sp_action_omega(w, *omega);
            if (image.lambda_min() >= lambda_floor) return w;
        } catch (const Error&) {
        }
    }
    throw DegenerateSample("no feasible congruence word found; widen lambda_floor or retries");
}

}  // namespace schottky
