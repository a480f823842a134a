#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "schottky/cubic.hpp"
#include "schottky/rng.hpp"

using namespace schottky;

namespace {

CubicForm from_coeffs(int n, const std::vector<std::pair<std::vector<int>, cplx>>& terms) {
    CubicForm f(n);
    for (const auto& [alpha, c] : terms) f.at(alpha) = c;
    return f;
}

MatrixXcd random_shear_product(Rng& rng, int n, int steps) {
    MatrixXcd g = MatrixXcd::Identity(n, n);
    for (int s = 0; s < steps; ++s) {
        const int i = rng.uniform_int(0, n - 1);
        int j = rng.uniform_int(0, n - 2);
        if (j >= i) ++j;
        MatrixXcd e = MatrixXcd::Identity(n, n);
        e(i, j) = cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        g = g * e;
    }
    return g;  // det == 1 by construction
}

}  // namespace

TEST_CASE("monomial table is descending lex with full size") {
    const auto& table = CubicForm::index_table(3);
    REQUIRE(table.size() == 10);
    CHECK(table.front() == std::vector<int>{3, 0, 0});
    CHECK(table[1] == std::vector<int>{2, 1, 0});
    CHECK(table.back() == std::vector<int>{0, 0, 3});
    for (size_t i = 0; i < table.size(); ++i)
        CHECK(CubicForm::index_of(3, table[i]) == static_cast<int>(i));
    CHECK(CubicForm::index_table(4).size() == 20);
}

TEST_CASE("eval and tensor round trips") {
    Rng rng(2);
    CubicForm f(3);
    for (auto& c : f.coeffs()) c = rng.cnormal();
    VectorXcd z(3);
    z << cplx(0.3, -0.2), cplx(-1.1, 0.4), cplx(0.7, 0.9);
    // symmetric-tensor contraction reproduces eval
    cplx direct = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) direct += f.tensor(i, j, k) * z[i] * z[j] * z[k];
    CHECK(std::abs(direct - f.eval(z)) < 1e-12 * std::abs(f.eval(z)));

    std::vector<cplx> t(27);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) t[(i * 3 + j) * 3 + k] = f.tensor(i, j, k);
    const CubicForm g = CubicForm::from_tensor(3, t);
    for (int c = 0; c < f.dim(); ++c) CHECK(std::abs(g.coeffs()[c] - f.coeffs()[c]) < 1e-13);
}

TEST_CASE("hesse pencil invariants in closed form") {
    Rng rng(7);
    for (int rep = 0; rep < 50; ++rep) {
        const cplx m = 2.0 * rng.cnormal();
        const CubicForm f = hesse_cubic(m);
        const cplx s_expect = m - std::pow(m, 4);
        const cplx t_expect = 1.0 - 20.0 * std::pow(m, 3) - 8.0 * std::pow(m, 6);
        const double scale = 1.0 + std::abs(t_expect);
        CHECK(std::abs(aronhold_S(f) - s_expect) < 1e-12 * scale);
        CHECK(std::abs(aronhold_T(f) - t_expect) < 1e-12 * scale);
    }
}

TEST_CASE("fermat point of the pencil") {
    const CubicForm f = hesse_cubic(0.0);
    CHECK(std::abs(aronhold_S(f)) < 1e-15);
    CHECK(std::abs(aronhold_T(f) - 1.0) < 1e-15);
    CHECK(std::abs(discriminant3(f) - 1.0) < 1e-15);
    CHECK(std::abs(j_invariant(f)) < 1e-15);
}

TEST_CASE("hesse parameter 1 and the singular member -1/2") {
    const CubicForm f1 = hesse_cubic(1.0);
    CHECK(std::abs(aronhold_S(f1)) < 1e-14);
    CHECK(std::abs(aronhold_T(f1) + 27.0) < 1e-12);
    CHECK(std::abs(discriminant3(f1) - 729.0) < 1e-10);

    const CubicForm fs = hesse_cubic(cplx(-0.5, 0.0));
    CHECK(std::abs(discriminant3(fs)) < 1e-10);
    CHECK_THROWS_AS(j_invariant(fs), SingularCubic);
}

TEST_CASE("cones kill both invariants") {
    // single variable
    const CubicForm cube = from_coeffs(3, {{{3, 0, 0}, 1.0}});
    CHECK(std::abs(aronhold_S(cube)) < 1e-15);
    CHECK(std::abs(aronhold_T(cube)) < 1e-15);
    CHECK(cone_defect(cube) < 1e-15);

    // (x + y + z)^3: coefficients 3!/alpha!
    CubicForm lin(3);
    for (int c = 0; c < lin.dim(); ++c) {
        const std::vector<int>& al = CubicForm::index_table(3)[c];
        double fact = 6.0;
        for (int i = 0; i < 3; ++i)
            for (int k = 2; k <= al[i]; ++k) fact /= k;
        lin.coeffs()[c] = fact;
    }
    CHECK(std::abs(aronhold_S(lin)) < 1e-12);
    CHECK(std::abs(aronhold_T(lin)) < 1e-12);
    CHECK(cone_defect(lin) < 1e-14);

    // binary cubic embedded in three variables (no z dependence)
    const CubicForm binary = from_coeffs(
        3, {{{3, 0, 0}, cplx(1.0, 0.5)}, {{2, 1, 0}, -2.0}, {{1, 2, 0}, 0.75}, {{0, 3, 0}, 1.0}});
    CHECK(std::abs(aronhold_S(binary)) < 1e-12);
    CHECK(std::abs(aronhold_T(binary)) < 1e-12);

    const CubicForm smooth = hesse_cubic(cplx(0.3, 0.1));
    CHECK(cone_defect(smooth) > 0.05);
}

TEST_CASE("gl3 action is a right action with determinant weights 4 and 6") {
    Rng rng(31);
    for (int rep = 0; rep < 10; ++rep) {
        CubicForm f(3);
        for (auto& c : f.coeffs()) c = rng.cnormal();
        MatrixXcd g(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) g(i, j) = 0.8 * rng.cnormal();
        g += 2.0 * MatrixXcd::Identity(3, 3);
        const cplx det = g.determinant();
        const CubicForm fg = act_gl(g, f);

        // pointwise: (g . f)(z) = f(g^{-1} z)
        VectorXcd z(3);
        z << cplx(0.2, 0.6), cplx(-0.4, 0.1), cplx(0.9, -0.3);
        const cplx lhs = fg.eval(z);
        const cplx rhs = f.eval(g.inverse() * z);
        CHECK(std::abs(lhs - rhs) < 1e-10 * (1.0 + std::abs(rhs)));

        // (g . f) = f o g^{-1}, so S picks up det(g^{-1})^4 = det(g)^{-4}
        const cplx s0 = aronhold_S(f), s1 = aronhold_S(fg);
        const cplx t0 = aronhold_T(f), t1 = aronhold_T(fg);
        CHECK(std::abs(std::pow(det, 4) * s1 - s0) < 1e-9 * (1.0 + std::abs(s0)));
        CHECK(std::abs(std::pow(det, 6) * t1 - t0) < 1e-9 * (1.0 + std::abs(t0)));
    }
}

TEST_CASE("sl3 shear products leave S and T fixed") {
    Rng rng(47);
    for (int rep = 0; rep < 10; ++rep) {
        const CubicForm f = hesse_cubic(cplx(0.4, -0.7));
        const MatrixXcd g = random_shear_product(rng, 3, 6);
        const CubicForm fg = act_gl(g, f);
        const cplx s0 = aronhold_S(f), s1 = aronhold_S(fg);
        const cplx t0 = aronhold_T(f), t1 = aronhold_T(fg);
        CHECK(std::abs(s1 - s0) < 1e-8 * (1.0 + std::abs(s0)));
        CHECK(std::abs(t1 - t0) < 1e-8 * (1.0 + std::abs(t0)));
    }
}

TEST_CASE("discriminant syzygy holds coefficient-wise") {
    Rng rng(3);
    for (int rep = 0; rep < 20; ++rep) {
        CubicForm f(3);
        for (auto& c : f.coeffs()) c = rng.cnormal();
        const cplx s = aronhold_S(f), t = aronhold_T(f);
        CHECK(std::abs(discriminant3(f) - (t * t + 64.0 * s * s * s)) <
              1e-12 * (1.0 + std::abs(t * t)));
    }
}

TEST_CASE("scaling weights: f -> c f multiplies S by c^4 and T by c^6") {
    const CubicForm f = hesse_cubic(cplx(0.2, 0.3));
    CubicForm g = f;
    const cplx c(1.3, -0.6);
    for (auto& x : g.coeffs()) x *= c;
    CHECK(std::abs(aronhold_S(g) - std::pow(c, 4) * aronhold_S(f)) < 1e-12);
    CHECK(std::abs(aronhold_T(g) - std::pow(c, 6) * aronhold_T(f)) < 1e-12);
}

TEST_CASE("arity and singularity guards") {
    CHECK_THROWS_AS(aronhold_S(CubicForm(4)), WrongArity);
    CHECK_THROWS_AS(act_gl(MatrixXcd::Zero(3, 3), hesse_cubic(0.0)), SingularMatrix);
    CHECK_THROWS_AS(CubicForm(0), BadInput);
    CHECK(CubicForm(1).dim() == 1);  // univariate restriction at genus 2
}
