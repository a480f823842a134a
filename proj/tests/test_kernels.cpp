#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "schottky/kernels.hpp"
#include "schottky/rng.hpp"

using namespace schottky;

namespace {

struct Batch {
    int g, m;
    std::vector<double> v, qr, qi, lr, li;
};

Batch make_batch(int g, int m, unsigned long long seed) {
    Rng rng(seed);
    Batch b{g, m, {}, {}, {}, {}, {}};
    b.v.resize(static_cast<size_t>(g) * m);
    for (auto& x : b.v) x = static_cast<double>(rng.uniform_int(-9, 9)) + 0.5;
    b.qr.resize(static_cast<size_t>(g) * g);
    b.qi.resize(static_cast<size_t>(g) * g);
    for (int j = 0; j < g; ++j)
        for (int k = 0; k <= j; ++k) {
            const double a = rng.uniform(-1.0, 1.0), c = rng.uniform(-1.0, 1.0);
            b.qr[j * g + k] = b.qr[k * g + j] = a;
            b.qi[j * g + k] = b.qi[k * g + j] = c;
        }
    b.lr.resize(g);
    b.li.resize(g);
    for (int j = 0; j < g; ++j) {
        b.lr[j] = rng.uniform(-2.0, 2.0);
        b.li[j] = rng.uniform(-2.0, 2.0);
    }
    return b;
}

}  // namespace

TEST_CASE("scalar quad_phases matches a direct reference") {
    const Batch b = make_batch(4, 33, 1);
    std::vector<double> p(b.m, 0.0), e(b.m, 0.0);
    kernels::scalar_backend().quad_phases(b.g, b.m, b.v.data(), b.qr.data(), b.qi.data(),
                                          b.lr.data(), b.li.data(), p.data(), e.data());
    for (int i = 0; i < b.m; ++i) {
        double pr = 0.0, pi = 0.0;
        for (int j = 0; j < b.g; ++j) {
            const double vj = b.v[static_cast<size_t>(j) * b.m + i];
            pr += b.lr[j] * vj;
            pi += b.li[j] * vj;
            for (int k = 0; k < b.g; ++k) {
                const double vk = b.v[static_cast<size_t>(k) * b.m + i];
                pr += b.qr[j * b.g + k] * vj * vk;
                pi += b.qi[j * b.g + k] * vj * vk;
            }
        }
        CHECK(p[i] == doctest::Approx(pr).epsilon(1e-12));
        CHECK(e[i] == doctest::Approx(pi).epsilon(1e-12));
    }
}

TEST_CASE("avx2 backend agrees with scalar on quad_phases") {
    if (!kernels::avx2_available()) return;
    for (unsigned long long seed = 0; seed < 5; ++seed) {
        for (int m : {1, 3, 4, 7, 32, 97}) {
            const Batch b = make_batch(4, m, seed * 101 + m);
            std::vector<double> ps(m, 0.0), es(m, 0.0), pa(m, 0.0), ea(m, 0.0);
            kernels::scalar_backend().quad_phases(b.g, m, b.v.data(), b.qr.data(), b.qi.data(),
                                                  b.lr.data(), b.li.data(), ps.data(), es.data());
            kernels::avx2_backend().quad_phases(b.g, m, b.v.data(), b.qr.data(), b.qi.data(),
                                                b.lr.data(), b.li.data(), pa.data(), ea.data());
            for (int i = 0; i < m; ++i) {
                CHECK(std::abs(ps[i] - pa[i]) < 1e-12 * (1.0 + std::abs(ps[i])));
                CHECK(std::abs(es[i] - ea[i]) < 1e-12 * (1.0 + std::abs(es[i])));
            }
        }
    }
}

TEST_CASE("avx2 backend agrees with scalar on jet_accumulate") {
    if (!kernels::avx2_available()) return;
    Rng rng(77);
    const int nm = 36;
    std::vector<double> mono(nm), ar_s(nm, 0.0), ai_s(nm, 0.0), ar_a(nm, 0.0), ai_a(nm, 0.0);
    for (int rep = 0; rep < 50; ++rep) {
        for (auto& x : mono) x = rng.uniform(-3.0, 3.0);
        const double tr = rng.uniform(-1.0, 1.0), ti = rng.uniform(-1.0, 1.0);
        kernels::scalar_backend().jet_accumulate(nm, mono.data(), tr, ti, ar_s.data(), ai_s.data());
        kernels::avx2_backend().jet_accumulate(nm, mono.data(), tr, ti, ar_a.data(), ai_a.data());
    }
    for (int c = 0; c < nm; ++c) {
        CHECK(std::abs(ar_s[c] - ar_a[c]) < 1e-12 * (1.0 + std::abs(ar_s[c])));
        CHECK(std::abs(ai_s[c] - ai_a[c]) < 1e-12 * (1.0 + std::abs(ai_s[c])));
    }
}

TEST_CASE("force_backend switches and rejects unknown names") {
    kernels::force_backend("scalar");
    CHECK(std::string(kernels::active().name) == "scalar");
    if (kernels::avx2_available()) {
        kernels::force_backend("avx2");
        CHECK(std::string(kernels::active().name) == "avx2");
    } else {
        CHECK_THROWS_AS(kernels::force_backend("avx2"), std::runtime_error);
    }
    kernels::force_backend("auto");
    CHECK_THROWS_AS(kernels::force_backend("neon"), std::runtime_error);
    if (kernels::avx2_available()) CHECK(std::string(kernels::active().name) == "avx2");
}

TEST_CASE("availability implies compiled") {
    if (kernels::avx2_available()) CHECK(kernels::avx2_compiled());
}
