// Compiled with -mavx2 -mfma (see CMakeLists); everything here must stay
// behind the runtime avx2_available() gate.

#include "schottky/kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

namespace schottky::kernels {

namespace {

void quad_phases_avx2(int g, int m, const double* v, const double* qr, const double* qi,
                      const double* lr, const double* li, double* P, double* E) {
    int i = 0;
    for (; i + 4 <= m; i += 4) {
        __m256d accp = _mm256_loadu_pd(P + i);
        __m256d acce = _mm256_loadu_pd(E + i);
        for (int j = 0; j < g; ++j) {
            __m256d wr = _mm256_set1_pd(lr[j]);
            __m256d wi = _mm256_set1_pd(li[j]);
            const double* qrj = qr + j * g;
            const double* qij = qi + j * g;
            for (int k = 0; k < g; ++k) {
                const __m256d vk = _mm256_loadu_pd(v + k * m + i);
                wr = _mm256_fmadd_pd(_mm256_set1_pd(qrj[k]), vk, wr);
                wi = _mm256_fmadd_pd(_mm256_set1_pd(qij[k]), vk, wi);
            }
            const __m256d vj = _mm256_loadu_pd(v + j * m + i);
            accp = _mm256_fmadd_pd(vj, wr, accp);
            acce = _mm256_fmadd_pd(vj, wi, acce);
        }
        _mm256_storeu_pd(P + i, accp);
        _mm256_storeu_pd(E + i, acce);
    }
    for (; i < m; ++i) {
        double p = 0.0, e = 0.0;
        for (int j = 0; j < g; ++j) {
            double wr = lr[j];
            double wi = li[j];
            const double* qrj = qr + j * g;
            const double* qij = qi + j * g;
            for (int k = 0; k < g; ++k) {
                const double vk = v[k * m + i];
                wr += qrj[k] * vk;
                wi += qij[k] * vk;
            }
            p += v[j * m + i] * wr;
            e += v[j * m + i] * wi;
        }
        P[i] += p;
        E[i] += e;
    }
}

void jet_accumulate_avx2(int nm, const double* mono, double tr, double ti, double* acc_re,
                         double* acc_im) {
    const __m256d vtr = _mm256_set1_pd(tr);
    const __m256d vti = _mm256_set1_pd(ti);
    for (int c = 0; c < nm; c += 4) {
        const __m256d mo = _mm256_loadu_pd(mono + c);
        _mm256_storeu_pd(acc_re + c, _mm256_fmadd_pd(vtr, mo, _mm256_loadu_pd(acc_re + c)));
        _mm256_storeu_pd(acc_im + c, _mm256_fmadd_pd(vti, mo, _mm256_loadu_pd(acc_im + c)));
    }
}

}  // namespace

const Backend& avx2_backend() {
    static const Backend b{"avx2", &quad_phases_avx2, &jet_accumulate_avx2};
    return b;
}

bool avx2_compiled() { return true; }

}  // namespace schottky::kernels

#else

namespace schottky::kernels {

const Backend& avx2_backend() { return scalar_backend(); }

bool avx2_compiled() { return false; }

}  // namespace schottky::kernels

#endif
