#include "schottky/kernels.hpp"

namespace schottky::kernels {

namespace {

// Same association order as the vector variants: per point, fold the linear
// coefficient into a row sum w_j = l_j + sum_k q_jk v_k, then accumulate
// sum_j v_j w_j.
void quad_phases_scalar(int g, int m, const double* v, const double* qr, const double* qi,
                        const double* lr, const double* li, double* P, double* E) {
    for (int i = 0; i < m; ++i) {
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
            const double vj = v[j * m + i];
            p += vj * wr;
            e += vj * wi;
        }
        P[i] += p;
        E[i] += e;
    }
}

void jet_accumulate_scalar(int nm, const double* mono, double tr, double ti, double* acc_re,
                           double* acc_im) {
    for (int c = 0; c < nm; ++c) {
        acc_re[c] += tr * mono[c];
        acc_im[c] += ti * mono[c];
    }
}

}  // namespace

const Backend& scalar_backend() {
    static const Backend b{"scalar", &quad_phases_scalar, &jet_accumulate_scalar};
    return b;
}

}  // namespace schottky::kernels
