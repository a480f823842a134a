#pragma once

#include <cstddef>
#include <string>

namespace schottky::kernels {

// Data-parallel inner loops of the theta lattice sums. Two hot spots:
//
//  quad_phases      batch evaluation of the real and imaginary quadratic
//                   phase forms over a block of lattice points (SoA layout),
//  jet_accumulate   fused multiply-add of one complex term into the packed
//                   jet accumulators (1 + g + g(g+1)/2 + C(g+2,3) monomials).
//
// A scalar reference implementation always exists; an AVX2+FMA variant is
// selected at runtime when the CPU supports it. Both orderings are fixed, so
// a given backend is bit-reproducible run to run.

// E[i] += sum_{j,k} qi[j*g+k] v_j v_k + sum_j li[j] v_j
// P[i] += sum_{j,k} qr[j*g+k] v_j v_k + sum_j lr[j] v_j
// v is SoA: v[j*m + i] is coordinate j of point i. Scale factors (pi, 2*pi,
// signs) are folded into qr/qi/lr/li by the caller.
using QuadPhasesFn = void (*)(int g, int m, const double* v, const double* qr, const double* qi,
                              const double* lr, const double* li, double* P, double* E);

// acc_re[c] += tr * mono[c]; acc_im[c] += ti * mono[c], c = 0..nm-1.
// nm must be a multiple of 4; buffers are padded by the caller.
using JetAccumulateFn = void (*)(int nm, const double* mono, double tr, double ti, double* acc_re,
                                 double* acc_im);

struct Backend {
    const char* name;
    QuadPhasesFn quad_phases;
    JetAccumulateFn jet_accumulate;
};

const Backend& scalar_backend();
bool avx2_compiled();  // translation unit built with AVX2+FMA codegen
bool avx2_available(); // avx2_compiled() and the CPU supports it
const Backend& avx2_backend();  // valid only if avx2_available()

// Active backend used by the theta engine. Default: best available.
const Backend& active();
// Force "scalar", "avx2", or "auto". Throws on unknown/unavailable names.
void force_backend(const std::string& name);

}  // namespace schottky::kernels
