#include "schottky/kernels.hpp"

#include "schottky/errors.hpp"

namespace schottky::kernels {

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
    return avx2_compiled() && __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

namespace {

const Backend* best() { return avx2_available() ? &avx2_backend() : &scalar_backend(); }

const Backend*& active_slot() {
    static const Backend* slot = best();
    return slot;
}

}  // namespace

const Backend& active() { return *active_slot(); }

void force_backend(const std::string& name) {
    if (name == "auto") {
        active_slot() = best();
    } else if (name == "scalar") {
        active_slot() = &scalar_backend();
    } else if (name == "avx2") {
        if (!avx2_available()) throw BadInput("avx2 backend unavailable on this CPU");
        active_slot() = &avx2_backend();
    } else {
        throw BadInput("unknown kernel backend: " + name);
    }
}

}  // namespace schottky::kernels
