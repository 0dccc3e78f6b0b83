#include "secproj/kernels.hpp"

namespace secproj::kernels {

namespace {

void axpy_scalar(uint32_t* dst, const uint32_t* src, uint32_t c, size_t n, uint32_t p) {
    uint64_t cc = c % p;
    for (size_t i = 0; i < n; ++i)
        dst[i] = static_cast<uint32_t>((dst[i] + cc * src[i]) % p);
}

void scale_scalar(uint32_t* dst, uint32_t c, size_t n, uint32_t p) {
    uint64_t cc = c % p;
    for (size_t i = 0; i < n; ++i)
        dst[i] = static_cast<uint32_t>((dst[i] * cc) % p);
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops{axpy_scalar, scale_scalar, "scalar"};
    return ops;
}

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const Ops& active_ops(uint32_t p) {
    // Barrett window: magic = 2^45/p must fit 32 bits (p > 8192) and
    // dst + c*src must stay below 2^31 (p < 46341).
    if (avx2_available() && p > 8192u && p < 46341u) return avx2_ops();
    return scalar_ops();
}

}  // namespace secproj::kernels
