#ifndef SECPROJ_KERNELS_HPP
#define SECPROJ_KERNELS_HPP

#include <cstddef>
#include <cstdint>

namespace secproj::kernels {

// Row kernels for prime-field dense linear algebra.  Rows hold residues in
// [0, p) as uint32_t.  The AVX2 variant requires 8192 < p < 46341 (Barrett
// magic must fit 32 bits, accumulators must stay below 2^31); the
// dispatcher enforces this and falls back to the scalar kernels otherwise.

struct Ops {
    // dst[i] = (dst[i] + c * src[i]) mod p
    void (*axpy)(uint32_t* dst, const uint32_t* src, uint32_t c, size_t n, uint32_t p);
    // dst[i] = (dst[i] * c) mod p
    void (*scale)(uint32_t* dst, uint32_t c, size_t n, uint32_t p);
    const char* name;
};

const Ops& scalar_ops();
const Ops& avx2_ops();  // valid only for p < 46341; stub when not compiled in

bool avx2_available();

// Best kernel set usable for this modulus on this machine.
const Ops& active_ops(uint32_t p);

}  // namespace secproj::kernels

#endif
