#include "secproj/kernels.hpp"

#ifdef __AVX2__

#include <immintrin.h>

namespace secproj::kernels {

namespace {

// Barrett reduction of 8 lanes t < 2^31 by p < 46341:
// q = (t * M) >> 45 with M = floor(2^45 / p) satisfies q in {t/p - 1, t/p},
// so one conditional subtract finishes the job.
inline __m256i reduce31(__m256i t, __m256i m_vec, __m256i p_vec) {
    __m256i t_odd = _mm256_srli_epi64(t, 32);
    __m256i q_even = _mm256_srli_epi64(_mm256_mul_epu32(t, m_vec), 45);
    __m256i q_odd = _mm256_srli_epi64(_mm256_mul_epu32(t_odd, m_vec), 45);
    __m256i q = _mm256_or_si256(q_even, _mm256_slli_epi64(q_odd, 32));
    __m256i r = _mm256_sub_epi32(t, _mm256_mullo_epi32(q, p_vec));
    return _mm256_min_epu32(r, _mm256_sub_epi32(r, p_vec));
}

void axpy_avx2(uint32_t* dst, const uint32_t* src, uint32_t c, size_t n, uint32_t p) {
    c %= p;
    const uint64_t magic = (uint64_t(1) << 45) / p;
    const __m256i m_vec = _mm256_set1_epi64x(static_cast<long long>(magic));
    const __m256i p_vec = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i c_vec = _mm256_set1_epi32(static_cast<int>(c));
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i t = _mm256_add_epi32(d, _mm256_mullo_epi32(c_vec, s));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), reduce31(t, m_vec, p_vec));
    }
    for (; i < n; ++i)
        dst[i] = static_cast<uint32_t>((dst[i] + uint64_t(c) * src[i]) % p);
}

void scale_avx2(uint32_t* dst, uint32_t c, size_t n, uint32_t p) {
    c %= p;
    const uint64_t magic = (uint64_t(1) << 45) / p;
    const __m256i m_vec = _mm256_set1_epi64x(static_cast<long long>(magic));
    const __m256i p_vec = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i c_vec = _mm256_set1_epi32(static_cast<int>(c));
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i t = _mm256_mullo_epi32(c_vec, d);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), reduce31(t, m_vec, p_vec));
    }
    for (; i < n; ++i)
        dst[i] = static_cast<uint32_t>((uint64_t(dst[i]) * c) % p);
}

}  // namespace

const Ops& avx2_ops() {
    static const Ops ops{axpy_avx2, scale_avx2, "avx2"};
    return ops;
}

}  // namespace secproj::kernels

#else

namespace secproj::kernels {

const Ops& avx2_ops() { return scalar_ops(); }

}  // namespace secproj::kernels

#endif
