#ifndef SECPROJ_RNG_HPP
#define SECPROJ_RNG_HPP

#include <cstdint>

#include "secproj/scalar.hpp"

namespace secproj {

// splitmix64: tiny, platform-independent generator so that seeded runs are
// reproducible byte-for-byte everywhere.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    // Deterministic per-trial stream derived from (master seed, index).
    static Rng derived(uint64_t seed, uint64_t index) {
        Rng mix(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
        mix.next();
        return mix;
    }

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n), rejection-sampled.
    uint64_t below(uint64_t n) {
        if (n == 0) throw Error("Rng::below(0)");
        uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t v;
        do { v = next(); } while (v >= limit);
        return v % n;
    }

    // Uniform integer in [lo, hi].
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    // Field element: uniform residue over GF(p), small integer in
    // [-bound, bound] over QQ.
    Scalar element(const Field& f, long bound = 20) {
        if (f.is_prime()) return Scalar::from_int(static_cast<long>(below(f.p)), f);
        return Scalar::from_int(range(-bound, bound), f);
    }

    Scalar nonzero_element(const Field& f, long bound = 20) {
        for (;;) {
            Scalar s = element(f, bound);
            if (!s.is_zero()) return s;
        }
    }

private:
    uint64_t state_;
};

}  // namespace secproj

#endif
