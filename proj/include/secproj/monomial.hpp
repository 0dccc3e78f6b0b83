#ifndef SECPROJ_MONOMIAL_HPP
#define SECPROJ_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <string>

#include "secproj/scalar.hpp"

namespace secproj {

// Hard cap on ring size: covers tripled coordinates for joins plus the
// auxiliary variables used by intersection and saturation tricks.
constexpr int kMaxVars = 32;

// Exponent vector with cached total degree.  Entries beyond the ambient
// ring's variable count are identically zero.
struct Monomial {
    std::array<uint16_t, kMaxVars> e{};
    uint32_t degree = 0;

    static Monomial one() { return Monomial{}; }

    static Monomial variable(int i) {
        Monomial m;
        m.e[i] = 1;
        m.degree = 1;
        return m;
    }

    bool is_one() const { return degree == 0; }

    bool operator==(const Monomial& o) const { return degree == o.degree && e == o.e; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = e[i] + o.e[i];
        r.degree = degree + o.degree;
        return r;
    }

    bool divides(const Monomial& o) const {
        if (degree > o.degree) return false;
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }

    // this / o; caller guarantees divisibility.
    Monomial quotient(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = e[i] - o.e[i];
        r.degree = degree - o.degree;
        return r;
    }

    Monomial lcm(const Monomial& o) const {
        Monomial r;
        uint32_t d = 0;
        for (int i = 0; i < kMaxVars; ++i) {
            r.e[i] = e[i] > o.e[i] ? e[i] : o.e[i];
            d += r.e[i];
        }
        r.degree = d;
        return r;
    }

    bool coprime_with(const Monomial& o) const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] && o.e[i]) return false;
        return true;
    }

    // Bit v set iff variable v occurs; cheap divisibility pre-filter.
    uint32_t support_mask() const {
        uint32_t m = 0;
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i]) m |= 1u << i;
        return m;
    }

    // Total degree in variables [from, to).
    uint32_t degree_in(int from, int to) const {
        uint32_t d = 0;
        for (int i = from; i < to; ++i) d += e[i];
        return d;
    }

    size_t hash() const {
        size_t h = 1469598103934665603ULL;
        for (int i = 0; i < kMaxVars; ++i) {
            h ^= e[i];
            h *= 1099511628211ULL;
        }
        return h;
    }
};

struct MonomialHash {
    size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Monomial orders.
//  - Grevlex: graded reverse lexicographic.
//  - Lex: pure lexicographic.
//  - ElimLastK: block order eliminating the last k variables (grevlex on the
//    last k first, then grevlex on the rest).
//  - GrevlexLastVar: grevlex with one designated variable moved to the end
//    of the revlex scan; used by the divide-by-last-variable saturation.
struct MonomialOrder {
    enum class Kind : uint8_t { Grevlex, Lex, ElimLastK, GrevlexLastVar };

    Kind kind = Kind::Grevlex;
    int param = 0;  // k for ElimLastK, variable index for GrevlexLastVar

    static MonomialOrder grevlex() { return {Kind::Grevlex, 0}; }
    static MonomialOrder lex() { return {Kind::Lex, 0}; }
    static MonomialOrder elim_last(int k) { return {Kind::ElimLastK, k}; }
    static MonomialOrder grevlex_last_var(int v) { return {Kind::GrevlexLastVar, v}; }

    bool operator==(const MonomialOrder&) const = default;
    bool operator<(const MonomialOrder& o) const {
        return kind != o.kind ? kind < o.kind : param < o.param;
    }

    // -1 if a < b, 0 if equal, +1 if a > b.
    int compare(const Monomial& a, const Monomial& b, int nvars) const;

    std::string str() const;
};

}  // namespace secproj

#endif
