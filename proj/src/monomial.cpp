#include "secproj/monomial.hpp"

namespace secproj {

namespace {

// Grevlex on the variable range [from, to): higher degree wins; on ties the
// monomial whose trailing exponent difference is negative wins.
int grevlex_range(const Monomial& a, const Monomial& b, int from, int to) {
    uint32_t da = a.degree_in(from, to), db = b.degree_in(from, to);
    if (da != db) return da < db ? -1 : 1;
    for (int i = to - 1; i >= from; --i) {
        int d = int(a.e[i]) - int(b.e[i]);
        if (d != 0) return d > 0 ? -1 : 1;
    }
    return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b, int nvars) const {
    switch (kind) {
        case Kind::Grevlex:
            return grevlex_range(a, b, 0, nvars);
        case Kind::Lex:
            for (int i = 0; i < nvars; ++i) {
                int d = int(a.e[i]) - int(b.e[i]);
                if (d != 0) return d > 0 ? 1 : -1;
            }
            return 0;
        case Kind::ElimLastK: {
            int split = nvars - param;
            int c = grevlex_range(a, b, split, nvars);
            if (c != 0) return c;
            return grevlex_range(a, b, 0, split);
        }
        case Kind::GrevlexLastVar: {
            if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
            int v = param;
            int d = int(a.e[v]) - int(b.e[v]);
            if (d != 0) return d > 0 ? -1 : 1;
            for (int i = nvars - 1; i >= 0; --i) {
                if (i == v) continue;
                d = int(a.e[i]) - int(b.e[i]);
                if (d != 0) return d > 0 ? -1 : 1;
            }
            return 0;
        }
    }
    return 0;
}

std::string MonomialOrder::str() const {
    switch (kind) {
        case Kind::Grevlex: return "grevlex";
        case Kind::Lex: return "lex";
        case Kind::ElimLastK: return "elim(" + std::to_string(param) + ")";
        case Kind::GrevlexLastVar: return "grevlex-last(" + std::to_string(param) + ")";
    }
    return "?";
}

}  // namespace secproj
