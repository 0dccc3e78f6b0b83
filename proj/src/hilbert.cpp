#include "secproj/hilbert.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "secproj/rng.hpp"

namespace secproj {

namespace {

using ZPoly = std::vector<mpz_class>;  // coefficients, degree = size-1

ZPoly zp_one() { return {mpz_class(1)}; }

void zp_trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly c(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

void zp_add_shifted(ZPoly& a, const ZPoly& b, int shift) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, mpz_class(0));
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
}

// 1 - t^d
ZPoly zp_one_minus_power(int d) {
    ZPoly p(d + 1, mpz_class(0));
    p[0] = 1;
    p[d] = -1;
    return p;
}

void remove_non_minimal(std::vector<Monomial>& gens) {
    std::sort(gens.begin(), gens.end(),
              [](const Monomial& a, const Monomial& b) { return a.degree < b.degree; });
    std::vector<Monomial> out;
    for (const auto& m : gens) {
        bool redundant = false;
        for (const auto& kept : out)
            if (kept.divides(m)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(m);
    }
    gens = std::move(out);
}

ZPoly numerator_rec(std::vector<Monomial> gens);

// Split generators into variable-disjoint groups; the numerator multiplies.
ZPoly numerator_split(std::vector<Monomial>& gens) {
    size_t n = gens.size();
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (size_t i = 0; i < n; ++i) {
        if (comp[i] >= 0) continue;
        comp[i] = ncomp;
        std::vector<size_t> stack{i};
        while (!stack.empty()) {
            size_t cur = stack.back();
            stack.pop_back();
            for (size_t j = 0; j < n; ++j)
                if (comp[j] < 0 && !gens[cur].coprime_with(gens[j])) {
                    comp[j] = ncomp;
                    stack.push_back(j);
                }
        }
        ++ncomp;
    }
    if (ncomp <= 1) return {};
    ZPoly acc = zp_one();
    for (int c = 0; c < ncomp; ++c) {
        std::vector<Monomial> part;
        for (size_t i = 0; i < n; ++i)
            if (comp[i] == c) part.push_back(gens[i]);
        acc = zp_mul(acc, numerator_rec(std::move(part)));
    }
    return acc;
}

ZPoly numerator_rec(std::vector<Monomial> gens) {
    remove_non_minimal(gens);
    if (gens.empty()) return zp_one();
    if (gens.front().degree == 0) return {};  // unit ideal

    // Pure powers: product formula.
    bool all_pure = true;
    for (const auto& m : gens) {
        int support = 0;
        for (int v = 0; v < kMaxVars; ++v) support += m.e[v] > 0;
        if (support > 1) {
            all_pure = false;
            break;
        }
    }
    if (all_pure) {
        ZPoly acc = zp_one();
        for (const auto& m : gens) acc = zp_mul(acc, zp_one_minus_power(m.degree));
        return acc;
    }

    if (ZPoly split = numerator_split(gens); !split.empty()) return split;

    // Pivot on the most shared variable.
    int counts[kMaxVars] = {0};
    for (const auto& m : gens)
        for (int v = 0; v < kMaxVars; ++v)
            if (m.e[v]) ++counts[v];
    int pivot = 0;
    for (int v = 1; v < kMaxVars; ++v)
        if (counts[v] > counts[pivot]) pivot = v;

    // N(I) = N(I + (x)) + t * N(I : x)
    std::vector<Monomial> plus, colon;
    plus.push_back(Monomial::variable(pivot));
    for (const auto& m : gens) {
        if (m.e[pivot] == 0) plus.push_back(m);
        Monomial q = m;
        if (q.e[pivot] > 0) {
            q.e[pivot] -= 1;
            q.degree -= 1;
        }
        colon.push_back(q);
    }
    ZPoly a = numerator_rec(std::move(plus));
    ZPoly b = numerator_rec(std::move(colon));
    zp_add_shifted(a, b, 1);
    zp_trim(a);
    return a;
}

}  // namespace

std::vector<mpz_class> monomial_ideal_numerator(std::vector<Monomial> gens, int /*nvars*/) {
    ZPoly n = numerator_rec(std::move(gens));
    zp_trim(n);
    if (n.empty()) n = {mpz_class(0)};
    return n;
}

mpz_class binomial(long n, long k) {
    if (k < 0 || n < 0 || n < k) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

mpz_class binomial_poly(const mpz_class& n, int k) {
    if (k < 0) return 0;
    mpz_class num = 1;
    for (int s = 0; s < k; ++s) num *= n - s;
    mpz_class den;
    mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(k));
    mpz_class q = num / den;  // exact: k! divides any product of k consecutive integers
    return q;
}

HilbertData hilbert_series(const Ideal& I) {
    const RingPtr& ring = I.ring();
    HilbertData h;
    h.nvars = ring->nvars;

    std::vector<Monomial> lts;
    for (const auto& g : I.groebner_basis()) lts.push_back(g.leading_monomial());
    h.numerator = monomial_ideal_numerator(std::move(lts), ring->nvars);

    // Cancel (1-t)^c.
    h.reduced = h.numerator;
    int cancelled = 0;
    auto value_at_one = [](const ZPoly& p) {
        mpz_class s = 0;
        for (const auto& c : p) s += c;
        return s;
    };
    if (h.reduced.size() == 1 && h.reduced[0] == 0) {
        // unit ideal: empty scheme
        h.krull_dim = 0;
        h.proj_dim = -1;
        h.degree = 0;
        return h;
    }
    while (cancelled < h.nvars && value_at_one(h.reduced) == 0) {
        // divide by (1-t): quotient coefficients are the prefix sums
        ZPoly q(h.reduced.size() - 1, mpz_class(0));
        mpz_class carry = 0;
        for (size_t i = 0; i < q.size(); ++i) {
            q[i] = h.reduced[i] + carry;
            carry = q[i];
        }
        h.reduced = q;
        zp_trim(h.reduced);
        if (h.reduced.empty()) h.reduced = {mpz_class(0)};
        ++cancelled;
    }
    h.krull_dim = h.nvars - cancelled;
    h.proj_dim = h.krull_dim - 1;
    h.degree = value_at_one(h.reduced);
    if (h.krull_dim == 0) {
        // finite-length module; projectively empty
        h.proj_dim = -1;
    }
    return h;
}

mpz_class HilbertData::hilbert_function(long j) const {
    if (j < 0) return 0;
    mpz_class s = 0;
    for (size_t i = 0; i < numerator.size(); ++i)
        s += numerator[i] * binomial(nvars - 1 + j - static_cast<long>(i), nvars - 1);
    return s;
}

mpz_class HilbertData::hilbert_polynomial(long j) const {
    int d = krull_dim;
    if (d <= 0) return 0;
    mpz_class s = 0;
    for (size_t i = 0; i < reduced.size(); ++i)
        s += reduced[i] * binomial_poly(mpz_class(d - 1 + j - static_cast<long>(i)), d - 1);
    return s;
}

mpz_class hilbert_function(const Ideal& I, long j) {
    if (j < 0) throw InputError("hilbert_function: negative degree");
    return hilbert_series(I).hilbert_function(j);
}

std::vector<mpq_class> chi_coefficients(const HilbertData& h) {
    int n = h.proj_dim;
    if (n < 0) return {};
    // Solve P(k) = sum chi_i C(k+i-1, i) by evaluating at k = 0..n.
    int m = n + 1;
    std::vector<std::vector<mpq_class>> a(m, std::vector<mpq_class>(m + 1, mpq_class(0)));
    for (int k = 0; k < m; ++k) {
        for (int i = 0; i < m; ++i) a[k][i] = binomial_poly(mpz_class(k + i - 1), i);
        a[k][m] = h.hilbert_polynomial(k);
    }
    // Gaussian elimination.
    for (int col = 0; col < m; ++col) {
        int piv = -1;
        for (int r = col; r < m; ++r)
            if (a[r][col] != 0) { piv = r; break; }
        if (piv < 0) throw Error("chi system singular");
        std::swap(a[piv], a[col]);
        for (int r = 0; r < m; ++r) {
            if (r == col || a[r][col] == 0) continue;
            mpq_class f = a[r][col] / a[col][col];
            for (int c = col; c <= m; ++c) a[r][c] -= f * a[col][c];
        }
    }
    std::vector<mpq_class> chi(m);
    for (int i = 0; i < m; ++i) chi[i] = a[i][m] / a[i][i];
    return chi;
}

mpz_class sectional_genus_by_slicing(const Ideal& I, uint64_t seed, int retry_budget) {
    HilbertData h = hilbert_series(I);
    int n = h.proj_dim;
    if (n < 1) throw InputError("sectional genus needs a positive-dimensional scheme");
    const RingPtr& ring = I.ring();
    for (int attempt = 0; attempt < retry_budget; ++attempt) {
        Rng rng = Rng::derived(seed, 0xC5EC + attempt);
        Ideal cur = I;
        for (int s = 0; s < n - 1; ++s) {
            Polynomial ell = Polynomial::zero(ring);
            for (int v = 0; v < ring->nvars; ++v)
                ell = ell + Polynomial::variable(ring, v).scaled(rng.element(ring->field, 20));
            if (ell.is_zero()) continue;
            cur = saturate_irrelevant(ideal_sum(cur, Ideal(ring, {ell})));
        }
        HilbertData hc = hilbert_series(cur);
        if (hc.proj_dim == 1 && hc.degree == h.degree)
            return 1 - hc.hilbert_polynomial(0);
    }
    throw Error("sectional genus: degenerate slice after retry budget");
}

}  // namespace secproj
