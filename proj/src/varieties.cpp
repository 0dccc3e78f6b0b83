#include "secproj/varieties.hpp"

#include <algorithm>
#include <functional>

#include "secproj/io.hpp"

namespace secproj {

VarietyLimits& VarietyLimits::global() {
    static VarietyLimits l;
    return l;
}

namespace {

void check_ambient(int r, const std::string& what) {
    if (r > VarietyLimits::global().max_ambient)
        throw InputError(what + ": ambient dimension " + std::to_string(r) +
                         " exceeds the configured cap " +
                         std::to_string(VarietyLimits::global().max_ambient));
}

// All exponent vectors of total degree d in nv variables, lexicographically
// descending from x0^d; the canonical coordinate order for Veronese maps.
std::vector<Monomial> degree_monomials(int nv, int d) {
    std::vector<Monomial> out;
    Monomial cur;
    std::function<void(int, int)> rec = [&](int var, int remaining) {
        if (var == nv - 1) {
            cur.e[var] = static_cast<uint16_t>(remaining);
            cur.degree += remaining;
            out.push_back(cur);
            cur.degree -= remaining;
            cur.e[var] = 0;
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            cur.e[var] = static_cast<uint16_t>(e);
            cur.degree += e;
            rec(var + 1, remaining - e);
            cur.degree -= e;
            cur.e[var] = 0;
        }
    };
    rec(0, d);
    return out;
}

void fill_dim_degree(Variety& X) {
    HilbertData h = hilbert_series(X.ideal);
    X.dim = h.proj_dim;
    X.degree = h.degree;
    X.ideal.set_saturated(true);
}

void check_nondegenerate(const Ideal& I, const std::string& what) {
    for (const auto& g : I.groebner_basis())
        if (g.total_degree() <= 1)
            throw Error(what + ": ideal contains a linear form (degenerate)");
}

}  // namespace

mpz_class SectionProfile::h0(long j) const {
    if (j < 0) return 0;
    if (j == 0) return 1;
    switch (family) {
        case Family::Veronese: {
            long n = params[0], d = params[1];
            return binomial(n + d * j, n);
        }
        case Family::Segre: {
            long a = params[0], b = params[1];
            return binomial(a + j, a) * binomial(b + j, b);
        }
        case Family::Scroll: {
            // h^0(P(E), O(j)) = sum over monomials m of degree j in k block
            // variables of (sum m_i a_i + 1)
            mpz_class total = 0;
            int k = static_cast<int>(params.size());
            std::vector<int> m(k, 0);
            std::function<void(int, long)> rec = [&](int idx, long remaining) {
                if (idx == k - 1) {
                    m[idx] = static_cast<int>(remaining);
                    long s = 0;
                    for (int i = 0; i < k; ++i) s += static_cast<long>(m[i]) * params[i];
                    total += s + 1;
                    return;
                }
                for (long e = 0; e <= remaining; ++e) {
                    m[idx] = static_cast<int>(e);
                    rec(idx + 1, remaining - e);
                }
            };
            rec(0, j);
            return total;
        }
        case Family::FromHilbert:
            return hilbert->hilbert_function(j);
    }
    return 0;
}

mpz_class Variety::h0(long j) const {
    if (!profile) throw InputError("variety " + name + " has no section-ring profile");
    return profile->h0(j);
}

Variety veronese(int n, int d, const Field& f) {
    if (n < 1 || d < 2) throw InputError("veronese: need n >= 1, d >= 2");
    std::vector<Monomial> mons = degree_monomials(n + 1, d);
    int N = static_cast<int>(mons.size()) - 1;
    check_ambient(N, "veronese");

    RingPtr ring = PolynomialRing::standard(N + 1, f);
    // Binomial relations y_i y_j = y_k y_l whenever the exponent sums agree;
    // one representative pair per degree-2d monomial.
    std::map<Monomial, std::pair<int, int>, std::function<bool(const Monomial&, const Monomial&)>>
        rep([n](const Monomial& a, const Monomial& b) {
            return MonomialOrder::grevlex().compare(a, b, n + 1) < 0;
        });
    std::vector<Polynomial> gens;
    Scalar one = Scalar::one(f);
    for (int i = 0; i <= N; ++i)
        for (int j = i; j <= N; ++j) {
            Monomial sigma = mons[i] * mons[j];
            auto it = rep.find(sigma);
            if (it == rep.end()) {
                rep.emplace(sigma, std::make_pair(i, j));
                continue;
            }
            auto [a, b] = it->second;
            Monomial m1 = Monomial::variable(a) * Monomial::variable(b);
            Monomial m2 = Monomial::variable(i) * Monomial::variable(j);
            gens.push_back(Polynomial::from_terms(ring, {{m1, one}, {m2, -one}}));
        }

    Variety X;
    X.name = "veronese:" + std::to_string(n) + "," + std::to_string(d);
    X.ideal = Ideal(ring, std::move(gens));
    RingPtr src = PolynomialRing::standard(n + 1, f, "s");
    Parametrization P;
    P.source = src;
    for (const auto& m : mons)
        P.forms.push_back(Polynomial::from_terms(src, {{m, one}}));
    P.blocks = {{0, n + 1}};
    X.param = std::move(P);
    X.profile = SectionProfile{SectionProfile::Family::Veronese, {n, d}, nullptr, true};
    X.claims.satisfies_n2 = d >= 2;
    X.claims.np_max = d;
    X.claims.length_two_secants = d >= 3;
    // quadratic Veronese of P^n, n >= 2: conic loci; d >= 3: length-2 loci
    if (n >= 2)
        X.claims.expected_strata = d == 2 ? std::set<int>{-1, 1} : std::set<int>{-1, 0};
    else if (d >= 3)
        X.claims.expected_strata = std::set<int>{-1, 0};
    fill_dim_degree(X);
    if (X.dim != n) throw Error("veronese: dimension check failed");
    mpz_class dn = 1;
    for (int i = 0; i < n; ++i) dn *= d;
    if (X.degree != dn) throw Error("veronese: degree check failed");
    return X;
}

Variety segre(int a, int b, const Field& f) {
    if (a < 1 || b < 1) throw InputError("segre: need a, b >= 1");
    if (b < 2) std::fprintf(stderr, "warning: segre(%d,%d) below the standing hypothesis b >= 2\n", a, b);
    int N = a * b + a + b;
    check_ambient(N, "segre");
    RingPtr ring = PolynomialRing::standard(N + 1, f);
    auto z = [&](int i, int j) { return i * (b + 1) + j; };
    std::vector<Polynomial> gens;
    Scalar one = Scalar::one(f);
    for (int i = 0; i < a + 1; ++i)
        for (int k = i + 1; k < a + 1; ++k)
            for (int j = 0; j < b + 1; ++j)
                for (int l = j + 1; l < b + 1; ++l) {
                    Monomial m1 = Monomial::variable(z(i, j)) * Monomial::variable(z(k, l));
                    Monomial m2 = Monomial::variable(z(i, l)) * Monomial::variable(z(k, j));
                    gens.push_back(Polynomial::from_terms(ring, {{m1, one}, {m2, -one}}));
                }

    Variety X;
    X.name = "segre:" + std::to_string(a) + "," + std::to_string(b);
    X.ideal = Ideal(ring, std::move(gens));
    RingPtr src = PolynomialRing::make(
        [&] {
            std::vector<std::string> names;
            for (int i = 0; i <= a; ++i) names.push_back("s" + std::to_string(i));
            for (int j = 0; j <= b; ++j) names.push_back("t" + std::to_string(j));
            return names;
        }(),
        f);
    Parametrization P;
    P.source = src;
    for (int i = 0; i <= a; ++i)
        for (int j = 0; j <= b; ++j) {
            Monomial m = Monomial::variable(i) * Monomial::variable(a + 1 + j);
            P.forms.push_back(Polynomial::from_terms(src, {{m, one}}));
        }
    P.blocks = {{0, a + 1}, {a + 1, a + b + 2}};
    X.param = std::move(P);
    X.profile = SectionProfile{SectionProfile::Family::Segre, {a, b}, nullptr, true};
    X.claims.satisfies_n2 = true;
    X.claims.np_max = (a == 1 || b == 1) ? kNpAll : 3;
    // Theorem-level stratification: SL_{-1} only when Sec does not fill.
    std::set<int> strata{2};
    if (2 * (a + b) - 1 < N) strata.insert(-1);
    X.claims.expected_strata = strata;
    fill_dim_degree(X);
    if (X.dim != a + b) throw Error("segre: dimension check failed");
    if (X.degree != binomial(a + b, a)) throw Error("segre: degree check failed");
    return X;
}

Variety scroll(const std::vector<int>& degrees, const Field& f) {
    if (degrees.empty()) throw InputError("scroll: empty block list");
    int total = 0;
    for (int a : degrees) {
        if (a < 1) throw InputError("scroll: block degrees must be >= 1");
        total += a;
    }
    if (total < 2) throw InputError("scroll: total degree must be >= 2");
    int k = static_cast<int>(degrees.size());
    int r = total + k - 1;
    check_ambient(r, "scroll");
    RingPtr ring = PolynomialRing::standard(r + 1, f);

    // block i occupies coordinates [off_i, off_i + a_i]
    std::vector<int> off(k);
    for (int i = 0, acc = 0; i < k; ++i) {
        off[i] = acc;
        acc += degrees[i] + 1;
    }
    // 2 x total matrix columns: (x_off+j, x_off+j+1)
    std::vector<std::pair<int, int>> cols;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < degrees[i]; ++j) cols.push_back({off[i] + j, off[i] + j + 1});
    std::vector<Polynomial> gens;
    Scalar one = Scalar::one(f);
    for (size_t c1 = 0; c1 < cols.size(); ++c1)
        for (size_t c2 = c1 + 1; c2 < cols.size(); ++c2) {
            Monomial m1 = Monomial::variable(cols[c1].first) * Monomial::variable(cols[c2].second);
            Monomial m2 = Monomial::variable(cols[c1].second) * Monomial::variable(cols[c2].first);
            if (m1 == m2) continue;
            gens.push_back(Polynomial::from_terms(ring, {{m1, one}, {m2, -one}}));
        }

    Variety X;
    X.name = "scroll:";
    for (int i = 0; i < k; ++i) X.name += (i ? "+" : "") + std::to_string(degrees[i]);
    X.ideal = Ideal(ring, std::move(gens));

    // Equal-degree parametrization x_{i,j} = u_i s^(A-j) t^j with A = max a_i;
    // covers the dense s != 0 chart, which is all sampling needs.
    int A = *std::max_element(degrees.begin(), degrees.end());
    RingPtr src = PolynomialRing::make(
        [&] {
            std::vector<std::string> names{"s", "t"};
            for (int i = 0; i < k; ++i) names.push_back("u" + std::to_string(i));
            return names;
        }(),
        f);
    Parametrization P;
    P.source = src;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j <= degrees[i]; ++j) {
            Monomial m;
            m.e[0] = static_cast<uint16_t>(A - j);
            m.e[1] = static_cast<uint16_t>(j);
            m.e[2 + i] = 1;
            m.degree = A + 1;
            P.forms.push_back(Polynomial::from_terms(src, {{m, one}}));
        }
    P.blocks = {{0, 2}, {2, 2 + k}};
    X.param = std::move(P);
    X.profile = SectionProfile{SectionProfile::Family::Scroll, degrees, nullptr, true};
    X.claims.satisfies_n2 = true;
    X.claims.np_max = kNpAll;
    fill_dim_degree(X);
    if (X.dim != k) throw Error("scroll: dimension check failed");
    if (X.degree != total) throw Error("scroll: degree check failed");
    return X;
}

namespace {

// Pluecker coordinates of the line through a and b: p_ij = a_i b_j - a_j b_i,
// indexed (01),(02),(03),(04),(12),(13),(14),(23),(24),(34).
std::vector<std::pair<int, int>> plucker_index_pairs() {
    std::vector<std::pair<int, int>> idx;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) idx.push_back({i, j});
    return idx;
}

std::vector<Polynomial> plucker_bilinear_forms(const RingPtr& src) {
    const Field& f = src->field;
    Scalar one = Scalar::one(f);
    std::vector<Polynomial> forms;
    for (auto [i, j] : plucker_index_pairs()) {
        Monomial m1 = Monomial::variable(i) * Monomial::variable(5 + j);
        Monomial m2 = Monomial::variable(j) * Monomial::variable(5 + i);
        forms.push_back(Polynomial::from_terms(src, {{m1, one}, {m2, -one}}));
    }
    return forms;
}

std::vector<Polynomial> plucker_quadrics(const RingPtr& ring) {
    auto pairs = plucker_index_pairs();
    std::map<std::pair<int, int>, int> at;
    for (size_t k = 0; k < pairs.size(); ++k) at[pairs[k]] = static_cast<int>(k);
    const Field& f = ring->field;
    Scalar one = Scalar::one(f);
    std::vector<Polynomial> gens;
    for (int h = 0; h < 5; ++h) {
        std::vector<int> rest;
        for (int v = 0; v < 5; ++v)
            if (v != h) rest.push_back(v);
        int i = rest[0], j = rest[1], k = rest[2], l = rest[3];
        auto var = [&](int u, int v) { return Monomial::variable(at[{u, v}]); };
        std::vector<Term> terms = {{var(i, j) * var(k, l), one},
                                   {var(i, k) * var(j, l), -one},
                                   {var(i, l) * var(j, k), one}};
        gens.push_back(Polynomial::from_terms(ring, std::move(terms)));
    }
    return gens;
}

}  // namespace

Variety grassmann_g14_section(int cut, const Field& f, uint64_t seed) {
    if (cut < 0 || cut > 3) throw InputError("g14: cut must be between 0 and 3");
    for (int attempt = 0; attempt < 5; ++attempt) {
        Rng rng = Rng::derived(seed, 0x614 + attempt);
        RingPtr ring = PolynomialRing::standard(10, f);
        std::vector<Polynomial> gens = plucker_quadrics(ring);
        std::vector<std::vector<Scalar>> cut_rows;

        for (int c = 0; c < cut; ++c) {
            int nv = ring->nvars;
            // x_last = sum of random small multiples of the earlier variables
            std::vector<Scalar> combo(nv, Scalar::zero(f));
            for (int v = 0; v < nv - 1; ++v) combo[v] = rng.element(f, 4);
            std::vector<Polynomial> image;
            RingPtr sub = ring->drop_last(1);
            for (int v = 0; v < nv - 1; ++v) image.push_back(Polynomial::variable(sub, v));
            Polynomial last = Polynomial::zero(sub);
            for (int v = 0; v < nv - 1; ++v)
                last = last + Polynomial::variable(sub, v).scaled(combo[v]);
            image.push_back(last);

            // record the hyperplane x_last - combo over the full P^9 coords
            std::vector<Scalar> row(10, Scalar::zero(f));
            for (int v = 0; v < nv - 1; ++v) row[v] = -combo[v];
            row[nv - 1] = Scalar::one(f);
            cut_rows.push_back(std::move(row));

            std::vector<Polynomial> next;
            for (const auto& g : gens) next.push_back(g.substitute(image).normalized());
            gens = std::move(next);
            ring = sub;
        }

        Variety X;
        X.name = "g14:" + std::to_string(cut);
        X.ideal = Ideal(ring, gens);
        HilbertData h = hilbert_series(X.ideal);
        if (h.proj_dim != 6 - cut || h.degree != 5) continue;  // degenerate cut; retry
        X.dim = h.proj_dim;
        X.degree = h.degree;
        X.ideal.set_saturated(true);
        auto hd = std::make_shared<HilbertData>(h);
        X.profile = SectionProfile{SectionProfile::Family::FromHilbert, {cut}, hd, true};
        X.claims.satisfies_n2 = true;
        X.claims.np_max = 2;
        X.claims.expected_strata = std::set<int>{(6 - cut) - 2};
        GrassmannSectionData gd;
        gd.source = PolynomialRing::make({"a0", "a1", "a2", "a3", "a4", "b0", "b1", "b2", "b3", "b4"}, f);
        gd.plucker = plucker_bilinear_forms(gd.source);
        gd.cuts = std::move(cut_rows);
        X.grassmann = std::move(gd);
        return X;
    }
    throw Error("g14: degenerate section after retry budget");
}

Variety complete_intersection(std::vector<Polynomial> forms, const std::string& name) {
    if (forms.empty()) throw InputError("complete_intersection: no forms");
    RingPtr ring = forms.front().ring();
    for (const auto& g : forms) {
        if (!g.is_homogeneous() || g.is_zero())
            throw InputError("complete_intersection: forms must be nonzero homogeneous");
        if (static_cast<int>(g.total_degree()) > VarietyLimits::global().max_degree)
            throw InputError("complete_intersection: generator degree exceeds cap");
    }
    Variety X;
    X.name = name;
    X.ideal = Ideal(ring, std::move(forms));
    HilbertData h = hilbert_series(X.ideal);
    int codim = ring->nvars - 1 - h.proj_dim;
    if (codim != static_cast<int>(X.ideal.gens().size()))
        throw InputError("complete_intersection: codimension does not match the number of forms");
    X.dim = h.proj_dim;
    X.degree = h.degree;
    X.ideal.set_saturated(true);
    return X;
}

Ideal implicitize(const Parametrization& P, const RingPtr& target) {
    if (P.forms.empty()) throw InputError("implicitize: no forms");
    uint32_t deg = P.forms.front().total_degree();
    for (const auto& g : P.forms)
        if (g.total_degree() != deg || g.is_zero())
            throw InputError("implicitize: forms must be nonzero of equal degree");
    // cheap common-factor guard: shared monomial divisor across all forms
    {
        Monomial gcd_all;
        bool first = true;
        for (const auto& g : P.forms)
            for (const auto& t : g.terms()) {
                if (first) {
                    gcd_all = t.mono;
                    first = false;
                } else {
                    Monomial m;
                    uint32_t d = 0;
                    for (int v = 0; v < kMaxVars; ++v) {
                        m.e[v] = std::min(gcd_all.e[v], t.mono.e[v]);
                        d += m.e[v];
                    }
                    m.degree = d;
                    gcd_all = m;
                }
            }
        if (!first && !gcd_all.is_one())
            throw InputError("implicitize: forms share a common factor");
    }
    if (static_cast<int>(P.forms.size()) != target->nvars)
        throw InputError("implicitize: target ring size mismatch");

    // graph ideal in [target | source], eliminate the source block
    std::vector<std::string> names = target->names;
    for (const auto& nm : P.source->names) names.push_back(nm + "_src");
    RingPtr graph_ring = PolynomialRing::make(names, target->field);
    std::vector<int> src_map(P.source->nvars);
    for (int i = 0; i < P.source->nvars; ++i) src_map[i] = target->nvars + i;
    std::vector<Polynomial> gens;
    for (int i = 0; i < target->nvars; ++i)
        gens.push_back(Polynomial::variable(graph_ring, i) -
                       P.forms[i].map_to(graph_ring, src_map));
    Ideal graph(graph_ring, std::move(gens));
    Ideal elim = eliminate(graph, P.source->nvars);
    std::vector<int> down(elim.ring()->nvars);
    for (int i = 0; i < elim.ring()->nvars; ++i) down[i] = i;
    std::vector<Polynomial> moved;
    for (const auto& g : elim.gens()) moved.push_back(g.map_to(target, down));
    Ideal out = saturate_irrelevant(Ideal(target, std::move(moved)));
    check_nondegenerate(out, "implicitize");
    return out;
}

bool point_on_variety(const std::vector<Scalar>& pt, const Ideal& I) {
    for (const auto& g : I.gens())
        if (!g.evaluate(pt).is_zero()) return false;
    return true;
}

namespace {

std::vector<Scalar> sample_source(const Parametrization& P, Rng& rng) {
    const Field& f = P.source->field;
    for (;;) {
        std::vector<Scalar> s;
        for (int i = 0; i < P.source->nvars; ++i) s.push_back(rng.element(f, 20));
        bool ok = true;
        for (auto [from, to] : P.blocks) {
            bool nonzero = false;
            for (int i = from; i < to; ++i) nonzero = nonzero || !s[i].is_zero();
            ok = ok && nonzero;
        }
        if (ok) return s;
    }
}

std::vector<Scalar> evaluate_map(const std::vector<Polynomial>& forms,
                                 const std::vector<Scalar>& src) {
    std::vector<Scalar> img;
    img.reserve(forms.size());
    for (const auto& g : forms) img.push_back(g.evaluate(src));
    return img;
}

bool all_zero(const std::vector<Scalar>& v) {
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

// Random solution of the cut constraints: fix a, solve the linear system
// for b, take a random kernel combination.
std::vector<Scalar> grassmann_sample(const GrassmannSectionData& gd, Rng& rng, int ncuts) {
    const Field& f = gd.source->field;
    for (;;) {
        std::vector<Scalar> a;
        for (int i = 0; i < 5; ++i) a.push_back(rng.element(f, 20));
        if (all_zero(a)) continue;
        // rows: for each cut, the linear form in b:
        //   sum_j b_j * (sum over pluecker coords coef * d p / d b_j at (a, .))
        // p_ij = a_i b_j - a_j b_i is linear in b for fixed a.
        auto pairs = plucker_index_pairs();
        std::vector<std::vector<Scalar>> rows;
        for (int c = 0; c < ncuts; ++c) {
            std::vector<Scalar> row(5, Scalar::zero(f));
            for (size_t k = 0; k < pairs.size(); ++k) {
                const Scalar& coef = gd.cuts[c][k];
                if (coef.is_zero()) continue;
                auto [i, j] = pairs[k];
                row[j] += coef * a[i];
                row[i] -= coef * a[j];
            }
            rows.push_back(std::move(row));
        }
        // kernel of rows (ncuts x 5) by Gaussian elimination
        int n = 5;
        std::vector<int> pivot_col;
        size_t rix = 0;
        for (int col = 0; col < n && rix < rows.size(); ++col) {
            size_t sel = SIZE_MAX;
            for (size_t r = rix; r < rows.size(); ++r)
                if (!rows[r][col].is_zero()) { sel = r; break; }
            if (sel == SIZE_MAX) continue;
            std::swap(rows[rix], rows[sel]);
            Scalar inv = rows[rix][col].inverse();
            for (int cc = 0; cc < n; ++cc) rows[rix][cc] *= inv;
            for (size_t r = 0; r < rows.size(); ++r) {
                if (r == rix || rows[r][col].is_zero()) continue;
                Scalar factor = rows[r][col];
                for (int cc = 0; cc < n; ++cc) rows[r][cc] -= factor * rows[rix][cc];
            }
            pivot_col.push_back(col);
            ++rix;
        }
        std::vector<int> free_cols;
        for (int col = 0; col < n; ++col)
            if (std::find(pivot_col.begin(), pivot_col.end(), col) == pivot_col.end())
                free_cols.push_back(col);
        if (free_cols.empty()) continue;
        std::vector<Scalar> b(n, Scalar::zero(f));
        for (int fc : free_cols) b[fc] = rng.element(f, 20);
        bool nonzero = false;
        for (int fc : free_cols) nonzero = nonzero || !b[fc].is_zero();
        if (!nonzero) continue;
        for (size_t r = 0; r < pivot_col.size(); ++r) {
            Scalar v = Scalar::zero(f);
            for (int fc : free_cols) v -= rows[r][fc] * b[fc];
            b[pivot_col[r]] = v;
        }
        std::vector<Scalar> src = a;
        src.insert(src.end(), b.begin(), b.end());
        std::vector<Scalar> full = evaluate_map(gd.plucker, src);
        // survive coordinates: first 10 - ncuts
        std::vector<Scalar> pt(full.begin(), full.end() - ncuts);
        if (!all_zero(pt)) return pt;
    }
}

}  // namespace

std::vector<Scalar> random_point(const Variety& X, Rng& rng) {
    if (X.grassmann) {
        auto pt = grassmann_sample(*X.grassmann, rng,
                                   static_cast<int>(X.grassmann->cuts.size()));
        if (!point_on_variety(pt, X.ideal)) throw Error("g14 sampler produced an off-variety point");
        return pt;
    }
    if (!X.param) throw InputError("variety " + X.name + " has no parametrization");
    for (;;) {
        std::vector<Scalar> src = sample_source(*X.param, rng);
        std::vector<Scalar> img = evaluate_map(X.param->forms, src);
        if (all_zero(img)) continue;
        if (!point_on_variety(img, X.ideal)) throw Error("sampler produced an off-variety point");
        return img;
    }
}

std::vector<Scalar> random_tangent_point(const Variety& X, Rng& rng) {
    if (!X.param) throw InputError("variety " + X.name + " has no parametrization");
    const Field& f = X.ideal.ring()->field;
    for (;;) {
        std::vector<Scalar> src = sample_source(*X.param, rng);
        std::vector<Scalar> base = evaluate_map(X.param->forms, src);
        if (all_zero(base)) continue;
        // q = F(s) + sum_i lambda_i dF/ds_i (s): a point of the embedded
        // tangent space at F(s)
        std::vector<Scalar> q = base;
        for (int v = 0; v < X.param->source->nvars; ++v) {
            Scalar lam = rng.element(f, 9);
            if (lam.is_zero()) continue;
            for (size_t c = 0; c < X.param->forms.size(); ++c)
                q[c] += lam * X.param->forms[c].derivative(v).evaluate(src);
        }
        if (all_zero(q)) continue;
        return q;
    }
}

NumericalInvariants numerical_invariants(const Variety& X, uint64_t seed) {
    if (!X.profile) throw InputError("numerical_invariants: profile missing on " + X.name);
    HilbertData h = hilbert_series(X.ideal);
    NumericalInvariants inv;
    inv.dim = h.proj_dim;
    inv.degree = h.degree;
    inv.delta = inv.dim + inv.degree - X.h0(1);
    inv.chi = chi_coefficients(h);
    if (inv.dim >= 1) {
        mpq_class chi_nm1 = inv.chi[inv.dim - 1];
        if (chi_nm1.get_den() != 1) throw Error("chi coefficient not an integer");
        mpz_class g_chi = 1 - chi_nm1.get_num();
        mpz_class g_slice = sectional_genus_by_slicing(X.ideal, seed);
        if (g_chi != g_slice)
            throw Error("sectional genus cross-check failed: chi path " + g_chi.get_str() +
                        " vs slicing " + g_slice.get_str());
        inv.sectional_genus = g_slice;
    }
    return inv;
}

Variety variety_from_spec(const std::string& spec, const Field& f, uint64_t seed) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw InputError("bad variety spec: " + spec);
    std::string kind = spec.substr(0, colon);
    std::string args = spec.substr(colon + 1);
    auto split = [](const std::string& s, char sep) {
        std::vector<std::string> out;
        std::string cur;
        for (char c : s + sep) {
            if (c == sep) {
                if (!cur.empty()) out.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        return out;
    };
    if (kind == "veronese") {
        auto parts = split(args, ',');
        if (parts.size() != 2) throw InputError("veronese spec needs n,d");
        return veronese(std::stoi(parts[0]), std::stoi(parts[1]), f);
    }
    if (kind == "segre") {
        auto parts = split(args, ',');
        if (parts.size() != 2) throw InputError("segre spec needs a,b");
        return segre(std::stoi(parts[0]), std::stoi(parts[1]), f);
    }
    if (kind == "scroll") {
        auto parts = split(args, '+');
        std::vector<int> degs;
        for (const auto& p : parts) degs.push_back(std::stoi(p));
        return scroll(degs, f);
    }
    if (kind == "g14") return grassmann_g14_section(std::stoi(args), f, seed);
    if (kind == "ci" || kind == "file") {
        IdealFile file = read_ideal_file(args);
        if (file.ring->field != f)
            std::fprintf(stderr, "note: using field %s from %s\n", file.ring->field.str().c_str(),
                         args.c_str());
        if (kind == "ci") return complete_intersection(file.polys, "ci:" + args);
        Variety X;
        X.name = "file:" + args;
        X.ideal = saturate_irrelevant(Ideal(file.ring, file.polys));
        HilbertData h = hilbert_series(X.ideal);
        X.dim = h.proj_dim;
        X.degree = h.degree;
        return X;
    }
    throw InputError("unknown variety kind: " + kind);
}

}  // namespace secproj
