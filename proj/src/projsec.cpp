#include "secproj/projsec.hpp"

#include <algorithm>
#include <sstream>

namespace secproj {

namespace {

void require_valid_center(const Variety& X, const std::vector<Scalar>& q) {
    const RingPtr& ring = X.ideal.ring();
    if (static_cast<int>(q.size()) != ring->nvars)
        throw InputError("center has wrong coordinate count");
    bool nonzero = false;
    for (const auto& c : q) nonzero = nonzero || !c.is_zero();
    if (!nonzero) throw InputError("center is not a projective point");
    if (point_on_variety(q, X.ideal))
        throw InputError("center lies on the variety (inner projections are not supported)");
    if (X.codim() < 2)
        throw InputError("projection requires codimension >= 2");
}

// M with M e_r = q and unit columns elsewhere (pivot column swapped out).
ScalarMatrix center_to_last_coordinate(const std::vector<Scalar>& q, const Field& f) {
    int n = static_cast<int>(q.size());
    int piv = -1;
    for (int i = 0; i < n; ++i)
        if (!q[i].is_zero()) piv = i;
    ScalarMatrix M = ScalarMatrix::identity(n, f);
    // column r becomes q; column piv becomes e_r (keeps M invertible)
    for (int i = 0; i < n; ++i) M.at(i, n - 1) = q[i];
    if (piv != n - 1) {
        for (int i = 0; i < n; ++i) M.at(i, piv) = Scalar::zero(f);
        M.at(n - 1, piv) = Scalar::one(f);
    }
    return M;
}

Ideal linear_span_cone(const RingPtr& ring, const std::vector<Polynomial>& lambda_linears) {
    // same linear forms, now read in the ambient ring (they omit x_r, so the
    // vanishing locus is the cone over Lambda with vertex e_r)
    std::vector<int> up(static_cast<size_t>(ring->nvars) - 1);
    for (size_t i = 0; i < up.size(); ++i) up[i] = static_cast<int>(i);
    std::vector<Polynomial> gens;
    for (const auto& l : lambda_linears) gens.push_back(l.map_to(ring, up));
    return Ideal(ring, std::move(gens));
}

int dimension_of(const Ideal& sigma) {
    if (sigma.is_unit()) return -1;
    return hilbert_series(sigma).proj_dim;
}

int span_codim(const Ideal& sigma) {
    int c = 0;
    for (const auto& g : sigma.groebner_basis())
        if (g.total_degree() == 1) ++c;
    return c;
}

SecantReport finish_report(Ideal sigma, std::string method) {
    SecantReport rep;
    rep.s = dimension_of(sigma);
    rep.span_dim = rep.s < 0 ? -1 : sigma.ring()->nvars - 1 - span_codim(sigma);
    if (rep.s >= 0) rep.quadric = classify_quadric(sigma);
    rep.sigma = std::move(sigma);
    rep.method = std::move(method);
    return rep;
}

}  // namespace

ProjectionResult project(const Variety& X, const std::vector<Scalar>& q) {
    require_valid_center(X, q);
    const RingPtr& ring = X.ideal.ring();
    ProjectionResult out;
    out.center = q;
    out.change = center_to_last_coordinate(q, ring->field);
    out.changed = apply_linear_change(X.ideal, out.change);
    Ideal J = saturate_irrelevant(eliminate(out.changed, 1));
    for (const auto& g : J.groebner_basis())
        if (g.total_degree() <= 1) throw Error("projected ideal is degenerate");
    HilbertData h = hilbert_series(J);
    out.image.name = X.name + "/projected";
    out.image.ideal = J;
    out.image.dim = h.proj_dim;
    out.image.degree = h.degree;
    out.degree_preserved = (h.degree == X.degree && h.proj_dim == X.dim);
    return out;
}

QuadricClass classify_quadric(const Ideal& sigma) {
    QuadricClass qc;
    const RingPtr& ring = sigma.ring();
    const auto& gb = sigma.groebner_basis();
    if (gb.empty() || sigma.is_unit()) {
        qc.type = "empty";
        return qc;
    }
    std::vector<Polynomial> linears, rest;
    for (const auto& g : gb)
        (g.total_degree() == 1 ? linears : rest).push_back(g);
    int c = static_cast<int>(linears.size());
    qc.span_dim = ring->nvars - 1 - c;
    if (rest.empty()) {
        qc.type = "linear-subspace";
        return qc;
    }

    // Substitute the span coordinates away.  Reduced-basis linear forms have
    // distinct leading variables and free-variable tails.
    std::vector<int> leading(ring->nvars, -1);  // var -> index into linears
    for (int k = 0; k < c; ++k) {
        const Monomial& lm = linears[k].leading_monomial();
        for (int v = 0; v < ring->nvars; ++v)
            if (lm.e[v]) leading[v] = k;
    }
    std::vector<int> free_vars;
    for (int v = 0; v < ring->nvars; ++v)
        if (leading[v] < 0) free_vars.push_back(v);
    RingPtr span_ring = PolynomialRing::standard(static_cast<int>(free_vars.size()),
                                                 ring->field, "z");
    std::vector<int> to_span(ring->nvars, -1);
    for (size_t i = 0; i < free_vars.size(); ++i) to_span[free_vars[i]] = static_cast<int>(i);

    std::vector<Polynomial> image;
    for (int v = 0; v < ring->nvars; ++v) {
        if (leading[v] < 0) {
            image.push_back(Polynomial::variable(span_ring, to_span[v]));
        } else {
            // x_v = x_v - l_k (tail only involves free variables)
            const Polynomial& l = linears[leading[v]].monic();
            Polynomial tail = Polynomial::zero(span_ring);
            for (size_t t = 1; t < l.terms().size(); ++t) {
                int tv = -1;
                for (int u = 0; u < ring->nvars; ++u)
                    if (l.terms()[t].mono.e[u]) tv = u;
                tail = tail + Polynomial::variable(span_ring, to_span[tv]).scaled(-l.terms()[t].coef);
            }
            image.push_back(std::move(tail));
        }
    }
    std::vector<Polynomial> restricted;
    for (const auto& g : rest) {
        Polynomial rg = g.substitute(image);
        if (!rg.is_zero()) restricted.push_back(rg.normalized());
    }
    Ideal res(span_ring, std::move(restricted));
    const auto& rgb = res.groebner_basis();
    if (rgb.size() != 1 || rgb[0].total_degree() != 2) {
        qc.type = "not-a-quadric";
        return qc;
    }

    // Diagonalize the symmetric matrix of the residual quadric (char != 2).
    const Field& f = ring->field;
    int m1 = span_ring->nvars;
    const Scalar half = Scalar::from_int(2, f).inverse();
    std::vector<std::vector<Scalar>> A(m1, std::vector<Scalar>(m1, Scalar::zero(f)));
    for (const auto& t : rgb[0].terms()) {
        int vs[2], k = 0;
        for (int v = 0; v < m1 && k < 2; ++v)
            for (int e = 0; e < t.mono.e[v] && k < 2; ++e) vs[k++] = v;
        if (vs[0] == vs[1])
            A[vs[0]][vs[0]] += t.coef;
        else {
            A[vs[0]][vs[1]] += t.coef * half;
            A[vs[1]][vs[0]] += t.coef * half;
        }
    }
    int rank = 0;
    for (int i = 0; i < m1; ++i) {
        if (A[i][i].is_zero()) {
            // bring a nonzero entry to the diagonal: row/col operation
            for (int jj = i + 1; jj < m1; ++jj)
                if (!A[i][jj].is_zero()) {
                    for (int u = 0; u < m1; ++u) A[i][u] += A[jj][u];
                    for (int u = 0; u < m1; ++u) A[u][i] += A[u][jj];
                    break;
                }
        }
        if (A[i][i].is_zero()) {
            // row i is zero against the remaining block; swap a later
            // nonzero diagonal in if one exists
            for (int jj = i + 1; jj < m1; ++jj)
                if (!A[jj][jj].is_zero()) {
                    std::swap(A[i], A[jj]);
                    for (int u = 0; u < m1; ++u) std::swap(A[u][i], A[u][jj]);
                    break;
                }
        }
        if (A[i][i].is_zero()) continue;
        ++rank;
        Scalar inv = A[i][i].inverse();
        for (int jj = i + 1; jj < m1; ++jj) {
            if (A[jj][i].is_zero()) continue;
            Scalar factor = A[jj][i] * inv;
            for (int u = 0; u < m1; ++u) A[jj][u] -= factor * A[i][u];
            for (int u = 0; u < m1; ++u) A[u][jj] -= factor * A[u][i];
        }
    }
    qc.is_quadric = true;
    qc.rank = rank;
    qc.smooth = rank == m1;
    int m = qc.span_dim;
    if (rank == 1)
        qc.type = "double-hyperplane-section";
    else if (m == 1 && rank == 2)
        qc.type = "pair-of-points";
    else if (m == 2 && rank == 3)
        qc.type = "smooth-conic";
    else if (m == 3 && rank == 4)
        qc.type = "smooth-quadric-surface";
    else if (qc.smooth)
        qc.type = "smooth-quadric";
    else
        qc.type = "quadric-cone-rank-" + std::to_string(rank);
    return qc;
}

SecantReport secant_locus_incidence(const Variety& X, const std::vector<Scalar>& q) {
    require_valid_center(X, q);
    const RingPtr& ring = X.ideal.ring();
    int n = ring->nvars;
    if (2 * n > kMaxVars - 2)
        throw BudgetError("incidence method: doubled ring exceeds the variable cap");

    std::vector<std::string> names = ring->names;
    for (int i = 0; i < n; ++i) names.push_back("y" + std::to_string(i) + "_");
    RingPtr dbl = PolynomialRing::make(names, ring->field);
    std::vector<int> xs(n), ys(n);
    for (int i = 0; i < n; ++i) {
        xs[i] = i;
        ys[i] = n + i;
    }

    std::vector<Polynomial> gens;
    for (const auto& g : X.ideal.gens()) {
        gens.push_back(g.map_to(dbl, xs));
        gens.push_back(g.map_to(dbl, ys));
    }
    auto xv = [&](int i) { return Polynomial::variable(dbl, i); };
    auto yv = [&](int i) { return Polynomial::variable(dbl, n + i); };
    auto minor2 = [&](int i, int j) { return xv(i) * yv(j) - xv(j) * yv(i); };
    // 3x3 minors of rows (q, x, y): q is constant, so these are quadrics
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                Polynomial det = minor2(b, c).scaled(q[a]) - minor2(a, c).scaled(q[b]) +
                                 minor2(a, b).scaled(q[c]);
                if (!det.is_zero()) gens.push_back(det.normalized());
            }
    Ideal B(dbl, std::move(gens));

    std::vector<Polynomial> diag;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) diag.push_back(minor2(i, j));
    Ideal Bsat = saturate(B, Ideal(dbl, std::move(diag)));

    Ideal in_x = eliminate(Bsat, n);
    std::vector<int> down(n);
    for (int i = 0; i < n; ++i) down[i] = i;
    std::vector<Polynomial> moved;
    for (const auto& g : in_x.gens()) moved.push_back(g.map_to(ring, down));
    Ideal sigma = saturate_irrelevant(Ideal(ring, std::move(moved)));
    return finish_report(std::move(sigma), "incidence");
}

SecantReport secant_locus_conductor(const Variety& X, const std::vector<Scalar>& q) {
    require_valid_center(X, q);
    if (!X.claims.satisfies_n2)
        throw InputError("conductor method requires the N_2 registry flag on " + X.name);
    const RingPtr& ring = X.ideal.ring();
    int n = ring->nvars;

    ScalarMatrix M = center_to_last_coordinate(q, ring->field);
    Ideal changed = apply_linear_change(X.ideal, M);
    const auto& gb = changed.groebner_basis(MonomialOrder::elim_last(1));

    RingPtr S = ring->drop_last(1);
    std::vector<int> down(n - 1);
    for (int i = 0; i < n - 1; ++i) down[i] = i;
    std::vector<Polynomial> lambda_gens;
    for (const auto& g : gb) {
        uint32_t xr_deg = g.degree_in_vars(n - 1, n);
        if (xr_deg == 0) {
            lambda_gens.push_back(g.map_to(S, down));
        } else if (xr_deg == 1) {
            // g = a x_r + b: the coefficient a is a conductor generator,
            // with witness a*x_r - (-b) = g in the ideal by construction.
            std::vector<Term> aterms, bterms;
            for (const auto& t : g.terms()) {
                if (t.mono.e[n - 1]) {
                    Term at{t.mono, t.coef};
                    at.mono.e[n - 1] = 0;
                    at.mono.degree -= 1;
                    aterms.push_back(std::move(at));
                } else {
                    bterms.push_back(t);
                }
            }
            Polynomial a = Polynomial::from_terms(ring, std::move(aterms));
            if (!in_ideal(a.times_monomial(Monomial::variable(n - 1)) +
                              Polynomial::from_terms(ring, std::move(bterms)),
                          changed))
                throw Error("conductor witness failed normal-form certification");
            lambda_gens.push_back(a.map_to(S, down));
        }
    }
    Ideal lambda(S, std::move(lambda_gens));
    const auto& lgb = lambda.groebner_basis();
    std::vector<Polynomial> lambda_linears;
    for (const auto& l : lgb) {
        if (l.total_degree() > 1)
            throw Error("conductor ideal is not generated by linear forms (N_2 violated or bug)");
        lambda_linears.push_back(l);
    }

    SecantReport rep;
    if (static_cast<int>(lambda_linears.size()) >= S->nvars) {
        // Lambda is empty: Sigma_q is empty as well
        rep.sigma = Ideal(ring, {Polynomial::constant(ring, Scalar::one(ring->field))});
        rep.sigma.set_saturated(true);
        rep.s = -1;
        rep.span_dim = -1;
    } else {
        Ideal span = linear_span_cone(ring, lambda_linears);
        Ideal sigma_changed = saturate_irrelevant(ideal_sum(changed, span));
        Ideal sigma = apply_linear_change(sigma_changed, M.inverse());
        sigma.set_saturated(true);
        rep = finish_report(std::move(sigma), "conductor");
    }
    rep.method = "conductor";
    rep.lambda = lambda;
    return rep;
}

namespace {

// Dense binary form in (u, v): coefficients of u^(d-k) v^k.
using BinaryForm = std::vector<Scalar>;

BinaryForm restrict_to_line(const Polynomial& g, const std::vector<Scalar>& w1,
                            const std::vector<Scalar>& w2) {
    const Field& f = g.ring()->field;
    int d = static_cast<int>(g.total_degree());
    // evaluate g(u w1 + v w2) symbolically in a 2-variable ring
    RingPtr uv = PolynomialRing::make({"u", "v"}, f);
    std::vector<Polynomial> image;
    Polynomial u = Polynomial::variable(uv, 0), v = Polynomial::variable(uv, 1);
    for (size_t i = 0; i < w1.size(); ++i) image.push_back(u.scaled(w1[i]) + v.scaled(w2[i]));
    Polynomial r = g.substitute(image);
    BinaryForm out(d + 1, Scalar::zero(f));
    for (const auto& t : r.terms()) out[t.mono.e[1]] = t.coef;
    return out;
}

bool bf_is_zero(const BinaryForm& b) {
    for (const auto& c : b)
        if (!c.is_zero()) return false;
    return true;
}

int bf_top(const BinaryForm& b) {  // highest v-exponent with nonzero entry
    for (int i = static_cast<int>(b.size()) - 1; i >= 0; --i)
        if (!b[i].is_zero()) return i;
    return -1;
}

int bf_low(const BinaryForm& b) {  // lowest v-exponent with nonzero entry
    for (int i = 0; i < static_cast<int>(b.size()); ++i)
        if (!b[i].is_zero()) return i;
    return -1;
}

// gcd of homogeneous binary forms in (u, v): split off the common u- and
// v-powers, run univariate Euclid in v on the stripped parts, and report
// the total gcd as (u-power, v-power, core polynomial).
struct BinaryGcd {
    int upow = 0, vpow = 0;
    BinaryForm core;  // coefficients of v^0..v^deg, nonzero constant term
    int total_degree() const { return upow + vpow + bf_top(core); }
};

std::optional<BinaryGcd> binary_gcd(const std::vector<BinaryForm>& forms) {
    auto poly_mod = [](BinaryForm a, const BinaryForm& b) {
        int db = bf_top(b);
        for (;;) {
            int da = bf_top(a);
            if (da < db || da < 0) return a;
            Scalar c = a[da] / b[db];
            for (int i = 0; i <= db; ++i) a[da - db + i] -= c * b[i];
        }
    };
    std::optional<BinaryForm> acc;
    int min_upow = INT32_MAX, min_vpow = INT32_MAX;
    for (const auto& bform : forms) {
        if (bf_is_zero(bform)) continue;
        int low = bf_low(bform), top = bf_top(bform);
        min_vpow = std::min(min_vpow, low);
        min_upow = std::min(min_upow, static_cast<int>(bform.size()) - 1 - top);
        BinaryForm core(bform.begin() + low, bform.begin() + top + 1);
        if (!acc) {
            acc = core;
            continue;
        }
        BinaryForm x = *acc, y = core;
        while (!bf_is_zero(y)) {
            BinaryForm r = poly_mod(x, y);
            x = y;
            y = std::move(r);
        }
        acc = x;
    }
    if (!acc) return std::nullopt;
    BinaryGcd out;
    out.upow = min_upow;
    out.vpow = min_vpow;
    int low = bf_low(*acc), top = bf_top(*acc);
    out.core.assign(acc->begin() + low, acc->begin() + top + 1);
    out.vpow += low;  // euclid can leave a residual v factor
    return out;
}

}  // namespace

SecantAgreement secant_methods_consistent(const Variety& X, const SecantReport& conductor,
                                          const SecantReport& incidence) {
    if (ideals_equal(conductor.sigma, incidence.sigma)) return SecantAgreement::Equal;
    // Tangential pattern: no honest chords, conductor sees one double point.
    if (!incidence.sigma.is_unit()) return SecantAgreement::Disagree;
    if (conductor.s != 0 || conductor.quadric.rank != 1) return SecantAgreement::Disagree;
    HilbertData h = hilbert_series(conductor.sigma);
    if (h.degree != 2) return SecantAgreement::Disagree;

    // Span line of the conductor scheme: kernel of its linear part.
    const RingPtr& ring = X.ideal.ring();
    const Field& f = ring->field;
    int n = ring->nvars;
    std::vector<std::vector<Scalar>> rows;
    for (const auto& g : conductor.sigma.groebner_basis()) {
        if (g.total_degree() != 1) continue;
        std::vector<Scalar> row(n, Scalar::zero(f));
        for (const auto& t : g.terms())
            for (int v = 0; v < n; ++v)
                if (t.mono.e[v]) row[v] = t.coef;
        rows.push_back(std::move(row));
    }
    // Gaussian elimination; the kernel must be 2-dimensional (a line).
    int rank = 0;
    std::vector<int> pivots;
    for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
        int sel = -1;
        for (size_t rr = rank; rr < rows.size(); ++rr)
            if (!rows[rr][col].is_zero()) { sel = static_cast<int>(rr); break; }
        if (sel < 0) continue;
        std::swap(rows[rank], rows[sel]);
        Scalar inv = rows[rank][col].inverse();
        for (int cc = 0; cc < n; ++cc) rows[rank][cc] *= inv;
        for (size_t rr = 0; rr < rows.size(); ++rr) {
            if (static_cast<int>(rr) == rank || rows[rr][col].is_zero()) continue;
            Scalar factor = rows[rr][col];
            for (int cc = 0; cc < n; ++cc) rows[rr][cc] -= factor * rows[rank][cc];
        }
        pivots.push_back(col);
        ++rank;
    }
    if (n - rank != 2) return SecantAgreement::Disagree;
    std::vector<int> free_cols;
    for (int col = 0; col < n; ++col)
        if (std::find(pivots.begin(), pivots.end(), col) == pivots.end()) free_cols.push_back(col);
    std::vector<std::vector<Scalar>> basis;
    for (int fc : free_cols) {
        std::vector<Scalar> w(n, Scalar::zero(f));
        w[fc] = Scalar::one(f);
        for (int k = 0; k < rank; ++k) w[pivots[k]] = -rows[k][fc];
        basis.push_back(std::move(w));
    }

    // X restricted to the line: gcd of the binary forms must be a quadratic
    // with a vanishing discriminant (single point of multiplicity two).
    std::vector<BinaryForm> forms;
    for (const auto& g : X.ideal.gens()) forms.push_back(restrict_to_line(g, basis[0], basis[1]));
    auto gcd = binary_gcd(forms);
    if (!gcd || gcd->total_degree() != 2) return SecantAgreement::Disagree;
    // assemble the quadratic a u^2 + b uv + c v^2 from (upow, vpow, core)
    std::vector<Scalar> quad(3, Scalar::zero(f));
    for (size_t j = 0; j < gcd->core.size(); ++j) quad[gcd->vpow + j] = gcd->core[j];
    Scalar disc = quad[1] * quad[1] - Scalar::from_int(4, f) * quad[0] * quad[2];
    return disc.is_zero() ? SecantAgreement::TangentialDoublePoint : SecantAgreement::Disagree;
}

Ideal singular_locus(const Ideal& I) {
    const RingPtr& ring = I.ring();
    HilbertData h = hilbert_series(I);
    int c = ring->nvars - 1 - h.proj_dim;
    const auto& gens = I.gens();
    int g = static_cast<int>(gens.size());
    if (c <= 0 || g < c) throw Error("singular_locus: bad codimension data");

    // Jacobian rows
    std::vector<std::vector<Polynomial>> jac(g);
    for (int i = 0; i < g; ++i)
        for (int v = 0; v < ring->nvars; ++v) jac[i].push_back(gens[i].derivative(v));

    // all c x c minors
    std::vector<Polynomial> minors;
    std::vector<int> rows(c), cols(c);
    std::function<Polynomial(std::vector<int>&, std::vector<int>&)> det =
        [&](std::vector<int>& rs, std::vector<int>& cs) -> Polynomial {
        if (rs.size() == 1) return jac[rs[0]][cs[0]];
        Polynomial acc = Polynomial::zero(ring);
        for (size_t k = 0; k < rs.size(); ++k) {
            std::vector<int> rrest;
            for (size_t u = 0; u < rs.size(); ++u)
                if (u != 0) rrest.push_back(rs[u]);
            std::vector<int> crest;
            for (size_t u = 0; u < cs.size(); ++u)
                if (u != k) crest.push_back(cs[u]);
            std::vector<int> rs0{rs[0]};
            Polynomial cof = jac[rs[0]][cs[k]];
            if (cof.is_zero()) continue;
            Polynomial sub = det(rrest, crest);
            Polynomial term = cof * sub;
            acc = (k % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    };
    std::function<void(int, int, std::vector<int>&, std::function<void(std::vector<int>&)>)>
        choose = [&](int from, int total, std::vector<int>& cur,
                     std::function<void(std::vector<int>&)> emit) {
            if (static_cast<int>(cur.size()) == c) {
                emit(cur);
                return;
            }
            for (int v = from; v < total; ++v) {
                cur.push_back(v);
                choose(v + 1, total, cur, emit);
                cur.pop_back();
            }
        };
    std::vector<int> cur;
    choose(0, g, cur, [&](std::vector<int>& rs) {
        std::vector<int> cc;
        choose(0, ring->nvars, cc, [&](std::vector<int>& cs) {
            Polynomial m = det(rs, cs);
            if (!m.is_zero()) minors.push_back(m.normalized());
        });
    });

    std::vector<Polynomial> all = I.gens();
    all.insert(all.end(), minors.begin(), minors.end());
    return saturate_irrelevant(Ideal(ring, std::move(all)));
}

Ideal ruled_join_variety(const Variety& X, JoinKind kind) {
    const RingPtr& ring = X.ideal.ring();
    int n = ring->nvars;
    if (kind == JoinKind::Secant && n > 7)
        throw BudgetError("secant join limited to ambient <= 6");
    int blocks = kind == JoinKind::Secant ? 3 : 2;
    if (blocks * n > kMaxVars)
        throw BudgetError("join ring exceeds the variable cap");

    // layout: [z | x | (y)] so that eliminating the trailing blocks leaves z
    std::vector<std::string> names = ring->names;
    for (int i = 0; i < n; ++i) names.push_back("xa" + std::to_string(i));
    if (blocks == 3)
        for (int i = 0; i < n; ++i) names.push_back("yb" + std::to_string(i));
    RingPtr big = PolynomialRing::make(names, ring->field);
    std::vector<int> zs(n), xs(n), ys(n);
    for (int i = 0; i < n; ++i) {
        zs[i] = i;
        xs[i] = n + i;
        ys[i] = 2 * n + i;
    }
    auto var = [&](int i) { return Polynomial::variable(big, i); };

    std::vector<Polynomial> gens;
    for (const auto& g : X.ideal.gens()) gens.push_back(g.map_to(big, xs));

    Ideal result_big;
    if (kind == JoinKind::Secant) {
        for (const auto& g : X.ideal.gens()) gens.push_back(g.map_to(big, ys));
        auto minor2 = [&](const std::vector<int>& a, const std::vector<int>& b, int i, int j) {
            return var(a[i]) * var(b[j]) - var(a[j]) * var(b[i]);
        };
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c) {
                    // det of rows (x, y, z) on columns (a, b, c)
                    Polynomial det = var(xs[a]) * minor2(ys, zs, b, c) -
                                     var(xs[b]) * minor2(ys, zs, a, c) +
                                     var(xs[c]) * minor2(ys, zs, a, b);
                    if (!det.is_zero()) gens.push_back(det.normalized());
                }
        Ideal B(big, std::move(gens));
        std::vector<Polynomial> diag;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) diag.push_back(minor2(xs, ys, i, j));
        result_big = saturate(B, Ideal(big, std::move(diag)));
    } else {
        // z in the embedded tangent space at x: J(x) z = 0
        for (const auto& g : X.ideal.gens()) {
            Polynomial row = Polynomial::zero(big);
            for (int v = 0; v < n; ++v) {
                Polynomial d = g.derivative(v);
                if (d.is_zero()) continue;
                row = row + d.map_to(big, xs) * var(zs[v]);
            }
            if (!row.is_zero()) gens.push_back(row.normalized());
        }
        result_big = Ideal(big, std::move(gens));
    }

    Ideal in_z = eliminate(result_big, (blocks - 1) * n);
    std::vector<int> down(n);
    for (int i = 0; i < n; ++i) down[i] = i;
    std::vector<Polynomial> moved;
    for (const auto& g : in_z.gens()) moved.push_back(g.map_to(ring, down));
    return saturate_irrelevant(Ideal(ring, std::move(moved)));
}

std::vector<Scalar> choose_center(const Variety& X, CenterKind kind, Rng& rng) {
    const RingPtr& ring = X.ideal.ring();
    const Field& f = ring->field;
    const int tries = 200;
    for (int attempt = 0; attempt < tries; ++attempt) {
        std::vector<Scalar> q;
        switch (kind) {
            case CenterKind::General:
            case CenterKind::GeneralOffSecant: {
                for (int i = 0; i < ring->nvars; ++i) q.push_back(rng.element(f, 9));
                break;
            }
            case CenterKind::OnSecant: {
                auto p1 = random_point(X, rng);
                auto p2 = random_point(X, rng);
                Scalar lam = Scalar::from_int(static_cast<long>(1 + rng.below(3)), f);
                Scalar mu = Scalar::from_int(static_cast<long>(1 + rng.below(3)), f);
                for (int i = 0; i < ring->nvars; ++i) q.push_back(lam * p1[i] + mu * p2[i]);
                break;
            }
            case CenterKind::OnTangent: {
                q = random_tangent_point(X, rng);
                break;
            }
        }
        bool nonzero = false;
        for (const auto& c : q) nonzero = nonzero || !c.is_zero();
        if (!nonzero || point_on_variety(q, X.ideal)) continue;
        if (kind == CenterKind::GeneralOffSecant) {
            SecantReport rep = secant_locus_conductor(X, q);
            if (rep.s != -1) continue;
        }
        return q;
    }
    throw Error("center selection failed after retry budget");
}

CenterKind center_kind_from_string(const std::string& s) {
    if (s == "general") return CenterKind::General;
    if (s == "general-off-secant") return CenterKind::GeneralOffSecant;
    if (s == "on-secant") return CenterKind::OnSecant;
    if (s == "on-tangent") return CenterKind::OnTangent;
    throw InputError("unknown center kind: " + s);
}

std::string format_point(const std::vector<Scalar>& q) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < q.size(); ++i) os << (i ? ":" : "") << q[i].str();
    os << "]";
    return os.str();
}

std::vector<Scalar> parse_point(const std::string& text, const RingPtr& ring) {
    std::string body = text;
    if (!body.empty() && body.front() == '[') body = body.substr(1, body.size() - 2);
    std::vector<Scalar> q;
    std::string cur;
    for (char c : body + ":") {
        if (c == ':' || c == ',') {
            if (cur.empty()) throw InputError("bad point spec: " + text);
            auto slash = cur.find('/');
            mpz_class num(slash == std::string::npos ? cur : cur.substr(0, slash));
            mpz_class den(slash == std::string::npos ? mpz_class(1) : mpz_class(cur.substr(slash + 1)));
            q.push_back(Scalar::from_fraction(num, den, ring->field));
            cur.clear();
        } else if (!isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (static_cast<int>(q.size()) != ring->nvars)
        throw InputError("point has " + std::to_string(q.size()) + " coordinates, expected " +
                         std::to_string(ring->nvars));
    return q;
}

namespace {

std::string z(const mpz_class& v) { return v.get_str(); }

void add_check(VerificationReport& rep, const std::string& name, const std::string& predicted,
               const std::string& computed) {
    rep.checks.push_back({name, predicted, computed, predicted == computed});
}

void add_check_bool(VerificationReport& rep, const std::string& name, const std::string& predicted,
                    const std::string& computed, bool pass) {
    rep.checks.push_back({name, predicted, computed, pass});
}

// Sectional genus with the chi-coefficient cross-check.
mpz_class genus_checked(const Ideal& I, uint64_t seed) {
    HilbertData h = hilbert_series(I);
    mpz_class g_slice = sectional_genus_by_slicing(I, seed);
    auto chi = chi_coefficients(h);
    if (h.proj_dim >= 1) {
        mpq_class c = chi[h.proj_dim - 1];
        if (c.get_den() != 1 || 1 - c.get_num() != g_slice)
            throw Error("sectional genus: slicing and chi paths disagree");
    }
    return g_slice;
}

// h^0(O_X(j)) from the profile; falls back to the Hilbert function for
// projectively normal inputs without a closed form.
mpz_class h0_of(const Variety& X, long j) {
    if (X.profile) return X.h0(j);
    return hilbert_function(X.ideal, j);
}

mpz_class sheaf_correction(int s, long j) {
    // Hilbert function of S_Lambda(-1) at j: C(j-1+s, s) for s >= 0; the
    // empty case contributes K(-1), i.e. 1 exactly at j = 1.
    if (s >= 0) return binomial(j - 1 + s, s);
    return j == 1 ? 1 : 0;
}

}  // namespace

VerificationReport verify_projection_theorem(const Variety& X, const std::vector<Scalar>& q,
                                             const VerifyOptions& opts) {
    VerificationReport rep;
    rep.variety = X.name;
    rep.center = format_point(q);
    require_valid_center(X, q);

    bool hypothesis = X.claims.satisfies_n2;

    // Reference data for X itself (verdicts recomputed, never quoted).
    int r = X.ambient_r();
    int n = X.dim;
    HilbertData hX = hilbert_series(X.ideal);
    BettiTable tX = graded_betti(X.ideal);
    bool projnormal_X = X.profile ? X.profile->projectively_normal : true;
    ResolutionPredicates pX = table_predicates(tX, r, n, projnormal_X);
    mpz_class h0_I2_X = binomial(r + 2, 2) - hX.hilbert_function(2);
    mpz_class delta_X = n + hX.degree - h0_of(X, 1);
    mpz_class genus_X = n >= 1 ? genus_checked(X.ideal, opts.seed) : mpz_class(0);

    // Secant locus: conductor (fast, N_2 only) and incidence (oracle).
    // Without the N_2 hypothesis only the incidence route is meaningful.
    SecantReport main_secant;
    if (hypothesis) {
        main_secant = secant_locus_conductor(X, q);
        if (opts.run_incidence) {
            SecantReport inc = secant_locus_incidence(X, q);
            rep.sigma_incidence = inc.sigma;
            SecantAgreement agree = secant_methods_consistent(X, main_secant, inc);
            add_check_bool(rep, "secant-methods-agree", "equal saturated ideals",
                           agree == SecantAgreement::Equal ? "equal saturated ideals"
                           : agree == SecantAgreement::TangentialDoublePoint
                               ? "tangential double point (chords empty, line contact certified)"
                               : "ideals differ",
                           agree != SecantAgreement::Disagree);
            if (agree == SecantAgreement::Disagree) {
                bool same_hilbert =
                    hilbert_series(main_secant.sigma).degree == hilbert_series(inc.sigma).degree &&
                    dimension_of(main_secant.sigma) == dimension_of(inc.sigma);
                rep.sigma_conductor = main_secant.sigma;
                rep.verdict = same_hilbert ? "inconsistent (scheme-structure mismatch)" : "inconsistent";
                return rep;
            }
        }
        rep.sigma_conductor = main_secant.sigma;
    } else {
        main_secant = secant_locus_incidence(X, q);
        rep.sigma_incidence = main_secant.sigma;
    }
    const SecantReport& cond = main_secant;
    rep.s = cond.s;
    int s = cond.s;

    // Projection and its invariants.
    ProjectionResult pr = project(X, q);
    const Ideal& J = pr.image.ideal;
    rep.projected_ideal = J;
    HilbertData hq = hilbert_series(J);
    BettiTable tq = graded_betti(J);
    ResolutionPredicates pq = table_predicates(tq, r - 1, hq.proj_dim, s >= 0);

    // (Cor 3.2) birationality: degree and dimension preserved.
    add_check(rep, "deg-preserved", z(X.degree) + "/dim " + std::to_string(n),
              z(hq.degree) + "/dim " + std::to_string(hq.proj_dim));

    // (1) linear normality <=> s >= 0, through the Delta increment.
    mpz_class h0_1_Xq = h0_of(X, 1) - sheaf_correction(s, 1);
    mpz_class delta_Xq = n + hq.degree - h0_1_Xq;
    add_check(rep, "delta-increment", z(delta_X + (s >= 0 ? 1 : 0)), z(delta_Xq));

    // (3) j-normality for j >= 2 via the twisted-sections sequence, plus the
    // quadric-count identity.
    {
        bool ok = true;
        std::ostringstream want, got;
        for (long j = 0; j <= 5; ++j) {
            mpz_class lhs = hq.hilbert_function(j) + sheaf_correction(s, j);
            mpz_class rhs = h0_of(X, j);
            want << (j ? "," : "") << z(rhs);
            got << (j ? "," : "") << z(lhs);
            ok = ok && lhs == rhs;
        }
        add_check(rep, "section-ring-sequence", want.str(), ok ? want.str() : got.str());
    }
    mpz_class h0_I2_Xq = binomial(r + 1, 2) - hq.hilbert_function(2);
    add_check(rep, "h0-quadrics", z(h0_I2_X + s - r), z(h0_I2_Xq));

    // (2) sectional genus increment at s = n-1.
    if (hq.proj_dim >= 1) {
        mpz_class genus_q = genus_checked(J, opts.seed + 1);
        add_check(rep, "sectional-genus", z(genus_X + (s == n - 1 ? 1 : 0)), z(genus_q));
    }

    // (4) property N_{3,p-1} and generation in degrees <= 3.
    {
        int p_of_X = pX.np_max;
        int want = p_of_X >= kNpAll ? kNpAll : std::max(p_of_X - 1, 0);
        int got = pq.ndp_max.at(3);
        add_check_bool(rep, "N3-steps",
                       want >= kNpAll ? "N_{3,p} for all p" : "N_{3," + std::to_string(want) + "}",
                       got >= kNpAll ? "N_{3,p} for all p" : "N_{3," + std::to_string(got) + "}",
                       got >= want);
        add_check_bool(rep, "generated-in-degree-le-3", "<=3",
                       "<=" + std::to_string(pq.max_generator_degree),
                       pq.max_generator_degree <= 3);
    }

    // (5) regularity.
    add_check(rep, "regularity", std::to_string(std::max(3, pX.regularity)),
              std::to_string(pq.regularity));

    // (6) depth (the corpus is ACM or smooth, so the vanishing hypothesis holds).
    add_check(rep, "depth", std::to_string(std::min(pX.depth, s + 2)), std::to_string(pq.depth));

    // Corollary 3.2: quadric in the span, and Lambda inside Sing(X_q).
    if (s >= 0) {
        add_check(rep, "secant-is-quadric-in-span", "quadric",
                  cond.quadric.is_quadric ? "quadric" : cond.quadric.type);
        add_check(rep, "span-dimension", std::to_string(s + 1), std::to_string(cond.span_dim));
        if (cond.lambda) {
            bool contained = true;
            HilbertData hl = hilbert_series(*cond.lambda);
            // Sing(X_q) computed as the Jacobian scheme of X_q
            int c = (r - 1) - hq.proj_dim;
            if (c >= 1 && static_cast<int>(J.gens().size()) >= c) {
                Ideal sing = singular_locus(J);
                for (const auto& g : sing.gens())
                    contained = contained && in_ideal(g, *cond.lambda);
                add_check(rep, "lambda-in-sing", "contained", contained ? "contained" : "not contained");
            }
            add_check(rep, "lambda-dimension", std::to_string(s), std::to_string(hl.proj_dim));
        }
    }

    rep.verdict = !hypothesis ? "hypothesis-unmet" : (rep.all_pass() ? "pass" : "fail");
    return rep;
}

}  // namespace secproj
