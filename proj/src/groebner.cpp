#include "secproj/groebner.hpp"

#include <algorithm>
#include <set>

#include "secproj/rng.hpp"

namespace secproj {

GroebnerBudget& GroebnerBudget::global() {
    static GroebnerBudget b;
    return b;
}

namespace {

// Canonical generator order: by leading monomial, then term count, then
// termwise comparison.  Keeps every run reproducible.
bool canonical_less(const Polynomial& a, const Polynomial& b, const MonomialOrder& ord, int nvars) {
    int c = ord.compare(a.leading_monomial(), b.leading_monomial(), nvars);
    if (c != 0) return c < 0;
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i) {
        c = ord.compare(a.terms()[i].mono, b.terms()[i].mono, nvars);
        if (c != 0) return c < 0;
        const Scalar &ca = a.terms()[i].coef, &cb = b.terms()[i].coef;
        if (ca != cb) {
            if (ca.field().is_prime()) return ca.residue() < cb.residue();
            return ca.rational() < cb.rational();
        }
    }
    return false;
}

struct BasisItem {
    Polynomial p;
    Monomial lm;
    uint32_t mask;
    uint32_t sugar;
};

class Reducer {
public:
    Reducer(const RingPtr& ring, MonomialOrder order)
        : ring_(ring), order_(order), rational_(ring->field.is_rational()) {}

    const std::vector<BasisItem>& items() const { return items_; }

    void add(Polynomial p, uint32_t sugar) {
        BasisItem it;
        it.lm = p.leading_monomial();
        it.mask = it.lm.support_mask();
        it.sugar = sugar;
        it.p = std::move(p);
        items_.push_back(std::move(it));
    }

    // Full normal form up to a nonzero scalar (pseudo-reduction over QQ so
    // intermediate coefficients stay integral).  Updates the sugar degree.
    Polynomial reduce(Polynomial f, uint32_t& sugar) const {
        Scalar ignored = Scalar::one(ring_->field);
        Polynomial r = reduce_impl(std::move(f), sugar, false, ignored);
        if (r.is_zero()) return r;
        return rational_ ? r.normalized() : r.monic();
    }

    // Exact remainder of multivariate division (no rescaling).
    Polynomial reduce_exact(Polynomial f) const {
        uint32_t sugar = 0;
        Scalar scale = Scalar::one(ring_->field);
        Polynomial r = reduce_impl(std::move(f), sugar, true, scale);
        if (!scale.is_one()) r = r.scaled(scale.inverse());
        return r;
    }

private:
    Polynomial reduce_impl(Polynomial f, uint32_t& sugar, bool track_scale, Scalar& scale) const {
        size_t i = 0;
        size_t steps = 0;
        while (i < f.size()) {
            const Term& t = f.terms()[i];
            uint32_t tmask = t.mono.support_mask();
            const BasisItem* hit = nullptr;
            for (const auto& it : items_) {
                if ((it.mask & ~tmask) != 0) continue;
                if (it.lm.divides(t.mono)) {
                    hit = &it;
                    break;
                }
            }
            if (!hit) {
                ++i;
                continue;
            }
            Monomial q = t.mono.quotient(hit->lm);
            sugar = std::max(sugar, hit->sugar + q.degree);
            if (rational_) {
                // Pseudo-reduction: keep integer coefficients.
                const mpz_class& cf = t.coef.rational().get_num();
                const mpz_class& cg = hit->p.leading_coefficient().rational().get_num();
                mpz_class d;
                mpz_gcd(d.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
                Scalar alpha = Scalar::from_fraction(cg, d, ring_->field);
                Scalar beta = -Scalar::from_fraction(cf, d, ring_->field);
                if (t.coef.rational().get_den() != 1) {
                    // fractional input term: fall back to exact step
                    alpha = Scalar::one(ring_->field);
                    beta = -(t.coef / hit->p.leading_coefficient());
                }
                if (!alpha.is_one()) {
                    f = f.scaled(alpha);
                    if (track_scale) scale *= alpha;
                }
                f.add_scaled(beta, q, hit->p);
                if (!track_scale && (++steps & 31u) == 0) f = f.normalized();
            } else {
                Scalar c = -(t.coef * hit->p.leading_coefficient().inverse());
                f.add_scaled(c, q, hit->p);
            }
        }
        return f;
    }

public:

private:
    RingPtr ring_;
    MonomialOrder order_;
    bool rational_;
    std::vector<BasisItem> items_;
};

struct Pair {
    uint32_t sugar;
    Monomial lcm;
    int i, j;
};

struct PairLess {
    MonomialOrder order;
    int nvars;
    bool operator()(const Pair& a, const Pair& b) const {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        int c = order.compare(a.lcm, b.lcm, nvars);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

}  // namespace

std::vector<Polynomial> buchberger(const RingPtr& ring, std::vector<Polynomial> gens,
                                   MonomialOrder order) {
    const GroebnerBudget& budget = GroebnerBudget::global();
    const int nvars = ring->nvars;

    std::vector<Polynomial> input;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        input.push_back(g.resorted(order).normalized());
    }
    std::sort(input.begin(), input.end(),
              [&](const Polynomial& a, const Polynomial& b) { return canonical_less(a, b, order, nvars); });

    Reducer basis(ring, order);
    std::set<Pair, PairLess> pairs(PairLess{order, nvars});
    size_t processed = 0;

    auto add_element = [&](Polynomial h, uint32_t sugar) {
        int t = static_cast<int>(basis.items().size());
        const Monomial& lmt = h.leading_monomial();

        // Gebauer-Moeller update: new pairs (i,t).
        std::vector<Pair> cand;
        for (int i = 0; i < t; ++i) {
            const auto& bi = basis.items()[i];
            Monomial l = bi.lm.lcm(lmt);
            uint32_t s = std::max(bi.sugar + l.degree - bi.lm.degree,
                                  sugar + l.degree - lmt.degree);
            cand.push_back({s, l, i, t});
        }
        // Criterion M: drop (i,t) when another new pair's lcm properly divides it.
        // Criterion F: keep a single representative among equal lcms.
        std::vector<char> drop(cand.size(), 0);
        for (size_t a = 0; a < cand.size(); ++a) {
            for (size_t b = 0; b < cand.size() && !drop[a]; ++b) {
                if (a == b || drop[b]) continue;
                if (cand[b].lcm.divides(cand[a].lcm) &&
                    (cand[b].lcm != cand[a].lcm || b < a))
                    drop[a] = 1;
            }
        }
        // Criterion B on old pairs.
        for (auto it = pairs.begin(); it != pairs.end();) {
            const auto& bi = basis.items()[it->i];
            const auto& bj = basis.items()[it->j];
            if (lmt.divides(it->lcm) && bi.lm.lcm(lmt) != it->lcm && bj.lm.lcm(lmt) != it->lcm)
                it = pairs.erase(it);
            else
                ++it;
        }
        // Buchberger product criterion.
        for (size_t a = 0; a < cand.size(); ++a) {
            if (drop[a]) continue;
            if (basis.items()[cand[a].i].lm.coprime_with(lmt)) continue;
            pairs.insert(cand[a]);
        }
        basis.add(std::move(h), sugar);
        if (basis.items().size() > budget.max_basis)
            throw BudgetError("groebner basis budget exceeded: basis size " +
                              std::to_string(basis.items().size()));
    };

    for (auto& g : input) {
        uint32_t sugar = g.total_degree();
        Polynomial r = basis.reduce(g, sugar);
        if (!r.is_zero()) add_element(std::move(r), sugar);
    }

    bool rational = ring->field.is_rational();
    while (!pairs.empty()) {
        Pair pr = *pairs.begin();
        pairs.erase(pairs.begin());
        if (++processed > budget.max_pairs)
            throw BudgetError("groebner pair budget exceeded after " + std::to_string(processed) +
                              " pairs, degree " + std::to_string(pr.sugar) + ", basis " +
                              std::to_string(basis.items().size()));
        if (pr.sugar > budget.max_sugar)
            throw BudgetError("groebner degree budget exceeded at degree " +
                              std::to_string(pr.sugar) + " after " + std::to_string(processed) +
                              " pairs");
        const auto& fi = basis.items()[pr.i];
        const auto& fj = basis.items()[pr.j];
        Monomial mi = pr.lcm.quotient(fi.lm);
        Monomial mj = pr.lcm.quotient(fj.lm);
        Polynomial s;
        if (rational) {
            const mpz_class& ci = fi.p.leading_coefficient().rational().get_num();
            const mpz_class& cj = fj.p.leading_coefficient().rational().get_num();
            mpz_class d;
            mpz_gcd(d.get_mpz_t(), ci.get_mpz_t(), cj.get_mpz_t());
            s = fi.p.times_monomial(mi).scaled(Scalar::from_fraction(cj, d, ring->field));
            s.add_scaled(-Scalar::from_fraction(ci, d, ring->field), mj, fj.p);
        } else {
            s = fi.p.times_monomial(mi);
            s.add_scaled(-(fi.p.leading_coefficient() / fj.p.leading_coefficient()), mj, fj.p);
        }
        uint32_t sugar = pr.sugar;
        Polynomial r = basis.reduce(std::move(s), sugar);
        if (!r.is_zero()) add_element(std::move(r), sugar);
    }

    // Interreduce to the reduced basis: minimal leading terms, reduced tails,
    // monic, sorted ascending by leading monomial.
    std::vector<Polynomial> polys;
    for (const auto& it : basis.items()) polys.push_back(it.p);
    std::vector<char> keep(polys.size(), 1);
    for (size_t a = 0; a < polys.size(); ++a) {
        for (size_t b = 0; b < polys.size() && keep[a]; ++b) {
            if (a == b || !keep[b]) continue;
            if (polys[b].leading_monomial().divides(polys[a].leading_monomial()) &&
                (polys[b].leading_monomial() != polys[a].leading_monomial() || b < a))
                keep[a] = 0;
        }
    }
    std::vector<Polynomial> minimal;
    for (size_t a = 0; a < polys.size(); ++a)
        if (keep[a]) minimal.push_back(polys[a]);

    std::vector<Polynomial> reduced;
    for (size_t a = 0; a < minimal.size(); ++a) {
        Reducer others(ring, order);
        for (size_t b = 0; b < minimal.size(); ++b)
            if (b != a) others.add(minimal[b], minimal[b].total_degree());
        uint32_t sugar = 0;
        reduced.push_back(others.reduce(minimal[a], sugar).monic());
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return canonical_less(a, b, order, nvars);
    });
    return reduced;
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) {
    core_ = std::make_shared<Core>();
    core_->ring = std::move(ring);
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (*g.ring() != *core_->ring) throw Error("generator from wrong ring");
        core_->homogeneous = core_->homogeneous && g.is_homogeneous();
        core_->gens.push_back(g.normalized());
    }
}

const std::vector<Polynomial>& Ideal::groebner_basis(MonomialOrder order) const {
    auto it = core_->cache.find(order);
    if (it != core_->cache.end()) return it->second;
    auto gb = buchberger(core_->ring, core_->gens, order);
    return core_->cache.emplace(order, std::move(gb)).first->second;
}

bool Ideal::is_unit() const {
    if (core_->gens.empty()) return false;
    for (const auto& g : core_->gens)
        if (!g.is_zero() && g.total_degree() == 0) return true;
    const auto& gb = groebner_basis();
    return gb.size() == 1 && gb[0].total_degree() == 0;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       MonomialOrder order) {
    Reducer red(f.ring(), order);
    for (const auto& g : basis) red.add(g, g.total_degree());
    return red.reduce_exact(f.resorted(order));
}

Polynomial normal_form(const Polynomial& f, const Ideal& I, MonomialOrder order) {
    if (*f.ring() != *I.ring()) throw Error("normal_form: ring mismatch");
    return normal_form(f, I.groebner_basis(order), order);
}

bool in_ideal(const Polynomial& f, const Ideal& I) {
    if (f.is_zero()) return true;
    return normal_form(f, I).is_zero();
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw Error("division by zero polynomial");
    Polynomial rem = f.resorted(g.order());
    Polynomial q(f.ring(), g.order());
    std::vector<Term> qterms;
    while (!rem.is_zero()) {
        const Term& lt = rem.leading_term();
        if (!g.leading_monomial().divides(lt.mono)) throw Error("divide_exact: not divisible");
        Monomial m = lt.mono.quotient(g.leading_monomial());
        Scalar c = lt.coef / g.leading_coefficient();
        qterms.push_back({m, c});
        rem.add_scaled(-c, m, g);
    }
    return Polynomial::from_terms(f.ring(), std::move(qterms), g.order());
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
    if (*I.ring() != *J.ring()) throw Error("ideal_sum: ring mismatch");
    std::vector<Polynomial> gens = I.gens();
    gens.insert(gens.end(), J.gens().begin(), J.gens().end());
    return Ideal(I.ring(), std::move(gens));
}

Ideal eliminate(const Ideal& I, int last_k) {
    const RingPtr& ring = I.ring();
    if (last_k < 0 || last_k >= ring->nvars) throw InputError("eliminate: bad variable count");
    if (last_k == 0) return I;
    const auto& gb = I.groebner_basis(MonomialOrder::elim_last(last_k));
    RingPtr sub = ring->drop_last(last_k);
    std::vector<int> var_map(ring->nvars, -1);
    for (int i = 0; i < sub->nvars; ++i) var_map[i] = i;
    std::vector<Polynomial> kept;
    for (const auto& g : gb)
        if (g.degree_in_vars(sub->nvars, ring->nvars) == 0) kept.push_back(g.map_to(sub, var_map));
    return Ideal(sub, std::move(kept));
}

Ideal intersect_ideals(const Ideal& I, const Ideal& J) {
    if (*I.ring() != *J.ring()) throw Error("intersect: ring mismatch");
    if (I.is_zero() || J.is_zero()) return Ideal(I.ring(), {});
    const RingPtr& ring = I.ring();
    std::string tname = "t_aux";
    while (ring->var_index(tname) >= 0) tname += "_";
    RingPtr ext = ring->append({tname});
    int tvar = ext->nvars - 1;
    std::vector<int> up(ring->nvars);
    for (int i = 0; i < ring->nvars; ++i) up[i] = i;

    Polynomial t = Polynomial::variable(ext, tvar);
    Polynomial one_minus_t = Polynomial::constant(ext, Scalar::one(ext->field)) - t;
    std::vector<Polynomial> gens;
    for (const auto& f : I.gens()) gens.push_back(t * f.map_to(ext, up));
    for (const auto& g : J.gens()) gens.push_back(one_minus_t * g.map_to(ext, up));
    return eliminate(Ideal(ext, std::move(gens)), 1);
}

namespace {

Ideal quotient_by_poly(const Ideal& I, const Polynomial& g) {
    if (g.is_zero()) return Ideal(I.ring(), {Polynomial::constant(I.ring(), Scalar::one(I.ring()->field))});
    Ideal gi(I.ring(), {g});
    Ideal meet = intersect_ideals(I, gi);
    std::vector<Polynomial> quots;
    for (const auto& f : meet.gens()) quots.push_back(divide_exact(f, g).normalized());
    return Ideal(I.ring(), std::move(quots));
}

}  // namespace

Ideal ideal_quotient(const Ideal& I, const Ideal& J) {
    if (*I.ring() != *J.ring()) throw Error("quotient: ring mismatch");
    if (J.is_zero())
        return Ideal(I.ring(), {Polynomial::constant(I.ring(), Scalar::one(I.ring()->field))});
    std::optional<Ideal> acc;
    for (const auto& g : J.gens()) {
        Ideal q = quotient_by_poly(I, g);
        acc = acc ? intersect_ideals(*acc, q) : q;
    }
    return *acc;
}

bool ideals_equal(const Ideal& I, const Ideal& J) {
    for (const auto& g : J.gens())
        if (!in_ideal(g, I)) return false;
    for (const auto& f : I.gens())
        if (!in_ideal(f, J)) return false;
    return true;
}

Ideal irrelevant_ideal(const RingPtr& ring) {
    std::vector<Polynomial> vars;
    for (int i = 0; i < ring->nvars; ++i) vars.push_back(Polynomial::variable(ring, i));
    return Ideal(ring, std::move(vars));
}

Ideal apply_linear_change(const Ideal& I, const ScalarMatrix& M) {
    const RingPtr& ring = I.ring();
    if (M.rows != ring->nvars || M.cols != ring->nvars)
        throw InputError("coordinate change has wrong dimensions");
    if (!M.is_invertible()) throw InputError("coordinate change matrix is singular");
    std::vector<Polynomial> image;
    for (int i = 0; i < ring->nvars; ++i) {
        Polynomial li = Polynomial::zero(ring);
        for (int j = 0; j < ring->nvars; ++j) {
            if (M.at(i, j).is_zero()) continue;
            li = li + Polynomial::variable(ring, j).scaled(M.at(i, j));
        }
        image.push_back(std::move(li));
    }
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens()) gens.push_back(g.substitute(image).normalized());
    return Ideal(ring, std::move(gens));
}

namespace {

// Divide-by-last-variable saturation: for homogeneous I and grevlex with
// variable v scanned last, dividing each reduced-basis element by its
// v-power yields a basis of (I : v^infinity).
Ideal saturate_by_variable(const Ideal& I, int v) {
    const RingPtr& ring = I.ring();
    const auto& gb = I.groebner_basis(MonomialOrder::grevlex_last_var(v));
    std::vector<Polynomial> out;
    for (const auto& g : gb) {
        uint16_t k = UINT16_MAX;
        for (const auto& t : g.terms()) k = std::min(k, t.mono.e[v]);
        if (k == 0) {
            out.push_back(g);
            continue;
        }
        Monomial m = Monomial::one();
        m.e[v] = k;
        m.degree = k;
        std::vector<Term> terms;
        for (const auto& t : g.terms()) terms.push_back({t.mono.quotient(m), t.coef});
        out.push_back(Polynomial::from_terms(ring, std::move(terms)));
    }
    return Ideal(ring, std::move(out));
}

// Membership of f in (I : g^infinity) with a power cap; -1 when the cap is
// reached without success.
int saturation_witness(const Polynomial& f, const Polynomial& g, const Ideal& I, int cap) {
    Polynomial fg = f;
    for (int k = 0; k <= cap; ++k) {
        if (in_ideal(fg, I)) return k;
        fg = fg * g;
    }
    return -1;
}

bool certify_saturation(const Ideal& candidate, const Ideal& I, const std::vector<Polynomial>& divisors,
                        int cap) {
    for (const auto& f : candidate.gens())
        for (const auto& g : divisors)
            if (saturation_witness(f, g, I, cap) < 0) return false;
    return true;
}

Ideal saturate_iterated(const Ideal& I, const Ideal& J) {
    Ideal cur = I;
    for (;;) {
        Ideal next = ideal_quotient(cur, J);
        if (ideals_equal(next, cur)) return next;
        cur = next;
    }
}

}  // namespace

Ideal saturate(const Ideal& I, const Ideal& J) {
    if (*I.ring() != *J.ring()) throw Error("saturate: ring mismatch");
    const RingPtr& ring = I.ring();
    if (I.is_zero() || J.is_zero() || I.is_unit()) return I;
    constexpr int kWitnessCap = 12;

    // Single variable: the division trick is exact for homogeneous ideals.
    if (I.is_homogeneous() && J.gens().size() == 1 && J.gens()[0].size() == 1 &&
        J.gens()[0].leading_monomial().degree == 1) {
        const Monomial& m = J.gens()[0].leading_monomial();
        for (int v = 0; v < ring->nvars; ++v)
            if (m.e[v] == 1) return saturate_by_variable(I, v);
    }

    // Single generic polynomial: iterate principal quotients.
    if (J.gens().size() == 1) {
        const Polynomial& g = J.gens()[0];
        Ideal cur = I;
        for (;;) {
            Ideal next = quotient_by_poly(cur, g);
            if (ideals_equal(next, cur)) return next;
            cur = next;
        }
    }

    // Generic-combination fast path, certified by explicit membership
    // witnesses f * g_i^k in I; falls back to the quotient iteration.
    if (I.is_homogeneous()) {
        Rng rng(0x5eca9755u ^ J.gens().size());
        for (int attempt = 0; attempt < 2; ++attempt) {
            Polynomial h = Polynomial::zero(ring);
            for (const auto& g : J.gens())
                h = h + g.scaled(rng.nonzero_element(ring->field, 7));
            if (h.is_zero()) continue;
            Ideal candidate = saturate(I, Ideal(ring, {h}));
            if (certify_saturation(candidate, I, J.gens(), kWitnessCap)) return candidate;
        }
    }
    return saturate_iterated(I, J);
}

Ideal saturate_irrelevant(const Ideal& I) {
    const RingPtr& ring = I.ring();
    if (I.is_zero()) return I;
    if (I.is_unit()) {
        I.set_saturated(true);
        return I;
    }
    constexpr int kWitnessCap = 12;
    std::vector<Polynomial> vars;
    for (int v = 0; v < ring->nvars; ++v) vars.push_back(Polynomial::variable(ring, v));

    if (I.is_homogeneous()) {
        // Saturate by one variable / generic linear form and certify against
        // all the variables; exactness never depends on the random choice.
        Rng rng(0xa57e11u);
        for (int attempt = 0; attempt < 3; ++attempt) {
            Ideal candidate;
            if (attempt == 0) {
                candidate = saturate_by_variable(I, ring->nvars - 1);
            } else {
                ScalarMatrix M = ScalarMatrix::identity(ring->nvars, ring->field);
                for (int j = 0; j < ring->nvars - 1; ++j)
                    M.at(ring->nvars - 1, j) = rng.element(ring->field, 5);
                // x_last <- x_last + random combination; invertible by shape.
                Ideal moved = apply_linear_change(I, M);
                Ideal sat = saturate_by_variable(moved, ring->nvars - 1);
                candidate = apply_linear_change(sat, M.inverse());
            }
            if (certify_saturation(candidate, I, vars, kWitnessCap)) {
                Ideal out(ring, candidate.gens());
                out.set_saturated(true);
                return out;
            }
        }
    }
    Ideal out = saturate_iterated(I, irrelevant_ideal(ring));
    out.set_saturated(true);
    return out;
}

}  // namespace secproj
