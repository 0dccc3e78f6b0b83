#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "secproj/groebner.hpp"
#include "secproj/io.hpp"
#include "secproj/rng.hpp"

using namespace secproj;

namespace {

RingPtr qring(int n) { return PolynomialRing::standard(n, Field::rationals()); }

Polynomial pp(const std::string& s, const RingPtr& r) { return parse_polynomial(s, r); }

Polynomial random_poly(const RingPtr& ring, Rng& rng, int max_terms = 5, int max_deg = 3) {
    std::vector<Term> terms;
    int nt = 1 + static_cast<int>(rng.below(max_terms));
    for (int t = 0; t < nt; ++t) {
        Monomial m;
        int d = static_cast<int>(rng.below(max_deg + 1));
        for (int k = 0; k < d; ++k) {
            int v = static_cast<int>(rng.below(ring->nvars));
            m.e[v] += 1;
            m.degree += 1;
        }
        terms.push_back({m, rng.element(ring->field, 9)});
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace

TEST_CASE("scalar arithmetic and reduction") {
    Field q = Field::rationals();
    Field p = Field::prime(32003);
    CHECK_THROWS_AS(Field::prime(32004), InputError);
    CHECK_THROWS_AS(Field::prime(2), InputError);

    Scalar half = Scalar::from_fraction(3, 6, q);
    CHECK(half.str() == "1/2");
    CHECK((half + half).is_one());
    CHECK((half * Scalar::from_int(2, q)).is_one());
    CHECK((-half + half).is_zero());
    CHECK(half.inverse().str() == "2");

    Scalar a = Scalar::from_int(-5, p);
    CHECK(a.residue() == 32003 - 5);
    CHECK((a * a.inverse()).is_one());

    // rational vs prime evaluation commutes with reduction for p-integral values
    Scalar r = Scalar::from_fraction(7, 3, q);
    Scalar rp = r.reduce_mod(p);
    Scalar direct = Scalar::from_int(7, p) / Scalar::from_int(3, p);
    CHECK(rp == direct);
}

TEST_CASE("monomial orders: totality, multiplicativity, 1 minimal") {
    Rng rng(17);
    const int nvars = 5;
    for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::elim_last(2),
                       MonomialOrder::grevlex_last_var(1)}) {
        for (int trial = 0; trial < 300; ++trial) {
            auto rand_mono = [&] {
                Monomial m;
                for (int i = 0; i < nvars; ++i) {
                    m.e[i] = static_cast<uint16_t>(rng.below(4));
                    m.degree += m.e[i];
                }
                return m;
            };
            Monomial a = rand_mono(), b = rand_mono(), c = rand_mono();
            int ab = order.compare(a, b, nvars);
            CHECK(order.compare(b, a, nvars) == -ab);
            if (a == b) CHECK(ab == 0);
            if (ab != 0) CHECK(order.compare(a * c, b * c, nvars) == ab);
            if (!a.is_one()) CHECK(order.compare(a, Monomial::one(), nvars) > 0);
        }
    }
}

TEST_CASE("parser: grammar, normalization, round trip") {
    auto r = qring(3);
    Polynomial f = pp("x0^2 - x1*x2", r);
    CHECK(f.size() == 2);
    CHECK(f.is_homogeneous());
    CHECK(f.total_degree() == 2);

    CHECK(pp("0", r).is_zero());
    CHECK(pp("x0-x0", r).is_zero());

    Polynomial g = pp("3/6*x0", r);
    CHECK(g.leading_coefficient().str() == "1/2");

    CHECK_THROWS_AS(pp("y0", r), InputError);
    CHECK_THROWS_AS(pp("x0^", r), InputError);
    auto gf = PolynomialRing::standard(2, Field::prime(3));
    CHECK_THROWS_AS(pp("1/3*x0", gf), InputError);

    Rng rng(5);
    for (int i = 0; i < 50; ++i) {
        Polynomial h = random_poly(r, rng);
        CHECK(parse_polynomial(h.str(), r) == h);
    }
}

TEST_CASE("ring axioms on random polynomials") {
    Rng rng(23);
    for (const Field& fld : {Field::rationals(), Field::prime(32003)}) {
        auto r = PolynomialRing::standard(4, fld);
        for (int i = 0; i < 40; ++i) {
            Polynomial f = random_poly(r, rng), g = random_poly(r, rng), h = random_poly(r, rng);
            CHECK((f + g) + h == f + (g + h));
            CHECK(f + g == g + f);
            CHECK(f * (g + h) == f * g + f * h);
            CHECK((f * g) * h == f * (g * h));
            CHECK((f - f).is_zero());
        }
    }
}

TEST_CASE("deg(f*g) = deg f + deg g for homogeneous polynomials") {
    auto r = qring(3);
    Polynomial f = pp("x0^2-x1*x2", r), g = pp("x0+x1+7*x2", r);
    CHECK((f * g).total_degree() == 3);
    CHECK((f * g).is_homogeneous());
}

TEST_CASE("evaluation") {
    auto r = qring(3);
    Field q = Field::rationals();
    Polynomial f = pp("x0^2-x1*x2", r);
    CHECK(f.evaluate({Scalar::from_int(1, q), Scalar::from_int(1, q), Scalar::from_int(1, q)})
              .is_zero());
    // conic parametrization identity
    Polynomial conic = pp("x0*x2-x1^2", r);
    for (long t : {2L, 3L, 5L}) {
        CHECK(conic
                  .evaluate({Scalar::from_int(1, q), Scalar::from_int(t, q),
                             Scalar::from_int(t * t, q)})
                  .is_zero());
    }
    // homogeneous of degree >= 1 vanishes at the origin
    CHECK(f.evaluate({Scalar::zero(q), Scalar::zero(q), Scalar::zero(q)}).is_zero());
    CHECK_THROWS_AS(f.evaluate({Scalar::zero(q)}), InputError);
}

TEST_CASE("ideal file round trip") {
    auto r = qring(4);
    std::vector<Polynomial> polys = {pp("x0*x2-x1^2", r), pp("x0*x3-x1*x2", r),
                                     pp("x1*x3-x2^2", r)};
    std::ostringstream os;
    write_ideal_stream(os, r, polys);
    std::istringstream is(os.str());
    IdealFile f = read_ideal_stream(is);
    CHECK(*f.ring == *r);
    REQUIRE(f.polys.size() == 3);
    for (size_t i = 0; i < 3; ++i) CHECK(f.polys[i] == polys[i]);

    std::istringstream commented("# a comment\nring: x0..x2\nfield: GF(32003)\nx0^2-x1*x2 # tail\n");
    IdealFile g = read_ideal_stream(commented);
    CHECK(g.ring->field == Field::prime(32003));
    CHECK(g.polys.size() == 1);
}

TEST_CASE("groebner: monomial and principal ideals are their own basis") {
    auto r = qring(3);
    Ideal mono(r, {pp("x0^2", r), pp("x0*x1", r)});
    auto gb = mono.groebner_basis();
    REQUIRE(gb.size() == 2);
    CHECK(gb[0] == pp("x0*x1", r));
    CHECK(gb[1] == pp("x0^2", r));

    Ideal quad(r, {pp("x0^2-x1*x2", r)});
    auto gb2 = quad.groebner_basis();
    REQUIRE(gb2.size() == 1);
    // monic normal form of the quadric
    CHECK(gb2[0] == pp("x1*x2-x0^2", r).monic());
}

TEST_CASE("groebner: twisted cubic has a 3-element quadric basis") {
    auto r = qring(4);
    std::vector<Polynomial> minors = {pp("x0*x2-x1^2", r), pp("x0*x3-x1*x2", r),
                                      pp("x1*x3-x2^2", r)};
    Ideal tc(r, minors);
    auto gb = tc.groebner_basis();
    CHECK(gb.size() == 3);
    // postcondition: each original generator reduces to zero
    for (const auto& m : minors) CHECK(in_ideal(m, tc));
    // S-pairs of the basis reduce to zero (defining property)
    for (size_t i = 0; i < gb.size(); ++i)
        for (size_t j = i + 1; j < gb.size(); ++j) {
            Monomial l = gb[i].leading_monomial().lcm(gb[j].leading_monomial());
            Polynomial s = gb[i].times_monomial(l.quotient(gb[i].leading_monomial()));
            s.add_scaled(-(gb[i].leading_coefficient() / gb[j].leading_coefficient()),
                         l.quotient(gb[j].leading_monomial()), gb[j]);
            CHECK(normal_form(s, tc).is_zero());
        }
}

TEST_CASE("normal form: membership, units, single step") {
    auto r = qring(3);
    Ideal I(r, {pp("x0*x2-x1^2", r)});
    // under lex the quadric's leading monomial is x0*x2, giving the
    // single-step reduction x0*x2 -> x1^2
    CHECK(normal_form(pp("x0*x2", r), I, MonomialOrder::lex()) == pp("x1^2", r));
    // under grevlex the leading monomial is x1^2 instead
    CHECK(normal_form(pp("x1^2", r), I) == pp("x0*x2", r));
    CHECK(normal_form(Polynomial::constant(r, Scalar::one(r->field)), I) ==
          Polynomial::constant(r, Scalar::one(r->field)));
    // idempotence
    Polynomial nf = normal_form(pp("x0^2*x2+x1*x2", r), I);
    CHECK(normal_form(nf, I) == nf);
}

TEST_CASE("eliminate: linear and parametric") {
    auto r = qring(3);  // x0,x1,x2
    Ideal I(r, {pp("x2-x0", r), pp("x1", r)});
    Ideal e = eliminate(I, 1);
    CHECK(e.ring()->nvars == 2);
    REQUIRE(e.gens().size() == 1);
    CHECK(e.gens()[0] == pp("x1", e.ring()));

    CHECK(ideals_equal(eliminate(I, 0), I));
    CHECK_THROWS_AS(eliminate(I, 3), InputError);

    // graph ideal of (s^2, st, t^2): y's first, s,t last
    auto g = PolynomialRing::make({"y0", "y1", "y2", "s", "t"}, Field::rationals());
    Ideal graph(g, {pp("y0-s^2", g), pp("y1-s*t", g), pp("y2-t^2", g)});
    Ideal conic = eliminate(graph, 2);
    REQUIRE(conic.gens().size() == 1);
    CHECK(conic.gens()[0] == pp("y1^2-y0*y2", conic.ring()).monic());
}

TEST_CASE("quotient, saturation, intersection on monomial ideals") {
    auto r = qring(3);
    Ideal I(r, {pp("x0*x1", r)});
    Ideal J(r, {pp("x0", r)});
    CHECK(ideals_equal(ideal_quotient(I, J), Ideal(r, {pp("x1", r)})));

    Ideal I2(r, {pp("x0^2", r), pp("x0*x1", r)});
    CHECK(ideals_equal(ideal_quotient(I2, J), Ideal(r, {pp("x0", r), pp("x1", r)})));

    // (I : (1)) = I
    Ideal unit(r, {Polynomial::constant(r, Scalar::one(r->field))});
    CHECK(ideals_equal(ideal_quotient(I2, unit), I2));

    Ideal I3(r, {pp("x0*x1", r), pp("x0*x2", r)});
    CHECK(ideals_equal(saturate(I3, J), Ideal(r, {pp("x1", r), pp("x2", r)})));

    Ideal I4(r, {pp("x0^2*x1", r)});
    CHECK(ideals_equal(saturate(I4, J), Ideal(r, {pp("x1", r)})));

    // saturation of an already saturated prime is a fixed point
    Ideal prime(r, {pp("x0*x2-x1^2", r)});
    CHECK(ideals_equal(saturate(prime, J), prime));
    CHECK(ideals_equal(saturate(prime, irrelevant_ideal(r)), prime));
    CHECK(ideals_equal(saturate_irrelevant(prime), prime));

    CHECK(ideals_equal(intersect_ideals(Ideal(r, {pp("x0", r)}), Ideal(r, {pp("x1", r)})),
                       Ideal(r, {pp("x0*x1", r)})));
    CHECK(ideals_equal(intersect_ideals(I2, I2), I2));
    Ideal a(r, {pp("x0", r), pp("x1", r)});
    Ideal b(r, {pp("x0", r), pp("x2", r)});
    CHECK(ideals_equal(intersect_ideals(a, b), Ideal(r, {pp("x0", r), pp("x1*x2", r)})));
}

TEST_CASE("quotient postcondition (I : J) * J inside I") {
    auto r = qring(4);
    Rng rng(99);
    Ideal I(r, {pp("x0*x2-x1^2", r), pp("x0*x3-x1*x2", r)});
    Ideal J(r, {pp("x0", r), pp("x1*x3", r)});
    Ideal Q = ideal_quotient(I, J);
    CHECK(!Q.gens().empty());
    for (const auto& q : Q.gens())
        for (const auto& j : J.gens()) CHECK(in_ideal(q * j, I));
    for (const auto& f : I.gens()) CHECK(in_ideal(f, Q));
}

TEST_CASE("saturation by irrelevant ideal strips the cone point") {
    // (x0, x1)^2 + (x2) saturates to (x0, x1, x2)-free part: the ideal
    // (x0, x1, x2)-primary component is removed entirely.
    auto r = qring(3);
    Ideal I(r, {pp("x0^2", r), pp("x0*x1", r), pp("x1^2", r), pp("x2", r)});
    Ideal S = saturate_irrelevant(I);
    CHECK(S.is_unit());

    // embedded component at (x0,x1) is NOT irrelevant, so it must survive
    Ideal I2(r, {pp("x0^2", r), pp("x0*x1", r)});
    CHECK(ideals_equal(saturate_irrelevant(I2), I2));

    // x0 * (x0,x1,x2) saturates to (x0)
    Ideal I3(r, {pp("x0^2", r), pp("x0*x1", r), pp("x0*x2", r)});
    CHECK(ideals_equal(saturate_irrelevant(I3), Ideal(r, {pp("x0", r)})));
}

TEST_CASE("apply_linear_change: identity, involution, hilbert invariance hook") {
    auto r = qring(4);
    Ideal tc(r, {pp("x0*x2-x1^2", r), pp("x0*x3-x1*x2", r), pp("x1*x3-x2^2", r)});
    ScalarMatrix id = ScalarMatrix::identity(4, r->field);
    CHECK(ideals_equal(apply_linear_change(tc, id), tc));

    ScalarMatrix swap = ScalarMatrix::identity(4, r->field);
    std::swap(swap.at(1, 1), swap.at(1, 2));
    std::swap(swap.at(2, 2), swap.at(2, 1));
    Ideal once = apply_linear_change(tc, swap);
    CHECK(!ideals_equal(once, tc));
    CHECK(ideals_equal(apply_linear_change(once, swap), tc));

    ScalarMatrix sing = ScalarMatrix::identity(4, r->field);
    sing.at(3, 3) = Scalar::zero(r->field);
    CHECK_THROWS_AS(apply_linear_change(tc, sing), InputError);
}

TEST_CASE("prime field groebner agrees with rational one on the twisted cubic") {
    auto rq = qring(4);
    auto rp = PolynomialRing::standard(4, Field::prime(32003));
    Ideal tq(rq, {pp("x0*x2-x1^2", rq), pp("x0*x3-x1*x2", rq), pp("x1*x3-x2^2", rq)});
    Ideal tp(rp, {pp("x0*x2-x1^2", rp), pp("x0*x3-x1*x2", rp), pp("x1*x3-x2^2", rp)});
    auto gq = tq.groebner_basis();
    auto gp = tp.groebner_basis();
    REQUIRE(gq.size() == gp.size());
    for (size_t i = 0; i < gq.size(); ++i) {
        CHECK(gq[i].size() == gp[i].size());
        for (size_t t = 0; t < gq[i].size(); ++t) {
            CHECK(gq[i].terms()[t].mono == gp[i].terms()[t].mono);
            CHECK(gq[i].terms()[t].coef.reduce_mod(Field::prime(32003)) == gp[i].terms()[t].coef);
        }
    }
}
