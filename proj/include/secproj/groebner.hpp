#ifndef SECPROJ_GROEBNER_HPP
#define SECPROJ_GROEBNER_HPP

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "secproj/polynomial.hpp"

namespace secproj {

// Caps for a single Buchberger run; exceeding any throws BudgetError with a
// progress note (pairs processed / basis size / current degree).
struct GroebnerBudget {
    size_t max_pairs = 4000000;
    size_t max_basis = 50000;
    uint32_t max_sugar = 4000;

    static GroebnerBudget& global();
};

// Homogeneous ideal with cached reduced Groebner bases per monomial order.
class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Polynomial> gens);

    const RingPtr& ring() const { return core_->ring; }
    const std::vector<Polynomial>& gens() const { return core_->gens; }
    bool is_homogeneous() const { return core_->homogeneous; }

    // Reduced basis (monic, interreduced, deterministic), cached.
    const std::vector<Polynomial>& groebner_basis(
        MonomialOrder order = MonomialOrder::grevlex()) const;

    bool is_zero() const { return core_->gens.empty(); }
    // Contains a unit (the whole ring).
    bool is_unit() const;

    std::optional<bool> saturated_flag() const { return core_->saturated; }
    void set_saturated(bool v) const { core_->saturated = v; }

private:
    struct Core {
        RingPtr ring;
        std::vector<Polynomial> gens;
        bool homogeneous = true;
        std::map<MonomialOrder, std::vector<Polynomial>> cache;
        std::optional<bool> saturated;
    };
    std::shared_ptr<Core> core_;
};

// Stand-alone Buchberger: reduced basis of `gens` under `order`.
std::vector<Polynomial> buchberger(const RingPtr& ring, std::vector<Polynomial> gens,
                                   MonomialOrder order);

Polynomial normal_form(const Polynomial& f, const Ideal& I,
                       MonomialOrder order = MonomialOrder::grevlex());
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       MonomialOrder order);
bool in_ideal(const Polynomial& f, const Ideal& I);

// Exact division f / g (throws if not divisible).
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

// I + J, generator concatenation.
Ideal ideal_sum(const Ideal& I, const Ideal& J);

// I cap K[x_0..x_{n-k-1}], result lives in the smaller ring.
Ideal eliminate(const Ideal& I, int last_k);

// Intersection via the auxiliary-variable construction (t I + (1-t) J).
Ideal intersect_ideals(const Ideal& I, const Ideal& J);

// (I : J) computed generator-by-generator through intersections.
Ideal ideal_quotient(const Ideal& I, const Ideal& J);

// (I : J^infinity).  Certified fast paths (last-variable division trick for
// variables, generic-combination with membership certificates otherwise)
// with the quotient-iteration loop as fallback.
Ideal saturate(const Ideal& I, const Ideal& J);

// Saturation w.r.t. the irrelevant maximal ideal (x_0..x_r).
Ideal saturate_irrelevant(const Ideal& I);

// Equality as ideals (mutual normal-form membership).
bool ideals_equal(const Ideal& I, const Ideal& J);

// Generators g(M x); realizes projective coordinate changes.
Ideal apply_linear_change(const Ideal& I, const ScalarMatrix& M);

// The ideal (x_0, .., x_{n-1}).
Ideal irrelevant_ideal(const RingPtr& ring);

}  // namespace secproj

#endif
