#ifndef SECPROJ_VARIETIES_HPP
#define SECPROJ_VARIETIES_HPP

#include <optional>
#include <set>
#include <string>

#include "secproj/betti.hpp"
#include "secproj/hilbert.hpp"
#include "secproj/rng.hpp"

namespace secproj {

// Polynomial map from a source ring; forms all of the same degree.  blocks
// mark groups of source variables that may not vanish simultaneously
// (factors of a product source).
struct Parametrization {
    RingPtr source;
    std::vector<Polynomial> forms;
    std::vector<std::pair<int, int>> blocks;  // [from, to) ranges
};

// Sampler for Grassmannian linear sections: a point is p(a, b) for random
// a, b in K^5 subject to the cut hyperplanes (linear conditions on b once a
// is fixed); the section's coordinates are the surviving Pluecker ones.
struct GrassmannSectionData {
    RingPtr source;                        // a0..a4, b0..b4
    std::vector<Polynomial> plucker;       // 10 bilinear forms
    std::vector<std::vector<Scalar>> cuts; // cut hyperplanes over P^9 coords
};

// j -> h^0(X, O_X(j)) in closed combinatorial form per family.
struct SectionProfile {
    enum class Family { Veronese, Segre, Scroll, FromHilbert };
    Family family = Family::FromHilbert;
    std::vector<int> params;
    std::shared_ptr<const HilbertData> hilbert;  // FromHilbert only
    bool projectively_normal = true;

    mpz_class h0(long j) const;
};

// Facts quoted from the literature and recorded on construction.  These are
// metadata: verification verdicts always recompute from Betti tables; the
// only operational use is the N_2 hypothesis gate of the conductor method.
struct ClaimedProperties {
    bool satisfies_n2 = false;
    std::optional<int> np_max;
    std::optional<std::set<int>> expected_strata;  // for q outside X
    bool length_two_secants = false;  // secant loci are length-2 schemes
};

struct Variety {
    std::string name;
    Ideal ideal;  // saturated
    std::optional<Parametrization> param;
    std::optional<GrassmannSectionData> grassmann;
    std::optional<SectionProfile> profile;
    ClaimedProperties claims;
    int dim = 0;
    mpz_class degree = 0;

    int ambient_r() const { return ideal.ring()->nvars - 1; }
    int codim() const { return ambient_r() - dim; }
    mpz_class h0(long j) const;  // profile required
};

// Size caps (ambient dimension / generator degree) for desk-scale runs.
struct VarietyLimits {
    int max_ambient = 12;
    int max_degree = 4;
    static VarietyLimits& global();
};

Variety veronese(int n, int d, const Field& f);
Variety segre(int a, int b, const Field& f);
Variety scroll(const std::vector<int>& degrees, const Field& f);
Variety grassmann_g14_section(int cut, const Field& f, uint64_t seed);
Variety complete_intersection(std::vector<Polynomial> forms, const std::string& name = "ci");

// Kernel of the ring map via graph-ideal elimination; saturated output.
Ideal implicitize(const Parametrization& P, const RingPtr& target);

// Uniformly random parametrized point; evaluates to zero on all generators.
std::vector<Scalar> random_point(const Variety& X, Rng& rng);

// Point of the tangent space at a sampled point (off X generically).
std::vector<Scalar> random_tangent_point(const Variety& X, Rng& rng);

bool point_on_variety(const std::vector<Scalar>& pt, const Ideal& I);

struct NumericalInvariants {
    int dim = 0;
    mpz_class degree;
    mpz_class delta;            // n + deg - h^0(O(1))
    mpz_class sectional_genus;  // cross-checked: slicing vs chi coefficients
    std::vector<mpq_class> chi;
};

NumericalInvariants numerical_invariants(const Variety& X, uint64_t seed);

// CLI registry names: veronese:n,d | segre:a,b | scroll:a1+a2+... | g14:cut |
// ci:file.ideal | file:path.ideal
Variety variety_from_spec(const std::string& spec, const Field& f, uint64_t seed);

}  // namespace secproj

#endif
