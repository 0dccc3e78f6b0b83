#ifndef SECPROJ_PROJSEC_HPP
#define SECPROJ_PROJSEC_HPP

#include "secproj/varieties.hpp"

namespace secproj {

// Linear projection of X from a center q placed at [0:...:0:1].
struct ProjectionResult {
    std::vector<Scalar> center;
    ScalarMatrix change;       // M with M e_r = q; generators transform by g(Mx)
    Ideal changed;             // ideal of M^{-1} X (center at e_r)
    Variety image;             // X_q in P^{r-1}, saturated ideal, dim/deg filled
    bool degree_preserved = false;
};

ProjectionResult project(const Variety& X, const std::vector<Scalar>& q);

struct QuadricClass {
    bool is_quadric = false;
    int span_dim = -1;  // m: the span <q, Lambda> is a P^m
    int rank = 0;       // diagonal rank of the quadratic form (char != 2)
    bool smooth = false;
    std::string type;   // descriptor, or the not-a-quadric reason
};

// Rank classification of a secant scheme inside its linear span.
QuadricClass classify_quadric(const Ideal& sigma);

struct SecantReport {
    Ideal sigma;               // saturated ideal of Sigma_q(X) in the ambient P^r
    int s = -1;                // dim Sigma_q, -1 when empty
    int span_dim = -1;
    QuadricClass quadric;      // meaningful when s >= 0
    std::optional<Ideal> lambda;  // conductor method: ideal of Lambda in P^{r-1}
    std::string method;
};

// Oracle method: doubled coordinates (x, y), rank-2 incidence with q,
// diagonal saturation, elimination back to x.
SecantReport secant_locus_incidence(const Variety& X, const std::vector<Scalar>& q);

// Fast method via Theorem-style conductor ideal: elim(1) basis elements of
// x_r-degree one yield the linear ideal of Lambda; Sigma_q is the saturated
// scheme intersection of X with the cone <q, Lambda>.  Requires the N_2
// registry flag.
SecantReport secant_locus_conductor(const Variety& X, const std::vector<Scalar>& q);

// Consistency of the two secant computations.  Exact saturated-ideal
// equality, or the tangential case: the chord-closure oracle is empty while
// the conductor reports a length-2 double point; then the span line is
// restricted to X exactly and the intersection must be a binary quadratic
// with vanishing discriminant (one point of multiplicity two).
enum class SecantAgreement { Equal, TangentialDoublePoint, Disagree };
SecantAgreement secant_methods_consistent(const Variety& X, const SecantReport& conductor,
                                          const SecantReport& incidence);

// I + (codim x codim minors of the Jacobian), saturated.
Ideal singular_locus(const Ideal& I);

enum class JoinKind { Secant, Tangent };

// Sec(X) or Tan(X) as an ideal in the ambient ring.
Ideal ruled_join_variety(const Variety& X, JoinKind kind);

enum class CenterKind { General, GeneralOffSecant, OnSecant, OnTangent };

std::vector<Scalar> choose_center(const Variety& X, CenterKind kind, Rng& rng);
CenterKind center_kind_from_string(const std::string& s);
std::string format_point(const std::vector<Scalar>& q);
std::vector<Scalar> parse_point(const std::string& text, const RingPtr& ring);

struct CheckResult {
    std::string name;
    std::string predicted;
    std::string computed;
    bool pass = false;
};

struct VerificationReport {
    std::string variety;
    std::string center;
    std::string verdict;  // pass | fail | inconsistent | hypothesis-unmet
    std::vector<CheckResult> checks;
    int s = -1;
    std::optional<Ideal> sigma_incidence, sigma_conductor, projected_ideal;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct VerifyOptions {
    bool run_incidence = true;   // dual-method agreement when feasible
    bool emit_ideals = false;
    uint64_t seed = 1;
};

// Full projection-theorem engine: computes s by both secant methods
// (requiring agreement), projects, and checks the regularity / depth /
// quadric-count / genus / normality predictions plus the quadric shape of
// the secant locus and Lambda inside Sing(X_q).
VerificationReport verify_projection_theorem(const Variety& X, const std::vector<Scalar>& q,
                                             const VerifyOptions& opts = {});

}  // namespace secproj

#endif
