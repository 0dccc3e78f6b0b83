#ifndef SECPROJ_SUITES_HPP
#define SECPROJ_SUITES_HPP

#include "secproj/reports.hpp"

namespace secproj {

// Named verification suites: one scoreboard per theorem-shaped claim.
struct SuiteReport {
    std::string name;
    std::vector<CheckResult> checks;
    std::vector<VerificationReport> runs;  // inner projection-theorem runs

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        for (const auto& r : runs)
            if (r.verdict != "pass") return false;
        return true;
    }
};

// Incidence cross-check is run automatically when the doubled ring is small
// enough; callers can force it on or off.
enum class IncidenceMode { Auto, On, Off };

SuiteReport suite_thm33(const Variety& X, const std::vector<Scalar>& q, uint64_t seed,
                        IncidenceMode inc = IncidenceMode::Auto, bool emit_ideals = false);

SuiteReport suite_cor32(const Variety& X, const std::vector<Scalar>& q, uint64_t seed);

// Minimal-degree coherence: deg = codim + 1, 2-regularity and N_{2,codim}
// hold or fail together across the mixed corpus.
SuiteReport suite_thm51(const Field& f, uint64_t seed);

// Del Pezzo threefold section of G(1,4): stratum, quadric count, exact
// Betti table, depth and regularity of the projection.
SuiteReport suite_ex54(const Field& f, uint64_t seed);

// Sharpness: complete intersection of two quadrics (fails N_2), quartic
// hypersurface image, not-a-quadric secant locus.
SuiteReport suite_ex37(const Field& f, uint64_t seed);

std::string suite_to_json(const SuiteReport& rep, bool emit_ideals);

}  // namespace secproj

#endif
