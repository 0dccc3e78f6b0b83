#ifndef SECPROJ_STRATIFY_HPP
#define SECPROJ_STRATIFY_HPP

#include "secproj/projsec.hpp"

namespace secproj {

// Dimension of the secant locus for one center: conductor fast path with an
// optional incidence cross-check.  Throws on method disagreement.
int stratum_of(const Variety& X, const std::vector<Scalar>& q, bool cross_check = false);

struct TrialRecord {
    std::string center;
    int s = -1;
    std::string method;  // "conductor" or "conductor+incidence"
    std::string sampler; // "general" | "on-secant" | "on-tangent"
};

struct StratificationReport {
    std::string variety;
    std::string field;
    int trials = 0;          // general trials requested
    int special_trials = 0;  // per targeted sampler
    uint64_t seed = 0;
    std::map<int, int> histogram;  // stratum -> count over all off-X trials
    int on_variety = 0;            // centers that landed on X (SL_n bucket)
    std::vector<TrialRecord> records;
    std::vector<std::string> inconsistent;  // centers with method disagreement
    std::set<int> expected;                 // registered stratum set, may be empty
    bool lemma41_checked = false;
    int lemma41_failures = 0;
    std::string verdict;  // consistent | inconsistent | no-expectation
    std::string caveat;   // characteristic caveat banner for prime fields
};

struct SurveyOptions {
    int trials = 50;
    int special_trials = 10;        // per applicable targeted sampler
    double cross_check_fraction = 0.1;
    uint64_t seed = 1;
    bool check_lemma41 = true;      // tangent-variety membership when affordable
};

StratificationReport stratification_survey(const Variety& X, const SurveyOptions& opts);

}  // namespace secproj

#endif
