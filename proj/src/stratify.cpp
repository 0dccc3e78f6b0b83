#include "secproj/stratify.hpp"

namespace secproj {

int stratum_of(const Variety& X, const std::vector<Scalar>& q, bool cross_check) {
    SecantReport cond = secant_locus_conductor(X, q);
    if (cross_check) {
        SecantReport inc = secant_locus_incidence(X, q);
        if (secant_methods_consistent(X, cond, inc) == SecantAgreement::Disagree)
            throw Error("secant methods disagree at " + format_point(q));
    }
    return cond.s;
}

StratificationReport stratification_survey(const Variety& X, const SurveyOptions& opts) {
    if (opts.trials < 1) throw InputError("survey needs at least one trial");
    StratificationReport rep;
    rep.variety = X.name;
    rep.field = X.ideal.ring()->field.str();
    rep.trials = opts.trials;
    rep.special_trials = opts.special_trials;
    rep.seed = opts.seed;
    if (X.claims.expected_strata) rep.expected = *X.claims.expected_strata;
    if (X.ideal.ring()->field.is_prime())
        rep.caveat = "computed over " + rep.field +
                     "; the stratification statements assume characteristic zero";

    const RingPtr& ring = X.ideal.ring();
    int cross_every = opts.cross_check_fraction > 0
                          ? std::max(1, static_cast<int>(1.0 / opts.cross_check_fraction))
                          : 0;
    // incidence doubling must fit the variable cap
    bool cross_feasible = 2 * ring->nvars <= kMaxVars - 2;

    // Tangent variety for the Lemma-4.1 membership assertion, computed once
    // when affordable.
    std::optional<Ideal> tangent;
    if (opts.check_lemma41 && X.param && X.ambient_r() <= 5) {
        tangent = ruled_join_variety(X, JoinKind::Tangent);
        rep.lemma41_checked = true;
    }

    struct Task {
        std::string sampler;
        uint64_t index;
    };
    std::vector<Task> tasks;
    for (int i = 0; i < opts.trials; ++i) tasks.push_back({"general", static_cast<uint64_t>(i)});
    bool can_sample = X.param.has_value() || X.grassmann.has_value();
    if (can_sample)
        for (int i = 0; i < opts.special_trials; ++i)
            tasks.push_back({"on-secant", static_cast<uint64_t>(1000 + i)});
    if (X.param)
        for (int i = 0; i < opts.special_trials; ++i)
            tasks.push_back({"on-tangent", static_cast<uint64_t>(2000 + i)});

    int task_no = 0;
    for (const auto& task : tasks) {
        Rng rng = Rng::derived(opts.seed, task.index);
        std::vector<Scalar> q;
        if (task.sampler == "general") {
            // raw draw: points landing on X are tallied separately
            for (;;) {
                q.clear();
                for (int i = 0; i < ring->nvars; ++i) q.push_back(rng.element(ring->field, 9));
                bool nonzero = false;
                for (const auto& c : q) nonzero = nonzero || !c.is_zero();
                if (nonzero) break;
            }
            if (point_on_variety(q, X.ideal)) {
                ++rep.on_variety;
                continue;
            }
        } else {
            CenterKind kind =
                task.sampler == "on-secant" ? CenterKind::OnSecant : CenterKind::OnTangent;
            q = choose_center(X, kind, rng);
        }

        bool cross = cross_feasible && cross_every > 0 && (task_no % cross_every == 0);
        ++task_no;
        TrialRecord rec;
        rec.center = format_point(q);
        rec.sampler = task.sampler;
        rec.method = cross ? "conductor+incidence" : "conductor";
        try {
            rec.s = stratum_of(X, q, cross);
        } catch (const Error&) {
            rep.inconsistent.push_back(rec.center);
            rec.s = -2;
            rep.records.push_back(rec);
            continue;
        }
        ++rep.histogram[rec.s];
        if (tangent && rec.s > 0) {
            bool member = true;
            for (const auto& g : tangent->gens()) member = member && g.evaluate(q).is_zero();
            if (!member) ++rep.lemma41_failures;
        }
        rep.records.push_back(rec);
    }

    if (rep.expected.empty()) {
        rep.verdict = "no-expectation";
    } else {
        bool ok = rep.inconsistent.empty() && rep.lemma41_failures == 0;
        for (const auto& [s, count] : rep.histogram)
            if (!rep.expected.count(s)) ok = false;
        // witness coverage: every expected stratum reachable by the samplers
        // we ran must occur at least once
        for (int s : rep.expected) {
            bool reachable = s < 0 || can_sample;
            if (reachable && !rep.histogram.count(s)) ok = false;
        }
        rep.verdict = ok ? "consistent" : "inconsistent";
    }
    return rep;
}

}  // namespace secproj
