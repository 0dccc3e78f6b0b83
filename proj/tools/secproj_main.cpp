#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "secproj/io.hpp"
#include "secproj/reports.hpp"
#include "secproj/suites.hpp"

using namespace secproj;

namespace {

struct CommonArgs {
    std::string variety;
    std::string center = "general";
    std::string field;
    uint64_t seed = 1;
    std::string json_path;
    bool emit_ideals = false;
};

Field field_or(const std::string& spec, const Field& fallback) {
    return spec.empty() ? fallback : Field::parse(spec);
}

std::vector<Scalar> resolve_center(const Variety& X, const std::string& spec, uint64_t seed) {
    Rng rng = Rng::derived(seed, 0xCE17);
    if (spec == "general" || spec == "general-off-secant" || spec == "on-secant" ||
        spec == "on-tangent")
        return choose_center(X, center_kind_from_string(spec), rng);
    return parse_point(spec, X.ideal.ring());
}

void maybe_write_json(const std::string& path, const std::string& body) {
    if (path.empty())
        return;
    write_text_file(path, body);
}

void print_checks(const std::vector<CheckResult>& checks) {
    for (const auto& c : checks)
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": predicted " << c.predicted
                  << ", computed " << c.computed << "\n";
}

int report_exit(bool pass) { return pass ? 0 : 1; }

int run_verify(const std::string& suite, const CommonArgs& args, const std::string& incidence) {
    Field f = field_or(args.field, Field::rationals());
    IncidenceMode inc = incidence == "on"    ? IncidenceMode::On
                        : incidence == "off" ? IncidenceMode::Off
                                             : IncidenceMode::Auto;
    SuiteReport rep;
    if (suite == "thm3.3" || suite == "cor3.2") {
        if (args.variety.empty()) throw InputError("verify " + suite + " needs --variety");
        Variety X = variety_from_spec(args.variety, f, args.seed);
        auto q = resolve_center(X, args.center, args.seed);
        std::cout << "center: " << format_point(q) << "\n";
        rep = suite == "thm3.3" ? suite_thm33(X, q, args.seed, inc, args.emit_ideals)
                                : suite_cor32(X, q, args.seed);
    } else if (suite == "thm5.1") {
        rep = suite_thm51(f, args.seed);
    } else if (suite == "ex5.4") {
        rep = suite_ex54(f, args.seed);
    } else if (suite == "ex3.7") {
        rep = suite_ex37(f, args.seed);
    } else {
        throw InputError("unknown verification suite: " + suite);
    }
    print_checks(rep.checks);
    for (const auto& r : rep.runs) {
        std::cout << "— " << r.variety << " from " << r.center << " (s = " << r.s
                  << "): " << r.verdict << "\n";
        print_checks(r.checks);
    }
    std::cout << (rep.all_pass() ? "suite " + rep.name + ": PASS" : "suite " + rep.name + ": FAIL")
              << "\n";
    maybe_write_json(args.json_path, suite_to_json(rep, args.emit_ideals));
    return report_exit(rep.all_pass());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact projections, secant loci and syzygy verification"};
    app.require_subcommand(1);

    if (const char* pairs = std::getenv("SECPROJ_MAX_PAIRS"))
        GroebnerBudget::global().max_pairs = std::strtoull(pairs, nullptr, 10);
    if (const char* sugar = std::getenv("SECPROJ_MAX_SUGAR"))
        GroebnerBudget::global().max_sugar = static_cast<uint32_t>(std::strtoul(sugar, nullptr, 10));

    CommonArgs args;
    std::string out_path, method = "both", incidence = "auto";
    int jmax = -1, trials = 50, special = 10;
    double cross_check = 0.1;
    bool rational_mode = false;
    std::string suite_name, file_path;

    auto add_common = [&](CLI::App* cmd, bool with_center) {
        cmd->add_option("--variety", args.variety, "corpus spec, e.g. veronese:2,2");
        if (with_center)
            cmd->add_option("--center", args.center,
                            "general | general-off-secant | on-secant | on-tangent | [c0:c1:...]");
        cmd->add_option("--field", args.field, "QQ or GF(p) (odd prime)");
        cmd->add_option("--seed", args.seed, "deterministic seed");
        cmd->add_option("--json", args.json_path, "write a JSON report here");
        cmd->add_flag("--emit-ideals", args.emit_ideals, "include ideals in reports");
    };

    auto* c_construct = app.add_subcommand("construct", "build a corpus variety and write its ideal");
    add_common(c_construct, false);
    c_construct->add_option("--out", out_path, "ideal file path")->required();

    auto* c_project = app.add_subcommand("project", "linear projection from a center");
    add_common(c_project, true);
    c_project->add_option("--out", out_path, "write the projected ideal here");

    auto* c_secant = app.add_subcommand("secant", "secant locus of a center");
    add_common(c_secant, true);
    c_secant->add_option("--method", method, "incidence | conductor | both");

    auto* c_betti = app.add_subcommand("betti", "graded Betti table");
    add_common(c_betti, false);
    c_betti->add_option("--file", file_path, "ideal file instead of --variety");
    c_betti->add_option("--jmax", jmax, "row window override (default: automatic)");

    auto* c_inv = app.add_subcommand("invariants", "dimension, degree, Delta- and sectional genus");
    add_common(c_inv, false);

    auto* c_verify = app.add_subcommand("verify", "run a named verification suite");
    add_common(c_verify, true);
    c_verify->add_option("suite", suite_name, "thm3.3 | cor3.2 | thm5.1 | ex5.4 | ex3.7")
        ->required();
    c_verify->add_option("--incidence", incidence, "auto | on | off (dual secant cross-check)");

    auto* c_strat = app.add_subcommand("stratify", "empirical secant stratification survey");
    add_common(c_strat, false);
    c_strat->add_option("--trials", trials, "general centers (default 50)");
    c_strat->add_option("--special", special, "targeted centers per sampler (default 10)");
    c_strat->add_option("--cross-check", cross_check, "incidence cross-check fraction");
    c_strat->add_flag("--rational", rational_mode, "run fewer trials over QQ");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_construct->parsed()) {
            Field f = field_or(args.field, Field::rationals());
            Variety X = variety_from_spec(args.variety, f, args.seed);
            write_ideal_file(out_path, X.ideal.ring(), X.ideal.gens());
            std::cout << X.name << ": " << X.ideal.gens().size() << " generators, dim " << X.dim
                      << ", deg " << X.degree << " -> " << out_path << "\n";
            return 0;
        }
        if (c_project->parsed()) {
            Field f = field_or(args.field, Field::rationals());
            Variety X = variety_from_spec(args.variety, f, args.seed);
            auto q = resolve_center(X, args.center, args.seed);
            ProjectionResult pr = project(X, q);
            std::cout << "center " << format_point(q) << "\nimage: dim " << pr.image.dim << ", deg "
                      << pr.image.degree << ", " << pr.image.ideal.gens().size()
                      << " generators, degree preserved: " << (pr.degree_preserved ? "yes" : "no")
                      << "\n";
            if (!out_path.empty())
                write_ideal_file(out_path, pr.image.ideal.ring(), pr.image.ideal.gens());
            return 0;
        }
        if (c_secant->parsed()) {
            Field f = field_or(args.field, Field::rationals());
            Variety X = variety_from_spec(args.variety, f, args.seed);
            auto q = resolve_center(X, args.center, args.seed);
            std::cout << "center " << format_point(q) << "\n";
            std::optional<SecantReport> ic, cc;
            if (method == "incidence" || method == "both") ic = secant_locus_incidence(X, q);
            if (method == "conductor" || method == "both") cc = secant_locus_conductor(X, q);
            for (const auto* rep : {&ic, &cc}) {
                if (!*rep) continue;
                const SecantReport& rr = **rep;
                std::cout << rr.method << ": s = " << rr.s << ", span dim " << rr.span_dim;
                if (rr.s >= 0)
                    std::cout << ", " << (rr.quadric.is_quadric
                                              ? rr.quadric.type + " (rank " +
                                                    std::to_string(rr.quadric.rank) + ")"
                                              : rr.quadric.type);
                std::cout << "\n";
                if (args.emit_ideals)
                    for (const auto& g : rr.sigma.gens()) std::cout << "  " << g.str() << "\n";
            }
            if (ic && cc) {
                SecantAgreement agree = secant_methods_consistent(X, *cc, *ic);
                std::cout << "methods agree: "
                          << (agree == SecantAgreement::Equal ? "yes"
                              : agree == SecantAgreement::TangentialDoublePoint
                                  ? "yes (tangential double point; line contact certified)"
                                  : "NO")
                          << "\n";
                return report_exit(agree != SecantAgreement::Disagree);
            }
            return 0;
        }
        if (c_betti->parsed()) {
            Field f = field_or(args.field, Field::rationals());
            Ideal I;
            if (!file_path.empty()) {
                IdealFile file = read_ideal_file(file_path);
                I = saturate_irrelevant(Ideal(file.ring, file.polys));
            } else if (!args.variety.empty()) {
                I = variety_from_spec(args.variety, f, args.seed).ideal;
            } else {
                throw InputError("betti needs --variety or --file");
            }
            BettiTable t = graded_betti(I, jmax);
            std::cout << t.grid();
            std::cout << (t.complete ? "complete (euler identity certified)\n"
                                     : "window truncated at jmax\n");
            if (t.complete) {
                HilbertData h = hilbert_series(I);
                ResolutionPredicates p =
                    table_predicates(t, I.ring()->nvars - 1, h.proj_dim, true);
                std::cout << "reg " << p.regularity << ", pd " << p.pd << ", depth " << p.depth
                          << (p.acm ? ", ACM" : "") << "\n";
            }
            maybe_write_json(args.json_path, betti_to_json(t));
            return 0;
        }
        if (c_inv->parsed()) {
            Field f = field_or(args.field, Field::rationals());
            Variety X = variety_from_spec(args.variety, f, args.seed);
            NumericalInvariants inv = numerical_invariants(X, args.seed);
            std::cout << X.name << ": dim " << inv.dim << ", deg " << inv.degree << ", Delta "
                      << inv.delta << ", sectional genus " << inv.sectional_genus << "\n";
            return 0;
        }
        if (c_verify->parsed()) return run_verify(suite_name, args, incidence);
        if (c_strat->parsed()) {
            Field f = field_or(args.field, rational_mode ? Field::rationals() : Field::prime(32003));
            if (rational_mode && !c_strat->count("--trials")) trials = 8;
            Variety X = variety_from_spec(args.variety, f, args.seed);
            SurveyOptions opts;
            opts.trials = trials;
            opts.special_trials = special;
            opts.cross_check_fraction = cross_check;
            opts.seed = args.seed;
            StratificationReport rep = stratification_survey(X, opts);
            if (!rep.caveat.empty()) std::cout << "note: " << rep.caveat << "\n";
            std::cout << rep.variety << " over " << rep.field << ", " << rep.trials
                      << " general trials (seed " << rep.seed << ")\n";
            for (const auto& [s, count] : rep.histogram)
                std::cout << "  s = " << s << ": " << count << "\n";
            if (rep.on_variety) std::cout << "  on-variety draws: " << rep.on_variety << "\n";
            if (rep.lemma41_checked)
                std::cout << "tangent-membership failures: " << rep.lemma41_failures << "\n";
            std::cout << "verdict: " << rep.verdict << "\n";
            maybe_write_json(args.json_path, stratification_to_json(rep));
            return report_exit(rep.verdict != "inconsistent");
        }
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
