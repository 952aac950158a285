#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mcfrac/serialize.hpp"

namespace {

using namespace mcfrac;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFailure = 2;       // certified-false or derivation failure
constexpr int kExitInconclusive = 3;

struct GlobalOpts {
    int prec = 192;
    std::string format = "json";
    std::string cache_dir = ".mcfrac-cache";
    bool uncertified = false;
};

int run_derive(const GlobalOpts& g, const std::string& family, int depth) {
    FamilyTag tag = family_from_name(family);
    if (depth < 0) {
        std::cerr << "derive: depth must be >= 0\n";
        return kExitUsage;
    }
    if (depth == 0) {
        // MC_0 only: nothing to derive, describe the initial correction.
        if (g.format == "json") {
            std::cout << "{\n  \"depth\": 0,\n  \"family\": \"" << family
                      << "\",\n  \"terms\": []\n}\n";
        } else {
            std::cout << "family: " << family << "   depth: 0 (initial correction only)\n";
        }
        return kExitOk;
    }
    if (depth > certified_depth_limit(tag) && !g.uncertified) {
        std::cerr << "derive: depth " << depth << " exceeds the certified limit for " << family
                  << " (" << certified_depth_limit(tag) << "); pass --uncertified to proceed\n";
        return kExitUsage;
    }
    CoefficientCache cache(g.cache_dir);
    DerivationReport report = derive_cached(&cache, tag, depth, g.uncertified, g.prec);
    std::cout << (g.format == "json" ? derivation_to_json(report, g.prec)
                                     : derivation_to_table(report, g.prec));
    return kExitOk;
}

int run_eval(const GlobalOpts& g, const std::string& family, int depth, long n) {
    FamilyTag tag = family_from_name(family);
    CoefficientCache cache(g.cache_dir);
    DerivationReport report = derive_cached(&cache, tag, depth, g.uncertified, g.prec);
    PiRatio mc = cf_evaluate_exact(report.cf, Rational(n));
    DecimalRendering mc_dec = render_pi_ratio(mc, g.prec);
    Enclosure err = error_term(report.cf, n, g.prec);
    DecimalRendering err_dec = render_enclosure(err, g.prec);

    std::string value_kind, value_exact;
    DecimalRendering value_dec{};
    switch (tag) {
        case FamilyTag::Landau: {
            Rational gval = landau_G(static_cast<int>(n));
            value_kind = "G(n), exact";
            value_exact = gval.to_string();
            value_dec = render_enclosure(Enclosure::from_rational(gval, g.prec), g.prec);
            break;
        }
        case FamilyTag::Lebesgue: {
            Enclosure l = lebesgue_enclosure(static_cast<int>(n), 2, g.prec);
            value_kind = "L_{n/2}, series bounds";
            value_exact = "";
            value_dec = render_enclosure(l, g.prec);
            break;
        }
        case FamilyTag::Euler: {
            Enclosure gamma_n = Enclosure::from_rational(harmonic(static_cast<int>(n)), g.prec)
                                    .sub(Enclosure::from_long(n, g.prec + 64).log());
            value_kind = "H_n - ln n";
            value_exact = harmonic(static_cast<int>(n)).to_string();
            value_dec = render_enclosure(gamma_n, g.prec);
            break;
        }
    }

    if (g.format == "json") {
        std::cout << "{\n"
                  << "  \"approximant\": {\"exact\": \"" << mc.to_string() << "\", \"value\": \""
                  << mc_dec.value << "\", \"err_bound\": \"" << mc_dec.err_bound
                  << "\", \"bits\": " << mc_dec.bits << "},\n"
                  << "  \"error_term\": {\"value\": \"" << err_dec.value
                  << "\", \"err_bound\": \"" << err_dec.err_bound << "\", \"bits\": "
                  << err_dec.bits << "},\n"
                  << "  \"n\": " << n << ",\n"
                  << "  \"true_value\": {\"kind\": \"" << value_kind << "\", \"exact\": \""
                  << value_exact << "\", \"value\": \"" << value_dec.value
                  << "\", \"err_bound\": \"" << value_dec.err_bound << "\", \"bits\": "
                  << value_dec.bits << "}\n"
                  << "}\n";
    } else {
        std::cout << "n = " << n << "\n";
        std::cout << "approximant MC_" << depth << "(n) = " << mc.to_string() << " = "
                  << mc_dec.value << "\n";
        std::cout << value_kind << (value_exact.empty() ? "" : " = " + value_exact) << " = "
                  << value_dec.value << " (+/- " << value_dec.err_bound << ")\n";
        std::cout << "E_" << depth << "(n) = " << err_dec.value << " (+/- " << err_dec.err_bound
                  << ")\n";
    }
    return kExitOk;
}

int run_verify(const GlobalOpts& g, const std::string& theorem, long n_max) {
    CoefficientCache cache(g.cache_dir);
    CheckOptions opts;
    opts.prec = g.prec;
    InequalityReport report;
    if (theorem == "landau-thm2") {
        auto rep = derive_cached(&cache, FamilyTag::Landau, 2, false, g.prec);
        report = check_theorem2(n_max, rep, opts);
    } else if (theorem == "lebesgue-thm4") {
        auto rep = derive_cached(&cache, FamilyTag::Lebesgue, 1, false, g.prec);
        report = check_theorem4(n_max, rep, opts);
    } else if (theorem == "landau-monotone") {
        auto rep = derive_cached(&cache, FamilyTag::Landau, 2, false, g.prec);
        report = check_monotone_decreasing(rep, n_max, opts);
    } else if (theorem == "lebesgue-monotone") {
        auto rep = derive_cached(&cache, FamilyTag::Lebesgue, 1, false, g.prec);
        report = check_monotone_decreasing(rep, n_max, opts);
    } else {
        std::cerr << "verify: unknown theorem '" << theorem
                  << "' (expected landau-thm2, lebesgue-thm4, landau-monotone or "
                     "lebesgue-monotone)\n";
        return kExitUsage;
    }
    std::cout << (g.format == "json" ? inequality_to_json(report) : inequality_to_table(report));
    if (report.any_certified_false()) return kExitFailure;
    if (report.any_inconclusive()) return kExitInconclusive;
    return kExitOk;
}

int run_rate(const GlobalOpts& g, const std::string& family, int depth, long n_max) {
    FamilyTag tag = family_from_name(family);
    CoefficientCache cache(g.cache_dir);
    DerivationReport report = derive_cached(&cache, tag, depth, g.uncertified, g.prec);
    std::vector<long> schedule;
    long n = std::max<long>(16, n_max / 16);
    for (; n <= n_max; n *= 2) schedule.push_back(n);
    RateFit fit = rate_fit(report, schedule, g.prec);
    std::cout << (g.format == "json" ? rate_fit_to_json(fit) : rate_fit_to_table(fit));
    return kExitOk;
}

int run_cache(const GlobalOpts& g, const std::string& action) {
    CoefficientCache cache(g.cache_dir);
    if (action == "list") {
        for (const auto& [family, depth] : cache.entries())
            std::cout << family_name(family) << " depth " << depth << ": "
                      << cache.path_for(family, depth) << "\n";
        return kExitOk;
    }
    if (action == "clear") {
        std::cout << "removed " << cache.clear() << " entries\n";
        return kExitOk;
    }
    std::cerr << "cache: unknown action '" << action << "' (expected list or clear)\n";
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Continued-fraction correction toolkit for the Landau, Lebesgue and "
        "Euler-Mascheroni constants: exact coefficient derivation, arbitrary-"
        "precision evaluation and interval-certified inequality checks"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    GlobalOpts g;
    app.add_option("--prec", g.prec, "working precision in bits (>= 64)")
        ->check(CLI::Range(64, 1 << 20));
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
    app.add_option("--cache", g.cache_dir, "coefficient cache directory");
    app.add_flag("--uncertified", g.uncertified,
                 "allow depths beyond the family's cross-checked limit");

    std::string family = "euler", theorem, cache_action = "list";
    int depth = 1;
    long n = 1, n_max = 100, rate_n_max = 1024;

    auto* cmd_derive = app.add_subcommand("derive", "derive correction coefficients");
    cmd_derive->add_option("--family", family, "landau | lebesgue | euler")->required();
    cmd_derive->add_option("--depth", depth, "correction depth k")->required();

    auto* cmd_eval = app.add_subcommand("eval", "evaluate approximant, true value and error term");
    cmd_eval->add_option("--family", family)->required();
    cmd_eval->add_option("--depth", depth)->required();
    cmd_eval->add_option("--n", n, "evaluation point")->required();

    auto* cmd_verify = app.add_subcommand("verify", "certify a double inequality over a range");
    cmd_verify->add_option("--theorem", theorem,
                           "landau-thm2 | lebesgue-thm4 | landau-monotone | lebesgue-monotone")
        ->required();
    cmd_verify->add_option("--n-max", n_max, "largest n checked");

    auto* cmd_rate = app.add_subcommand("rate", "fit the empirical convergence rate");
    cmd_rate->add_option("--family", family)->required();
    cmd_rate->add_option("--depth", depth)->required();
    cmd_rate->add_option("--n-max", rate_n_max, "largest sample (geometric schedule up to here)");

    auto* cmd_cache = app.add_subcommand("cache", "inspect or clear the coefficient cache");
    cmd_cache->add_option("action", cache_action, "list | clear");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cmd_derive->parsed()) return run_derive(g, family, depth);
        if (cmd_eval->parsed()) return run_eval(g, family, depth, n);
        if (cmd_verify->parsed()) return run_verify(g, theorem, n_max);
        if (cmd_rate->parsed()) return run_rate(g, family, depth, rate_n_max);
        if (cmd_cache->parsed()) return run_cache(g, cache_action);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
