#include "hetsec/validate.hpp"

#include "hetsec/analytic.hpp"
#include "hetsec/estimate.hpp"
#include "hetsec/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace hetsec::bench {

namespace {

Check make(std::string name, double an, double mc, double gap, double tol, std::string detail = {}) {
    return {std::move(name), an, mc, gap, tol, gap <= tol, std::move(detail)};
}

Check skipped(std::string name, std::string why) {
    Check c;
    c.name = std::move(name);
    c.pass = true;
    c.detail = "skipped: " + why;
    return c;
}

Check failed(std::string name, const std::exception& e) {
    Check c;
    c.name = std::move(name);
    c.analytic = NAN;
    c.mc = NAN;
    c.gap = NAN;
    c.pass = false;
    c.detail = std::string("error: ") + e.what();
    return c;
}

// Largest |analytic - mc| over a threshold grid.
Check cdf_check(const std::string& name, MetricKind kind, const std::vector<double>& grid,
                const mc::McSamples& s, const SystemParams& p, double tol) {
    double worst = -1.0;
    Check c;
    for (double g : grid) {
        Metric m{kind, g};
        const double an = analytic_metric(m, p).value;
        const double mc = mc::estimate_from_samples(m, s, p).mean;
        const double gap = std::abs(an - mc);
        if (gap > worst) {
            worst = gap;
            char buf[64];
            std::snprintf(buf, sizeof buf, "worst at gamma=%g", g);
            c = make(name, an, mc, gap, tol, buf);
        }
    }
    return c;
}

}  // namespace

bool ValidationReport::all_pass() const {
    for (const auto& c : checks) {
        if (!c.pass) {
            return false;
        }
    }
    return true;
}

std::string ValidationReport::render() const {
    std::string out;
    char buf[256];
    for (const auto& c : checks) {
        std::snprintf(buf, sizeof buf, "%s %-24s analytic=%.6f mc=%.6f gap=%.6f tol=%.6f",
                      c.pass ? "PASS" : "FAIL", c.name.c_str(), c.analytic, c.mc, c.gap,
                      c.tolerance);
        out += buf;
        if (!c.detail.empty()) {
            out += "  (" + c.detail + ")";
        }
        out += '\n';
    }
    std::snprintf(buf, sizeof buf, "%s: %zu checks\n", all_pass() ? "ALL PASS" : "SOME FAILED",
                  checks.size());
    out += buf;
    return out;
}

ValidationReport validate(const SystemParams& p, const ValidateOptions& opt) {
    p.validate();
    if (opt.trials < 10000) {
        throw std::invalid_argument("validate needs at least 10000 trials");
    }
    mc::McConfig cfg;
    cfg.trials = opt.trials;
    cfg.seed = opt.seed;
    cfg.threads = opt.threads;
    cfg.eve_mode = opt.eve_mode;

    const auto metrics = parse_metric_list(
        "assoc_frac_macro,ergodic_rate_macro,ergodic_rate_pico,pico_sinr_cdf:1,"
        "secrecy_outage_overall");
    const mc::McSamples s = mc::draw_samples(metrics, p, cfg);
    ValidationReport rep;
    auto guarded = [&](const std::string& name, auto fn) {
        try {
            rep.checks.push_back(fn());
        } catch (const std::exception& e) {
            rep.checks.push_back(failed(name, e));
        }
    };

    guarded("association", [&] {
        const Metric m{MetricKind::AssocFracMacro};
        const auto est = mc::estimate_from_samples(m, s, p);
        double an = analytic::assoc_prob_macro(p).value;
        std::string detail = "3 standard errors";
        if (opt.corrupt_assoc_exponent) {
            an = 1.0 - analytic::assoc_prob_pico(p, analytic::PicoAssocForm::AsPrinted).value;
            detail += ", corrupted pico exponent";
        }
        const double se = est.half_width / 1.96;
        return make("association", an, est.mean, std::abs(an - est.mean), 3.0 * se, detail);
    });

    const bool pico = p.lambda_p > 0.0;
    const bool macro = p.lambda_m > 0.0;
    if (pico) {
        guarded("pico_sinr_cdf", [&] {
            return cdf_check("pico_sinr_cdf", MetricKind::PicoSinrCdf, kPicoCdfGrid, s, p, 0.02);
        });
    } else {
        rep.checks.push_back(skipped("pico_sinr_cdf", "no pico tier"));
    }

    if (macro) {
        guarded("macro_rate_jensen", [&] {
            const Metric m{MetricKind::ErgodicRateMacro};
            const auto est = mc::estimate_from_samples(m, s, p);
            const double an = analytic::rate_lower_bound_macro(p).value;
            const double se = est.half_width / 1.96;
            return make("macro_rate_jensen", an, est.mean, an - est.mean, 2.0 * se,
                        "bound <= mc + 2 standard errors");
        });
        guarded("macro_rate_informative", [&] {
            const Metric m{MetricKind::ErgodicRateMacro};
            const double mc = mc::estimate_from_samples(m, s, p).mean;
            const double an = analytic::rate_lower_bound_macro(p).value;
            return make("macro_rate_informative", an, mc, (mc - an) / mc, 0.30,
                        "relative shortfall of the bound");
        });
    } else {
        rep.checks.push_back(skipped("macro_rate_jensen", "no macro tier"));
        rep.checks.push_back(skipped("macro_rate_informative", "no macro tier"));
    }

    if (pico) {
        guarded("pico_rate", [&] {
            const Metric m{MetricKind::ErgodicRatePico};
            const double mc = mc::estimate_from_samples(m, s, p).mean;
            const double an = analytic::ergodic_rate_pico(p).value;
            return make("pico_rate", an, mc, std::abs(an - mc) / mc, 0.05, "relative");
        });
    } else {
        rep.checks.push_back(skipped("pico_rate", "no pico tier"));
    }

    if (p.lambda_e == 0.0) {
        for (const char* n : {"eve_cdf_macro", "eve_cdf_pico", "secrecy_outage_macro",
                              "secrecy_outage_pico", "secrecy_outage_overall"}) {
            rep.checks.push_back(skipped(n, "no eavesdroppers"));
        }
        return rep;
    }
    if (macro) {
        guarded("eve_cdf_macro", [&] {
            return cdf_check("eve_cdf_macro", MetricKind::EveCdfMacro, kEveMacroGrid, s, p, 0.02);
        });
    } else {
        rep.checks.push_back(skipped("eve_cdf_macro", "no macro tier"));
    }
    if (pico) {
        guarded("eve_cdf_pico", [&] {
            return cdf_check("eve_cdf_pico", MetricKind::EveCdfPico, kEvePicoGrid, s, p, 0.02);
        });
    } else {
        rep.checks.push_back(skipped("eve_cdf_pico", "no pico tier"));
    }
    const std::vector<std::pair<MetricKind, bool>> outages = {
        {MetricKind::SecrecyOutageMacro, macro},
        {MetricKind::SecrecyOutagePico, pico},
        {MetricKind::SecrecyOutageOverall, true},
    };
    for (const auto& [kind, present] : outages) {
        const Metric m{kind};
        const std::string name = m.name();
        if (!present) {
            rep.checks.push_back(skipped(name, "tier absent"));
            continue;
        }
        guarded(name, [&] {
            const double an = analytic_metric(m, p).value;
            const double mc = mc::estimate_from_samples(m, s, p).mean;
            return make(name, an, mc, std::abs(an - mc), 0.03);
        });
    }
    return rep;
}

}  // namespace hetsec::bench
