#include "hetsec/sweep.hpp"

#include "hetsec/estimate.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace hetsec::bench {

std::string_view to_string(SweepParameter p) {
    switch (p) {
    case SweepParameter::NAntennas:
        return "n_antennas";
    case SweepParameter::LambdaP:
        return "lambda_p";
    case SweepParameter::LambdaE:
        return "lambda_e";
    case SweepParameter::SUsers:
        return "s_users";
    case SweepParameter::Rho:
        return "rho";
    }
    return "unknown";
}

SweepParameter parse_parameter(std::string_view name) {
    for (auto p : {SweepParameter::NAntennas, SweepParameter::LambdaP, SweepParameter::LambdaE,
                   SweepParameter::SUsers, SweepParameter::Rho}) {
        if (to_string(p) == name) {
            return p;
        }
    }
    if (name == "rho_secrecy") {
        return SweepParameter::Rho;
    }
    throw std::invalid_argument("unknown sweep parameter '" + std::string(name) + "'");
}

EngineSel parse_engine(std::string_view name) {
    if (name == "analytical") {
        return EngineSel::Analytical;
    }
    if (name == "mc" || name == "monte_carlo") {
        return EngineSel::MonteCarlo;
    }
    if (name == "both") {
        return EngineSel::Both;
    }
    throw std::invalid_argument("unknown engine '" + std::string(name) + "'");
}

std::vector<double> log_grid(double lo, double hi, int n) {
    if (!(lo > 0.0 && hi > lo) || n < 2) {
        throw std::invalid_argument("log_grid: need 0 < lo < hi and n >= 2");
    }
    std::vector<double> out(static_cast<std::size_t>(n));
    const double a = std::log10(lo);
    const double b = std::log10(hi);
    for (int i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = std::pow(10.0, a + (b - a) * i / (n - 1));
    }
    out.front() = lo;
    out.back() = hi;
    return out;
}

void SweepSpec::validate() const {
    if (grid.empty()) {
        throw std::invalid_argument("sweep grid is empty");
    }
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i] > grid[i - 1])) {
            throw std::invalid_argument("sweep grid must be strictly increasing");
        }
    }
    if (metrics.empty()) {
        throw std::invalid_argument("sweep needs at least one metric");
    }
    if (engines != EngineSel::Analytical && trials < 100) {
        throw std::invalid_argument("Monte Carlo needs at least 100 trials");
    }
    if (threads == 0) {
        throw std::invalid_argument("threads must be >= 1");
    }
}

SweepSpec SweepSpec::preset(std::string_view name) {
    SweepSpec s;
    if (name == "fig1") {
        s.parameter = SweepParameter::NAntennas;
        s.grid = {50, 100, 150, 200, 250, 300};
        s.metrics = parse_metric_list("ergodic_rate_macro,ergodic_rate_pico");
        return s;
    }
    if (name == "fig2") {
        s.parameter = SweepParameter::LambdaP;
        s.grid = log_grid(1e-4, 1.0, 9);
        s.metrics =
            parse_metric_list("secrecy_outage_macro,secrecy_outage_pico,secrecy_outage_overall");
        return s;
    }
    throw std::invalid_argument("unknown preset '" + std::string(name) + "' (fig1, fig2)");
}

SystemParams apply_parameter(SystemParams base, SweepParameter param, double value) {
    auto as_int = [&](const char* what) {
        if (value != std::round(value) || std::abs(value) > 1e9) {
            throw std::invalid_argument(std::string(what) + " must be an integer");
        }
        return static_cast<int>(value);
    };
    switch (param) {
    case SweepParameter::NAntennas:
        base.n_antennas = as_int("n_antennas");
        break;
    case SweepParameter::SUsers:
        base.s_users = as_int("s_users");
        break;
    case SweepParameter::LambdaP:
        base.lambda_p = value;
        break;
    case SweepParameter::LambdaE:
        base.lambda_e = value;
        break;
    case SweepParameter::Rho:
        base.rho_secrecy = value;
        break;
    }
    base.validate();
    return base;
}

bool CurvePoint::operator==(const CurvePoint& o) const {
    auto same = [](double a, double b) { return a == b || (std::isnan(a) && std::isnan(b)); };
    return parameter == o.parameter && same(value, o.value) && metric == o.metric &&
           engine == o.engine && same(estimate, o.estimate) &&
           same(err_halfwidth, o.err_halfwidth) && trials == o.trials && seed == o.seed &&
           status == o.status;
}

namespace {

std::string failure(const std::exception& e) {
    return std::string("failed: ") + e.what();
}

std::vector<CurvePoint> evaluate(const SweepSpec& spec, const SystemParams& p,
                                 const std::string& pname, double value, unsigned mc_threads);

std::vector<CurvePoint> run_point(const SweepSpec& spec, const SystemParams& base, double value) {
    const std::string pname(to_string(spec.parameter));
    std::vector<CurvePoint> rows;
    auto row = [&](const Metric& m, const char* engine) {
        CurvePoint c;
        c.parameter = pname;
        c.value = value;
        c.metric = m.name();
        c.engine = engine;
        return c;
    };

    SystemParams p;
    try {
        p = apply_parameter(base, spec.parameter, value);
    } catch (const std::exception& e) {
        for (const auto& m : spec.metrics) {
            for (const char* eng : {"analytical", "mc"}) {
                if ((eng[0] == 'a' && spec.engines == EngineSel::MonteCarlo) ||
                    (eng[0] == 'm' && spec.engines == EngineSel::Analytical)) {
                    continue;
                }
                CurvePoint c = row(m, eng);
                c.estimate = NAN;
                c.status = failure(e);
                rows.push_back(c);
            }
        }
        return rows;
    }
    return evaluate(spec, p, pname, value, 1);
}

CurvePoint make_row(const Metric& m, const std::string& pname, double value, const char* engine) {
    CurvePoint c;
    c.parameter = pname;
    c.value = value;
    c.metric = m.name();
    c.engine = engine;
    return c;
}

std::vector<CurvePoint> evaluate(const SweepSpec& spec, const SystemParams& p,
                                 const std::string& pname, double value, unsigned mc_threads) {
    auto row = [&](const Metric& m, const char* engine) { return make_row(m, pname, value, engine); };
    std::vector<CurvePoint> rows;
    std::vector<CurvePoint> analytic_rows;
    if (spec.engines != EngineSel::MonteCarlo) {
        for (const auto& m : spec.metrics) {
            CurvePoint c = row(m, "analytical");
            try {
                const auto est = analytic_metric(m, p);
                c.estimate = est.value;
                c.err_halfwidth = est.abs_error;
            } catch (const std::exception& e) {
                c.estimate = NAN;
                c.status = failure(e);
            }
            analytic_rows.push_back(c);
        }
    }
    std::vector<CurvePoint> mc_rows;
    if (spec.engines != EngineSel::Analytical) {
        mc::McConfig cfg;
        cfg.trials = spec.trials;
        cfg.seed = spec.seed;
        cfg.threads = mc_threads;
        cfg.eve_mode = spec.eve_mode;
        mc::McSamples samples;
        std::string draw_error;
        try {
            samples = mc::draw_samples(spec.metrics, p, cfg);
        } catch (const std::exception& e) {
            draw_error = failure(e);
        }
        for (const auto& m : spec.metrics) {
            CurvePoint c = row(m, "mc");
            c.trials = spec.trials;
            c.seed = spec.seed;
            if (!draw_error.empty()) {
                c.estimate = NAN;
                c.status = draw_error;
            } else {
                try {
                    const auto est = mc::estimate_from_samples(m, samples, p);
                    c.estimate = est.mean;
                    c.err_halfwidth = est.half_width;
                } catch (const std::exception& e) {
                    c.estimate = NAN;
                    c.status = failure(e);
                }
            }
            mc_rows.push_back(c);
        }
    }
    for (std::size_t i = 0; i < spec.metrics.size(); ++i) {
        if (!analytic_rows.empty()) {
            rows.push_back(analytic_rows[i]);
        }
        if (!mc_rows.empty()) {
            rows.push_back(mc_rows[i]);
        }
    }
    return rows;
}

}  // namespace

std::vector<CurvePoint> run_single(const SweepSpec& spec, const SystemParams& p) {
    if (spec.metrics.empty()) {
        throw std::invalid_argument("no metrics requested");
    }
    if (spec.engines != EngineSel::Analytical && spec.trials < 100) {
        throw std::invalid_argument("Monte Carlo needs at least 100 trials");
    }
    p.validate();
    return evaluate(spec, p, "none", 0.0, std::max(1u, spec.threads));
}

std::vector<CurvePoint> run_sweep(const SweepSpec& spec, const SystemParams& base) {
    spec.validate();
    base.validate();
    std::vector<std::vector<CurvePoint>> per_point(spec.grid.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= spec.grid.size()) {
                return;
            }
            per_point[i] = run_point(spec, base, spec.grid[i]);
        }
    };
    const auto n_threads = std::min<std::size_t>(spec.threads, spec.grid.size());
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < n_threads; ++t) {
            pool.emplace_back(worker);
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    std::vector<CurvePoint> out;
    for (auto& rows : per_point) {
        out.insert(out.end(), rows.begin(), rows.end());
    }
    return out;
}

}  // namespace hetsec::bench
