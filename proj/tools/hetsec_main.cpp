#include "hetsec/config.hpp"
#include "hetsec/csv.hpp"
#include "hetsec/metrics.hpp"
#include "hetsec/secrecy.hpp"
#include "hetsec/sweep.hpp"
#include "hetsec/validate.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using namespace hetsec;

namespace {

struct Globals {
    std::string config;
    std::uint64_t seed = 42;
    std::uint64_t trials = 10000;
    std::string out;
    std::string engine = "analytical";
    std::vector<std::string> sets;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    std::string eve_field = "shared";
};

SystemParams load_params(const Globals& g) {
    ParamOverrides file;
    if (!g.config.empty()) {
        file.read_file(g.config);
    }
    ParamOverrides flags;
    for (const auto& kv : g.sets) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("--set expects key=value, got '" + kv + "'");
        }
        flags.set(kv.substr(0, eq), kv.substr(eq + 1));
    }
    file.merge(flags);
    return file.apply(SystemParams::reference());
}

mc::EveFieldMode parse_eve_field(const std::string& s) {
    if (s == "shared") {
        return mc::EveFieldMode::Shared;
    }
    if (s == "independent") {
        return mc::EveFieldMode::Independent;
    }
    throw std::invalid_argument("--eve-field must be shared or independent");
}

bench::SweepSpec base_spec(const Globals& g) {
    bench::SweepSpec s;
    s.trials = g.trials;
    s.seed = g.seed;
    s.engines = bench::parse_engine(g.engine);
    s.threads = g.threads;
    s.eve_mode = parse_eve_field(g.eve_field);
    return s;
}

std::string timestamp() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

bool any_failed(const std::vector<bench::CurvePoint>& rows) {
    for (const auto& r : rows) {
        if (!r.ok()) {
            return true;
        }
    }
    return false;
}

void print_table(const std::vector<bench::CurvePoint>& rows) {
    for (const auto& r : rows) {
        if (r.parameter != "none") {
            std::printf("%s=%-10g ", r.parameter.c_str(), r.value);
        }
        if (r.ok()) {
            std::printf("%-26s %-10s %.6f +/- %.2g\n", r.metric.c_str(), r.engine.c_str(),
                        r.estimate, r.err_halfwidth);
        } else {
            std::printf("%-26s %-10s %s\n", r.metric.c_str(), r.engine.c_str(), r.status.c_str());
        }
    }
}

int emit(const Globals& g, const std::string& what, const std::vector<bench::CurvePoint>& rows) {
    if (g.out.empty()) {
        print_table(rows);
    } else {
        std::ofstream f(g.out);
        if (!f) {
            throw std::runtime_error("cannot open " + g.out + " for writing");
        }
        bench::write_csv(f, rows, "hetsec " + what + " generated " + timestamp());
        std::fprintf(stderr, "wrote %zu rows to %s\n", rows.size(), g.out.c_str());
    }
    return any_failed(rows) ? 1 : 0;
}

int run_metrics(const Globals& g, const std::string& what, const char* metric_list) {
    const SystemParams p = load_params(g);
    bench::SweepSpec s = base_spec(g);
    s.metrics = parse_metric_list(metric_list);
    return emit(g, what, bench::run_single(s, p));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Association, rate and secrecy-outage toolkit for a two-tier massive-MIMO HetNet"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--config", g.config, "key = value parameter file")->check(CLI::ExistingFile);
    app.add_option("--seed", g.seed, "Monte Carlo seed");
    app.add_option("--trials", g.trials, "Monte Carlo realizations");
    app.add_option("--out", g.out, "write CSV here instead of printing a table");
    app.add_option("--engine", g.engine, "analytical, mc or both")
        ->check(CLI::IsMember({"analytical", "mc", "both"}));
    app.add_option("--set", g.sets, "override a parameter, key=value (repeatable)");
    app.add_option("--threads", g.threads, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--eve-field", g.eve_field, "shared or independent BS field for eavesdroppers")
        ->check(CLI::IsMember({"shared", "independent"}));

    auto* assoc = app.add_subcommand("assoc", "association probabilities");
    auto* rate = app.add_subcommand("rate", "ergodic rates of both tiers");
    auto* secrecy_cmd = app.add_subcommand("secrecy", "secrecy outage probabilities");

    auto* sweep = app.add_subcommand("sweep", "sweep one parameter over a grid");
    std::string preset;
    std::string param;
    std::vector<double> grid;
    std::string metrics;
    sweep->add_option("--preset", preset, "fig1 or fig2")->check(CLI::IsMember({"fig1", "fig2"}));
    sweep->add_option("--param", param, "n_antennas, lambda_p, lambda_e, s_users or rho");
    sweep->add_option("--grid", grid, "grid values")->delimiter(',');
    sweep->add_option("--metrics", metrics, "comma-separated metric names");

    auto* validate_cmd = app.add_subcommand("validate", "pair every closed form with simulation");
    bool corrupt = false;
    validate_cmd->add_flag("--corrupt-assoc-exponent", corrupt,
                           "use the unexponentiated power ratio in the pico association integral");

    auto* params_cmd = app.add_subcommand("params", "print the effective parameters");

    for (auto* sub : {assoc, rate, secrecy_cmd, sweep, validate_cmd, params_cmd}) {
        sub->fallthrough();
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (*params_cmd) {
            write_params(std::cout, load_params(g));
            return 0;
        }
        if (*assoc) {
            return run_metrics(g, "assoc", "assoc_frac_macro");
        }
        if (*rate) {
            return run_metrics(g, "rate", "ergodic_rate_macro,ergodic_rate_pico");
        }
        if (*secrecy_cmd) {
            if (g.engine == "analytical" && g.out.empty()) {
                const SystemParams p = load_params(g);
                const auto o = secrecy::secrecy_outage_overall(
                    secrecy::SecrecyQuery::relative(p.rho_secrecy), p);
                std::printf("rho          %g\n", p.rho_secrecy);
                std::printf("R_M (bound)  %.6f\nR_P          %.6f\n", o.r_m_used, o.r_p_used);
                std::printf("A_M          %.6f\nA_P          %.6f\n", o.a_m, o.a_p);
                std::printf("outage macro %.6g\noutage pico  %.6g\noutage all   %.6g\n",
                            o.p_out_macro, o.p_out_pico, o.p_out_overall);
                return 0;
            }
            return run_metrics(g, "secrecy",
                               "secrecy_outage_macro,secrecy_outage_pico,secrecy_outage_overall");
        }
        if (*sweep) {
            const SystemParams p = load_params(g);
            bench::SweepSpec s;
            if (!preset.empty()) {
                s = bench::SweepSpec::preset(preset);
            }
            if (!param.empty()) {
                s.parameter = bench::parse_parameter(param);
            }
            if (!grid.empty()) {
                s.grid = grid;
            }
            if (!metrics.empty()) {
                s.metrics = parse_metric_list(metrics);
            }
            const bench::SweepSpec g_spec = base_spec(g);
            s.trials = g_spec.trials;
            s.seed = g_spec.seed;
            s.engines = g_spec.engines;
            s.threads = g_spec.threads;
            s.eve_mode = g_spec.eve_mode;
            s.validate();
            return emit(g, "sweep " + std::string(bench::to_string(s.parameter)),
                        bench::run_sweep(s, p));
        }
        if (*validate_cmd) {
            const SystemParams p = load_params(g);
            bench::ValidateOptions opt;
            opt.trials = g.trials;
            opt.seed = g.seed;
            opt.threads = g.threads;
            opt.corrupt_assoc_exponent = corrupt;
            opt.eve_mode = parse_eve_field(g.eve_field);
            const auto rep = bench::validate(p, opt);
            const std::string text = rep.render();
            std::fputs(text.c_str(), stdout);
            if (!g.out.empty()) {
                std::ofstream f(g.out);
                f << text;
            }
            return rep.all_pass() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
