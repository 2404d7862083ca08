#pragma once

#include "hetsec/eve_sim.hpp"
#include "hetsec/metrics.hpp"
#include "hetsec/system_params.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hetsec::bench {

enum class SweepParameter { NAntennas, LambdaP, LambdaE, SUsers, Rho };

std::string_view to_string(SweepParameter p);
SweepParameter parse_parameter(std::string_view name);

enum class EngineSel { Analytical, MonteCarlo, Both };

EngineSel parse_engine(std::string_view name);

struct SweepSpec {
    SweepParameter parameter = SweepParameter::LambdaP;
    std::vector<double> grid;
    std::vector<Metric> metrics;
    std::uint64_t trials = 10000;
    std::uint64_t seed = 42;
    EngineSel engines = EngineSel::Analytical;
    unsigned threads = 1;
    mc::EveFieldMode eve_mode = mc::EveFieldMode::Shared;

    /// Nonempty strictly increasing grid, at least one metric, trials >= 100
    /// when Monte Carlo runs. Throws std::invalid_argument.
    void validate() const;

    /// "fig1" (rates vs N) or "fig2" (secrecy outages vs lambda_p).
    static SweepSpec preset(std::string_view name);
};

struct CurvePoint {
    std::string parameter;
    double value = 0.0;
    std::string metric;
    std::string engine;        ///< "analytical" or "mc"
    double estimate = 0.0;
    double err_halfwidth = 0.0;
    std::uint64_t trials = 0;  ///< 0 on analytical rows
    std::uint64_t seed = 0;    ///< 0 on analytical rows
    std::string status = "ok"; ///< "ok" or "failed: <diagnostic>"

    bool ok() const { return status == "ok"; }
    /// Field-wise; NaN estimates compare equal to each other.
    bool operator==(const CurvePoint& o) const;
};

/// `base` with one field replaced; integer parameters must be whole numbers.
SystemParams apply_parameter(SystemParams base, SweepParameter param, double value);

/// Rows ordered by grid value, then metric, then engine (analytical first).
/// Engine errors become failed rows; the sweep continues.
std::vector<CurvePoint> run_sweep(const SweepSpec& spec, const SystemParams& base);

/// The spec's metrics at `p` alone (grid ignored). Rows carry parameter
/// "none" and value 0. Monte Carlo uses spec.threads workers.
std::vector<CurvePoint> run_single(const SweepSpec& spec, const SystemParams& p);

/// Log-spaced grid of n points from lo to hi inclusive.
std::vector<double> log_grid(double lo, double hi, int n);

}  // namespace hetsec::bench
