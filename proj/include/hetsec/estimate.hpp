#pragma once

#include "hetsec/eve_sim.hpp"
#include "hetsec/metrics.hpp"
#include "hetsec/system_params.hpp"
#include "hetsec/user_sim.hpp"

#include <cstdint>
#include <vector>

namespace hetsec::mc {

/// Trials per rng partition. Fixed so results do not depend on `threads`.
inline constexpr std::uint64_t kPartitionSize = 1000;

struct McConfig {
    std::uint64_t trials = 10000;
    std::uint64_t seed = 42;
    unsigned threads = 1;
    EveFieldMode eve_mode = EveFieldMode::Shared;

    /// Throws std::invalid_argument if trials < 100 or threads == 0.
    void validate() const;
};

struct McEstimate {
    double mean = 0.0;
    double half_width = 0.0;   ///< 95% normal-approximation half-width
    std::uint64_t trials = 0;  ///< realizations drawn
};

/// Sample mean with 1.96 * sd / sqrt(n). Empty input throws.
McEstimate mean_estimate(const std::vector<double>& xs);

/// One UserTrial per realization, in trial order.
std::vector<UserTrial> run_user_trials(const SystemParams& p, const McConfig& cfg);

/// Association-only trials (sinr NaN); tiers match run_user_trials.
std::vector<UserTrial> run_association_trials(const SystemParams& p, const McConfig& cfg);

/// Strongest-eavesdropper SINR per realization, in trial order.
std::vector<double> run_eve_trials(TierId tier, const SystemParams& p, const McConfig& cfg);

/// Samples drawn once and reused for every requested metric.
struct McSamples {
    std::vector<UserTrial> user;
    std::vector<double> eve_macro;
    std::vector<double> eve_pico;
};

/// Draws only the sample sets the metrics need. When association is the
/// only user metric, the user trials skip fading.
McSamples draw_samples(const std::vector<Metric>& metrics, const SystemParams& p,
                       const McConfig& cfg);

/// Empirical estimate of one metric from drawn samples. Secrecy outages
/// compare each eavesdropper draw with the analytical tier rate; the overall
/// outage weights the tiers with the analytical association probabilities.
McEstimate estimate_from_samples(const Metric& m, const McSamples& s, const SystemParams& p);

std::vector<McEstimate> estimate_metrics(const std::vector<Metric>& metrics, const SystemParams& p,
                                         const McConfig& cfg);

}  // namespace hetsec::mc
