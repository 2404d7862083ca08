#pragma once

#include "hetsec/analytic.hpp"
#include "hetsec/system_params.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace hetsec {

enum class MetricKind {
    AssocFracMacro,
    ErgodicRateMacro,
    ErgodicRatePico,
    SecrecyOutageMacro,
    SecrecyOutagePico,
    SecrecyOutageOverall,
    EveCdfMacro,     // takes a threshold
    EveCdfPico,      // takes a threshold
    PicoSinrCdf,     // takes a threshold
};

/// A metric name such as "ergodic_rate_pico" or "eve_cdf_macro:0.5".
struct Metric {
    MetricKind kind = MetricKind::AssocFracMacro;
    double gamma = 0.0;

    /// Throws std::invalid_argument for unknown names or a bad threshold.
    static Metric parse(std::string_view text);
    std::string name() const;
    bool has_threshold() const;

    bool operator==(const Metric&) const = default;
};

/// Throws std::invalid_argument if the list names no metric.
std::vector<Metric> parse_metric_list(std::string_view comma_separated);

/// Closed-form value of a metric. Secrecy metrics use rho_secrecy from `p`;
/// the macro rate is the Jensen lower bound.
analytic::Estimate analytic_metric(const Metric& m, const SystemParams& p);

/// Shortest text that parses back to the same double.
std::string format_double(double v);

}  // namespace hetsec
