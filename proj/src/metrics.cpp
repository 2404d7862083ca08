#include "hetsec/metrics.hpp"

#include "hetsec/secrecy.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace hetsec {

namespace {

constexpr std::array<std::pair<MetricKind, std::string_view>, 9> kNames = {{
    {MetricKind::AssocFracMacro, "assoc_frac_macro"},
    {MetricKind::ErgodicRateMacro, "ergodic_rate_macro"},
    {MetricKind::ErgodicRatePico, "ergodic_rate_pico"},
    {MetricKind::SecrecyOutageMacro, "secrecy_outage_macro"},
    {MetricKind::SecrecyOutagePico, "secrecy_outage_pico"},
    {MetricKind::SecrecyOutageOverall, "secrecy_outage_overall"},
    {MetricKind::EveCdfMacro, "eve_cdf_macro"},
    {MetricKind::EveCdfPico, "eve_cdf_pico"},
    {MetricKind::PicoSinrCdf, "pico_sinr_cdf"},
}};

std::string_view base_name(MetricKind k) {
    for (const auto& [kind, name] : kNames) {
        if (kind == k) {
            return name;
        }
    }
    return "unknown";
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    return s;
}

}  // namespace

std::string format_double(double v) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

bool Metric::has_threshold() const {
    return kind == MetricKind::EveCdfMacro || kind == MetricKind::EveCdfPico ||
           kind == MetricKind::PicoSinrCdf;
}

std::string Metric::name() const {
    std::string out(base_name(kind));
    if (has_threshold()) {
        out += ':';
        out += format_double(gamma);
    }
    return out;
}

Metric Metric::parse(std::string_view text) {
    text = trim(text);
    const auto colon = text.find(':');
    const std::string_view base = text.substr(0, colon);
    for (const auto& [kind, name] : kNames) {
        if (name != base) {
            continue;
        }
        Metric m;
        m.kind = kind;
        if (!m.has_threshold()) {
            if (colon != std::string_view::npos) {
                throw std::invalid_argument("metric '" + std::string(base) +
                                            "' takes no threshold");
            }
            return m;
        }
        if (colon == std::string_view::npos) {
            throw std::invalid_argument("metric '" + std::string(base) +
                                        "' needs a threshold, e.g. " + std::string(base) + ":0.5");
        }
        const std::string_view num = text.substr(colon + 1);
        double g = 0.0;
        const auto res = std::from_chars(num.data(), num.data() + num.size(), g);
        if (res.ec != std::errc{} || res.ptr != num.data() + num.size() || !(g >= 0.0) ||
            !std::isfinite(g)) {
            throw std::invalid_argument("bad threshold in metric '" + std::string(text) + "'");
        }
        m.gamma = g;
        return m;
    }
    throw std::invalid_argument("unknown metric '" + std::string(text) + "'");
}

std::vector<Metric> parse_metric_list(std::string_view text) {
    std::vector<Metric> out;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const std::string_view item = trim(text.substr(0, comma));
        if (!item.empty()) {
            out.push_back(Metric::parse(item));
        }
        if (comma == std::string_view::npos) {
            break;
        }
        text.remove_prefix(comma + 1);
    }
    if (out.empty()) {
        throw std::invalid_argument("metric list is empty");
    }
    return out;
}

analytic::Estimate analytic_metric(const Metric& m, const SystemParams& p) {
    const auto q = secrecy::SecrecyQuery::relative(p.rho_secrecy);
    switch (m.kind) {
    case MetricKind::AssocFracMacro:
        return analytic::assoc_prob_macro(p);
    case MetricKind::ErgodicRateMacro:
        return analytic::rate_lower_bound_macro(p);
    case MetricKind::ErgodicRatePico:
        return analytic::ergodic_rate_pico(p);
    case MetricKind::SecrecyOutageMacro:
        return {secrecy::secrecy_outage_macro(q, p), 0.0};
    case MetricKind::SecrecyOutagePico:
        return {secrecy::secrecy_outage_pico(q, p), 0.0};
    case MetricKind::SecrecyOutageOverall:
        return {secrecy::secrecy_outage_overall(q, p).p_out_overall, 0.0};
    case MetricKind::EveCdfMacro:
        return {secrecy::cdf_eve_sinr_macro(m.gamma, p), 0.0};
    case MetricKind::EveCdfPico:
        return {secrecy::cdf_eve_sinr_pico(m.gamma, p), 0.0};
    case MetricKind::PicoSinrCdf:
        return analytic::cdf_sinr_pico(m.gamma, p);
    }
    throw std::logic_error("analytic_metric: unhandled metric");
}

}  // namespace hetsec
