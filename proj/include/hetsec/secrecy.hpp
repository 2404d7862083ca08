#pragma once

#include "hetsec/system_params.hpp"

#include <optional>

namespace hetsec::secrecy {

/// Target secrecy rate, either relative to the tier rate or absolute.
/// Exactly one of the two is set; use the factories.
class SecrecyQuery {
public:
    /// R_s = rho * R_tier, rho in (0, 1).
    static SecrecyQuery relative(double rho);
    /// R_s = r_s bits/s/Hz, r_s >= 0.
    static SecrecyQuery absolute(double r_s);

    double target_rate(double tier_rate) const;

    std::optional<double> rho() const { return rho_; }
    std::optional<double> r_s() const { return r_s_; }

private:
    SecrecyQuery() = default;
    std::optional<double> rho_;
    std::optional<double> r_s_;
};

struct SecrecyOutcome {
    double p_out_macro = 0.0;
    double p_out_pico = 0.0;
    double p_out_overall = 0.0;
    double r_m_used = 0.0;   ///< NaN when the macro tier is absent
    double r_p_used = 0.0;   ///< NaN when the pico tier is absent
    double a_m = 0.0;
    double a_p = 0.0;
};

/// sum_{k=1}^S C(S,k) Gamma(k - 2/alpha1) Gamma(S - k + 2/alpha1) / (alpha1 Gamma(S)).
double macro_tier_coefficient(int s_users, double alpha1);

/// CDF of the strongest eavesdropper's SINR when an MBS transmits.
double cdf_eve_sinr_macro(double gamma, const SystemParams& p);

/// CDF of the strongest eavesdropper's SINR when a PBS transmits.
double cdf_eve_sinr_pico(double gamma, const SystemParams& p);

double cdf_eve_sinr(TierId tier, double gamma, const SystemParams& p);

/// Decoding threshold 2^(R - R_s) - 1; negative when R_s > R.
double eve_threshold(double tier_rate, const SecrecyQuery& q);

/// 1 - F_eve(2^(R - R_s) - 1) for a given tier rate; 1 when R_s > R.
double outage_at_rate(TierId tier, double tier_rate, const SecrecyQuery& q, const SystemParams& p);

/// Uses rate_lower_bound_macro for R_M.
double secrecy_outage_macro(const SecrecyQuery& q, const SystemParams& p);

/// Uses ergodic_rate_pico for R_P.
double secrecy_outage_pico(const SecrecyQuery& q, const SystemParams& p);

/// Association-weighted combination of the two tiers. A tier with zero
/// density contributes with weight 0 and reports outage 0.
SecrecyOutcome secrecy_outage_overall(const SecrecyQuery& q, const SystemParams& p);

}  // namespace hetsec::secrecy
