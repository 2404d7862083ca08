#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hetsec {

enum class TierId { Macro, Pico };

std::string_view to_string(TierId tier);

/// Which rule of SystemParams a value broke.
enum class ParamViolation {
    AntennaCount,       // N > S >= 1
    PathLossExponent,   // alpha1, alpha2 > 2
    GammaPole,          // k - 2/alpha1 hits a non-positive integer
    NonPositivePower,
    NonPositiveDensity, // all >= 0, lambda_m + lambda_p > 0
    NonPositiveBeta,
    NonPositiveNoise,
    SecrecyFraction,    // 0 < rho < 1
    SimRadius,
};

class InvalidParams : public std::invalid_argument {
public:
    InvalidParams(ParamViolation v, const std::string& what)
        : std::invalid_argument(what), violation_(v) {}
    ParamViolation violation() const noexcept { return violation_; }

private:
    ParamViolation violation_;
};

/// Physical and network constants of the two-tier deployment, SI units.
///
/// Plain aggregate: build one, call validate(), then share it by const
/// reference. Densities are points per square metre. Any single density may
/// be zero (single-tier and no-eavesdropper limits) as long as at least one
/// base-station tier exists.
struct SystemParams {
    double p_m = 0.0;          ///< MBS transmit power [W]
    double p_p = 0.0;          ///< PBS transmit power [W]
    int n_antennas = 0;        ///< N
    int s_users = 0;           ///< S, users per MBS
    double alpha1 = 0.0;       ///< macro path-loss exponent
    double alpha2 = 0.0;       ///< pico path-loss exponent
    double beta_pl = 0.0;      ///< path-loss constant
    double lambda_m = 0.0;
    double lambda_p = 0.0;
    double lambda_e = 0.0;
    double noise_power = 0.0;  ///< delta^2 [W]
    double rho_secrecy = 0.0;  ///< secrecy target as a fraction of the tier rate
    double sim_radius = 0.0;   ///< Monte Carlo disc radius [m]

    /// Reference deployment: 46/37 dBm, alpha 3.5/4, lambda_M = 1e-3,
    /// lambda_P = 1e-2, lambda_E = 1e-1, N = 200, S = 10, -90 dBm noise,
    /// rho = 0.5, 1 GHz free-space beta.
    static SystemParams reference();

    void validate() const;

    /// N - S + 1, the zero-forcing array gain.
    double array_gain() const { return static_cast<double>(n_antennas - s_users + 1); }
};

/// 10 * the mean nearest-MBS distance, 5 / sqrt(lambda_m).
double default_sim_radius(double lambda_m);

/// (c / (4 pi f))^2, free-space path-loss constant at carrier f [Hz].
double free_space_beta(double carrier_hz);

double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

/// beta * d^(-exponent). Throws DomainError for d <= 0.
double path_loss(double distance, double exponent, double beta_pl);

/// N - S + 1.
double array_gain(const SystemParams& params);

}  // namespace hetsec
