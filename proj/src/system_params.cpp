#include "hetsec/system_params.hpp"

#include "hetsec/errors.hpp"

#include <cmath>
#include <numbers>

namespace hetsec {

std::string_view to_string(TierId tier) {
    return tier == TierId::Macro ? "macro" : "pico";
}

double dbm_to_watts(double dbm) {
    return std::pow(10.0, (dbm - 30.0) / 10.0);
}

double watts_to_dbm(double watts) {
    if (!(watts > 0.0)) {
        throw DomainError("watts_to_dbm: power must be positive");
    }
    return 10.0 * std::log10(watts) + 30.0;
}

double path_loss(double distance, double exponent, double beta_pl) {
    if (!(distance > 0.0)) {
        throw DomainError("path_loss: distance must be positive");
    }
    return beta_pl * std::pow(distance, -exponent);
}

double array_gain(const SystemParams& params) {
    return params.array_gain();
}

double free_space_beta(double carrier_hz) {
    constexpr double c = 299792458.0;
    const double v = c / (4.0 * std::numbers::pi * carrier_hz);
    return v * v;
}

double default_sim_radius(double lambda_m) {
    if (!(lambda_m > 0.0)) {
        throw DomainError("default_sim_radius: density must be positive");
    }
    return 10.0 * 0.5 / std::sqrt(lambda_m);
}

SystemParams SystemParams::reference() {
    SystemParams p;
    p.p_m = dbm_to_watts(46.0);
    p.p_p = dbm_to_watts(37.0);
    p.n_antennas = 200;
    p.s_users = 10;
    p.alpha1 = 3.5;
    p.alpha2 = 4.0;
    p.beta_pl = free_space_beta(1e9);
    p.lambda_m = 1e-3;
    p.lambda_p = 1e-2;
    p.lambda_e = 1e-1;
    p.noise_power = dbm_to_watts(-90.0);
    p.rho_secrecy = 0.5;
    p.sim_radius = default_sim_radius(p.lambda_m);
    return p;
}

void SystemParams::validate() const {
    using V = ParamViolation;
    if (!(s_users >= 1 && n_antennas > s_users)) {
        throw InvalidParams(V::AntennaCount, "need N > S >= 1");
    }
    if (!(alpha1 > 2.0 && alpha2 > 2.0) || !std::isfinite(alpha1) || !std::isfinite(alpha2)) {
        throw InvalidParams(V::PathLossExponent, "path-loss exponents must exceed 2");
    }
    // Gamma(k - 2/alpha1) for k = 1..S and Gamma(S - k + 2/alpha1) must avoid poles.
    const double frac = 2.0 / alpha1;
    if (std::abs(frac - std::round(frac)) < 1e-9) {
        throw InvalidParams(V::GammaPole, "2/alpha1 must not be an integer");
    }
    if (!(p_m > 0.0 && p_p > 0.0) || !std::isfinite(p_m) || !std::isfinite(p_p)) {
        throw InvalidParams(V::NonPositivePower, "transmit powers must be positive");
    }
    if (!(lambda_m >= 0.0 && lambda_p >= 0.0 && lambda_e >= 0.0) ||
        !(lambda_m + lambda_p > 0.0) || !std::isfinite(lambda_m + lambda_p + lambda_e)) {
        throw InvalidParams(V::NonPositiveDensity,
                            "densities must be non-negative with at least one BS tier present");
    }
    if (!(beta_pl > 0.0) || !std::isfinite(beta_pl)) {
        throw InvalidParams(V::NonPositiveBeta, "beta_pl must be positive");
    }
    if (!(noise_power > 0.0) || !std::isfinite(noise_power)) {
        throw InvalidParams(V::NonPositiveNoise, "noise power must be positive");
    }
    if (!(rho_secrecy > 0.0 && rho_secrecy < 1.0)) {
        throw InvalidParams(V::SecrecyFraction, "rho_secrecy must lie in (0, 1)");
    }
    if (!(sim_radius > 0.0) || !std::isfinite(sim_radius)) {
        throw InvalidParams(V::SimRadius, "sim_radius must be positive");
    }
}

}  // namespace hetsec
