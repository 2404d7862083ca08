#include "hetsec/secrecy.hpp"

#include "hetsec/analytic.hpp"
#include "hetsec/errors.hpp"
#include "hetsec/quadrature.hpp"
#include "hetsec/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace hetsec::secrecy {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMaxExponent = 700.0;

// exp(-2 pi lambda_E * weight * int_0^inf exp(-c1 x^e1 - c2 x^e2 - c3 x^e3) x dx)
double eve_cdf_from_exponents(double lambda_e, double weight, double c1, double e1, double c2,
                              double e2, double c3, double e3) {
    auto f = [&](double x) {
        return std::exp(-c1 * std::pow(x, e1) - c2 * std::pow(x, e2) - c3 * std::pow(x, e3)) * x;
    };
    const double scale = 2.0 * kPi * lambda_e * weight;
    double integral = 0.0;
    try {
        integral = specfun::integrate_semi_infinite(f, specfun::QuadratureConfig{}).value;
    } catch (const NumericError& e) {
        // Non-decaying integrand: the exponent is astronomically large.
        if (std::isfinite(e.best_estimate()) && scale * e.best_estimate() > kMaxExponent) {
            return 0.0;
        }
        throw;
    }
    const double expo = scale * integral;
    if (expo > kMaxExponent) {
        return 0.0;
    }
    return std::clamp(std::exp(-expo), 0.0, 1.0);
}

void check_gamma(double gamma, const char* who) {
    if (!(gamma >= 0.0)) {
        throw DomainError(std::string(who) + ": gamma must be non-negative");
    }
}

}  // namespace

SecrecyQuery SecrecyQuery::relative(double rho) {
    if (!(rho > 0.0 && rho < 1.0)) {
        throw DomainError("SecrecyQuery: rho must lie in (0, 1)");
    }
    SecrecyQuery q;
    q.rho_ = rho;
    return q;
}

SecrecyQuery SecrecyQuery::absolute(double r_s) {
    if (!(r_s >= 0.0) || !std::isfinite(r_s)) {
        throw DomainError("SecrecyQuery: r_s must be non-negative and finite");
    }
    SecrecyQuery q;
    q.r_s_ = r_s;
    return q;
}

double SecrecyQuery::target_rate(double tier_rate) const {
    return rho_ ? *rho_ * tier_rate : *r_s_;
}

double macro_tier_coefficient(int s_users, double alpha1) {
    if (s_users < 1) {
        throw DomainError("macro_tier_coefficient: S must be >= 1");
    }
    const double delta = 2.0 / alpha1;
    double sum = 0.0;
    for (int k = 1; k <= s_users; ++k) {
        const double a = k - delta;
        const double b = s_users - k + delta;
        if (a <= 0.0 && std::abs(a - std::round(a)) < 1e-9) {
            throw DomainError("macro_tier_coefficient: Gamma pole at k - 2/alpha1");
        }
        if (a <= 0.0 || b <= 0.0) {
            throw DomainError("macro_tier_coefficient: alpha1 must exceed 2");
        }
        sum += std::exp(specfun::log_binomial(s_users, k) + specfun::log_gamma(a) +
                        specfun::log_gamma(b) - specfun::log_gamma(s_users));
    }
    return sum / alpha1;
}

double cdf_eve_sinr_macro(double gamma, const SystemParams& p) {
    p.validate();
    check_gamma(gamma, "cdf_eve_sinr_macro");
    if (p.lambda_e == 0.0 || std::isinf(gamma)) {
        return 1.0;
    }
    if (gamma == 0.0) {
        return 0.0;
    }
    const double s = p.s_users;
    const double noise = gamma * s * p.noise_power / (p.beta_pl * p.p_m);
    const double macro = 2.0 * kPi * p.lambda_m * macro_tier_coefficient(p.s_users, p.alpha1) *
                         std::pow(gamma, 2.0 / p.alpha1);
    const double pico = 2.0 * kPi * kPi * p.lambda_p / p.alpha2 *
                        std::pow(gamma * s * p.p_p / p.p_m, 2.0 / p.alpha2) *
                        specfun::cosecant(2.0 * kPi / p.alpha2);
    const double intra = std::pow(1.0 + gamma, -(s - 1.0));
    return eve_cdf_from_exponents(p.lambda_e, intra, noise, p.alpha1, macro, 2.0, pico,
                                  2.0 * p.alpha1 / p.alpha2);
}

double cdf_eve_sinr_pico(double gamma, const SystemParams& p) {
    p.validate();
    check_gamma(gamma, "cdf_eve_sinr_pico");
    if (p.lambda_e == 0.0 || std::isinf(gamma)) {
        return 1.0;
    }
    if (gamma == 0.0) {
        return 0.0;
    }
    const double noise = gamma * p.noise_power / (p.beta_pl * p.p_p);
    const double macro = 2.0 * kPi * p.lambda_m * macro_tier_coefficient(p.s_users, p.alpha1) *
                         std::pow(gamma * p.p_m / (p.p_p * p.s_users), 2.0 / p.alpha1);
    const double pico = 2.0 * kPi * kPi * p.lambda_p / p.alpha2 * std::pow(gamma, 2.0 / p.alpha2) *
                        specfun::cosecant(2.0 * kPi / p.alpha2);
    return eve_cdf_from_exponents(p.lambda_e, 1.0, noise, p.alpha2, macro,
                                  2.0 * p.alpha2 / p.alpha1, pico, 2.0);
}

double cdf_eve_sinr(TierId tier, double gamma, const SystemParams& p) {
    return tier == TierId::Macro ? cdf_eve_sinr_macro(gamma, p) : cdf_eve_sinr_pico(gamma, p);
}

double eve_threshold(double tier_rate, const SecrecyQuery& q) {
    return std::exp2(tier_rate - q.target_rate(tier_rate)) - 1.0;
}

double outage_at_rate(TierId tier, double tier_rate, const SecrecyQuery& q, const SystemParams& p) {
    if (!std::isfinite(tier_rate) || tier_rate < 0.0) {
        throw DomainError("outage_at_rate: tier rate must be finite and non-negative");
    }
    const double threshold = eve_threshold(tier_rate, q);
    if (threshold < 0.0) {
        return 1.0;
    }
    return std::clamp(1.0 - cdf_eve_sinr(tier, threshold, p), 0.0, 1.0);
}

double secrecy_outage_macro(const SecrecyQuery& q, const SystemParams& p) {
    const double r_m = analytic::rate_lower_bound_macro(p).value;
    return outage_at_rate(TierId::Macro, r_m, q, p);
}

double secrecy_outage_pico(const SecrecyQuery& q, const SystemParams& p) {
    const double r_p = analytic::ergodic_rate_pico(p).value;
    return outage_at_rate(TierId::Pico, r_p, q, p);
}

SecrecyOutcome secrecy_outage_overall(const SecrecyQuery& q, const SystemParams& p) {
    p.validate();
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    SecrecyOutcome out;
    out.a_m = analytic::assoc_prob_macro(p).value;
    out.a_p = analytic::assoc_prob_pico(p).value;
    out.r_m_used = nan;
    out.r_p_used = nan;
    if (p.lambda_m > 0.0) {
        out.r_m_used = analytic::rate_lower_bound_macro(p).value;
        out.p_out_macro = outage_at_rate(TierId::Macro, out.r_m_used, q, p);
    }
    if (p.lambda_p > 0.0) {
        out.r_p_used = analytic::ergodic_rate_pico(p).value;
        out.p_out_pico = outage_at_rate(TierId::Pico, out.r_p_used, q, p);
    }
    out.p_out_overall =
        std::clamp(out.p_out_macro * out.a_m + out.p_out_pico * out.a_p, 0.0, 1.0);
    return out;
}

}  // namespace hetsec::secrecy
