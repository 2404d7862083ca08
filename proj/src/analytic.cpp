#include "hetsec/analytic.hpp"

#include "hetsec/errors.hpp"
#include "hetsec/quadrature.hpp"
#include "hetsec/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hetsec::analytic {

namespace {

using specfun::QuadratureConfig;
using specfun::integrate_semi_infinite;
constexpr double kPi = std::numbers::pi;

// (S P_P / ((N-S+1) P_M)): ratio of PBS power to the biased MBS power.
double pico_to_macro_bias(const SystemParams& p) {
    return p.s_users * p.p_p / (p.array_gain() * p.p_m);
}

// int_0^z0 (1 - (1+t)^-S) t^(-delta-1) dt, delta = 2/alpha1.
double phi3_kernel(double z0, int s, double delta) {
    if (z0 <= 1.0) {
        // sum_k C(S,k) int_0^z0 t^(k-delta-1) (1+t)^-S dt
        double sum = 0.0;
        for (int k = 1; k <= s; ++k) {
            const double c = k - delta;
            const double coeff = std::exp(specfun::log_binomial(s, k) + c * std::log(z0)) / c;
            sum += coeff * specfun::gauss_2f1(s, c, c + 1.0, -z0);
        }
        return sum;
    }
    // Complement: full integral minus the part beyond z0, the latter mapped
    // to a 2F1 at -1/z0.
    const double full = std::exp(specfun::log_gamma(1.0 - delta) + specfun::log_gamma(s + delta) -
                                 specfun::log_gamma(s)) /
                        delta;
    const double u = 1.0 / z0;
    const double c = s + delta;
    const double beyond_pure = std::pow(z0, -delta) / delta;
    const double beyond_corr = std::pow(u, c) / c * specfun::gauss_2f1(s, c, c + 1.0, -u);
    return full - beyond_pure + beyond_corr;
}

// Coefficient K with phi3(x, gamma) = K * x^(2 alpha2 / alpha1).
double phi3_coefficient(double gamma, const SystemParams& p) {
    if (gamma == 0.0) {
        return 0.0;
    }
    const double delta = 2.0 / p.alpha1;
    // a(x) = gamma P_M x^alpha2 / (S P_P); a / D(x)^alpha1 = gamma / (N-S+1).
    const double a_coeff = gamma * p.p_m / (p.s_users * p.p_p);
    const double z0 = gamma / p.array_gain();
    return std::pow(a_coeff, delta) / p.alpha1 * phi3_kernel(z0, p.s_users, delta);
}

// int_0^inf exp(-(...)) x dx of the pico coverage expression; 1 - F(gamma)
// equals 2 pi lambda_P / A_P times this.
specfun::QuadResult pico_coverage_integral(double gamma, const SystemParams& p) {
    const double expo = 2.0 * p.alpha2 / p.alpha1;
    const double macro_excl =
        kPi * p.lambda_m * std::pow(1.0 / pico_to_macro_bias(p), 2.0 / p.alpha1);
    const double a_term = 2.0 * kPi * p.lambda_m * phi3_coefficient(gamma, p) + macro_excl;
    const double b_term =
        2.0 * kPi * p.lambda_p * pico_tier_exponent(gamma, p.alpha2) + kPi * p.lambda_p;
    const double c_term = gamma * p.noise_power / (p.p_p * p.beta_pl);
    auto f = [&](double x) {
        return std::exp(-a_term * std::pow(x, expo) - b_term * x * x -
                        c_term * std::pow(x, p.alpha2)) *
               x;
    };
    return integrate_semi_infinite(f, QuadratureConfig{});
}

void require_positive_distance(double x, const char* who) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
        throw DomainError(std::string(who) + ": distance must be non-negative and finite");
    }
}

}  // namespace

double exclusion_distance_pico_given_macro(double x, const SystemParams& p) {
    require_positive_distance(x, "exclusion_distance_pico_given_macro");
    return std::pow(pico_to_macro_bias(p), 1.0 / p.alpha2) * std::pow(x, p.alpha1 / p.alpha2);
}

double exclusion_distance_macro_given_pico(double x, const SystemParams& p) {
    require_positive_distance(x, "exclusion_distance_macro_given_pico");
    return std::pow(1.0 / pico_to_macro_bias(p), 1.0 / p.alpha1) *
           std::pow(x, p.alpha2 / p.alpha1);
}

Estimate assoc_prob_macro(const SystemParams& p) {
    p.validate();
    if (p.lambda_p == 0.0) {
        return {1.0, 0.0};
    }
    if (p.lambda_m == 0.0) {
        return {0.0, 0.0};
    }
    const double c = kPi * p.lambda_p * std::pow(pico_to_macro_bias(p), 2.0 / p.alpha2);
    const double expo = 2.0 * p.alpha1 / p.alpha2;
    auto f = [&](double r) { return r * std::exp(-kPi * p.lambda_m * r * r - c * std::pow(r, expo)); };
    const auto q = integrate_semi_infinite(f, QuadratureConfig{});
    const double scale = 2.0 * kPi * p.lambda_m;
    return {std::clamp(scale * q.value, 0.0, 1.0), scale * q.abs_error};
}

Estimate assoc_prob_pico(const SystemParams& p, PicoAssocForm form) {
    p.validate();
    if (p.lambda_m == 0.0) {
        return {1.0, 0.0};
    }
    if (p.lambda_p == 0.0) {
        return {0.0, 0.0};
    }
    const double ratio = 1.0 / pico_to_macro_bias(p);
    const double weight =
        form == PicoAssocForm::Corrected ? std::pow(ratio, 2.0 / p.alpha1) : ratio;
    const double c = kPi * p.lambda_m * weight;
    const double expo = 2.0 * p.alpha2 / p.alpha1;
    auto f = [&](double r) { return r * std::exp(-kPi * p.lambda_p * r * r - c * std::pow(r, expo)); };
    const auto q = integrate_semi_infinite(f, QuadratureConfig{});
    const double scale = 2.0 * kPi * p.lambda_p;
    return {std::clamp(scale * q.value, 0.0, 1.0), scale * q.abs_error};
}

AssociationResult association(const SystemParams& p) {
    return {assoc_prob_macro(p).value, assoc_prob_pico(p).value};
}

double serving_distance_pdf_macro(double x, const SystemParams& p, double a_m) {
    require_positive_distance(x, "serving_distance_pdf_macro");
    if (!(a_m > 0.0)) {
        throw DomainError("serving_distance_pdf_macro: association probability must be positive");
    }
    const double d = exclusion_distance_pico_given_macro(x, p);
    return 2.0 * kPi * p.lambda_m / a_m * x *
           std::exp(-kPi * p.lambda_m * x * x - kPi * p.lambda_p * d * d);
}

double serving_distance_pdf_pico(double x, const SystemParams& p, double a_p) {
    require_positive_distance(x, "serving_distance_pdf_pico");
    if (!(a_p > 0.0)) {
        throw DomainError("serving_distance_pdf_pico: association probability must be positive");
    }
    const double d = exclusion_distance_macro_given_pico(x, p);
    return 2.0 * kPi * p.lambda_p / a_p * x *
           std::exp(-kPi * p.lambda_p * x * x - kPi * p.lambda_m * d * d);
}

double mean_interference_macro_user(double x, const SystemParams& p) {
    if (!(x > 0.0)) {
        throw DomainError("mean_interference_macro_user: distance must be positive");
    }
    const double macro = 2.0 * kPi * p.lambda_m * p.p_m * p.beta_pl * std::pow(x, 2.0 - p.alpha1) /
                         (p.alpha1 - 2.0);
    double pico = 0.0;
    if (p.lambda_p > 0.0) {
        const double d = exclusion_distance_pico_given_macro(x, p);
        pico = 2.0 * kPi * p.lambda_p * p.p_p * p.beta_pl * std::pow(d, 2.0 - p.alpha2) /
               (p.alpha2 - 2.0);
    }
    return macro + pico;
}

Estimate delta_integral(const SystemParams& p) {
    p.validate();
    auto f = [&](double x) {
        const double d = exclusion_distance_pico_given_macro(x, p);
        return (mean_interference_macro_user(x, p) + p.noise_power) *
               std::exp(-kPi * p.lambda_m * x * x - kPi * p.lambda_p * d * d) *
               std::pow(x, p.alpha1 + 1.0);
    };
    const auto q = integrate_semi_infinite(f, QuadratureConfig::outer());
    return {q.value, q.abs_error};
}

Estimate rate_lower_bound_macro(const SystemParams& p) {
    p.validate();
    if (p.lambda_m == 0.0) {
        throw DomainError("rate_lower_bound_macro: no macro tier (lambda_m = 0)");
    }
    const Estimate a_m = assoc_prob_macro(p);
    const Estimate delta = delta_integral(p);
    // E[1/SINR] = (P_M/S (N-S+1) beta)^-1 * 2 pi lambda_M Delta / A_M
    const double inv_sinr =
        2.0 * kPi * p.lambda_m * delta.value / a_m.value /
        (p.p_m / p.s_users * p.array_gain() * p.beta_pl);
    const double rel = delta.abs_error / delta.value + a_m.abs_error / a_m.value;
    const double value = std::log2(1.0 + 1.0 / inv_sinr);
    // d/d(inv) log2(1 + 1/inv) = -1 / (ln2 * inv * (1 + inv))
    const double err = rel / (std::numbers::ln2 * (1.0 + inv_sinr));
    return {value, err};
}

double phi3(double x, double gamma, const SystemParams& p) {
    require_positive_distance(x, "phi3");
    if (!(gamma >= 0.0)) {
        throw DomainError("phi3: gamma must be non-negative");
    }
    return phi3_coefficient(gamma, p) * std::pow(x, 2.0 * p.alpha2 / p.alpha1);
}

double pico_tier_exponent(double gamma, double alpha) {
    if (!(gamma >= 0.0)) {
        throw DomainError("pico_tier_exponent: gamma must be non-negative");
    }
    if (!(alpha > 2.0)) {
        throw DomainError("pico_tier_exponent: alpha must exceed 2");
    }
    if (gamma == 0.0) {
        return 0.0;
    }
    const double delta = 2.0 / alpha;
    if (gamma <= 1.0) {
        return gamma / (alpha - 2.0) * specfun::gauss_2f1(1.0, 1.0 - delta, 2.0 - delta, -gamma);
    }
    // int_0^inf minus int_0^1 of u / (1 + u^alpha / gamma).
    const double full = std::pow(gamma, delta) * (kPi / alpha) * specfun::cosecant(2.0 * kPi / alpha);
    return full - 0.5 * specfun::gauss_2f1(1.0, delta, 1.0 + delta, -1.0 / gamma);
}

Estimate cdf_sinr_pico(double gamma, const SystemParams& p) {
    p.validate();
    if (!(gamma >= 0.0)) {
        throw DomainError("cdf_sinr_pico: gamma must be non-negative");
    }
    if (p.lambda_p == 0.0) {
        throw DomainError("cdf_sinr_pico: no pico tier (lambda_p = 0)");
    }
    if (gamma == 0.0) {
        return {0.0, 0.0};
    }
    if (std::isinf(gamma)) {
        return {1.0, 0.0};
    }
    const Estimate a_p = assoc_prob_pico(p);
    const auto q = pico_coverage_integral(gamma, p);
    const double scale = 2.0 * kPi * p.lambda_p / a_p.value;
    const double ccdf = scale * q.value;
    const double err = scale * q.abs_error + ccdf * a_p.abs_error / a_p.value;
    return {std::clamp(1.0 - ccdf, 0.0, 1.0), err};
}

Estimate ergodic_rate_pico(const SystemParams& p) {
    p.validate();
    if (p.lambda_p == 0.0) {
        throw DomainError("ergodic_rate_pico: no pico tier (lambda_p = 0)");
    }
    const Estimate a_p = assoc_prob_pico(p);
    const double scale = 2.0 * kPi * p.lambda_p / a_p.value;
    // gamma = e^t - 1 turns dg / (1 + g) into dt and the power-law tail of
    // 1 - F into an exponential one.
    auto integrand = [&](double t) {
        const double gamma = std::expm1(t);
        return std::min(1.0, scale * pico_coverage_integral(gamma, p).value);
    };
    const auto q =
        integrate_semi_infinite(integrand, QuadratureConfig::outer(), specfun::ScanRange{1e-8, 600.0});
    const double value = q.value / std::numbers::ln2;
    const double err = q.abs_error / std::numbers::ln2 + value * a_p.abs_error / a_p.value;
    return {value, err};
}

}  // namespace hetsec::analytic
