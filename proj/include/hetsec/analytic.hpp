#pragma once

#include "hetsec/system_params.hpp"

namespace hetsec::analytic {

/// A quadrature-backed value together with its absolute error estimate.
struct Estimate {
    double value = 0.0;
    double abs_error = 0.0;
};

struct AssociationResult {
    double a_m = 0.0;
    double a_p = 0.0;
};

/// Which exponent to put on the MBS/PBS power ratio in the pico association
/// integral. `AsPrinted` keeps the ratio unexponentiated; it is wrong and
/// exists only as a regression fixture for the Monte Carlo cross-check.
enum class PicoAssocForm { Corrected, AsPrinted };

/// Nearest distance of an interfering PBS for a macro user served at x:
/// (S P_P / ((N-S+1) P_M))^(1/alpha2) x^(alpha1/alpha2).
double exclusion_distance_pico_given_macro(double x, const SystemParams& p);

/// Nearest distance of an interfering MBS for a pico user served at x:
/// ((N-S+1) P_M / (S P_P))^(1/alpha1) x^(alpha2/alpha1).
double exclusion_distance_macro_given_pico(double x, const SystemParams& p);

Estimate assoc_prob_macro(const SystemParams& p);
Estimate assoc_prob_pico(const SystemParams& p, PicoAssocForm form = PicoAssocForm::Corrected);
AssociationResult association(const SystemParams& p);

/// Serving-distance densities conditioned on the tier. `a_m` / `a_p` are the
/// association probabilities that normalise them.
double serving_distance_pdf_macro(double x, const SystemParams& p, double a_m);
double serving_distance_pdf_pico(double x, const SystemParams& p, double a_p);

/// Mean aggregate interference (Campbell) seen by a macro user served at x.
double mean_interference_macro_user(double x, const SystemParams& p);

/// int_0^inf (E[I](x) + noise) exp(-pi l_M x^2 - pi l_P D(x)^2) x^(alpha1+1) dx
Estimate delta_integral(const SystemParams& p);

/// log2(1 + 1 / E[1/SINR_M]) lower bound on the macro ergodic rate [bit/s/Hz].
Estimate rate_lower_bound_macro(const SystemParams& p);

/// Macro-tier Laplace exponent for a pico user at distance x and threshold
/// gamma: int_{D(x)}^inf (1 - (1 + a y^-alpha1)^-S) y dy, evaluated through
/// 2F1 terms only.
double phi3(double x, double gamma, const SystemParams& p);

/// int_1^inf u / (1 + u^alpha / gamma) du, i.e.
/// gamma/(alpha-2) * 2F1(1, 1-2/alpha; 2-2/alpha; -gamma).
double pico_tier_exponent(double gamma, double alpha);

/// CDF of the SINR of a pico-associated typical user.
Estimate cdf_sinr_pico(double gamma, const SystemParams& p);

/// Ergodic rate of the pico user, (1/ln 2) int_0^inf (1 - F(g)) / (1 + g) dg.
Estimate ergodic_rate_pico(const SystemParams& p);

}  // namespace hetsec::analytic
