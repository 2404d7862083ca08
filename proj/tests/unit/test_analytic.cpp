#include "hetsec/analytic.hpp"
#include "hetsec/errors.hpp"
#include "hetsec/ppp.hpp"
#include "hetsec/quadrature.hpp"
#include "hetsec/secrecy.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace hetsec;
using namespace hetsec::analytic;

namespace {
double rel(double a, double b) {
    return std::abs(a - b) / std::abs(b);
}
}  // namespace

TEST_CASE("association probabilities at the reference deployment") {
    const auto p = SystemParams::reference();
    CHECK(rel(assoc_prob_macro(p).value, oracle::kAssocMacro) < 1e-10);
    CHECK(rel(assoc_prob_pico(p).value, oracle::kAssocPico) < 1e-10);
    CHECK(rel(assoc_prob_pico(p, PicoAssocForm::AsPrinted).value,
              oracle::kAssocPicoUnexponentiated) < 1e-9);
    const auto both = association(p);
    CHECK(both.a_m + both.a_p == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("association partition over a parameter grid") {
    for (double lp : {1e-3, 1e-2, 1e-1}) {
        for (int n : {50, 200, 400}) {
            for (int s : {1, 10, 20}) {
                auto p = SystemParams::reference();
                p.lambda_p = lp;
                p.n_antennas = n;
                p.s_users = s;
                const auto a = association(p);
                INFO("lambda_p=" << lp << " N=" << n << " S=" << s);
                CHECK(std::abs(a.a_m + a.a_p - 1.0) < 1e-6);
                CHECK(a.a_m >= 0.0);
                CHECK(a.a_p >= 0.0);
            }
        }
    }
}

TEST_CASE("single-tier limits") {
    auto p = SystemParams::reference();
    p.lambda_p = 0.0;
    CHECK(assoc_prob_macro(p).value == 1.0);
    CHECK(assoc_prob_pico(p).value == 0.0);
    CHECK_THROWS_AS(cdf_sinr_pico(1.0, p), DomainError);
    CHECK_THROWS_AS(ergodic_rate_pico(p), DomainError);
    p = SystemParams::reference();
    p.lambda_m = 0.0;
    CHECK(assoc_prob_macro(p).value == 0.0);
    CHECK(assoc_prob_pico(p).value == 1.0);
    CHECK_THROWS_AS(rate_lower_bound_macro(p), DomainError);
}

TEST_CASE("more pico stations pull users off the macro tier") {
    double prev = 1.0;
    for (double lp : {1e-4, 1e-3, 1e-2, 1e-1, 1.0}) {
        auto p = SystemParams::reference();
        p.lambda_p = lp;
        const double a = assoc_prob_macro(p).value;
        CHECK(a < prev);
        prev = a;
    }
}

TEST_CASE("exclusion distances are inverse maps") {
    const auto p = SystemParams::reference();
    for (double x : {0.5, 3.0, 40.0}) {
        const double d = exclusion_distance_pico_given_macro(x, p);
        CHECK(exclusion_distance_macro_given_pico(d, p) == doctest::Approx(x).epsilon(1e-12));
        // equal biased received power at the two distances
        const double macro = p.array_gain() * p.p_m / p.s_users * std::pow(x, -p.alpha1);
        const double pico = p.p_p * std::pow(d, -p.alpha2);
        CHECK(macro == doctest::Approx(pico).epsilon(1e-12));
    }
    CHECK_THROWS_AS(exclusion_distance_pico_given_macro(-1.0, p), DomainError);
}

TEST_CASE("serving-distance densities integrate to one") {
    const auto p = SystemParams::reference();
    const double a_m = assoc_prob_macro(p).value;
    const double a_p = assoc_prob_pico(p).value;
    const auto qm = specfun::integrate_semi_infinite(
        [&](double x) { return serving_distance_pdf_macro(x, p, a_m); });
    const auto qp = specfun::integrate_semi_infinite(
        [&](double x) { return serving_distance_pdf_pico(x, p, a_p); });
    CHECK(qm.value == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(qp.value == doctest::Approx(1.0).epsilon(1e-9));
    CHECK_THROWS_AS(serving_distance_pdf_macro(1.0, p, 0.0), DomainError);
}

TEST_CASE("serving-distance densities stay normalised across deployments") {
    for (double lp : {1e-3, 1e-2, 1e-1}) {
        for (int n : {50, 200, 400}) {
            auto p = SystemParams::reference();
            p.lambda_p = lp;
            p.n_antennas = n;
            const auto a = association(p);
            const double qm = specfun::integrate_semi_infinite([&](double x) {
                                  return serving_distance_pdf_macro(x, p, a.a_m);
                              }).value;
            const double qp = specfun::integrate_semi_infinite([&](double x) {
                                  return serving_distance_pdf_pico(x, p, a.a_p);
                              }).value;
            INFO("lambda_p=" << lp << " N=" << n);
            CHECK(std::abs(qm - 1.0) < 1e-6);
            CHECK(std::abs(qp - 1.0) < 1e-6);
        }
    }
}

namespace {

// Mean of sum_y power * beta * |y|^-alpha over a PPP on r0 < |y| < R, with R
// leaving 0.5% of the mean outside and enough realizations for ~0.6% error.
double brute_force_mean(double density, double power, double alpha, double r0, double beta,
                        mc::Engine& eng) {
    if (density == 0.0) {
        return 0.0;
    }
    const double r_out = r0 * std::pow(200.0, 1.0 / (alpha - 2.0));
    const double cv2 = (alpha - 2.0) * (alpha - 2.0) /
                       ((2.0 * alpha - 2.0) * 2.0 * std::numbers::pi * density * r0 * r0);
    const int reps = std::max(200, static_cast<int>(cv2 / (0.006 * 0.006)));
    double sum = 0.0;
    for (int i = 0; i < reps; ++i) {
        for (const auto& q : mc::sample_ppp_annulus(density, r0, r_out, {}, eng)) {
            sum += power * beta * std::pow(q.norm(), -alpha);
        }
    }
    return sum / reps;
}

}  // namespace

TEST_CASE("mean interference agrees with a brute-force PPP average") {
    mc::Engine eng = mc::make_stream(31, mc::StreamDomain::Test, 0);
    for (int k = 0; k < 5; ++k) {
        auto p = SystemParams::reference();
        p.lambda_p = std::pow(10.0, -3.0 + 2.0 * mc::uniform_open(eng));
        p.n_antennas = 20 + static_cast<int>(380.0 * mc::uniform_open(eng));
        const double x = 5.0 + 30.0 * mc::uniform_open(eng);
        const double d = exclusion_distance_pico_given_macro(x, p);
        // macro gains Gamma(S) average S, so each MBS contributes P_M on average
        const double brute = brute_force_mean(p.lambda_m, p.p_m, p.alpha1, x, p.beta_pl, eng) +
                             brute_force_mean(p.lambda_p, p.p_p, p.alpha2, d, p.beta_pl, eng);
        INFO("lambda_p=" << p.lambda_p << " N=" << p.n_antennas << " x=" << x);
        CHECK(rel(brute, mean_interference_macro_user(x, p)) < 0.02);
    }
}

TEST_CASE("macro rate bound") {
    const auto p = SystemParams::reference();
    CHECK(rel(delta_integral(p).value, oracle::kDelta) < 1e-8);
    CHECK(rel(rate_lower_bound_macro(p).value, oracle::kRateMacroBound) < 1e-9);
}

TEST_CASE("delta integrand agrees with a fine trapezoid rule") {
    const auto p = SystemParams::reference();
    auto f = [&](double x) {
        if (x == 0.0) {
            return 0.0;
        }
        const double d = exclusion_distance_pico_given_macro(x, p);
        return (mean_interference_macro_user(x, p) + p.noise_power) *
               std::exp(-std::numbers::pi * (p.lambda_m * x * x + p.lambda_p * d * d)) *
               std::pow(x, p.alpha1 + 1.0);
    };
    const int n = 1000000;
    const double hi = 100.0;
    const double h = hi / n;
    double sum = 0.5 * (f(0.0) + f(hi));
    for (int i = 1; i < n; ++i) {
        sum += f(i * h);
    }
    CHECK(rel(sum * h, delta_integral(p).value) < 1e-6);
}

TEST_CASE("macro-tier Laplace exponent") {
    const auto p = SystemParams::reference();
    for (const auto& o : oracle::kPhi3) {
        INFO("x=" << o.x << " gamma=" << o.gamma);
        CHECK(rel(phi3(o.x, o.gamma, p), o.value) < 1e-9);
    }
    CHECK(phi3(5.0, 0.0, p) == 0.0);
    CHECK_THROWS_AS(phi3(1.0, -1.0, p), DomainError);
}

TEST_CASE("phi3 is continuous where its evaluation switches form") {
    const auto p = SystemParams::reference();
    const double g = p.array_gain();   // the switch sits at gamma = N - S + 1
    const double below = phi3(2.0, g * (1.0 - 1e-9), p);
    const double above = phi3(2.0, g * (1.0 + 1e-9), p);
    CHECK(rel(below, above) < 1e-7);
}

TEST_CASE("pico-tier exponent") {
    for (const auto& o : oracle::kPicoExponent) {
        INFO("gamma=" << o.gamma);
        CHECK(rel(pico_tier_exponent(o.gamma, 4.0), o.alpha4) < 1e-12);
        CHECK(rel(pico_tier_exponent(o.gamma, 3.5), o.alpha35) < 1e-12);
    }
    CHECK(rel(pico_tier_exponent(1.0 - 1e-12, 4.0), pico_tier_exponent(1.0 + 1e-12, 4.0)) < 1e-10);
    CHECK(pico_tier_exponent(0.0, 4.0) == 0.0);
    CHECK_THROWS_AS(pico_tier_exponent(1.0, 2.0), DomainError);
}

TEST_CASE("pico SINR CDF") {
    const auto p = SystemParams::reference();
    for (const auto& o : oracle::kPicoSinrCdf) {
        INFO("gamma=" << o.x);
        CHECK(std::abs(cdf_sinr_pico(o.x, p).value - o.value) < 1e-9);
    }
    CHECK(cdf_sinr_pico(0.0, p).value == 0.0);
    CHECK(cdf_sinr_pico(INFINITY, p).value == 1.0);
    double prev = 0.0;
    for (double g = 1e-3; g < 1e6; g *= 3.0) {
        const double f = cdf_sinr_pico(g, p).value;
        CHECK(f >= prev);
        CHECK(f <= 1.0);
        prev = f;
    }
    CHECK_THROWS_AS(cdf_sinr_pico(-0.1, p), DomainError);
}

TEST_CASE("pico ergodic rate") {
    const auto p = SystemParams::reference();
    const auto r = ergodic_rate_pico(p);
    CHECK(rel(r.value, oracle::kRatePico) < 1e-9);
    CHECK(r.abs_error < 1e-6);
}

TEST_CASE("rates grow with the antenna count and shrink with pico density") {
    double prev_m = 0.0;
    double prev_p = 0.0;
    for (int n : {50, 100, 150, 200, 250, 300}) {
        auto p = SystemParams::reference();
        p.n_antennas = n;
        const double rm = rate_lower_bound_macro(p).value;
        const double rp = ergodic_rate_pico(p).value;
        CHECK(rm > prev_m);
        CHECK(rp > prev_p);
        prev_m = rm;
        prev_p = rp;
    }
    double prev_pm = 0.0;
    for (double pm : {10.0, 20.0, 40.0, 80.0}) {
        auto p = SystemParams::reference();
        p.p_m = pm;
        const double rm = rate_lower_bound_macro(p).value;
        CHECK(rm > prev_pm);
        prev_pm = rm;
    }
    auto lo = SystemParams::reference();
    lo.lambda_p = 1e-3;
    auto hi = SystemParams::reference();
    hi.lambda_p = 1e-1;
    CHECK(rate_lower_bound_macro(hi).value < rate_lower_bound_macro(lo).value);
    CHECK(ergodic_rate_pico(hi).value < ergodic_rate_pico(lo).value);
}

TEST_CASE("the k-sum behind phi3 reduces to a Gamma ratio") {
    // sum_k C(S,k) Gamma(k-d) Gamma(S-k+d) / (alpha Gamma(S)) = Gamma(1-d) Gamma(S+d) / (2 Gamma(S))
    for (int s : {1, 2, 5, 10, 20}) {
        for (double a : {2.5, 3.5, 4.0, 6.0}) {
            const double d = 2.0 / a;
            const double closed =
                std::exp(std::lgamma(1.0 - d) + std::lgamma(s + d) - std::lgamma(s)) / 2.0;
            INFO("S=" << s << " alpha=" << a);
            CHECK(rel(secrecy::macro_tier_coefficient(s, a), closed) < 1e-12);
        }
    }
}
