#include "hetsec/analytic.hpp"
#include "hetsec/quadrature.hpp"
#include "hetsec/user_sim.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

using namespace hetsec;
using namespace hetsec::mc;

TEST_CASE("lone base station gives the SNR") {
    const auto p = SystemParams::reference();
    PppRealization r;
    r.macro = {{0.0, 25.0}};
    const auto a = associate(r, p);
    REQUIRE(a);
    FadingDraw f;
    f.desired = 191.0;
    f.macro_gains = {7.0};
    const double snr = p.p_m / p.s_users * 191.0 * p.beta_pl * std::pow(25.0, -p.alpha1) /
                       p.noise_power;
    CHECK(user_interference(r, f, *a, p) == 0.0);
    CHECK(simulate_user_sinr(r, f, *a, p) == doctest::Approx(snr).epsilon(1e-12));
}

TEST_CASE("hand-computed interference") {
    const auto p = SystemParams::reference();
    PppRealization r;
    r.macro = {{10.0, 0.0}, {-40.0, 0.0}};
    r.pico = {{0.0, 50.0}};
    const auto a = associate(r, p);
    REQUIRE(a);
    CHECK(a->tier == TierId::Macro);
    CHECK(a->index == 0);
    FadingDraw f;
    f.desired = 190.0;
    f.macro_gains = {99.0, 2.0};
    f.pico_gains = {3.0};
    const double i_m = p.p_m / p.s_users * 2.0 * p.beta_pl * std::pow(40.0, -p.alpha1);
    const double i_p = p.p_p * 3.0 * p.beta_pl * std::pow(50.0, -p.alpha2);
    const double s = p.p_m / p.s_users * 190.0 * p.beta_pl * std::pow(10.0, -p.alpha1);
    CHECK(user_interference(r, f, *a, p) == doctest::Approx(i_m + i_p).epsilon(1e-12));
    CHECK(simulate_user_sinr(r, f, *a, p) ==
          doctest::Approx(s / (i_m + i_p + p.noise_power)).epsilon(1e-12));
}

TEST_CASE("macro serving distance follows its density") {
    const auto p = SystemParams::reference();
    const double a_m = analytic::assoc_prob_macro(p).value;
    Engine eng = make_stream(77, StreamDomain::Test, 0);
    std::vector<double> d;
    for (int i = 0; i < 20000; ++i) {
        const auto t = sample_user_trial(p, eng);
        if (t.tier == TierId::Macro) {
            d.push_back(t.distance);
        }
    }
    std::sort(d.begin(), d.end());
    const auto n = static_cast<double>(d.size());
    double ks = 0.0;
    double cdf = 0.0;
    double prev = 0.0;
    auto pdf = [&](double x) { return analytic::serving_distance_pdf_macro(x, p, a_m); };
    for (std::size_t i = 0; i < d.size(); ++i) {
        cdf += specfun::integrate(pdf, prev, d[i]).value;
        prev = d[i];
        ks = std::max({ks, std::abs(cdf - i / n), std::abs(cdf - (i + 1) / n)});
    }
    // 99.9% Kolmogorov critical value
    CHECK(ks < 1.95 / std::sqrt(n));
}

TEST_CASE("disc truncation barely moves the mean interference") {
    auto p = SystemParams::reference();
    const double radius = p.sim_radius;
    p.sim_radius = 2.0 * radius;
    Engine eng = make_stream(78, StreamDomain::Test, 0);
    double full = 0.0;
    double inner = 0.0;
    for (int i = 0; i < 4000; ++i) {
        PppRealization r;
        r.macro = sample_ppp(p.lambda_m, p.sim_radius, eng);
        r.pico = sample_ppp(p.lambda_p, p.sim_radius, eng);
        const auto a = associate(r, p);
        if (!a || a->distance > radius) {
            continue;
        }
        const FadingDraw f = draw_fading(r, *a, p, eng);
        full += user_interference(r, f, *a, p);
        FadingDraw g = f;
        for (std::size_t j = 0; j < r.macro.size(); ++j) {
            if (r.macro[j].norm() > radius) {
                g.macro_gains[j] = 0.0;
            }
        }
        for (std::size_t j = 0; j < r.pico.size(); ++j) {
            if (r.pico[j].norm() > radius) {
                g.pico_gains[j] = 0.0;
            }
        }
        inner += user_interference(r, g, *a, p);
    }
    CHECK((full - inner) / full < 0.01);
}

TEST_CASE("trials resample empty realizations") {
    auto p = SystemParams::reference();
    p.lambda_p = 0.0;
    p.sim_radius = 20.0;   // mean 1.26 MBSs, often none
    Engine eng = make_stream(79, StreamDomain::Test, 0);
    for (int i = 0; i < 200; ++i) {
        const auto t = sample_user_trial(p, eng);
        CHECK(t.tier == TierId::Macro);
        CHECK(t.distance <= 20.0);
        CHECK(t.sinr > 0.0);
    }
}
