#include "hetsec/errors.hpp"
#include "hetsec/quadrature.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace hetsec;
using namespace hetsec::specfun;

TEST_CASE("finite-interval integrals") {
    CHECK(integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0).value ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-10));
    CHECK(integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi).value ==
          doctest::Approx(2.0).epsilon(1e-12));
    // reversed bounds flip the sign
    CHECK(integrate([](double x) { return x * x; }, 1.0, 0.0).value ==
          doctest::Approx(-1.0 / 3.0).epsilon(1e-13));
    CHECK(integrate([](double) { return 1.0; }, 2.0, 2.0).value == 0.0);
}

TEST_CASE("semi-infinite integrals") {
    CHECK(integrate_semi_infinite([](double x) { return std::exp(-x); }).value ==
          doctest::Approx(1.0).epsilon(1e-10));
    CHECK(integrate_semi_infinite([](double x) { return x * std::exp(-x * x); }).value ==
          doctest::Approx(0.5).epsilon(1e-10));
    // algebraic tail
    CHECK(integrate_semi_infinite([](double x) { return 1.0 / std::pow(1.0 + x, 3.0); }).value ==
          doctest::Approx(0.5).epsilon(1e-9));
    // peak far from the origin
    const auto far = integrate_semi_infinite(
        [](double x) { return std::exp(-std::pow((x - 1e4) / 50.0, 2.0)); });
    CHECK(far.value == doctest::Approx(50.0 * std::sqrt(std::numbers::pi)).epsilon(1e-9));
    CHECK(far.abs_error < 1e-6);
    CHECK(integrate_semi_infinite([](double) { return 0.0; }).value == 0.0);
}

TEST_CASE("reported error covers the true error") {
    const auto r = integrate_semi_infinite([](double x) { return std::exp(-x) * x * x; });
    CHECK(std::abs(r.value - 2.0) <= r.abs_error + 1e-15);
    CHECK(r.evaluations > 0);
}

TEST_CASE("failures carry the best estimate") {
    QuadratureConfig tight;
    tight.max_subdivisions = 2;
    tight.abs_tol = 1e-15;
    tight.rel_tol = 1e-15;
    try {
        integrate([](double x) { return std::sin(200.0 * x) * std::sin(200.0 * x); }, 0.0, 10.0, tight);
        FAIL("expected NumericError");
    } catch (const NumericError& e) {
        CHECK(std::isfinite(e.best_estimate()));
        CHECK(e.error_bound() > 0.0);
    }
    CHECK_THROWS_AS(integrate_semi_infinite([](double x) { return 1.0 / (1.0 + x); }), NumericError);
    CHECK_THROWS_AS(integrate([](double) { return NAN; }, 0.0, 1.0), NumericError);
}

TEST_CASE("configuration checks") {
    QuadratureConfig bad;
    bad.abs_tol = 0.0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = {};
    bad.max_subdivisions = 0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = {};
    bad.tail_cutoff_fraction = 1.0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    CHECK_THROWS_AS(integrate([](double x) { return x; }, 0.0, INFINITY), DomainError);
    CHECK_THROWS_AS(integrate_semi_infinite([](double x) { return std::exp(-x); }, {}, {1.0, 0.5}),
                    DomainError);
    CHECK_NOTHROW(QuadratureConfig::outer().validate());
}
