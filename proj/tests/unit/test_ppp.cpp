#include "hetsec/ppp.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

using namespace hetsec;
using namespace hetsec::mc;

TEST_CASE("zero density gives an empty pattern") {
    Engine g = make_stream(1, StreamDomain::Test, 0);
    CHECK(sample_ppp(0.0, 100.0, g).empty());
    CHECK_THROWS_AS(sample_ppp(-1.0, 100.0, g), DomainError);
    CHECK_THROWS_AS(sample_ppp(1.0, 0.0, g), DomainError);
}

TEST_CASE("point counts and radial law") {
    const double density = 1e-2;
    const double radius = std::sqrt(1000.0 / std::numbers::pi);
    const double expected = density * std::numbers::pi * radius * radius;   // 10
    const int reps = 10000;
    double count = 0.0;
    double inner = 0.0;
    Engine g = make_stream(2, StreamDomain::Test, 0);
    for (int i = 0; i < reps; ++i) {
        const auto pts = sample_ppp(density, radius, g);
        count += static_cast<double>(pts.size());
        for (const Point& q : pts) {
            REQUIRE(q.norm() <= radius * (1.0 + 1e-12));
            if (q.norm() < 0.5 * radius) {
                inner += 1.0;
            }
        }
    }
    CHECK(std::abs(count / reps - expected) < 3.0 * std::sqrt(expected / reps));
    const double frac = inner / count;
    CHECK(std::abs(frac - 0.25) < 3.0 * std::sqrt(0.25 * 0.75 / count));
}

TEST_CASE("annulus sampling respects both radii") {
    Engine g = make_stream(3, StreamDomain::Test, 0);
    const Point c{50.0, -20.0};
    const auto pts = sample_ppp_annulus(0.05, 5.0, 30.0, c, g);
    CHECK(!pts.empty());
    for (const Point& q : pts) {
        const double d = std::hypot(q.x - c.x, q.y - c.y);
        CHECK(d > 5.0 - 1e-9);
        CHECK(d <= 30.0 + 1e-9);
    }
    CHECK_THROWS_AS(sample_ppp_annulus(0.05, 30.0, 5.0, c, g), DomainError);
}

TEST_CASE("patterns are reproducible from the seed") {
    Engine a = make_stream(4, StreamDomain::Test, 1);
    Engine b = make_stream(4, StreamDomain::Test, 1);
    const auto pa = sample_ppp(1e-2, 80.0, a);
    const auto pb = sample_ppp(1e-2, 80.0, b);
    REQUIRE(pa.size() == pb.size());
    for (std::size_t i = 0; i < pa.size(); ++i) {
        CHECK(pa[i].x == pb[i].x);
        CHECK(pa[i].y == pb[i].y);
    }
}

TEST_CASE("association by biased received power") {
    const auto p = SystemParams::reference();
    PppRealization r;
    CHECK(!associate(r, p).has_value());

    // Equal distances: the macro array gain wins.
    r.macro = {{10.0, 0.0}};
    r.pico = {{0.0, 10.0}};
    auto a = associate(r, p);
    REQUIRE(a);
    CHECK(a->tier == TierId::Macro);
    CHECK(a->distance == doctest::Approx(10.0));

    // A pico station much closer takes the user.
    r.macro = {{300.0, 0.0}};
    r.pico = {{0.0, 5.0}, {3.0, 0.0}};
    a = associate(r, p);
    REQUIRE(a);
    CHECK(a->tier == TierId::Pico);
    CHECK(a->index == 1);
    CHECK(a->distance == doctest::Approx(3.0));

    r.pico.clear();
    a = associate(r, p);
    REQUIRE(a);
    CHECK(a->tier == TierId::Macro);
}

TEST_CASE("grid nearest neighbour agrees with brute force") {
    Engine g = make_stream(5, StreamDomain::Test, 0);
    const double half = 150.0;
    const auto pts = sample_ppp(2e-3, half, g);
    REQUIRE(pts.size() > 10);
    const PointGrid grid(pts, half, 1.0 / std::sqrt(2e-3));
    for (int t = 0; t < 2000; ++t) {
        const Point q{(uniform_open(g) - 0.5) * 2.0 * half, (uniform_open(g) - 0.5) * 2.0 * half};
        const std::size_t skip = t % 3 == 0 ? static_cast<std::size_t>(t) % pts.size()
                                            : std::numeric_limits<std::size_t>::max();
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i == skip) {
                continue;
            }
            best = std::min(best, std::pow(pts[i].x - q.x, 2) + std::pow(pts[i].y - q.y, 2));
        }
        const auto hit = grid.nearest(q, skip);
        REQUIRE(hit);
        CHECK(hit->index != skip);
        CHECK(hit->dist2 == doctest::Approx(best).epsilon(1e-12));
    }
    const PointGrid empty({}, half, 10.0);
    CHECK(!empty.nearest({0.0, 0.0}).has_value());
}
