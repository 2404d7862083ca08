#pragma once

#include "hetsec/errors.hpp"
#include "hetsec/rng.hpp"
#include "hetsec/system_params.hpp"

#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <vector>

namespace hetsec::mc {

struct Point {
    double x = 0.0;
    double y = 0.0;
    double norm() const;
};

/// Homogeneous PPP on the disc of the given radius centred at the origin.
std::vector<Point> sample_ppp(double density, double radius, Engine& eng);

/// Same, on the annulus r_in < |p| <= r_out around `centre`.
template <class G>
std::vector<Point> sample_ppp_annulus(double density, double r_in, double r_out, Point centre,
                                      G& g) {
    if (!(density >= 0.0) || !std::isfinite(density)) {
        throw DomainError("sample_ppp: density must be finite and non-negative");
    }
    if (!(r_out > 0.0 && r_in >= 0.0 && r_in < r_out)) {
        throw DomainError("sample_ppp: need 0 <= r_in < r_out");
    }
    const double a_in = r_in * r_in;
    const double a_out = r_out * r_out;
    const auto n = sample_poisson(density * std::numbers::pi * (a_out - a_in), g);
    std::vector<Point> pts;
    pts.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        const double u = uniform_open(g);
        const double r = std::sqrt(a_out - u * (a_out - a_in));
        const double t = 2.0 * std::numbers::pi * uniform_open(g);
        pts.push_back({centre.x + r * std::cos(t), centre.y + r * std::sin(t)});
    }
    return pts;
}

struct PppRealization {
    std::vector<Point> macro;
    std::vector<Point> pico;
    std::vector<Point> eve;

    bool has_base_station() const { return !macro.empty() || !pico.empty(); }
};

struct Association {
    TierId tier = TierId::Macro;
    std::size_t index = 0;   ///< into realization.macro or realization.pico
    double distance = 0.0;
};

/// Max biased received power at the origin: (N-S+1)(P_M/S) beta d^-alpha1 for
/// MBSs, P_P beta d^-alpha2 for PBSs. Ties go to the nearer BS, then Macro.
/// Empty realization gives nullopt (caller resamples).
std::optional<Association> associate(const PppRealization& r, const SystemParams& p);

/// Uniform bucket grid for nearest-neighbour queries.
class PointGrid {
public:
    PointGrid(const std::vector<Point>& points, double half_extent, double cell_size);

    struct Hit {
        std::size_t index = 0;
        double dist2 = 0.0;
    };

    /// Nearest stored point to q, or nullopt if the grid is empty.
    /// `skip` excludes one index (pass SIZE_MAX for none).
    std::optional<Hit> nearest(Point q, std::size_t skip = static_cast<std::size_t>(-1)) const;

private:
    long cell_of(double v) const;

    double half_extent_;
    double cell_;
    long cells_per_side_;
    // points stored cell by cell; cell c owns [start_[c], start_[c+1])
    std::vector<std::size_t> start_;
    std::vector<Point> sorted_;
    std::vector<std::size_t> original_;
};

}  // namespace hetsec::mc
