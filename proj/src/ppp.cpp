#include "hetsec/ppp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hetsec::mc {

double Point::norm() const {
    return std::sqrt(x * x + y * y);
}

std::vector<Point> sample_ppp(double density, double radius, Engine& eng) {
    return sample_ppp_annulus(density, 0.0, radius, Point{}, eng);
}

namespace {

struct Nearest {
    std::size_t index;
    double dist;
};

std::optional<Nearest> nearest_to_origin(const std::vector<Point>& pts) {
    if (pts.empty()) {
        return std::nullopt;
    }
    auto norm2 = [](Point q) { return q.x * q.x + q.y * q.y; };
    Nearest best{0, norm2(pts[0])};
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const double d2 = norm2(pts[i]);
        if (d2 < best.dist) {
            best = {i, d2};
        }
    }
    best.dist = std::sqrt(best.dist);
    return best;
}

}  // namespace

std::optional<Association> associate(const PppRealization& r, const SystemParams& p) {
    const auto m = nearest_to_origin(r.macro);
    const auto q = nearest_to_origin(r.pico);
    if (!m && !q) {
        return std::nullopt;
    }
    if (!q) {
        return Association{TierId::Macro, m->index, m->dist};
    }
    if (!m) {
        return Association{TierId::Pico, q->index, q->dist};
    }
    // compare in log domain to avoid under/overflow
    const double macro_pow = std::log(p.array_gain() * p.p_m / p.s_users * p.beta_pl) -
                             p.alpha1 * std::log(m->dist);
    const double pico_pow = std::log(p.p_p * p.beta_pl) - p.alpha2 * std::log(q->dist);
    bool macro_wins = macro_pow > pico_pow;
    if (macro_pow == pico_pow) {
        macro_wins = m->dist <= q->dist;
    }
    if (macro_wins) {
        return Association{TierId::Macro, m->index, m->dist};
    }
    return Association{TierId::Pico, q->index, q->dist};
}

PointGrid::PointGrid(const std::vector<Point>& points, double half_extent, double cell_size)
    : half_extent_(half_extent), cell_(cell_size) {
    if (!(half_extent > 0.0 && cell_size > 0.0)) {
        throw DomainError("PointGrid: extent and cell size must be positive");
    }
    cells_per_side_ = std::max(1L, static_cast<long>(std::ceil(2.0 * half_extent / cell_size)));
    const auto n_cells = static_cast<std::size_t>(cells_per_side_ * cells_per_side_);
    std::vector<std::size_t> cell_id(points.size());
    start_.assign(n_cells + 1, 0);
    for (std::size_t i = 0; i < points.size(); ++i) {
        cell_id[i] = static_cast<std::size_t>(cell_of(points[i].y) * cells_per_side_ +
                                              cell_of(points[i].x));
        ++start_[cell_id[i] + 1];
    }
    for (std::size_t c = 0; c < n_cells; ++c) {
        start_[c + 1] += start_[c];
    }
    sorted_.resize(points.size());
    original_.resize(points.size());
    std::vector<std::size_t> fill(start_.begin(), start_.end() - 1);
    for (std::size_t i = 0; i < points.size(); ++i) {
        const std::size_t slot = fill[cell_id[i]]++;
        sorted_[slot] = points[i];
        original_[slot] = i;
    }
}

long PointGrid::cell_of(double v) const {
    const long c = static_cast<long>(std::floor((v + half_extent_) / cell_));
    return std::clamp(c, 0L, cells_per_side_ - 1);
}

std::optional<PointGrid::Hit> PointGrid::nearest(Point q, std::size_t skip) const {
    if (sorted_.empty()) {
        return std::nullopt;
    }
    const long cx = cell_of(q.x);
    const long cy = cell_of(q.y);
    // distance from q to the border of its own cell
    const double ox = q.x + half_extent_ - cx * cell_;
    const double oy = q.y + half_extent_ - cy * cell_;
    const double margin =
        std::max(0.0, std::min({ox, cell_ - ox, oy, cell_ - oy}));
    Hit best{0, std::numeric_limits<double>::infinity()};
    bool found = false;
    auto scan = [&](long x, long y) {
        const auto c = static_cast<std::size_t>(y * cells_per_side_ + x);
        for (std::size_t k = start_[c]; k < start_[c + 1]; ++k) {
            const double dx = sorted_[k].x - q.x;
            const double dy = sorted_[k].y - q.y;
            const double d2 = dx * dx + dy * dy;
            if (d2 < best.dist2 && original_[k] != skip) {
                best = {original_[k], d2};
                found = true;
            }
        }
    };
    for (long ring = 0; ring < cells_per_side_; ++ring) {
        if (found && ring > 0) {
            // cells in this ring and beyond are at least this far away
            const double reach = (ring - 1) * cell_ + margin;
            if (reach * reach > best.dist2) {
                break;
            }
        }
        const long y0 = std::max(0L, cy - ring);
        const long y1 = std::min(cells_per_side_ - 1, cy + ring);
        const long x0 = std::max(0L, cx - ring);
        const long x1 = std::min(cells_per_side_ - 1, cx + ring);
        for (long y = y0; y <= y1; ++y) {
            if (y == cy - ring || y == cy + ring) {
                for (long x = x0; x <= x1; ++x) {
                    scan(x, y);
                }
            } else {
                if (cx - ring >= 0) {
                    scan(cx - ring, y);
                }
                if (cx + ring < cells_per_side_ && ring > 0) {
                    scan(cx + ring, y);
                }
            }
        }
    }
    if (!found) {
        return std::nullopt;
    }
    return best;
}

}  // namespace hetsec::mc
