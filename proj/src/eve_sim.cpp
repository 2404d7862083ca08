#include "hetsec/eve_sim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <numbers>
#include <vector>

namespace hetsec::mc {

namespace {

constexpr std::uint32_t kPicoBit = 0x80000000u;
constexpr std::uint32_t kOwnSlot = 0x7fffffffu;
constexpr std::uint32_t kNearSlot = 0x7ffffffeu;
constexpr std::uint32_t kFarSlot = 0x7ffffffdu;

struct EveLink {
    double signal = 0.0;    // desired power incl. fading
    double intra = 0.0;     // I_A, macro transmitter only
};

EveLink draw_eve_link(Point e, const SystemParams& p, TierId tier, std::uint64_t key,
                      std::uint32_t eve) {
    CounterGen g(key, eve, kOwnSlot);
    const double h = sample_exponential(g);
    EveLink link;
    if (tier == TierId::Macro) {
        const double l = p.p_m / p.s_users * path_loss(e.norm(), p.alpha1, p.beta_pl);
        link.signal = l * h;
        link.intra = p.s_users > 1 ? l * sample_gamma(p.s_users - 1, g) : 0.0;
    } else {
        link.signal = p.p_p * h * path_loss(e.norm(), p.alpha2, p.beta_pl);
    }
    return link;
}

double macro_term(Point e, Point b, const SystemParams& p, double gain) {
    const double d = std::hypot(e.x - b.x, e.y - b.y);
    return p.p_m / p.s_users * gain * path_loss(d, p.alpha1, p.beta_pl);
}

double pico_term(Point e, Point b, const SystemParams& p, double gain) {
    const double d = std::hypot(e.x - b.x, e.y - b.y);
    return p.p_p * gain * path_loss(d, p.alpha2, p.beta_pl);
}

double macro_gain(const SystemParams& p, std::uint64_t key, std::uint32_t eve, std::size_t j) {
    CounterGen g(key, eve, static_cast<std::uint32_t>(j));
    return sample_gamma(p.s_users, g);
}

double pico_gain(std::uint64_t key, std::uint32_t eve, std::size_t j) {
    CounterGen g(key, eve, kPicoBit | static_cast<std::uint32_t>(j));
    return sample_exponential(g);
}

double full_interference(const PppRealization& r, const SystemParams& p, std::uint64_t key,
                         std::uint32_t eve) {
    const Point e = r.eve[eve];
    double total = 0.0;
    for (std::size_t j = 0; j < r.macro.size(); ++j) {
        total += macro_term(e, r.macro[j], p, macro_gain(p, key, eve, j));
    }
    for (std::size_t j = 0; j < r.pico.size(); ++j) {
        total += pico_term(e, r.pico[j], p, pico_gain(key, eve, j));
    }
    return total;
}

double grid_cell(double density) {
    return density > 0.0 ? 1.0 / std::sqrt(density) : 1.0;
}

// Interference field drawn around one eavesdropper. The near disc is drawn
// first so its contribution bounds the SINR before the annulus is sampled.
double independent_eve_sinr(Point e, const EveLink& link, double best, const SystemParams& p,
                            std::uint64_t key, std::uint32_t eve) {
    const double total_density = p.lambda_m + p.lambda_p;
    const double r_far = p.sim_radius;
    const double r_near = std::min(std::sqrt(4.0 / (std::numbers::pi * total_density)), 0.5 * r_far);

    auto field = [&](std::uint32_t slot, double r_in) {
        CounterGen g(key, eve, slot);
        const double r_out = r_in == 0.0 ? r_near : r_far;
        const auto macro = sample_ppp_annulus(p.lambda_m, r_in, r_out, e, g);
        const auto pico = sample_ppp_annulus(p.lambda_p, r_in, r_out, e, g);
        double total = 0.0;
        for (const Point& b : macro) {
            total += macro_term(e, b, p, sample_gamma(p.s_users, g));
        }
        for (const Point& b : pico) {
            total += pico_term(e, b, p, sample_exponential(g));
        }
        return total;
    };

    const double near = field(kNearSlot, 0.0);
    const double bound = link.signal / (p.noise_power + link.intra + near);
    if (bound <= best) {
        return bound;
    }
    const double far = field(kFarSlot, r_near);
    return link.signal / (p.noise_power + link.intra + near + far);
}

}  // namespace

double simulate_eve_max_sinr(const PppRealization& r, const SystemParams& p, TierId tier,
                             std::uint64_t key, EveEvaluation eval) {
    const std::size_t n = r.eve.size();
    if (n == 0) {
        return 0.0;
    }
    std::vector<EveLink> links(n);
    for (std::size_t i = 0; i < n; ++i) {
        links[i] = draw_eve_link(r.eve[i], p, tier, key, static_cast<std::uint32_t>(i));
    }

    double best = 0.0;
    if (eval == EveEvaluation::Exhaustive) {
        for (std::size_t i = 0; i < n; ++i) {
            const double interference = full_interference(r, p, key, static_cast<std::uint32_t>(i));
            best = std::max(best, links[i].signal / (p.noise_power + links[i].intra + interference));
        }
        return best;
    }

    auto exact = [&](std::size_t i) {
        const double interference = full_interference(r, p, key, static_cast<std::uint32_t>(i));
        return links[i].signal / (p.noise_power + links[i].intra + interference);
    };

    // Interference-free bound first: it is cheap, and the exact SINR of its
    // leader already rules out most eavesdroppers.
    std::vector<double> bound(n);
    for (std::size_t i = 0; i < n; ++i) {
        bound[i] = links[i].signal / (p.noise_power + links[i].intra);
    }
    const auto lead =
        static_cast<std::size_t>(std::max_element(bound.begin(), bound.end()) - bound.begin());
    const auto loudest = static_cast<std::size_t>(
        std::max_element(links.begin(), links.end(),
                         [](const EveLink& a, const EveLink& b) { return a.signal < b.signal; }) -
        links.begin());
    best = exact(lead);
    if (loudest != lead) {
        best = std::max(best, exact(loudest));
        bound[loudest] = 0.0;
    }

    // Tighter bound from the nearest BS of each tier alone.
    const PointGrid macro_grid(r.macro, p.sim_radius, grid_cell(p.lambda_m));
    const PointGrid pico_grid(r.pico, p.sim_radius, grid_cell(p.lambda_p));
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == lead || bound[i] <= best) {
            continue;
        }
        const auto eve = static_cast<std::uint32_t>(i);
        double near = 0.0;
        if (const auto hit = macro_grid.nearest(r.eve[i])) {
            near += macro_term(r.eve[i], r.macro[hit->index], p, macro_gain(p, key, eve, hit->index));
        }
        if (const auto hit = pico_grid.nearest(r.eve[i])) {
            near += pico_term(r.eve[i], r.pico[hit->index], p, pico_gain(key, eve, hit->index));
        }
        bound[i] = links[i].signal / (p.noise_power + links[i].intra + near);
        if (bound[i] > best) {
            order.push_back(i);
        }
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return bound[a] > bound[b]; });
    for (std::size_t i : order) {
        if (bound[i] <= best) {
            break;
        }
        best = std::max(best, exact(i));
    }
    return best;
}

double sample_eve_trial(TierId tier, const SystemParams& p, EveFieldMode mode, Engine& eng) {
    PppRealization r;
    r.eve = sample_ppp(p.lambda_e, p.sim_radius, eng);
    const std::uint64_t key = eng();
    if (mode == EveFieldMode::Shared) {
        r.macro = sample_ppp(p.lambda_m, p.sim_radius, eng);
        r.pico = sample_ppp(p.lambda_p, p.sim_radius, eng);
        return simulate_eve_max_sinr(r, p, tier, key);
    }
    std::vector<EveLink> links(r.eve.size());
    for (std::size_t i = 0; i < r.eve.size(); ++i) {
        links[i] = draw_eve_link(r.eve[i], p, tier, key, static_cast<std::uint32_t>(i));
    }
    std::vector<std::size_t> order(r.eve.size());
    std::iota(order.begin(), order.end(), 0);
    // Interference-free SINR ranks the candidates; the best ones are found
    // early so most fields are cut after the near disc.
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return links[a].signal / (p.noise_power + links[a].intra) >
               links[b].signal / (p.noise_power + links[b].intra);
    });
    double best = 0.0;
    for (std::size_t i : order) {
        const EveLink& l = links[i];
        if (l.signal / (p.noise_power + l.intra) <= best) {
            break;
        }
        best = std::max(best, independent_eve_sinr(r.eve[i], l, best, p, key,
                                                    static_cast<std::uint32_t>(i)));
    }
    return best;
}

}  // namespace hetsec::mc
