#include "hetsec/user_sim.hpp"

#include <cmath>
#include <limits>

namespace hetsec::mc {

FadingDraw draw_fading(const PppRealization& r, const Association& a, const SystemParams& p,
                       Engine& eng) {
    FadingDraw f;
    f.desired = a.tier == TierId::Macro
                    ? sample_gamma(p.n_antennas - p.s_users + 1, eng)
                    : sample_exponential(eng);
    f.macro_gains.resize(r.macro.size());
    for (auto& g : f.macro_gains) {
        g = sample_gamma(p.s_users, eng);
    }
    f.pico_gains.resize(r.pico.size());
    for (auto& g : f.pico_gains) {
        g = sample_exponential(eng);
    }
    return f;
}

double user_interference(const PppRealization& r, const FadingDraw& f, const Association& a,
                         const SystemParams& p) {
    double macro = 0.0;
    for (std::size_t i = 0; i < r.macro.size(); ++i) {
        if (a.tier == TierId::Macro && i == a.index) {
            continue;
        }
        macro += f.macro_gains[i] * std::pow(r.macro[i].norm(), -p.alpha1);
    }
    double pico = 0.0;
    for (std::size_t i = 0; i < r.pico.size(); ++i) {
        if (a.tier == TierId::Pico && i == a.index) {
            continue;
        }
        pico += f.pico_gains[i] * std::pow(r.pico[i].norm(), -p.alpha2);
    }
    return p.beta_pl * (p.p_m / p.s_users * macro + p.p_p * pico);
}

namespace {

double user_signal(const FadingDraw& f, const Association& a, const SystemParams& p) {
    return a.tier == TierId::Macro
               ? p.p_m / p.s_users * f.desired * path_loss(a.distance, p.alpha1, p.beta_pl)
               : p.p_p * f.desired * path_loss(a.distance, p.alpha2, p.beta_pl);
}

}  // namespace

double simulate_user_sinr(const PppRealization& r, const FadingDraw& f, const Association& a,
                          const SystemParams& p) {
    return user_signal(f, a, p) / (user_interference(r, f, a, p) + p.noise_power);
}

namespace {

struct Placement {
    PppRealization r;
    Association a;
    std::uint64_t fading_key = 0;
};

Placement place_user(const SystemParams& p, Engine& eng) {
    for (;;) {
        Placement pl;
        pl.r.macro = sample_ppp(p.lambda_m, p.sim_radius, eng);
        pl.r.pico = sample_ppp(p.lambda_p, p.sim_radius, eng);
        const auto a = associate(pl.r, p);
        if (!a) {
            continue;
        }
        pl.a = *a;
        pl.fading_key = eng();
        return pl;
    }
}

}  // namespace

UserTrial sample_user_trial(const SystemParams& p, Engine& eng) {
    const Placement pl = place_user(p, eng);
    Engine fading(pl.fading_key);
    const FadingDraw f = draw_fading(pl.r, pl.a, p, fading);
    UserTrial t;
    t.tier = pl.a.tier;
    t.distance = pl.a.distance;
    t.interference = user_interference(pl.r, f, pl.a, p);
    t.sinr = user_signal(f, pl.a, p) / (t.interference + p.noise_power);
    return t;
}

UserTrial sample_association_trial(const SystemParams& p, Engine& eng) {
    const Placement pl = place_user(p, eng);
    UserTrial t;
    t.tier = pl.a.tier;
    t.distance = pl.a.distance;
    t.sinr = std::numeric_limits<double>::quiet_NaN();
    t.interference = std::numeric_limits<double>::quiet_NaN();
    return t;
}

}  // namespace hetsec::mc
