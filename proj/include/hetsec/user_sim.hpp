#pragma once

#include "hetsec/ppp.hpp"
#include "hetsec/rng.hpp"
#include "hetsec/system_params.hpp"

#include <vector>

namespace hetsec::mc {

/// Small-scale gains for one realization seen from the typical user.
/// Entries for the serving BS are unused.
struct FadingDraw {
    double desired = 0.0;               ///< Gamma(N-S+1,1) macro, Exp(1) pico
    std::vector<double> macro_gains;    ///< Gamma(S,1)
    std::vector<double> pico_gains;     ///< Exp(1)
};

FadingDraw draw_fading(const PppRealization& r, const Association& a, const SystemParams& p,
                       Engine& eng);

/// Aggregate interference at the origin, excluding the serving BS.
double user_interference(const PppRealization& r, const FadingDraw& f, const Association& a,
                         const SystemParams& p);

/// SINR of the typical user served by `a`.
double simulate_user_sinr(const PppRealization& r, const FadingDraw& f, const Association& a,
                          const SystemParams& p);

struct UserTrial {
    TierId tier = TierId::Macro;
    double distance = 0.0;
    double sinr = 0.0;
    double interference = 0.0;
};

/// One realization of the BS tiers around the typical user, resampled until
/// at least one BS is present. Fading comes from a key drawn after the
/// positions, so `eng` advances the same way as in sample_association_trial.
UserTrial sample_user_trial(const SystemParams& p, Engine& eng);

/// Positions and association only; sinr and interference are NaN. Tier and
/// distance match sample_user_trial for the same engine state.
UserTrial sample_association_trial(const SystemParams& p, Engine& eng);

}  // namespace hetsec::mc
