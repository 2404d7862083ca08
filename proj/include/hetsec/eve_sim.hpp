#pragma once

#include "hetsec/ppp.hpp"
#include "hetsec/rng.hpp"
#include "hetsec/system_params.hpp"

#include <cstdint>

namespace hetsec::mc {

/// How the BS field seen by the eavesdroppers is drawn.
/// Shared: one field per realization, common to every eavesdropper (the
/// physical model). Independent: each eavesdropper gets its own field; a
/// diagnostic that matches the independence assumption of the closed form.
enum class EveFieldMode { Shared, Independent };

/// Pruned skips eavesdroppers whose SINR upper bound cannot beat the current
/// maximum. Exhaustive evaluates every one. Both give identical results.
enum class EveEvaluation { Pruned, Exhaustive };

/// Largest SINR over r.eve when a BS of `tier` transmits from the origin.
/// r.macro / r.pico are the interfering BSs (the tagged one is not in them).
/// Fading for each (eavesdropper, BS) link is a function of `key` and the
/// pair only. Empty eavesdropper set gives 0.
double simulate_eve_max_sinr(const PppRealization& r, const SystemParams& p, TierId tier,
                             std::uint64_t key, EveEvaluation eval = EveEvaluation::Pruned);

/// Samples one realization and returns the strongest eavesdropper's SINR.
double sample_eve_trial(TierId tier, const SystemParams& p, EveFieldMode mode, Engine& eng);

}  // namespace hetsec::mc
