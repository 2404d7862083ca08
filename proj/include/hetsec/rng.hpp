#pragma once

#include "hetsec/errors.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>

namespace hetsec::mc {

using Engine = std::mt19937_64;

/// Stream tags so user and eavesdropper runs never share random numbers.
enum class StreamDomain : std::uint64_t {
    User = 0x75736572,
    EveMacro = 0x6576654d,
    EvePico = 0x65766550,
    Test = 0x74657374,
};

/// splitmix64 step; advances `state` and returns the next output.
std::uint64_t splitmix64(std::uint64_t& state);

/// Independent engine for one partition of a run. Depends only on the
/// arguments, never on thread scheduling.
Engine make_stream(std::uint64_t seed, StreamDomain domain, std::uint64_t partition);

/// Cheap keyed generator: the sequence depends only on (key, a, b), so draws
/// can be made in any order and reproduced later.
class CounterGen {
public:
    using result_type = std::uint64_t;
    CounterGen(std::uint64_t key, std::uint32_t a, std::uint32_t b);
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
    result_type operator()() { return splitmix64(state_); }

private:
    std::uint64_t state_;
};

/// Uniform on the open interval (0, 1). G must produce 64 random bits.
template <class G>
double uniform_open(G& g) {
    static_assert(G::max() == std::numeric_limits<std::uint64_t>::max() && G::min() == 0);
    return (static_cast<double>(g() >> 11) + 0.5) * 0x1.0p-53;
}

template <class G>
double sample_exponential(G& g) {
    return -std::log(uniform_open(g));
}

template <class G>
double sample_normal(G& g) {
    const double u1 = uniform_open(g);
    const double u2 = uniform_open(g);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

/// Gamma(shape, 1) for integer shape >= 1. Sum of exponentials below 32,
/// Marsaglia-Tsang above.
template <class G>
double sample_gamma(int shape, G& g) {
    if (shape < 1) {
        throw DomainError("sample_gamma: shape must be >= 1");
    }
    if (shape < 32) {
        double log_sum = 0.0;
        double prod = 1.0;
        for (int i = 0; i < shape; ++i) {
            prod *= uniform_open(g);
            if (prod < 1e-250) {
                log_sum += std::log(prod);
                prod = 1.0;
            }
        }
        return -(log_sum + std::log(prod));
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        const double x = sample_normal(g);
        double v = 1.0 + c * x;
        if (v <= 0.0) {
            continue;
        }
        v = v * v * v;
        const double u = uniform_open(g);
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) {
            return d * v;
        }
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) {
            return d * v;
        }
    }
}

/// Poisson count; mean 0 gives 0.
template <class G>
std::uint64_t sample_poisson(double mean, G& g) {
    if (!(mean >= 0.0) || !std::isfinite(mean)) {
        throw DomainError("sample_poisson: mean must be finite and non-negative");
    }
    if (mean == 0.0) {
        return 0;
    }
    std::poisson_distribution<std::uint64_t> dist(mean);
    return dist(g);
}

}  // namespace hetsec::mc
