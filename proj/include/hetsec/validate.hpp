#pragma once

#include "hetsec/eve_sim.hpp"
#include "hetsec/system_params.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hetsec::bench {

/// One analytical-vs-simulation pairing.
struct Check {
    std::string name;
    double analytic = 0.0;
    double mc = 0.0;
    double gap = 0.0;        ///< the quantity compared against `tolerance`
    double tolerance = 0.0;
    bool pass = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<Check> checks;

    bool all_pass() const;
    /// One line per check; identical inputs give identical text.
    std::string render() const;
};

struct ValidateOptions {
    std::uint64_t trials = 10000;
    std::uint64_t seed = 42;
    unsigned threads = 1;
    /// Pair the simulation against the unexponentiated power ratio in the
    /// pico association integral; the association check should then fail.
    bool corrupt_assoc_exponent = false;
    mc::EveFieldMode eve_mode = mc::EveFieldMode::Shared;
};

inline const std::vector<double> kPicoCdfGrid = {0.1, 0.5, 1.0, 5.0, 10.0};
inline const std::vector<double> kEveMacroGrid = {0.1, 0.2, 0.3, 0.5, 1.0};
inline const std::vector<double> kEvePicoGrid = {1.0, 10.0, 100.0, 1e3, 1e4};

/// Runs every pairing at the given parameters. Needs trials >= 10^4.
ValidationReport validate(const SystemParams& p, const ValidateOptions& opt);

}  // namespace hetsec::bench
