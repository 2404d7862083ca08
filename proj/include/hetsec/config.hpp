#pragma once

#include "hetsec/system_params.hpp"

#include <filesystem>
#include <istream>
#include <map>
#include <string>

namespace hetsec {

/// Parameter assignments collected from a config file and/or the command
/// line, applied on top of a base SystemParams.
///
/// Config files hold one `key = value` pair per line; `#` starts a comment.
/// Keys are the SystemParams field names. Powers also accept a `_dbm`
/// suffix (p_m_dbm, p_p_dbm, noise_power_dbm), converted to watts on load.
/// `sim_radius = auto` (or leaving it out) recomputes the radius from the
/// final lambda_m, or lambda_p when there is no macro tier.
class ParamOverrides {
public:
    /// Throws std::invalid_argument for unknown keys or unparsable values.
    void set(const std::string& key, const std::string& value);

    /// Parse a whole config stream. `origin` is used in error messages.
    void read(std::istream& in, const std::string& origin = "<config>");
    void read_file(const std::filesystem::path& path);

    /// Later assignments win, so merge file first and flags second.
    void merge(const ParamOverrides& later);

    /// Applies the assignments and validates the result.
    SystemParams apply(SystemParams base) const;

    bool empty() const { return values_.empty(); }

private:
    // Canonical key -> SI value; sim_radius maps to NaN for `auto`.
    std::map<std::string, double> values_;
};

/// Writes every SystemParams field as a loadable config file.
void write_params(std::ostream& out, const SystemParams& params);

}  // namespace hetsec
