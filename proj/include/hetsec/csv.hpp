#pragma once

#include "hetsec/sweep.hpp"

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace hetsec::bench {

/// Column header of the sweep CSV.
inline constexpr const char* kCsvHeader =
    "parameter,value,metric,engine,estimate,err_halfwidth,trials,seed,status";

/// Writes an optional "# ..." comment line, the header, then one line per
/// row. Numbers are printed so they parse back to the same double.
void write_csv(std::ostream& os, const std::vector<CurvePoint>& rows,
               const std::string& comment = {});

/// Parses what write_csv emits. Lines starting with '#' are skipped.
/// Throws std::runtime_error with a line number on malformed input.
std::vector<CurvePoint> read_csv(std::istream& is);

}  // namespace hetsec::bench
