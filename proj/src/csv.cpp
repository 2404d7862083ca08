#include "hetsec/csv.hpp"

#include <charconv>
#include <stdexcept>
#include <string_view>

namespace hetsec::bench {

namespace {

// Fields never contain commas or line breaks; diagnostics are cleaned here.
std::string sanitize(std::string s) {
    for (char& c : s) {
        if (c == ',') {
            c = ';';
        } else if (c == '\n' || c == '\r') {
            c = ' ';
        }
    }
    return s;
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    for (;;) {
        const auto comma = line.find(',');
        out.push_back(line.substr(0, comma));
        if (comma == std::string_view::npos) {
            return out;
        }
        line.remove_prefix(comma + 1);
    }
}

[[noreturn]] void bad(std::size_t line_no, const std::string& what) {
    throw std::runtime_error("csv line " + std::to_string(line_no) + ": " + what);
}

double to_double(std::string_view s, std::size_t line_no) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        bad(line_no, "not a number: '" + std::string(s) + "'");
    }
    return v;
}

std::uint64_t to_u64(std::string_view s, std::size_t line_no) {
    std::uint64_t v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        bad(line_no, "not an unsigned integer: '" + std::string(s) + "'");
    }
    return v;
}

}  // namespace

void write_csv(std::ostream& os, const std::vector<CurvePoint>& rows, const std::string& comment) {
    if (!comment.empty()) {
        os << "# " << sanitize(comment) << '\n';
    }
    os << kCsvHeader << '\n';
    for (const auto& r : rows) {
        os << sanitize(r.parameter) << ',' << format_double(r.value) << ',' << sanitize(r.metric)
           << ',' << sanitize(r.engine) << ',' << format_double(r.estimate) << ','
           << format_double(r.err_halfwidth) << ',' << r.trials << ',' << r.seed << ','
           << sanitize(r.status) << '\n';
    }
}

std::vector<CurvePoint> read_csv(std::istream& is) {
    std::vector<CurvePoint> rows;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line[0] == '#') {
            continue;
        }
        if (!header_seen) {
            if (line != kCsvHeader) {
                bad(line_no, "unexpected header");
            }
            header_seen = true;
            continue;
        }
        const auto f = split(line);
        if (f.size() != 9) {
            bad(line_no, "expected 9 fields, got " + std::to_string(f.size()));
        }
        CurvePoint c;
        c.parameter = std::string(f[0]);
        c.value = to_double(f[1], line_no);
        c.metric = std::string(f[2]);
        c.engine = std::string(f[3]);
        c.estimate = to_double(f[4], line_no);
        c.err_halfwidth = to_double(f[5], line_no);
        c.trials = to_u64(f[6], line_no);
        c.seed = to_u64(f[7], line_no);
        c.status = std::string(f[8]);
        rows.push_back(std::move(c));
    }
    if (!header_seen) {
        throw std::runtime_error("csv: missing header");
    }
    return rows;
}

}  // namespace hetsec::bench
