#include "hetsec/config.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace hetsec {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& key, const std::string& text) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) {
        throw std::invalid_argument("config: bad value for '" + key + "': '" + text + "'");
    }
    return v;
}

bool is_integer_key(const std::string& key) {
    return key == "n_antennas" || key == "s_users";
}

const char* const kKeys[] = {"p_m",     "p_p",      "n_antennas", "s_users",     "alpha1",
                             "alpha2",  "beta_pl",  "lambda_m",   "lambda_p",    "lambda_e",
                             "noise_power", "rho_secrecy", "sim_radius"};

bool is_known_key(const std::string& key) {
    for (const char* k : kKeys) {
        if (key == k) {
            return true;
        }
    }
    return false;
}

}  // namespace

void ParamOverrides::set(const std::string& raw_key, const std::string& raw_value) {
    std::string key = trim(raw_key);
    const std::string value = trim(raw_value);
    const std::string suffix = "_dbm";
    bool dbm = false;
    if (key.size() > suffix.size() && key.ends_with(suffix)) {
        const std::string base = key.substr(0, key.size() - suffix.size());
        if (base == "p_m" || base == "p_p" || base == "noise_power") {
            key = base;
            dbm = true;
        }
    }
    if (!is_known_key(key)) {
        throw std::invalid_argument("config: unknown key '" + raw_key + "'");
    }
    if (key == "sim_radius" && value == "auto") {
        values_[key] = std::numeric_limits<double>::quiet_NaN();
        return;
    }
    double v = parse_number(key, value);
    if (is_integer_key(key) && v != std::floor(v)) {
        throw std::invalid_argument("config: '" + key + "' must be an integer");
    }
    values_[key] = dbm ? dbm_to_watts(v) : v;
}

void ParamOverrides::read(std::istream& in, const std::string& origin) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument(origin + ":" + std::to_string(lineno) +
                                        ": expected 'key = value'");
        }
        try {
            set(line.substr(0, eq), line.substr(eq + 1));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(origin + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
}

void ParamOverrides::read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("config: cannot open '" + path.string() + "'");
    }
    read(in, path.string());
}

void ParamOverrides::merge(const ParamOverrides& later) {
    for (const auto& [k, v] : later.values_) {
        values_[k] = v;
    }
}

SystemParams ParamOverrides::apply(SystemParams p) const {
    auto get = [&](const char* key, auto& field) {
        if (auto it = values_.find(key); it != values_.end()) {
            using T = std::remove_reference_t<decltype(field)>;
            field = static_cast<T>(it->second);
        }
    };
    get("p_m", p.p_m);
    get("p_p", p.p_p);
    get("n_antennas", p.n_antennas);
    get("s_users", p.s_users);
    get("alpha1", p.alpha1);
    get("alpha2", p.alpha2);
    get("beta_pl", p.beta_pl);
    get("lambda_m", p.lambda_m);
    get("lambda_p", p.lambda_p);
    get("lambda_e", p.lambda_e);
    get("noise_power", p.noise_power);
    get("rho_secrecy", p.rho_secrecy);

    const auto radius = values_.find("sim_radius");
    if (radius != values_.end() && !std::isnan(radius->second)) {
        p.sim_radius = radius->second;
    } else if (radius != values_.end() || values_.count("lambda_m") != 0) {
        const double bs_density = p.lambda_m > 0.0 ? p.lambda_m : p.lambda_p;
        if (bs_density > 0.0) {
            p.sim_radius = default_sim_radius(bs_density);
        }
    }
    p.validate();
    return p;
}

void write_params(std::ostream& out, const SystemParams& p) {
    auto num = [](double v) {
        std::array<char, 64> buf{};
        const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
        return std::string(buf.data(), res.ptr);
    };
    out << "p_m = " << num(p.p_m) << "\n"
        << "p_p = " << num(p.p_p) << "\n"
        << "n_antennas = " << p.n_antennas << "\n"
        << "s_users = " << p.s_users << "\n"
        << "alpha1 = " << num(p.alpha1) << "\n"
        << "alpha2 = " << num(p.alpha2) << "\n"
        << "beta_pl = " << num(p.beta_pl) << "\n"
        << "lambda_m = " << num(p.lambda_m) << "\n"
        << "lambda_p = " << num(p.lambda_p) << "\n"
        << "lambda_e = " << num(p.lambda_e) << "\n"
        << "noise_power = " << num(p.noise_power) << "\n"
        << "rho_secrecy = " << num(p.rho_secrecy) << "\n"
        << "sim_radius = " << num(p.sim_radius) << "\n";
}

}  // namespace hetsec
