#include "hetsec/specfun.hpp"

#include "hetsec/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

namespace hetsec::specfun {

namespace {

constexpr int kMaxSeriesTerms = 10000;
constexpr double kSeriesRelEps = 1e-16;

bool is_nonpositive_integer(double v) {
    return v <= 0.0 && v == std::floor(v);
}

// Plain hypergeometric series for 0 <= w < 1.
double hyp2f1_series(double a, double b, double c, double w) {
    double sum = 1.0;
    double term = 1.0;
    for (int n = 0; n < kMaxSeriesTerms; ++n) {
        const double dn = static_cast<double>(n);
        term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * w;
        sum += term;
        if (term == 0.0) {
            return sum;  // terminating series
        }
        if (std::abs(term) < kSeriesRelEps * std::abs(sum)) {
            // Only stop once the terms are shrinking for good.
            const double next = std::abs((a + dn + 1.0) * (b + dn + 1.0) /
                                         ((c + dn + 1.0) * (dn + 2.0)) * w);
            if (next < 1.0) {
                return sum;
            }
        }
    }
    std::ostringstream msg;
    msg << "gauss_2f1: series did not converge in " << kMaxSeriesTerms << " terms (a=" << a
        << ", b=" << b << ", c=" << c << ", w=" << w << ", last term=" << term << ")";
    throw NumericError(msg.str(), sum, std::abs(term));
}

// 1 / Gamma(x), zero at the poles.
double reciprocal_gamma(double x) {
    if (is_nonpositive_integer(x)) {
        return 0.0;
    }
    return 1.0 / std::tgamma(x);
}

// Continuation in 1/(1-z) for z < -1; needs a - b non-integer.
double hyp2f1_reflected(double a, double b, double c, double z) {
    const double u = 1.0 / (1.0 - z);
    const double gc = std::tgamma(c);
    const double t1 = gc * std::tgamma(b - a) * reciprocal_gamma(b) * reciprocal_gamma(c - a);
    const double t2 = gc * std::tgamma(a - b) * reciprocal_gamma(a) * reciprocal_gamma(c - b);
    double sum = 0.0;
    if (t1 != 0.0) {
        sum += t1 * std::pow(u, a) * hyp2f1_series(a, c - b, a - b + 1.0, u);
    }
    if (t2 != 0.0) {
        sum += t2 * std::pow(u, b) * hyp2f1_series(b, c - a, b - a + 1.0, u);
    }
    return sum;
}

}  // namespace

double log_gamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError("log_gamma: argument must be positive and finite");
    }
    // Lanczos approximation, g = 607/128, 15 coefficients.
    static constexpr std::array<double, 14> cof = {
        57.1562356658629235,     -59.5979603554754912,     14.1360979747417471,
        -0.491913816097620199,   .339946499848118887e-4,   .465236289270485756e-4,
        -.983744753048795646e-4, .158088703224912494e-3,   -.210264441724104883e-3,
        .217439618115212643e-3,  -.164318106536763890e-3,  .844182239838527433e-4,
        -.261908384015814087e-4, .368991826595316234e-5};
    double y = x;
    double tmp = x + 5.24218750000000000;
    tmp = (x + 0.5) * std::log(tmp) - tmp;
    double ser = 0.999999999999997092;
    for (double c : cof) {
        ser += c / ++y;
    }
    return tmp + std::log(2.5066282746310005 * ser / x);
}

double gauss_2f1(double a, double b, double c, double z) {
    if (is_nonpositive_integer(c)) {
        throw DomainError("gauss_2f1: c must not be a non-positive integer");
    }
    if (!std::isfinite(z) || z >= 1.0) {
        throw DomainError("gauss_2f1: only z < 1 is supported");
    }
    if (z == 0.0) {
        return 1.0;
    }
    if (z > 0.0) {
        return hyp2f1_series(a, b, c, z);
    }

    // Pfaff: keep whichever upper parameter makes the transformed series
    // decay faster (or terminate).
    const double w = z / (z - 1.0);
    const double one_minus_z = 1.0 - z;
    const bool keep_a_terminates = is_nonpositive_integer(c - b);
    const bool keep_b_terminates = is_nonpositive_integer(c - a);
    bool keep_a = a <= b;
    if (keep_a_terminates != keep_b_terminates) {
        keep_a = keep_a_terminates;
    }
    const bool terminates = keep_a_terminates || keep_b_terminates;
    if (!terminates && z < -1.0 && a - b != std::floor(a - b) && c < 170.0) {
        return hyp2f1_reflected(a, b, c, z);
    }
    if (keep_a) {
        return std::pow(one_minus_z, -a) * hyp2f1_series(a, c - b, c, w);
    }
    return std::pow(one_minus_z, -b) * hyp2f1_series(c - a, b, c, w);
}

double incomplete_beta(double z, double a, double b) {
    if (!(a > 0.0)) {
        throw DomainError("incomplete_beta: a must be positive");
    }
    if (!std::isfinite(z) || z >= 1.0) {
        throw DomainError("incomplete_beta: only z < 1 is supported");
    }
    if (z == 0.0) {
        return 0.0;
    }
    if (z < 0.0 && a != std::floor(a)) {
        throw DomainError(
            "incomplete_beta: negative argument with non-integer a is not real; "
            "use the equivalent gauss_2f1 form");
    }
    return std::pow(z, a) / a * gauss_2f1(a, 1.0 - b, a + 1.0, z);
}

double cosecant(double x) {
    if (!std::isfinite(x)) {
        throw DomainError("cosecant: argument must be finite");
    }
    const double k = x / std::numbers::pi;
    if (std::abs(k - std::round(k)) < 1e-12 * std::max(1.0, std::abs(k))) {
        throw DomainError("cosecant: argument is a multiple of pi");
    }
    return 1.0 / std::sin(x);
}

double log_binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) {
        throw DomainError("log_binomial: need 0 <= k <= n");
    }
    k = std::min(k, n - k);
    if (n <= 60) {
        double v = 1.0;
        for (int i = 1; i <= k; ++i) {
            v = v * (n - k + i) / i;
        }
        return std::log(v);
    }
    return log_gamma(n + 1.0) - log_gamma(k + 1.0) - log_gamma(n - k + 1.0);
}

}  // namespace hetsec::specfun
