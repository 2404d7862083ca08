#include "hetsec/quadrature.hpp"

#include "hetsec/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

namespace hetsec::specfun {

namespace {

// Gauss-Kronrod 10/21 abscissae and weights (QUADPACK qk21).
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525478126, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Segment {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk21(const Integrand& f, double a, double b, int& evals) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * kWgk[10];
    double gauss = 0.0;
    for (int j = 0; j < 10; ++j) {
        const double dx = half * kXgk[j];
        const double fsum = f(center - dx) + f(center + dx);
        kronrod += kWgk[j] * fsum;
        if (j % 2 == 1) {
            gauss += kWg[j / 2] * fsum;
        }
    }
    evals += 21;
    const double value = kronrod * half;
    double error = std::abs((kronrod - gauss) * half);
    // Floor at the rounding level of the interval.
    error = std::max(error, 50.0 * 2.2e-16 * std::abs(value));
    if (!std::isfinite(value)) {
        std::ostringstream msg;
        msg << "quadrature: integrand is not finite on [" << a << ", " << b << "]";
        throw NumericError(msg.str(), value, INFINITY);
    }
    return {a, b, value, error};
}

class Adaptive {
public:
    Adaptive(const Integrand& f, const QuadratureConfig& cfg) : f_(f), cfg_(cfg) {}

    void add(double a, double b) {
        if (b > a) {
            const Segment s = gk21(f_, a, b, evals_);
            value_ += s.value;
            error_ += s.error;
            heap_.push(s);
        }
    }

    double target() const { return std::max(cfg_.abs_tol, cfg_.rel_tol * std::abs(value_)); }

    void refine(double budget) {
        while (error_ > budget) {
            if (splits_ >= cfg_.max_subdivisions) {
                std::ostringstream msg;
                msg << "quadrature: " << cfg_.max_subdivisions
                    << " subdivisions exhausted; estimate " << value_ << " +/- " << error_;
                throw NumericError(msg.str(), value_, error_);
            }
            const Segment worst = heap_.top();
            const double mid = 0.5 * (worst.a + worst.b);
            if (!(mid > worst.a && mid < worst.b)) {
                // Interval can no longer be split in floating point.
                std::ostringstream msg;
                msg << "quadrature: interval collapsed near " << worst.a << "; estimate " << value_
                    << " +/- " << error_;
                throw NumericError(msg.str(), value_, error_);
            }
            heap_.pop();
            const Segment left = gk21(f_, worst.a, mid, evals_);
            const Segment right = gk21(f_, mid, worst.b, evals_);
            value_ += left.value + right.value - worst.value;
            error_ += left.error + right.error - worst.error;
            heap_.push(left);
            heap_.push(right);
            ++splits_;
            if (heap_.size() % 64 == 0) {
                resum();
            }
        }
        resum();
    }

    double value() const { return value_; }
    double error() const { return error_; }
    int evaluations() const { return evals_; }
    void count_evaluations(int n) { evals_ += n; }

private:
    // Running sums drift; recompute them exactly from the heap.
    void resum() {
        auto copy = heap_;
        double v = 0.0;
        double e = 0.0;
        while (!copy.empty()) {
            v += copy.top().value;
            e += copy.top().error;
            copy.pop();
        }
        value_ = v;
        error_ = e;
    }

    const Integrand& f_;
    const QuadratureConfig& cfg_;
    std::priority_queue<Segment> heap_;
    double value_ = 0.0;
    double error_ = 0.0;
    int evals_ = 0;
    int splits_ = 0;
};

}  // namespace

void QuadratureConfig::validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
        throw DomainError("QuadratureConfig: tolerances must be positive");
    }
    if (max_subdivisions < 1) {
        throw DomainError("QuadratureConfig: max_subdivisions must be >= 1");
    }
    if (!(tail_cutoff_fraction > 0.0 && tail_cutoff_fraction < 1.0)) {
        throw DomainError("QuadratureConfig: tail_cutoff_fraction must lie in (0, 1)");
    }
}

QuadratureConfig QuadratureConfig::outer() {
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-8;
    cfg.rel_tol = 1e-7;
    return cfg;
}

QuadResult integrate(const Integrand& f, double a, double b, const QuadratureConfig& cfg) {
    cfg.validate();
    if (!(std::isfinite(a) && std::isfinite(b))) {
        throw DomainError("integrate: bounds must be finite");
    }
    if (a == b) {
        return {};
    }
    if (b < a) {
        QuadResult r = integrate(f, b, a, cfg);
        r.value = -r.value;
        return r;
    }
    Adaptive quad(f, cfg);
    quad.add(a, b);
    quad.refine(quad.target());
    return {quad.value(), quad.error(), quad.evaluations()};
}

QuadResult integrate_semi_infinite(const Integrand& f, const QuadratureConfig& cfg,
                                   ScanRange range) {
    cfg.validate();
    if (!(range.lo > 0.0 && range.hi > range.lo)) {
        throw DomainError("integrate_semi_infinite: invalid scan range");
    }

    std::vector<double> xs;
    std::vector<double> fs;
    for (double x = range.lo; x <= range.hi; x *= 2.0) {
        xs.push_back(x);
        const double v = std::abs(f(x));
        if (std::isnan(v)) {
            std::ostringstream msg;
            msg << "integrate_semi_infinite: integrand is NaN at x=" << x;
            throw NumericError(msg.str(), NAN, INFINITY);
        }
        fs.push_back(v);
    }
    const auto n = xs.size();
    const auto peak_it = std::max_element(fs.begin(), fs.end());
    const double peak = *peak_it;
    if (peak == 0.0) {
        return {0.0, 0.0, static_cast<int>(n)};
    }
    if (!std::isfinite(peak)) {
        throw NumericError("integrate_semi_infinite: integrand is unbounded on the scan grid",
                           NAN, INFINITY);
    }
    const double floor_value = cfg.tail_cutoff_fraction * peak;
    const auto i_peak = static_cast<std::size_t>(peak_it - fs.begin());

    // Last scan point still above the cutoff decides the truncation point.
    std::size_t cut = i_peak;
    for (std::size_t k = n; k-- > i_peak;) {
        if (fs[k] >= floor_value) {
            cut = std::min(k + 1, n - 1);
            break;
        }
    }
    // Everything left of the first significant scan point goes into one piece.
    std::size_t first = 0;
    while (first < i_peak && fs[first] < floor_value) {
        ++first;
    }

    Adaptive quad(f, cfg);
    quad.count_evaluations(static_cast<int>(n));
    quad.add(0.0, xs[first]);
    for (std::size_t k = first; k < cut; ++k) {
        quad.add(xs[k], xs[k + 1]);
    }

    auto tail_bound = [&](std::size_t from) {
        double t = 0.0;
        for (std::size_t k = from; k < n; ++k) {
            t += xs[k] * fs[k];
        }
        return t;
    };

    double tail = tail_bound(cut);
    while (tail > 0.5 * quad.target() && cut + 1 < n) {
        quad.add(xs[cut], xs[cut + 1]);
        ++cut;
        tail = tail_bound(cut);
    }
    if (tail > 0.5 * quad.target()) {
        std::ostringstream msg;
        msg << "integrate_semi_infinite: integrand does not decay within the scan range (tail bound "
            << tail << ")";
        throw NumericError(msg.str(), quad.value(), quad.error() + tail);
    }

    quad.refine(std::max(quad.target() - tail, 0.5 * quad.target()));
    return {quad.value(), quad.error() + tail, quad.evaluations()};
}

}  // namespace hetsec::specfun
