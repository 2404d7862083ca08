#pragma once

#include <functional>

namespace hetsec::specfun {

struct QuadratureConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_subdivisions = 4000;
    /// Semi-infinite integrals are truncated where |f| drops below this
    /// fraction of its peak; the discarded tail is then bounded explicitly.
    double tail_cutoff_fraction = 1e-13;

    /// Throws DomainError on any invariant violation.
    void validate() const;

    /// Tolerances used for the outer integrals of the analytical engine.
    static QuadratureConfig outer();
};

struct QuadResult {
    double value = 0.0;
    double abs_error = 0.0;
    int evaluations = 0;
};

/// Geometric window searched for the integrand's peak on (0, inf).
struct ScanRange {
    double lo = 1e-12;
    double hi = 1e15;
};

using Integrand = std::function<double(double)>;

/// Adaptive 21-point Gauss-Kronrod integration over [a, b].
/// Throws NumericError (best estimate attached) when max_subdivisions is
/// exhausted before the tolerance max(abs_tol, rel_tol * |I|) is met.
QuadResult integrate(const Integrand& f, double a, double b, const QuadratureConfig& cfg = {});

/// Integral of f over (0, inf).
///
/// The peak of |f| is located by a doubling scan over `range`; the domain is
/// truncated where |f| stays below tail_cutoff_fraction * peak, and the
/// truncation point is pushed outward until the bound
///   sum_k X 2^k |f(X 2^k)|  >=  int_X^inf |f|
/// (valid for tails that decrease monotonically) is below half the target
/// tolerance. The returned abs_error includes that tail bound.
QuadResult integrate_semi_infinite(const Integrand& f, const QuadratureConfig& cfg = {},
                                   ScanRange range = {});

}  // namespace hetsec::specfun
