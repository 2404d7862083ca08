#pragma once

// Special functions used by the closed-form coverage and secrecy expressions.
// Real arguments only; every function is pure and thread-safe.

namespace hetsec::specfun {

/// Natural log of the Gamma function for x > 0.
/// Throws DomainError for x <= 0 or non-finite x.
double log_gamma(double x);

/// Gauss hypergeometric function 2F1(a, b; c; z).
///
/// Supported for z < 1. Negative arguments are mapped through the Pfaff
/// transformation 2F1(a,b;c;z) = (1-z)^(-a) 2F1(a, c-b; c; z/(z-1)) so the
/// summed series always has argument in [0, 1). Below z = -1, when a - b is
/// not an integer, the two-term continuation in 1/(1-z) is used instead. The series stops when a term
/// falls below 1e-16 of the partial sum (after the term ratio has started to
/// shrink) and is capped at 10000 terms.
///
/// Throws DomainError if c is a non-positive integer or z >= 1, and
/// NumericError (carrying the partial sum) if the term cap is reached.
double gauss_2f1(double a, double b, double c, double z);

/// Incomplete beta function B(z; a, b) = int_0^z t^(a-1) (1-t)^(b-1) dt,
/// evaluated as z^a / a * 2F1(a, 1-b; a+1; z).
///
/// Requires a > 0 and z < 1. For z < 0 the result is real only when a is an
/// integer; any other negative-argument case throws DomainError (rewrite the
/// caller in terms of gauss_2f1 instead).
double incomplete_beta(double z, double a, double b);

/// 1 / sin(x). Throws DomainError when x is (numerically) a multiple of pi.
double cosecant(double x);

/// log of the binomial coefficient C(n, k) for integers 0 <= k <= n.
double log_binomial(int n, int k);

}  // namespace hetsec::specfun
