#pragma once

#include <vector>

namespace gtri::specfun {

/// Accuracy knobs shared by the series-based routines below.
struct SpecTolerance {
    double abs_tol = 1e-12;
    int max_terms = 500;

    void validate() const;
};

/// Error function. Throws DomainError for non-finite input.
double erf(double x);

/// Modified Bessel function of the first kind, integer order m >= 0, x >= 0.
///
/// Power series for x <= 30; above that, e^x times the scaled value from
/// Miller's backward recurrence (normalized by sum_k eps_k I_k(x) = e^x).
double bessel_i(int m, double x, const SpecTolerance& tol = {});

/// e^{-x} I_m(x). Finite for every x >= 0.
double bessel_i_scaled(int m, double x, const SpecTolerance& tol = {});

/// e^{-x} I_k(x) for k = 0..kmax, computed in one backward-recurrence pass.
std::vector<double> bessel_i_scaled_sequence(double x, int kmax);

/// Modified Bessel function of the second kind, integer order m >= 0, x > 0.
///
/// Orders 0 and 1 come from the logarithmic power series for x <= 2 and from
/// trapezoidal summation of int_0^inf exp(-x cosh t) cosh(m t) dt above that.
/// Higher orders use the (forward-stable) upward recurrence.
double bessel_k(int m, double x, const SpecTolerance& tol = {});

/// Carlson's symmetric elliptic integrals.
double carlson_rf(double x, double y, double z);
double carlson_rd(double x, double y, double z);

/// Complete elliptic integral of the second kind as a function of the
/// modulus k: E(k) = int_0^{pi/2} sqrt(1 - k^2 sin^2 t) dt. (Not the
/// parameter m = k^2.)
double ellip_e(double k);

/// Regularized lower and upper incomplete gamma functions P(a,x), Q(a,x).
double gamma_p(double a, double x);
double gamma_q(double a, double x);

/// Goldstein's J(p, q) = int_0^q e^{-s} I_0(2 sqrt(p s)) ds.
///
/// Summed as sum_k p^k / k! * P(k+1, q).
double goldstein_j(double p, double q, const SpecTolerance& tol = {});

}  // namespace gtri::specfun
