#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library, so agreement is a genuine cross-check.

#include <cmath>
#include <functional>
#include <numbers>

namespace oracle {

// Adaptive Simpson on [a, b]. The first few levels always subdivide, so a
// lucky agreement on a coarse grid cannot end the recursion early.
inline double simpson_step(const std::function<double(double)>& f, double a, double b, double fa, double fm,
                           double fb, double whole, double tol, int depth, int forced) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || (forced <= 0 && std::abs(left + right - whole) <= 15.0 * tol))
        return left + right + (left + right - whole) / 15.0;
    return simpson_step(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1, forced - 1) +
           simpson_step(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1, forced - 1);
}

inline double simpson(const std::function<double(double)>& f, double a, double b, double tol = 1e-13,
                      int depth = 25) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_step(f, a, b, fa, fm, fb, whole, tol, depth, 5);
}

// Composite midpoint rule with n cells; converges geometrically for smooth
// periodic integrands over a full period.
inline double midpoint(const std::function<double(double)>& f, double a, double b, int n) {
    const double h = (b - a) / n;
    long double s = 0.0L;
    for (int i = 0; i < n; ++i) s += f(a + (i + 0.5) * h);
    return static_cast<double>(s * h);
}

// Composite Simpson with n (even) panels; for integrands too noisy for the
// adaptive rule to settle.
inline double simpson_fixed(const std::function<double(double)>& f, double a, double b, int n) {
    const double h = (b - a) / n;
    long double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0L : 2.0L) * f(a + i * h);
    return static_cast<double>(s * h / 3.0L);
}

// erf by its Maclaurin series, summed until the terms drop below 1e-17.
inline double erf_maclaurin(double x) {
    long double sum = 0.0L, term = x;  // x^{2n+1} (-1)^n / n!
    for (int n = 0; n < 200; ++n) {
        const long double t = term / (2 * n + 1);
        sum += t;
        if (std::fabs(static_cast<double>(t)) < 1e-19) break;
        term *= -static_cast<long double>(x) * x / (n + 1);
    }
    return static_cast<double>(2.0L / std::sqrt(std::numbers::pi_v<long double>) * sum);
}

// I_m(x) = sum_k (x/2)^{2k+m} / (k! (k+m)!).
inline double bessel_i_series(int m, double x) {
    long double h = x / 2.0L;
    long double term = 1.0L;
    for (int j = 1; j <= m; ++j) term *= h / j;
    long double sum = term;
    for (int k = 1; k < 400; ++k) {
        term *= h * h / (static_cast<long double>(k) * (k + m));
        sum += term;
        if (term < 1e-22L * sum) break;
    }
    return static_cast<double>(sum);
}

// K_m(x) = int_0^inf exp(-x cosh t) cosh(m t) dt, by adaptive Simpson on a
// range long enough for the integrand to vanish.
// The factor e^{-x} is pulled out so the tolerance stays relative.
inline double bessel_k_integral(int m, double x) {
    const double tmax = std::acosh(1.0 + 60.0 / x);
    return std::exp(-x) * simpson([&](double t) { return std::exp(-x * (std::cosh(t) - 1.0)) * std::cosh(m * t); },
                                  0.0, tmax, 1e-15);
}

// E(k) = int_0^{pi/2} sqrt(1 - k^2 sin^2 t) dt.
inline double ellip_e_integral(double k) {
    return simpson([&](double t) { return std::sqrt(std::max(0.0, 1.0 - k * k * std::sin(t) * std::sin(t))); }, 0.0,
                   std::numbers::pi / 2.0, 1e-14);
}

// J(p, q) by 2D brute force: I0(z) = (1/pi) int_0^pi exp(z cos u) du, and
// s = w^2 removes the square root, so
// J = (2/pi) int_0^sqrt(q) int_0^pi w exp(-w^2 + 2 sqrt(p) w cos u) du dw.
// The inner integrand is smooth and periodic, where the midpoint rule
// converges geometrically.
inline double goldstein_bruteforce(double p, double q) {
    const double sp = std::sqrt(p);
    return 2.0 / std::numbers::pi *
           simpson(
               [&](double w) {
                   return w * midpoint([&](double u) { return std::exp(-w * w + 2.0 * sp * w * std::cos(u)); }, 0.0,
                                       std::numbers::pi, 64);
               },
               0.0, std::sqrt(q), 1e-13);
}

}  // namespace oracle
