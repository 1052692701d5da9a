#include "gausstri/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "gausstri/error.hpp"

namespace gtri::specfun {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
constexpr double kSeriesRelTol = 1e-17;
constexpr double kSeriesSwitch = 30.0;

void require_finite(double x, const char* who) {
    if (!std::isfinite(x)) throw DomainError(std::string(who) + ": non-finite argument");
}

// Power series for I_m(x); all terms are positive so there is no cancellation.
double bessel_i_series(int m, double x, int max_terms) {
    if (x == 0.0) return m == 0 ? 1.0 : 0.0;
    const double half = 0.5 * x;
    double term = m == 0 ? 1.0 : std::exp(m * std::log(half) - std::lgamma(m + 1.0));
    double sum = term;
    const double q = half * half;
    for (int k = 0; k < 10 * max_terms; ++k) {
        term *= q / ((k + 1.0) * (k + 1.0 + m));
        sum += term;
        if (term <= kSeriesRelTol * sum) return sum;
    }
    throw ConvergenceError("bessel_i: power series did not converge", sum, term);
}

struct K01 {
    double k0;
    double k1;
};

K01 bessel_k01_series(double x) {
    const double y = 0.25 * x * x;
    const double log_half = std::log(0.5 * x);
    const double i0 = bessel_i_series(0, x, 500);
    const double i1 = bessel_i_series(1, x, 500);

    // K0 = -(ln(x/2) + gamma) I0 + sum_{k>=1} H_k y^k / (k!)^2
    // K1 = 1/x + ln(x/2) I1 - (x/4) sum_{k>=0} (H_k + H_{k+1} - 2 gamma) y^k / (k! (k+1)!)
    double s0 = 0.0;
    double s1 = 1.0 - 2.0 * kEulerGamma;  // k = 0: H_0 + H_1 = 1
    double t0 = 1.0;                      // y^k / (k!)^2
    double t1 = 1.0;                      // y^k / (k! (k+1)!)
    double h = 0.0;                       // H_k
    for (int k = 1; k < 200; ++k) {
        t0 *= y / (double(k) * k);
        t1 *= y / (double(k) * (k + 1));
        h += 1.0 / k;
        const double h_next = h + 1.0 / (k + 1);
        const double d0 = h * t0;
        const double d1 = (h + h_next - 2.0 * kEulerGamma) * t1;
        s0 += d0;
        s1 += d1;
        if (std::abs(d0) <= kSeriesRelTol * std::abs(s0) && std::abs(d1) <= kSeriesRelTol * std::abs(s1))
            break;
    }
    return {-(log_half + kEulerGamma) * i0 + s0, 1.0 / x + log_half * i1 - 0.25 * x * s1};
}

// Trapezoidal rule on the integral representation; the integrand is even and
// analytic in a strip, so the error decays like exp(-const / h).
double bessel_k_trapezoid(int m, double x) {
    const double h = std::min(0.125, 0.7 / std::sqrt(x));
    double sum = 0.5 * std::exp(-x);
    for (int j = 1;; ++j) {
        const double t = j * h;
        const double f = std::exp(-x * std::cosh(t)) * std::cosh(m * t);
        sum += f;
        if (f <= 1e-18 * sum) break;
    }
    return h * sum;
}

}  // namespace

void SpecTolerance::validate() const {
    if (!(abs_tol > 0.0)) throw DomainError("SpecTolerance: abs_tol must be positive");
    if (max_terms < 1) throw DomainError("SpecTolerance: max_terms must be >= 1");
}

double erf(double x) {
    require_finite(x, "erf");
    return std::erf(x);
}

std::vector<double> bessel_i_scaled_sequence(double x, int kmax) {
    require_finite(x, "bessel_i_scaled_sequence");
    if (x < 0.0) throw DomainError("bessel_i_scaled_sequence: x must be >= 0");
    if (kmax < 0) throw DomainError("bessel_i_scaled_sequence: kmax must be >= 0");

    std::vector<double> out(static_cast<std::size_t>(kmax) + 1, 0.0);
    if (x == 0.0) {
        out[0] = 1.0;
        return out;
    }
    if (x < 1.0) {
        const double scale = std::exp(-x);
        for (int k = 0; k <= kmax; ++k) {
            out[k] = scale * bessel_i_series(k, x, 500);
            if (out[k] == 0.0) break;
        }
        return out;
    }

    // Miller's algorithm. Start far enough above kmax that the dominant
    // solution has died out, and far enough into the tail that the
    // normalization sum eps_k I_k(x) = e^x is complete.
    const double kd = kmax;
    const int start = static_cast<int>(std::ceil(std::sqrt(kd * kd + 100.0 * x))) + 20;
    constexpr double kBig = 1e250;
    double above = 0.0;
    double cur = 1e-280;
    double norm = 0.0;
    for (int k = start; k >= 1; --k) {
        if (k <= kmax) out[k] = cur;
        norm += 2.0 * cur;
        const double below = (2.0 * k / x) * cur + above;
        above = cur;
        cur = below;
        if (cur > kBig) {
            cur /= kBig;
            above /= kBig;
            norm /= kBig;
            for (int j = k; j <= kmax; ++j) out[j] /= kBig;
        }
    }
    out[0] = cur;
    norm += cur;
    for (double& v : out) v /= norm;
    return out;
}

double bessel_i_scaled(int m, double x, const SpecTolerance& tol) {
    tol.validate();
    require_finite(x, "bessel_i");
    if (m < 0) throw DomainError("bessel_i: order must be >= 0");
    if (x < 0.0) throw DomainError("bessel_i: x must be >= 0");
    if (x <= kSeriesSwitch) return std::exp(-x) * bessel_i_series(m, x, tol.max_terms);
    return bessel_i_scaled_sequence(x, m)[m];
}

double bessel_i(int m, double x, const SpecTolerance& tol) {
    tol.validate();
    require_finite(x, "bessel_i");
    if (m < 0) throw DomainError("bessel_i: order must be >= 0");
    if (x < 0.0) throw DomainError("bessel_i: x must be >= 0");
    if (x <= kSeriesSwitch) return bessel_i_series(m, x, tol.max_terms);
    return std::exp(x) * bessel_i_scaled_sequence(x, m)[m];
}

double bessel_k(int m, double x, const SpecTolerance& tol) {
    tol.validate();
    require_finite(x, "bessel_k");
    if (m < 0) throw DomainError("bessel_k: order must be >= 0");
    if (x <= 0.0) throw DomainError("bessel_k: x must be > 0");

    double k0 = 0.0;
    double k1 = 0.0;
    if (x <= 2.0) {
        const K01 r = bessel_k01_series(x);
        k0 = r.k0;
        k1 = r.k1;
    } else {
        k0 = bessel_k_trapezoid(0, x);
        k1 = bessel_k_trapezoid(1, x);
    }
    if (m == 0) return k0;
    for (int j = 1; j < m; ++j) {
        const double next = k0 + (2.0 * j / x) * k1;
        k0 = k1;
        k1 = next;
    }
    return k1;
}

double carlson_rf(double x, double y, double z) {
    if (std::min({x, y, z}) < 0.0 || std::min({x + y, x + z, y + z}) <= 0.0)
        throw DomainError("carlson_rf: invalid arguments");
    double xt = x, yt = y, zt = z;
    double ave = 0.0, dx = 0.0, dy = 0.0, dz = 0.0;
    for (int it = 0; it < 200; ++it) {
        const double sx = std::sqrt(xt), sy = std::sqrt(yt), sz = std::sqrt(zt);
        const double lambda = sx * (sy + sz) + sy * sz;
        xt = 0.25 * (xt + lambda);
        yt = 0.25 * (yt + lambda);
        zt = 0.25 * (zt + lambda);
        ave = (xt + yt + zt) / 3.0;
        dx = (ave - xt) / ave;
        dy = (ave - yt) / ave;
        dz = (ave - zt) / ave;
        if (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) < 1e-4) break;
    }
    const double e2 = dx * dy - dz * dz;
    const double e3 = dx * dy * dz;
    return (1.0 + (e2 / 24.0 - 0.1 - 3.0 * e3 / 44.0) * e2 + e3 / 14.0) / std::sqrt(ave);
}

double carlson_rd(double x, double y, double z) {
    if (std::min(x, y) < 0.0 || x + y <= 0.0 || z <= 0.0)
        throw DomainError("carlson_rd: invalid arguments");
    constexpr double c1 = 3.0 / 14.0, c2 = 1.0 / 6.0, c3 = 9.0 / 22.0, c4 = 3.0 / 26.0;
    constexpr double c5 = 0.25 * c3, c6 = 1.5 * c4;
    double xt = x, yt = y, zt = z;
    double sum = 0.0, fac = 1.0;
    double ave = 0.0, dx = 0.0, dy = 0.0, dz = 0.0;
    for (int it = 0; it < 200; ++it) {
        const double sx = std::sqrt(xt), sy = std::sqrt(yt), sz = std::sqrt(zt);
        const double lambda = sx * (sy + sz) + sy * sz;
        sum += fac / (sz * (zt + lambda));
        fac *= 0.25;
        xt = 0.25 * (xt + lambda);
        yt = 0.25 * (yt + lambda);
        zt = 0.25 * (zt + lambda);
        ave = 0.2 * (xt + yt + 3.0 * zt);
        dx = (ave - xt) / ave;
        dy = (ave - yt) / ave;
        dz = (ave - zt) / ave;
        if (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) < 1e-4) break;
    }
    const double ea = dx * dy, eb = dz * dz;
    const double ec = ea - eb, ed = ea - 6.0 * eb, ee = ed + ec + ec;
    return 3.0 * sum +
           fac * (1.0 + ed * (-c1 + c5 * ed - c6 * dz * ee) + dz * (c2 * ee + dz * (-c3 * ec + dz * c4 * ea))) /
               (ave * std::sqrt(ave));
}

double ellip_e(double k) {
    if (!(k >= 0.0 && k <= 1.0)) throw DomainError("ellip_e: modulus must lie in [0, 1]");
    if (k == 1.0) return 1.0;
    const double y = (1.0 - k) * (1.0 + k);
    return carlson_rf(0.0, y, 1.0) - (k * k / 3.0) * carlson_rd(0.0, y, 1.0);
}

double gamma_p(double a, double x) {
    if (!(a > 0.0) || !(x >= 0.0) || !std::isfinite(a)) throw DomainError("gamma_p: need a > 0, x >= 0");
    if (x == 0.0) return 0.0;
    if (std::isinf(x)) return 1.0;
    const double log_prefix = -x + a * std::log(x) - std::lgamma(a);
    if (x < a + 1.0) {
        double ap = a, del = 1.0 / a, sum = del;
        for (int n = 0; n < 100000; ++n) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::abs(del) < std::abs(sum) * 1e-17) return sum * std::exp(log_prefix);
        }
        throw ConvergenceError("gamma_p: series did not converge", sum * std::exp(log_prefix), del);
    }
    return 1.0 - gamma_q(a, x);
}

double gamma_q(double a, double x) {
    if (!(a > 0.0) || !(x >= 0.0) || !std::isfinite(a)) throw DomainError("gamma_q: need a > 0, x >= 0");
    if (x == 0.0) return 1.0;
    if (std::isinf(x)) return 0.0;
    if (x < a + 1.0) return 1.0 - gamma_p(a, x);
    // Modified Lentz evaluation of the continued fraction.
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 100000; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
    }
    throw ConvergenceError("gamma_q: continued fraction did not converge", 0.0, 1.0);
}

double goldstein_j(double p, double q, const SpecTolerance& tol) {
    tol.validate();
    require_finite(p, "goldstein_j");
    require_finite(q, "goldstein_j");
    if (p < 0.0 || q < 0.0) throw DomainError("goldstein_j: arguments must be >= 0");
    if (q == 0.0) return 0.0;
    if (p == 0.0) return -std::expm1(-q);

    const double log_p = std::log(p);
    double sum = 0.0;
    double term = 0.0;
    for (int k = 0; k < tol.max_terms; ++k) {
        term = std::exp(k * log_p - std::lgamma(k + 1.0)) * gamma_p(k + 1.0, q);
        sum += term;
        if (k > p && term <= kSeriesRelTol * sum) return sum;
    }
    throw ConvergenceError("goldstein_j: series did not converge within max_terms", sum, term);
}

}  // namespace gtri::specfun
