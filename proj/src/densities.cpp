#include "gausstri/densities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "gausstri/error.hpp"
#include "gausstri/numerics.hpp"

namespace gtri::densities {

namespace {

constexpr double kPi = std::numbers::pi;
// exp(-kExpCut) underflows relative to any prefactor we multiply it by.
constexpr double kExpCut = 745.0;

void require_finite(double v, const char* who) {
    if (!std::isfinite(v)) throw DomainError(std::string(who) + ": non-finite argument");
}

void require_length(double v, const char* who) {
    require_finite(v, who);
    if (v < 0.0) throw DomainError(std::string(who) + ": negative length");
}

void require_base(double c, const char* who) {
    require_finite(c, who);
    if (!(c > 0.0)) throw DomainError(std::string(who) + ": c must be positive");
}

void require_dim(int n, const char* who) {
    if (n < 2) throw DomainError(std::string(who) + ": dimension must be >= 2");
}

void require_pair(AnglePair p, const char* who) {
    require_finite(p.x, who);
    require_finite(p.y, who);
}

// (x+y+z)(-x+y+z)(x-y+z)(x+y-z), or 0 when |x-y| < z < x+y fails.
double heron_or_zero(double x, double y, double z) {
    if (!(std::abs(x - y) < z && z < x + y)) return 0.0;
    return (x + y + z) * (-x + y + z) * (x - y + z) * (x + y - z);
}

struct Sines {
    double sx, sy, sxy;
};

// Sines of an angle pair; false outside the support.
bool sines(AnglePair p, Sines& out) {
    if (!p.in_support()) return false;
    out = {std::sin(p.x), std::sin(p.y), std::sin(p.x + p.y)};
    return out.sx > 0.0 && out.sy > 0.0 && out.sxy > 0.0;
}

}  // namespace

bool AnglePair::in_support() const noexcept { return x > 0.0 && y > 0.0 && x + y < kPi; }

double pinned_sides3(double x, double y, double z) {
    require_length(x, "pinned_sides3");
    require_length(y, "pinned_sides3");
    require_length(z, "pinned_sides3");
    const double d = heron_or_zero(x, y, z);
    if (d <= 0.0) return 0.0;
    return (2.0 / kPi) * x * y * z / std::sqrt(d) * std::exp(-0.5 * (x * x + y * y));
}

double pinned_side_marginal(Side which, double x) {
    require_length(x, "pinned_side_marginal");
    if (x == 0.0) return 0.0;
    if (which == Side::c) return 0.5 * x * std::exp(-0.25 * x * x);
    return x * std::exp(-0.5 * x * x);
}

double pinned_angle_constant(int n) {
    require_dim(n, "pinned_angle_constant");
    return (n - 1) * std::pow(2.0, n - 1) / kPi;
}

double pinned_angles_ndim(int n, AnglePair p) {
    require_dim(n, "pinned_angles_ndim");
    require_pair(p, "pinned_angles_ndim");
    Sines s{};
    if (!sines(p, s)) return 0.0;
    const double num = std::pow(s.sx * s.sy * s.sxy, n - 1);
    const double den = std::pow(s.sx * s.sx + s.sy * s.sy, n);
    return pinned_angle_constant(n) * num / den;
}

double pinned_angle_marginal_g(double x) {
    require_finite(x, "pinned_angle_marginal_g");
    if (!(x > 0.0 && x < kPi)) return 0.0;
    const double cx = std::cos(x);
    const double d = 2.0 - cx * cx;
    return cx / (kPi * d * std::sqrt(d)) * (0.5 * kPi + std::asin(cx / std::numbers::sqrt2)) + 1.0 / (kPi * d);
}

double pinned_angle_cdf_G(double x) {
    require_finite(x, "pinned_angle_cdf_G");
    if (x <= 0.0) return 0.0;
    if (x >= kPi) return 1.0;
    const double cx = std::cos(x);
    return std::sin(x) / (kPi * std::sqrt(2.0 - cx * cx)) * (0.5 * kPi + std::asin(cx / std::numbers::sqrt2)) +
           x / kPi;
}

// Both angle densities below carry the factor 2 that turns the raw
// change-of-variables expression into a probability density: the map from
// the apex (u, v) to (alpha, beta) covers the upper half plane only, and the
// lower half contributes the mirror image.

double staked_angles(double c, AnglePair p) {
    require_base(c, "staked_angles");
    require_pair(p, "staked_angles");
    Sines s{};
    if (!sines(p, s)) return 0.0;
    const double ratio = s.sx / s.sxy;
    const double expo = 0.5 * c * c * ratio * ratio;
    if (expo > kExpCut) return 0.0;
    return (c * c / kPi) * std::exp(-expo) * ratio * (s.sy / (s.sxy * s.sxy));
}

double anchored_angles(double c, AnglePair p) {
    require_base(c, "anchored_angles");
    require_pair(p, "anchored_angles");
    Sines s{};
    if (!sines(p, s)) return 0.0;
    const double sd = std::sin(p.x - p.y);
    const double expo = (c * c / 8.0) * (sd * sd + 4.0 * s.sx * s.sx * s.sy * s.sy) / (s.sxy * s.sxy);
    if (expo > kExpCut) return 0.0;
    return (c * c / kPi) * std::exp(-expo) * (s.sx / s.sxy) * (s.sy / (s.sxy * s.sxy));
}

double staked_sides(double c, double x, double y) {
    require_base(c, "staked_sides");
    require_length(x, "staked_sides");
    require_length(y, "staked_sides");
    const double d = heron_or_zero(x, y, c);
    if (d <= 0.0) return 0.0;
    return (2.0 / kPi) * x * y / std::sqrt(d) * std::exp(-0.5 * x * x);
}

double anchored_sides(double c, double x, double y) {
    require_base(c, "anchored_sides");
    require_length(x, "anchored_sides");
    require_length(y, "anchored_sides");
    const double d = heron_or_zero(x, y, c);
    if (d <= 0.0) return 0.0;
    return (2.0 / kPi) * x * y / std::sqrt(d) * std::exp(c * c / 8.0 - 0.25 * (x * x + y * y));
}

namespace {

// (x + y + t)(t + |x - y|): what is left of the Heron product after the two
// factors that vanish at the edges of the support in t are taken out.
double heron_remainder(double x, double y, double t) { return (x + y + t) * (t + std::abs(x - y)); }

bool inside_closed(double x, double y, double t) { return t >= std::abs(x - y) && t <= x + y; }

}  // namespace

double pinned_sides3_smooth(double x, double y, double z) {
    require_length(x, "pinned_sides3_smooth");
    require_length(y, "pinned_sides3_smooth");
    require_length(z, "pinned_sides3_smooth");
    const double rem = heron_remainder(x, y, z);
    if (!inside_closed(x, y, z) || !(rem > 0.0)) return 0.0;
    return (2.0 / kPi) * x * y * z / std::sqrt(rem) * std::exp(-0.5 * (x * x + y * y));
}

double staked_sides_smooth(double c, double x, double y) {
    require_base(c, "staked_sides_smooth");
    require_length(x, "staked_sides_smooth");
    require_length(y, "staked_sides_smooth");
    const double rem = heron_remainder(x, c, y);
    if (!inside_closed(x, c, y) || !(rem > 0.0)) return 0.0;
    return (2.0 / kPi) * x * y / std::sqrt(rem) * std::exp(-0.5 * x * x);
}

double anchored_sides_smooth(double c, double x, double y) {
    require_base(c, "anchored_sides_smooth");
    require_length(x, "anchored_sides_smooth");
    require_length(y, "anchored_sides_smooth");
    const double rem = heron_remainder(x, c, y);
    if (!inside_closed(x, c, y) || !(rem > 0.0)) return 0.0;
    return (2.0 / kPi) * x * y / std::sqrt(rem) * std::exp(c * c / 8.0 - 0.25 * (x * x + y * y));
}

double rice_density(double x, double nu, double sigma) {
    require_length(x, "rice_density");
    require_length(nu, "rice_density");
    require_finite(sigma, "rice_density");
    if (!(sigma > 0.0)) throw DomainError("rice_density: sigma must be positive");
    if (x == 0.0) return 0.0;
    const double s2 = sigma * sigma;
    const double shift = (x - nu) * (x - nu) / (2.0 * s2);
    if (shift > kExpCut) return 0.0;
    // exp(-(x^2+nu^2)/2s^2) I0(x nu/s^2) = exp(-(x-nu)^2/2s^2) * e^{-z} I0(z)
    return x / s2 * std::exp(-shift) * specfun::bessel_i_scaled(0, x * nu / s2);
}

double staked_side_b_marginal(double x) { return rice_density(x, 1.0, 1.0); }

double anchored_side_marginal(double x) { return rice_density(x, 0.5, 1.0); }

double pure_angle_constant(int n) {
    require_dim(n, "pure_angle_constant");
    return (n - 1) * std::pow(2.0, n - 1) * std::pow(3.0, 0.5 * n) / kPi;
}

double pure_angles_ndim(int n, AnglePair p) {
    require_dim(n, "pure_angles_ndim");
    require_pair(p, "pure_angles_ndim");
    Sines s{};
    if (!sines(p, s)) return 0.0;
    const double num = std::pow(s.sx * s.sy * s.sxy, n - 1);
    const double den = std::pow(s.sx * s.sx + s.sy * s.sy + s.sxy * s.sxy, n);
    return pure_angle_constant(n) * num / den;
}

double angle_density(const FamilySpec& family, AnglePair p) {
    family.validate();
    switch (family.family) {
        case Family::pinned: return pinned_angles_ndim(family.dim, p);
        case Family::staked: return staked_angles(family.c, p);
        case Family::anchored: return anchored_angles(family.c, p);
        case Family::pure: return pure_angles_ndim(family.dim, p);
    }
    throw DomainError("angle_density: unknown family");
}

bool angle_density_conjectured(const FamilySpec& family) noexcept {
    return family.family == Family::pure || (family.family == Family::pinned && family.dim >= 3);
}

namespace {

template <class AngleDensity>
double sides_via_angles(double c, double x, double y, AngleDensity&& f) {
    require_base(c, "sides_via_angles");
    require_length(x, "sides_via_angles");
    require_length(y, "sides_via_angles");
    const auto sides = TriangleSides::make(x, y, c);
    if (!sides) return 0.0;
    const TriangleAngles ang = angles_from_sides(*sides);
    return f(c, AnglePair{ang.alpha(), ang.beta()}) / (x * y);
}

}  // namespace

double staked_sides_via_angles(double c, double x, double y) {
    return sides_via_angles(c, x, y, [](double cc, AnglePair p) { return staked_angles(cc, p); });
}

double anchored_sides_via_angles(double c, double x, double y) {
    return sides_via_angles(c, x, y, [](double cc, AnglePair p) { return anchored_angles(cc, p); });
}

void CorrRiceParams::validate() const {
    if (!(std::abs(rho) < 1.0)) throw DomainError("CorrRiceParams: |rho| must be < 1");
    series.validate();
}

double corr_rice_normalizer(double rho, CorrRiceVariant variant) {
    if (!(std::abs(rho) < 1.0)) throw DomainError("corr_rice_normalizer: |rho| must be < 1");
    const double d = variant == CorrRiceVariant::same_center ? 1.0 + rho : 1.0 - rho;
    return std::exp(-1.0 / (4.0 * d)) / (1.0 - rho * rho);
}

double corr_rice_density(const CorrRiceParams& params, CorrRiceVariant variant, double a, double b) {
    params.validate();
    require_length(a, "corr_rice_density");
    require_length(b, "corr_rice_density");
    if (a == 0.0 || b == 0.0) return 0.0;

    const double rho = params.rho;
    const double s = 1.0 - rho * rho;
    const double d = variant == CorrRiceVariant::same_center ? 1.0 + rho : 1.0 - rho;
    const double z1 = a * b * rho / s;
    const double z2 = a / (2.0 * d);
    const double z3 = b / (2.0 * d);
    const double z1_abs = std::abs(z1);

    // Everything is carried in scaled form e^{-z} I_k(z); the exponential
    // factors are collected into one exponent that stays <= 0 for rho >= 0.
    const double log_pref = std::log(corr_rice_normalizer(rho, variant)) + std::log(a * b) -
                            (a * a + b * b) / (2.0 * s) + z1_abs + z2 + z3;

    // e^{-z} I_k(z) is negligible once k exceeds ~10 sqrt(z); the product of
    // three such factors is bounded by the smallest.
    auto reach = [](double z) { return static_cast<int>(std::ceil(10.0 * std::sqrt(z))) + 30; };
    const int needed = std::min({reach(z1_abs), reach(z2), reach(z3)});
    const int kmax = std::min(needed, params.series.max_terms - 1);
    const std::vector<double> i1 = specfun::bessel_i_scaled_sequence(z1_abs, kmax);
    const std::vector<double> i2 = specfun::bessel_i_scaled_sequence(z2, kmax);
    const std::vector<double> i3 = specfun::bessel_i_scaled_sequence(z3, kmax);

    const bool flip_z1 = z1 < 0.0;
    const bool alternate = variant == CorrRiceVariant::opposite_center;
    auto term = [&](int k) {
        if (k > kmax) return 0.0;
        double t = i1[k] * i2[k] * i3[k];
        if ((k % 2 == 1) && (flip_z1 != alternate)) t = -t;
        return t;
    };
    const double sum = numerics::sum_bessel_series(term, params.series);
    if (!alternate && !flip_z1) return std::max(0.0, std::exp(log_pref) * sum);

    // Signed terms can cancel to far below the size of the largest term
    // (opposite centres with rho near 1). Then switch to the addition
    // theorem: sum_k eps_k I_k(u) I_k(v) I_k(w)
    //   = (1/pi) int_0^pi e^{w cos t} I0(sqrt(u^2 + v^2 + 2 u v cos t)) dt.
    const double magnitude =
        numerics::sum_bessel_series([&](int k) { return std::abs(term(k)); }, params.series);
    if (std::abs(sum) >= 1e-6 * magnitude) return std::max(0.0, std::exp(log_pref) * sum);
    const double u = flip_z1 != alternate ? -z1_abs : z1_abs;
    const double log_base = std::log(corr_rice_normalizer(rho, variant)) + std::log(a * b) - (a * a + b * b) / (2.0 * s);
    numerics::QuadConfig cfg;
    cfg.abs_tol = 1e-300;
    cfg.rel_tol = 1e-11;
    const double value = numerics::integrate_1d(
                             [&](double t) {
                                 const double c = std::cos(t);
                                 const double r = std::sqrt(std::max(0.0, u * u + z2 * z2 + 2.0 * u * z2 * c));
                                 return std::exp(log_base + z3 * c + r) * specfun::bessel_i_scaled(0, r);
                             },
                             0.0, std::numbers::pi, cfg)
                             .value;
    return std::max(0.0, value / std::numbers::pi);
}

}  // namespace gtri::densities
