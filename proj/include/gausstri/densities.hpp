#pragma once

#include "gausstri/model.hpp"
#include "gausstri/specfun.hpp"

namespace gtri::densities {

// Every density here returns exactly 0 outside its support and throws
// DomainError for non-finite input or negative lengths.

/// Argument pair for the bivariate angle densities.
struct AnglePair {
    double x;
    double y;

    bool in_support() const noexcept;
};

/// Pinned planar triangle, joint density of (a, b, c); support |x-y| < z < x+y.
double pinned_sides3(double x, double y, double z);

enum class Side { a, b, c };

/// Pinned side marginals: a and b are Rayleigh(1), c is Rayleigh(sqrt 2).
double pinned_side_marginal(Side which, double x);

/// Normalizing constant (n-1) 2^(n-1) / pi of the pinned angle density.
double pinned_angle_constant(int n);

/// Pinned angle density in R^n:
/// C_n [sin x sin y sin(x+y)]^(n-1) / (sin^2 x + sin^2 y)^n.
/// Proven for n = 2, conjectured for n >= 3.
double pinned_angles_ndim(int n, AnglePair p);

/// Marginal density of alpha for planar pinned triangles (closed form).
double pinned_angle_marginal_g(double x);

/// CDF of alpha for planar pinned triangles (closed form).
double pinned_angle_cdf_G(double x);

/// Staked angle density, already doubled to integrate to one:
/// (c^2/pi) exp(-(c^2/2) sin^2 a / sin^2(a+b)) sin a sin b / sin^3(a+b).
double staked_angles(double c, AnglePair p);

/// Anchored angle density, likewise doubled.
double anchored_angles(double c, AnglePair p);

/// Staked side density (2/pi) x y exp(-x^2/2) / sqrt(delta) on |x-y| < c < x+y.
double staked_sides(double c, double x, double y);

/// Anchored side density (2 e^{c^2/8} / pi) x y exp(-(x^2+y^2)/4) / sqrt(delta).
double anchored_sides(double c, double x, double y);

/// Smooth parts of the side densities. Each side density equals
/// smooth / sqrt((t - lo)(hi - t)) in its last argument t, with
/// lo = |x - y|, hi = x + y for pinned_sides3 (t = z) and lo = |x - c|,
/// hi = x + c for the staked and anchored side densities (t = y). Zero
/// outside [lo, hi].
double pinned_sides3_smooth(double x, double y, double z);
double staked_sides_smooth(double c, double x, double y);
double anchored_sides_smooth(double c, double x, double y);

/// Rice density (x/s^2) exp(-(x^2+nu^2)/(2 s^2)) I0(x nu / s^2), x > 0.
double rice_density(double x, double nu, double sigma);

/// Marginal of b for staked triangles with c = 1: Rice(nu = 1, sigma = 1).
double staked_side_b_marginal(double x);

/// Marginal of a (or b) for anchored triangles with c = 1: Rice(1/2, 1).
double anchored_side_marginal(double x);

/// Normalizing constant (n-1) 2^(n-1) 3^(n/2) / pi of the pure angle density.
double pure_angle_constant(int n);

/// Conjectured pure-triangle angle density in R^n:
/// C~_n [sin x sin y sin(x+y)]^(n-1) / (sin^2 x + sin^2 y + sin^2(x+y))^n.
double pure_angles_ndim(int n, AnglePair p);

/// Bivariate angle density for a family, with the family's own support.
double angle_density(const FamilySpec& family, AnglePair p);

/// True when the angle density of `family` is a conjecture rather than a
/// derived result (pinned with n >= 3, and every pure case).
bool angle_density_conjectured(const FamilySpec& family) noexcept;

/// Side densities re-expressed through the angle densities: the map
/// (alpha, beta) -> (a, b) at fixed c has Jacobian determinant a b, so
/// f_sides(a, b) = f_angles(alpha(a, b), beta(a, b)) / (a b).
double staked_sides_via_angles(double c, double x, double y);
double anchored_sides_via_angles(double c, double x, double y);

/// Parameters of the correlated bivariate Rice densities.
struct CorrRiceParams {
    double rho = 0.0;
    specfun::SpecTolerance series{};

    void validate() const;
};

enum class CorrRiceVariant {
    /// Both distances measured from (1/2, 0); weights I_k(a / (2(1+rho))).
    same_center,
    /// Distances from (-1/2, 0) and (1/2, 0); alternating weights
    /// (-1)^k I_k(a / (2(1-rho))).
    opposite_center,
};

/// Normalizer Omega (same_center) or Omega-bar (opposite_center).
double corr_rice_normalizer(double rho, CorrRiceVariant variant);

/// Joint density of correlated Rice distances, summed as a Bessel series.
/// Throws ConvergenceError when the series needs more than max_terms terms.
double corr_rice_density(const CorrRiceParams& params, CorrRiceVariant variant, double a, double b);

}  // namespace gtri::densities
