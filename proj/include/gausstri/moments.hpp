#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gausstri/montecarlo.hpp"
#include "gausstri/numerics.hpp"

namespace gtri::moments {

inline constexpr std::uint64_t kDefaultSeed = 20141024;

struct MomentOptions {
    /// Monte Carlo sample count; 0 skips the Monte Carlo path.
    std::uint64_t mc_samples = 1'000'000;
    std::uint64_t seed = kDefaultSeed;
    mc::McConfig mc{};
    numerics::QuadConfig quad{};
    /// Allowed |closed form - quadrature|.
    double quad_tolerance = 1e-6;
};

/// One moment evaluated along up to three independent paths.
struct MomentReport {
    std::string name;
    std::optional<double> closed_form;
    std::optional<numerics::QuadResult> quadrature;
    std::optional<mc::Estimate> mc;
    /// Largest tolerance that was applied: max(quad_tolerance, 3 stderr).
    double tolerance = 0.0;
    bool consistent = false;

    /// Fills `tolerance` and `consistent`: closed vs quadrature within
    /// quad_tol, closed (or quadrature) vs Monte Carlo within 3 stderr.
    void check(double quad_tol);
};

/// E(alpha), E(gamma), E(alpha^2), E(gamma^2), E(alpha beta), E(alpha gamma)
/// and the correlations rho(alpha, beta), rho(alpha, gamma) for planar
/// pinned triangles.
std::vector<MomentReport> pinned_angle_moments(const MomentOptions& opt = {});

/// E(ab) = pi/2 and E(ac) for planar pinned triangles, with quadrature over
/// the trivariate side density.
///
/// B and A - B are Gaussian vectors with componentwise correlation
/// -1/sqrt 2, which gives E(ac) = sqrt 2 (2 E(k) - K(k)/2) at modulus
/// k = 1/sqrt 2, about 2.5091690. The often quoted sqrt(2 pi) = 2.5066283 is
/// kept as pinned_E_ac_published() and reported alongside.
std::vector<MomentReport> pinned_side_cross_moments(const MomentOptions& opt = {});

double pinned_E_ac_closed();
double pinned_E_ac_published();

/// Staked E(ab) with c = 1. The closed_form slot holds the single integral
/// (2/pi) int x^2 (x+1) exp(-x^2/2) E(2 sqrt(x)/(x+1)) dx, where E takes the
/// modulus; the quadrature slot holds the direct double integral over the
/// strip |x - y| < 1 < x + y.
MomentReport staked_E_ab(const MomentOptions& opt = {});

/// Inner integral int_{|x-1|}^{x+1} y^2 / sqrt(delta(x, y, 1)) dy by the
/// arcsine substitution, and its elliptic closed form (x+1) E(2 sqrt(x)/(x+1)).
numerics::QuadResult staked_inner_integral(double x, const numerics::QuadConfig& quad = {});
double staked_inner_integral_elliptic(double x);

/// Anchored E(ab) with c = 1: closed form
/// (I0 K0 + 8 I0 K1 - 8 I1 K0 + I1 K1)(1/16) / 64, with the quadrature slot
/// holding the factored u = x + y, v = y - x product of 1D integrals.
MomentReport anchored_E_ab(const MomentOptions& opt = {});

/// Closed-form value of the anchored E(ab).
double anchored_E_ab_closed();

/// The three-term u, v decomposition of the anchored E(ab), by quadrature.
numerics::QuadResult anchored_E_ab_uv(const numerics::QuadConfig& quad = {});

struct RiceMoments {
    numerics::QuadResult mean;
    numerics::QuadResult mean_square;
};

/// Mean and mean square of Rice(nu, sigma) by quadrature of x f(x), x^2 f(x).
RiceMoments rice_mean_meansq(double nu, double sigma, const numerics::QuadConfig& quad = {});

/// Closed-form Rice means for the staked (nu = 1) and anchored (nu = 1/2)
/// side marginals with c = 1.
double staked_rice_mean_closed();
double anchored_rice_mean_closed();

/// Mean and mean square of the staked b and anchored a marginals: closed
/// form, quadrature and Monte Carlo.
std::vector<MomentReport> rice_marginal_moments(const MomentOptions& opt = {});

enum class Method { quadrature, mc };

/// E f(triangle) for a family. Quadrature needs a closed density: planar
/// pinned (trivariate side density), planar staked and anchored (angle
/// density). Other families throw DomainError for Method::quadrature.
MomentReport generic_moment(const FamilySpec& family, const mc::TriangleFunction& f, Method method,
                            const MomentOptions& opt = {}, std::string name = "generic");

}  // namespace gtri::moments
