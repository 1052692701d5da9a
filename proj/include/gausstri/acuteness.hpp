#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "gausstri/model.hpp"
#include "gausstri/montecarlo.hpp"
#include "gausstri/numerics.hpp"

namespace gtri::acuteness {

/// Exact value p + q * w with rational p, q and w one of 1, 1/pi, 1/sqrt 2,
/// sqrt(3)/pi. Kept symbolic so the table is never rounded.
struct ExactValue {
    enum class Unit { one, inv_pi, inv_sqrt2, sqrt3_over_pi };

    long p_num = 0;
    long p_den = 1;
    long q_num = 0;
    long q_den = 1;
    Unit unit = Unit::one;

    double value() const noexcept;
    /// e.g. "3/2 - 5/(4*sqrt(2))".
    std::string to_string() const;
};

/// Obtuseness probability of the pinned family in R^n, n = 2..8.
ExactValue pinned_table(int n);
/// Obtuseness probability of the pure family in R^n, n = 2..8, as printed
/// in the published table.
ExactValue pure_table(int n);

struct AcuteOptions {
    /// 0 skips the Monte Carlo path.
    std::uint64_t mc_samples = 1'000'000;
    std::uint64_t seed = 20141024;
    mc::McConfig mc{};
    numerics::QuadConfig quad{};
    /// Allowed |closed - quadrature|.
    double quad_tolerance = 1e-6;
    /// MC deviations beyond this many standard errors from a table value
    /// set table_discrepancy.
    double discrepancy_sigmas = 5.0;
};

struct AcutenessReport {
    FamilySpec family;
    std::optional<double> p_obtuse_closed;
    std::optional<numerics::QuadResult> p_obtuse_quad;
    std::optional<mc::Estimate> p_obtuse_mc;
    std::optional<ExactValue> table_value;
    /// The density used by the quadrature path is a conjecture.
    bool conjectured = false;
    /// MC disagrees with the table value by more than discrepancy_sigmas.
    bool table_discrepancy = false;
    /// Tolerance applied to closed vs quadrature.
    double quad_tolerance = 0.0;
    /// Closed (or table) value vs quadrature within quad_tolerance.
    bool quad_match = true;
    /// Closed (or table) value vs MC within 3 stderr.
    bool mc_match = true;

    double p_acute_closed() const { return 1.0 - p_obtuse_closed.value(); }
};

/// Planar pinned: 3/2 - 1/sqrt 2.
AcutenessReport pinned_obtuse_2d(const AcuteOptions& opt = {});
/// Pinned in R^n, n = 3..8; quadrature integrates the conjectured density.
AcutenessReport pinned_obtuse_ndim(int n, const AcuteOptions& opt = {});
/// Staked, c = 1: 1 - (1/2)[-1 + erf(1/sqrt 2) + e^{-1/4} I0(1/4)].
AcutenessReport staked_obtuse(const AcuteOptions& opt = {});
/// Anchored, c = 1: 2 - e^{-1/8} - erf(1/(2 sqrt 2)).
AcutenessReport anchored_obtuse(const AcuteOptions& opt = {});
/// Pure in R^n, n = 2..8; quadrature integrates the conjectured density.
AcutenessReport pure_obtuse_ndim(int n, const AcuteOptions& opt = {});

/// Integral of an angle density over {some angle > pi/2}, as the sum of the
/// three regions alpha > pi/2, beta > pi/2, gamma > pi/2.
numerics::QuadResult obtuse_region_integral(const numerics::Integrand2D& density,
                                            const numerics::QuadConfig& quad = {});

/// Probability that the Gaussian apex falls in the strip between the fixed
/// vertices (staked: 0 < u < 1; anchored: |u| < 1/2).
double strip_probability(Family family = Family::staked);
/// Probability that it falls in the disk with the fixed side as diameter.
double circle_probability(Family family = Family::staked);
/// Staked circle probability as e^{-1/8} J(1/8, 1/8).
double circle_probability_goldstein();

/// Both probabilities by direct 2D quadrature of the Gaussian density
/// (Cartesian for the strip, polar about the disk centre for the circle).
numerics::QuadResult strip_probability_quad(Family family = Family::staked, const numerics::QuadConfig& quad = {});
numerics::QuadResult circle_probability_quad(Family family = Family::staked, const numerics::QuadConfig& quad = {});

}  // namespace gtri::acuteness
