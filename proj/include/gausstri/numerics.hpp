#pragma once

#include <functional>
#include <optional>
#include <variant>

#include "gausstri/specfun.hpp"

namespace gtri::numerics {

struct QuadResult {
    double value = 0.0;
    double err_est = 0.0;
    long evaluations = 0;
};

struct QuadConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_depth = 40;
    /// Upper limit used in place of infinity for Gaussian-weighted
    /// integrands. When unset, the smallest R (on a 0.5 grid) with
    /// exp(-R^2/4) R^4 < abs_tol / 100 is used.
    std::optional<double> truncation_radius = 14.0;

    void validate() const;
    double cutoff() const;
    /// Copy with both tolerances multiplied by `factor`.
    QuadConfig tightened(double factor) const;
};

using Integrand1D = std::function<double(double)>;
using Integrand2D = std::function<double(double, double)>;

/// Globally adaptive 21-point Gauss-Kronrod quadrature on [lo, hi].
///
/// Throws ConvergenceError (carrying the best estimate) if a segment would
/// have to be bisected beyond max_depth.
QuadResult integrate_1d(const Integrand1D& f, double lo, double hi, const QuadConfig& cfg = {});

/// int_lo^cutoff f, for integrands with Gaussian decay.
QuadResult integrate_to_cutoff(const Integrand1D& f, double lo, const QuadConfig& cfg = {});

struct Rectangle {
    double x0, x1, y0, y1;
};

/// {x > 0, y > 0, x + y < pi}, mapped to the unit square by
/// (x, s) -> (x, (pi - x) s) with Jacobian (pi - x).
struct AngleSimplex {};

/// {x0 < x < x1, y_lo(x) < y < y_hi(x)}, mapped the same way.
struct VerticalRegion {
    double x0, x1;
    std::function<double(double)> y_lo;
    std::function<double(double)> y_hi;
};

using Region = std::variant<Rectangle, AngleSimplex, VerticalRegion>;

/// Iterated adaptive quadrature; the inner integrals run at a tenth of the
/// outer tolerance.
QuadResult integrate_2d(const Integrand2D& f, const Region& region, const QuadConfig& cfg = {});

/// int h(y) / sqrt((y - y_lo)(y_hi - y)) dy over (y_lo, y_hi), via
/// y = m + r sin t. Both endpoint singularities disappear: the transformed
/// integrand is h(m + r sin t) on (-pi/2, pi/2).
///
/// With a window [w0, w1], only the part of (y_lo, y_hi) inside the window
/// is integrated.
QuadResult integrate_sqrt_singular(const Integrand1D& h, double y_lo, double y_hi, const QuadConfig& cfg = {},
                                   std::optional<std::pair<double, double>> window = std::nullopt);

/// sum_k eps_k term(k) with eps_0 = 1, eps_k = 2 (k > 0).
///
/// Stops once |eps_k term(k)| <= abs_tol * |partial sum| for three
/// consecutive k; throws ConvergenceError after max_terms terms.
double sum_bessel_series(const std::function<double(int)>& term, const specfun::SpecTolerance& cfg = {});

}  // namespace gtri::numerics
