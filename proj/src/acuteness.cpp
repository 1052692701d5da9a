#include "gausstri/acuteness.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "gausstri/densities.hpp"
#include "gausstri/error.hpp"
#include "gausstri/specfun.hpp"

namespace gtri::acuteness {

namespace {

using numerics::QuadConfig;
using numerics::QuadResult;
using std::numbers::pi;
using Unit = ExactValue::Unit;

constexpr double kHalfPi = pi / 2.0;

QuadResult add(const QuadResult& x, const QuadResult& y) {
    return {x.value + y.value, x.err_est + y.err_est, x.evaluations + y.evaluations};
}

void check_table_dim(int n, const char* who) {
    if (n < 2 || n > 8) throw DomainError(std::string(who) + ": n must be in 2..8");
}

mc::Estimate obtuse_mc(const FamilySpec& family, const AcuteOptions& opt) {
    return mc::estimate_probability(
        family, [](const Triangle& t) { return classify(t.angles) == Shape::obtuse; }, opt.mc_samples, opt.seed,
        opt.mc);
}

// Shared tail of every report: quadrature and MC against the reference.
AcutenessReport finish(AcutenessReport r, double reference, const AcuteOptions& opt) {
    r.quad_tolerance = opt.quad_tolerance;
    if (r.p_obtuse_quad) r.quad_match = std::abs(r.p_obtuse_quad->value - reference) <= opt.quad_tolerance;
    if (opt.mc_samples > 0) {
        r.p_obtuse_mc = obtuse_mc(r.family, opt);
        const double dev = std::abs(r.p_obtuse_mc->value - reference);
        r.mc_match = dev <= 3.0 * r.p_obtuse_mc->std_error;
        if (r.table_value) r.table_discrepancy = dev > opt.discrepancy_sigmas * r.p_obtuse_mc->std_error;
    }
    return r;
}

std::string fraction(long num, long den) {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace

double ExactValue::value() const noexcept {
    double w = 0.0;
    switch (unit) {
        case Unit::one: w = 1.0; break;
        case Unit::inv_pi: w = std::numbers::inv_pi; break;
        case Unit::inv_sqrt2: w = 1.0 / std::numbers::sqrt2; break;
        case Unit::sqrt3_over_pi: w = std::numbers::sqrt3 * std::numbers::inv_pi; break;
    }
    return static_cast<double>(p_num) / static_cast<double>(p_den) +
           static_cast<double>(q_num) / static_cast<double>(q_den) * w;
}

std::string ExactValue::to_string() const {
    std::ostringstream os;
    if (q_num == 0) {
        os << fraction(p_num, p_den);
        return os.str();
    }
    if (p_num != 0) os << fraction(p_num, p_den) << (q_num < 0 ? " - " : " + ");
    else if (q_num < 0) os << "-";
    const long q = std::abs(q_num);
    switch (unit) {
        case Unit::one: os << fraction(q, q_den); break;
        case Unit::inv_pi:
            os << q << "/" << (q_den == 1 ? std::string("pi") : "(" + std::to_string(q_den) + "*pi)");
            break;
        case Unit::inv_sqrt2:
            os << q << "/" << (q_den == 1 ? std::string("sqrt(2)") : "(" + std::to_string(q_den) + "*sqrt(2))");
            break;
        case Unit::sqrt3_over_pi:
            os << (q == 1 ? std::string() : std::to_string(q) + "*") << "sqrt(3)/"
               << (q_den == 1 ? std::string("pi") : "(" + std::to_string(q_den) + "*pi)");
            break;
    }
    return os.str();
}

ExactValue pinned_table(int n) {
    check_table_dim(n, "pinned_table");
    switch (n) {
        case 2: return {3, 2, -1, 1, Unit::inv_sqrt2};
        case 3: return {1, 1, -1, 1, Unit::inv_pi};
        case 4: return {3, 2, -5, 4, Unit::inv_sqrt2};
        case 5: return {1, 1, -4, 3, Unit::inv_pi};
        case 6: return {3, 2, -43, 32, Unit::inv_sqrt2};
        case 7: return {1, 1, -22, 15, Unit::inv_pi};
        default: return {3, 2, -177, 128, Unit::inv_sqrt2};
    }
}

ExactValue pure_table(int n) {
    check_table_dim(n, "pure_table");
    switch (n) {
        case 2: return {3, 4};
        case 3: return {1, 1, -3, 4, Unit::sqrt3_over_pi};
        case 4: return {17, 32};
        case 5: return {1, 1, -9, 8, Unit::sqrt3_over_pi};
        case 6: return {353, 512};
        case 7: return {1, 1, -27, 20, Unit::sqrt3_over_pi};
        default: return {867, 4096};
    }
}

QuadResult obtuse_region_integral(const numerics::Integrand2D& density, const QuadConfig& quad) {
    // At most one angle can be obtuse, so the three regions are disjoint.
    const numerics::VerticalRegion alpha_big{kHalfPi, pi, [](double) { return 0.0; },
                                             [](double x) { return pi - x; }};
    const numerics::VerticalRegion gamma_big{0.0, kHalfPi, [](double) { return 0.0; },
                                             [](double x) { return kHalfPi - x; }};
    const QuadResult a = numerics::integrate_2d(density, alpha_big, quad);
    // beta > pi/2 is the alpha region with the arguments swapped.
    const QuadResult b = numerics::integrate_2d([&](double x, double y) { return density(y, x); }, alpha_big, quad);
    const QuadResult g = numerics::integrate_2d(density, gamma_big, quad);
    return add(add(a, b), g);
}

AcutenessReport pinned_obtuse_2d(const AcuteOptions& opt) {
    AcutenessReport r;
    r.family = {Family::pinned, 2, 1.0};
    r.p_obtuse_closed = 1.5 - 1.0 / std::numbers::sqrt2;
    r.table_value = pinned_table(2);
    r.p_obtuse_quad =
        obtuse_region_integral([](double x, double y) { return densities::pinned_angles_ndim(2, {x, y}); }, opt.quad);
    return finish(r, *r.p_obtuse_closed, opt);
}

AcutenessReport pinned_obtuse_ndim(int n, const AcuteOptions& opt) {
    if (n < 3 || n > 8) throw DomainError("pinned_obtuse_ndim: n must be in 3..8");
    AcutenessReport r;
    r.family = {Family::pinned, n, 1.0};
    r.conjectured = true;
    r.table_value = pinned_table(n);
    r.p_obtuse_quad =
        obtuse_region_integral([n](double x, double y) { return densities::pinned_angles_ndim(n, {x, y}); }, opt.quad);
    return finish(r, r.table_value->value(), opt);
}

AcutenessReport staked_obtuse(const AcuteOptions& opt) {
    AcutenessReport r;
    r.family = {Family::staked, 2, 1.0};
    const double acute = 0.5 * (-1.0 + specfun::erf(1.0 / std::numbers::sqrt2) + specfun::bessel_i_scaled(0, 0.25));
    r.p_obtuse_closed = 1.0 - acute;
    r.p_obtuse_quad =
        obtuse_region_integral([](double x, double y) { return densities::staked_angles(1.0, {x, y}); }, opt.quad);
    return finish(r, *r.p_obtuse_closed, opt);
}

AcutenessReport anchored_obtuse(const AcuteOptions& opt) {
    AcutenessReport r;
    r.family = {Family::anchored, 2, 1.0};
    const double acute = -1.0 + std::exp(-0.125) + specfun::erf(1.0 / (2.0 * std::numbers::sqrt2));
    r.p_obtuse_closed = 1.0 - acute;
    r.p_obtuse_quad =
        obtuse_region_integral([](double x, double y) { return densities::anchored_angles(1.0, {x, y}); }, opt.quad);
    return finish(r, *r.p_obtuse_closed, opt);
}

AcutenessReport pure_obtuse_ndim(int n, const AcuteOptions& opt) {
    check_table_dim(n, "pure_obtuse_ndim");
    AcutenessReport r;
    r.family = {Family::pure, n, 1.0};
    r.conjectured = true;
    r.table_value = pure_table(n);
    r.p_obtuse_quad =
        obtuse_region_integral([n](double x, double y) { return densities::pure_angles_ndim(n, {x, y}); }, opt.quad);
    return finish(r, r.table_value->value(), opt);
}

namespace {

void check_fixed_base(Family family, const char* who) {
    if (family != Family::staked && family != Family::anchored) {
        throw DomainError(std::string(who) + ": only staked and anchored triangles have a fixed base");
    }
}

double gauss(double t) { return std::exp(-0.5 * t * t) / std::sqrt(2.0 * pi); }

}  // namespace

double strip_probability(Family family) {
    check_fixed_base(family, "strip_probability");
    if (family == Family::staked) return 0.5 * specfun::erf(1.0 / std::numbers::sqrt2);
    return specfun::erf(1.0 / (2.0 * std::numbers::sqrt2));
}

double circle_probability(Family family) {
    check_fixed_base(family, "circle_probability");
    if (family == Family::staked) return 0.5 * (1.0 - specfun::bessel_i_scaled(0, 0.25));
    return 1.0 - std::exp(-0.125);
}

double circle_probability_goldstein() { return std::exp(-0.125) * specfun::goldstein_j(0.125, 0.125); }

QuadResult strip_probability_quad(Family family, const QuadConfig& quad) {
    check_fixed_base(family, "strip_probability_quad");
    const double u0 = family == Family::staked ? 0.0 : -0.5;
    // The integrand is even in v, so integrate v > 0 and double.
    QuadResult r = numerics::integrate_2d([](double u, double v) { return 2.0 * gauss(u) * gauss(v); },
                                          numerics::Rectangle{u0, u0 + 1.0, 0.0, quad.cutoff()}, quad);
    return r;
}

QuadResult circle_probability_quad(Family family, const QuadConfig& quad) {
    check_fixed_base(family, "circle_probability_quad");
    const double centre = family == Family::staked ? 0.5 : 0.0;
    // Polar about the centre; the upper half-disk is doubled.
    return numerics::integrate_2d(
        [centre](double r, double t) { return 2.0 * r * gauss(centre + r * std::cos(t)) * gauss(r * std::sin(t)); },
        numerics::Rectangle{0.0, 0.5, 0.0, pi}, quad);
}

}  // namespace gtri::acuteness
