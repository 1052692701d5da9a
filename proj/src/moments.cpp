#include "gausstri/moments.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "gausstri/densities.hpp"
#include "gausstri/error.hpp"
#include "gausstri/specfun.hpp"

namespace gtri::moments {

namespace {

using numerics::QuadConfig;
using numerics::QuadResult;
using std::numbers::pi;

const double kLn2 = std::numbers::ln2;

QuadResult add(const QuadResult& x, const QuadResult& y) {
    return {x.value + y.value, x.err_est + y.err_est, x.evaluations + y.evaluations};
}

// E f(alpha, beta) under the planar pinned angle density.
QuadResult pinned_angle_expectation(const std::function<double(double, double)>& f, const QuadConfig& quad) {
    return numerics::integrate_2d(
        [&](double x, double y) {
            const double d = densities::pinned_angles_ndim(2, {x, y});
            return d == 0.0 ? 0.0 : d * f(x, y);
        },
        numerics::AngleSimplex{}, quad);
}

// E g(a, b, c) under the pinned trivariate side density; the z integral
// carries the inverse-square-root edges and goes through the arcsine map.
QuadResult pinned_side_expectation(const std::function<double(double, double, double)>& g, const QuadConfig& quad) {
    const double r = quad.cutoff();
    const QuadConfig inner = quad.tightened(0.01);
    return numerics::integrate_2d(
        [&](double x, double y) {
            if (x <= 0.0 || y <= 0.0) return 0.0;
            return numerics::integrate_sqrt_singular(
                       [&](double z) { return densities::pinned_sides3_smooth(x, y, z) * g(x, y, z); },
                       std::abs(x - y), x + y, inner)
                .value;
        },
        numerics::Rectangle{0.0, r, 0.0, r}, quad);
}

}  // namespace

void MomentReport::check(double quad_tol) {
    if (!closed_form && !quadrature && !mc) throw DomainError("MomentReport: no evaluation path");
    tolerance = 0.0;
    consistent = true;
    if (closed_form && quadrature) {
        tolerance = quad_tol;
        consistent = consistent && std::abs(*closed_form - quadrature->value) <= quad_tol;
    }
    if (mc) {
        const std::optional<double> ref =
            closed_form ? closed_form : (quadrature ? std::optional<double>(quadrature->value) : std::nullopt);
        const double band = 3.0 * mc->std_error;
        tolerance = std::max(tolerance, band);
        if (ref) consistent = consistent && std::abs(*ref - mc->value) <= band;
    }
}

std::vector<MomentReport> pinned_angle_moments(const MomentOptions& opt) {
    struct Item {
        const char* name;
        double closed;
        std::function<double(double, double)> f;
    };
    const double l2 = kLn2 * kLn2;
    const std::array<Item, 6> items{{
        {"E_alpha", pi / 4.0, [](double x, double) { return x; }},
        {"E_gamma", pi / 2.0, [](double x, double y) { return pi - x - y; }},
        {"E_alpha2", 5.0 * pi * pi / 48.0 + 0.25 * l2, [](double x, double) { return x * x; }},
        {"E_gamma2", pi * pi / 3.0,
         [](double x, double y) {
             const double g = pi - x - y;
             return g * g;
         }},
        {"E_alpha_beta", pi * pi / 16.0 - 0.25 * l2, [](double x, double y) { return x * y; }},
        {"E_alpha_gamma", pi * pi / 12.0, [](double x, double y) { return x * (pi - x - y); }},
    }};

    std::vector<mc::Estimate> est;
    if (opt.mc_samples > 0) {
        std::vector<mc::TriangleFunction> fs;
        for (const auto& it : items) {
            fs.push_back([f = it.f](const Triangle& t) { return f(t.angles.alpha(), t.angles.beta()); });
        }
        est = mc::estimate_moments({Family::pinned, 2}, fs, opt.mc_samples, opt.seed, opt.mc);
    }

    std::vector<MomentReport> out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        MomentReport r;
        r.name = items[i].name;
        r.closed_form = items[i].closed;
        r.quadrature = pinned_angle_expectation(items[i].f, opt.quad);
        if (!est.empty()) r.mc = est[i];
        r.check(opt.quad_tolerance);
        out.push_back(std::move(r));
    }

    // Correlations from the first and second moments of each path.
    auto rho = [](double ea, double eg, double ea2, double eg2, double cross, bool with_gamma) {
        const double va = ea2 - ea * ea;
        if (!with_gamma) return (cross - ea * ea) / va;
        return (cross - ea * eg) / std::sqrt(va * (eg2 - eg * eg));
    };
    auto q = [&](std::size_t i) { return out[i].quadrature->value; };
    auto c = [&](std::size_t i) { return *out[i].closed_form; };
    for (const bool with_gamma : {false, true}) {
        MomentReport r;
        r.name = with_gamma ? "rho_alpha_gamma" : "rho_alpha_beta";
        const std::size_t k = with_gamma ? 5 : 4;
        r.closed_form = rho(c(0), c(1), c(2), c(3), c(k), with_gamma);
        const double qv = rho(q(0), q(1), q(2), q(3), q(k), with_gamma);
        double err = 0.0;
        for (std::size_t i : {std::size_t{0}, std::size_t{1}, std::size_t{2}, std::size_t{3}, k}) {
            err += out[i].quadrature->err_est;
        }
        r.quadrature = QuadResult{qv, 10.0 * err, 0};
        r.check(opt.quad_tolerance);
        out.push_back(std::move(r));
    }
    return out;
}

double pinned_E_ac_closed() {
    // K(k) = RF(0, 1 - k^2, 1).
    return std::numbers::sqrt2 *
           (2.0 * specfun::ellip_e(1.0 / std::numbers::sqrt2) - 0.5 * specfun::carlson_rf(0.0, 0.5, 1.0));
}

double pinned_E_ac_published() { return std::sqrt(2.0 * pi); }

std::vector<MomentReport> pinned_side_cross_moments(const MomentOptions& opt) {
    std::vector<MomentReport> out(2);
    out[0].name = "E_ab";
    out[0].closed_form = pi / 2.0;
    out[0].quadrature = pinned_side_expectation([](double x, double y, double) { return x * y; }, opt.quad);
    out[1].name = "E_ac";
    out[1].closed_form = pinned_E_ac_closed();
    out[1].quadrature = pinned_side_expectation([](double x, double, double z) { return x * z; }, opt.quad);
    if (opt.mc_samples > 0) {
        const std::array<mc::TriangleFunction, 2> fs{
            [](const Triangle& t) { return t.sides.a() * t.sides.b(); },
            [](const Triangle& t) { return t.sides.a() * t.sides.c(); },
        };
        const auto est = mc::estimate_moments({Family::pinned, 2}, fs, opt.mc_samples, opt.seed, opt.mc);
        out[0].mc = est[0];
        out[1].mc = est[1];
    }
    for (auto& r : out) r.check(opt.quad_tolerance);
    return out;
}

double staked_inner_integral_elliptic(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("staked_inner_integral_elliptic: x must be positive");
    return (x + 1.0) * specfun::ellip_e(2.0 * std::sqrt(x) / (x + 1.0));
}

QuadResult staked_inner_integral(double x, const QuadConfig& quad) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("staked_inner_integral: x must be positive");
    // delta(x, y, 1) = (y - lo)(hi - y)(y + x + 1)(y + lo).
    const double lo = std::abs(x - 1.0);
    const double hi = x + 1.0;
    return numerics::integrate_sqrt_singular(
        [x](double y) {
            const double rest = (y + x + 1.0) * (y + std::abs(x - 1.0));
            return rest > 0.0 ? y * y / std::sqrt(rest) : 0.0;
        },
        lo, hi, quad);
}

MomentReport staked_E_ab(const MomentOptions& opt) {
    MomentReport r;
    r.name = "staked_E_ab";
    // Single integral; the modulus reaches 1 at x = 1, so split there.
    auto single = [](double x) {
        if (x <= 0.0) return 0.0;
        return (2.0 / pi) * x * x * std::exp(-0.5 * x * x) * staked_inner_integral_elliptic(x);
    };
    const QuadConfig tight = opt.quad.tightened(0.01);
    const QuadResult left = numerics::integrate_1d(single, 0.0, 1.0, tight);
    const QuadResult right = numerics::integrate_1d(single, 1.0, opt.quad.cutoff(), tight);
    r.closed_form = left.value + right.value;

    // Direct double integral of x y f(x, y) over the strip.
    auto inner = [&](double x) {
        if (x <= 0.0) return 0.0;
        return numerics::integrate_sqrt_singular(
                   [x](double y) { return x * y * densities::staked_sides_smooth(1.0, x, y); }, std::abs(x - 1.0),
                   x + 1.0, tight)
            .value;
    };
    r.quadrature = add(numerics::integrate_1d(inner, 0.0, 1.0, opt.quad),
                       numerics::integrate_1d(inner, 1.0, opt.quad.cutoff(), opt.quad));
    if (opt.mc_samples > 0) {
        r.mc = mc::estimate_moment(
            {Family::staked, 2, 1.0}, [](const Triangle& t) { return t.sides.a() * t.sides.b(); }, opt.mc_samples,
            opt.seed, opt.mc);
    }
    r.check(opt.quad_tolerance);
    return r;
}

double anchored_E_ab_closed() {
    const double q = 1.0 / 16.0;
    const double i0 = specfun::bessel_i(0, q);
    const double i1 = specfun::bessel_i(1, q);
    const double k0 = specfun::bessel_k(0, q);
    const double k1 = specfun::bessel_k(1, q);
    return (i0 * k0 + 8.0 * i0 * k1 - 8.0 * i1 * k0 + i1 * k1) / 64.0;
}

QuadResult anchored_E_ab_uv(const QuadConfig& quad) {
    // With u = x + y, v = y - x the product a b (x y) / sqrt(delta) times the
    // Gaussian weight separates, leaving
    //   e^{1/8} / (16 pi) (U4 V0 - 2 U2 V2 + U0 V4),
    // U_j = int_1^inf u^j e^{-u^2/8} / sqrt(u^2-1) du,
    // V_j = int_{-1}^{1} v^j e^{-v^2/8} / sqrt(1-v^2) dv.
    const QuadConfig tight = quad.tightened(0.01);
    const double tmax = std::acosh(40.0);
    std::array<QuadResult, 5> u{}, v{};
    for (int j : {0, 2, 4}) {
        u[j] = numerics::integrate_1d(
            [j](double t) {
                const double c = std::cosh(t);
                return std::pow(c, j) * std::exp(-c * c / 8.0);
            },
            0.0, tmax, tight);
        v[j] = numerics::integrate_sqrt_singular(
            [j](double s) { return std::pow(s, j) * std::exp(-s * s / 8.0); }, -1.0, 1.0, tight);
    }
    const double pre = std::exp(0.125) / (16.0 * pi);
    const double value = pre * (u[4].value * v[0].value - 2.0 * u[2].value * v[2].value + u[0].value * v[4].value);
    double err = 0.0;
    long evals = 0;
    for (int j : {0, 2, 4}) {
        err += u[j].err_est * std::abs(v[4 - j].value) + v[j].err_est * std::abs(u[4 - j].value);
        evals += u[j].evaluations + v[j].evaluations;
    }
    return {value, pre * 2.0 * err, evals};
}

MomentReport anchored_E_ab(const MomentOptions& opt) {
    MomentReport r;
    r.name = "anchored_E_ab";
    r.closed_form = anchored_E_ab_closed();
    r.quadrature = anchored_E_ab_uv(opt.quad);
    if (opt.mc_samples > 0) {
        r.mc = mc::estimate_moment(
            {Family::anchored, 2, 1.0}, [](const Triangle& t) { return t.sides.a() * t.sides.b(); },
            opt.mc_samples, opt.seed, opt.mc);
    }
    r.check(opt.quad_tolerance);
    return r;
}

RiceMoments rice_mean_meansq(double nu, double sigma, const QuadConfig& quad) {
    if (!(nu >= 0.0) || !std::isfinite(nu)) throw DomainError("rice_mean_meansq: nu must be >= 0");
    if (!(sigma > 0.0) || !std::isfinite(sigma)) throw DomainError("rice_mean_meansq: sigma must be > 0");
    const double upper = nu + quad.cutoff() * sigma;
    // The mode sits near max(nu, sigma); splitting there keeps both halves smooth.
    const double mid = std::min(std::max(nu, sigma), upper / 2.0);
    auto moment = [&](int p) {
        auto f = [&, p](double x) { return std::pow(x, p) * densities::rice_density(x, nu, sigma); };
        return add(numerics::integrate_1d(f, 0.0, mid, quad), numerics::integrate_1d(f, mid, upper, quad));
    };
    return {moment(1), moment(2)};
}

namespace {

// sigma sqrt(pi/2) L_{1/2}(-nu^2 / (2 sigma^2)), with
// L_{1/2}(x) = e^{x/2} [(1 - x) I0(-x/2) - x I1(-x/2)].
double rice_mean_closed(double nu, double sigma) {
    const double x = -nu * nu / (2.0 * sigma * sigma);
    const double h = -x / 2.0;
    return sigma * std::sqrt(pi / 2.0) *
           ((1.0 - x) * specfun::bessel_i_scaled(0, h) - x * specfun::bessel_i_scaled(1, h));
}

}  // namespace

double staked_rice_mean_closed() { return rice_mean_closed(1.0, 1.0); }

double anchored_rice_mean_closed() { return rice_mean_closed(0.5, 1.0); }

std::vector<MomentReport> rice_marginal_moments(const MomentOptions& opt) {
    const RiceMoments st = rice_mean_meansq(1.0, 1.0, opt.quad);
    const RiceMoments an = rice_mean_meansq(0.5, 1.0, opt.quad);
    std::vector<MomentReport> out(4);
    out[0] = {"staked_b_mean", staked_rice_mean_closed(), st.mean, std::nullopt};
    out[1] = {"staked_b_mean_square", 3.0, st.mean_square, std::nullopt};
    out[2] = {"anchored_a_mean", anchored_rice_mean_closed(), an.mean, std::nullopt};
    out[3] = {"anchored_a_mean_square", 2.25, an.mean_square, std::nullopt};
    if (opt.mc_samples > 0) {
        const std::array<mc::TriangleFunction, 2> sb{
            [](const Triangle& t) { return t.sides.b(); },
            [](const Triangle& t) { return t.sides.b() * t.sides.b(); },
        };
        const std::array<mc::TriangleFunction, 2> aa{
            [](const Triangle& t) { return t.sides.a(); },
            [](const Triangle& t) { return t.sides.a() * t.sides.a(); },
        };
        const auto es = mc::estimate_moments({Family::staked, 2, 1.0}, sb, opt.mc_samples, opt.seed, opt.mc);
        const auto ea = mc::estimate_moments({Family::anchored, 2, 1.0}, aa, opt.mc_samples, opt.seed, opt.mc);
        out[0].mc = es[0];
        out[1].mc = es[1];
        out[2].mc = ea[0];
        out[3].mc = ea[1];
    }
    for (auto& r : out) r.check(opt.quad_tolerance);
    return out;
}

MomentReport generic_moment(const FamilySpec& family, const mc::TriangleFunction& f, Method method,
                            const MomentOptions& opt, std::string name) {
    family.validate();
    MomentReport r;
    r.name = std::move(name);
    if (method == Method::mc) {
        r.mc = mc::estimate_moment(family, f, opt.mc_samples, opt.seed, opt.mc);
        r.check(opt.quad_tolerance);
        return r;
    }
    if (family.family == Family::pinned && family.dim == 2) {
        r.quadrature = pinned_side_expectation(
            [&](double x, double y, double z) {
                const auto s = TriangleSides::make(x, y, z);
                return s ? f(Triangle(*s)) : 0.0;
            },
            opt.quad);
    } else if (family.family == Family::staked || family.family == Family::anchored) {
        r.quadrature = numerics::integrate_2d(
            [&](double x, double y) {
                const double d = densities::angle_density(family, {x, y});
                if (d == 0.0) return 0.0;
                const auto s = [&]() -> std::optional<TriangleSides> {
                    try {
                        return sides_from_angles(x, y, family.c);
                    } catch (const std::logic_error&) {
                        return std::nullopt;
                    }
                }();
                return s ? d * f(Triangle(*s)) : 0.0;
            },
            numerics::AngleSimplex{}, opt.quad);
    } else {
        throw DomainError("generic_moment: quadrature needs a proven density (pinned dim 2, staked, anchored)");
    }
    r.check(opt.quad_tolerance);
    return r;
}

}  // namespace gtri::moments
