#include "gausstri/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <vector>

#include "gausstri/error.hpp"

namespace gtri::numerics {

namespace {

// QUADPACK qk21 abscissae and weights.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452, 0.930157491355708226001207180059508,
    0.865063366688984510732096688423493, 0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784, 0.294392862701460198131126603103866,
    0.148874338981631210884826001129720, 0.000000000000000000000000000000000};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390, 0.054755896574351996031381300244580,
    0.075039674810919952767043140916190, 0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077715941916227, 0.134709217311473325928054001771707, 0.142775938577060080797094273138717,
    0.147739104901338491374841515972068, 0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
                                       0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
                                       0.295524224714752870173892994651338};

constexpr int kMaxSegments = 20000;

struct Segment {
    double a, b;
    double value, err;
    int depth;
    bool operator<(const Segment& o) const { return err < o.err; }
};

Segment gauss_kronrod(const Integrand1D& f, double a, double b, int depth) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double resk = fc * kWgk[10];
    double resg = 0.0;
    double resabs = std::abs(resk);
    std::array<double, 10> f1{}, f2{};
    for (int j = 0; j < 10; ++j) {
        const double dx = half * kXgk[j];
        f1[j] = f(center - dx);
        f2[j] = f(center + dx);
        const double sum = f1[j] + f2[j];
        resk += kWgk[j] * sum;
        resabs += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
        if (j % 2 == 1) resg += kWg[j / 2] * sum;
    }
    const double reskh = 0.5 * resk;
    double resasc = kWgk[10] * std::abs(fc - reskh);
    for (int j = 0; j < 10; ++j) resasc += kWgk[j] * (std::abs(f1[j] - reskh) + std::abs(f2[j] - reskh));

    const double value = resk * half;
    resabs *= std::abs(half);
    resasc *= std::abs(half);
    double err = std::abs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    constexpr double eps = std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) err = std::max(50.0 * eps * resabs, err);
    if (!std::isfinite(value) || !std::isfinite(err))
        throw ConvergenceError("integrate_1d: non-finite integrand value", value, err);
    return {a, b, value, err, depth};
}

}  // namespace

void QuadConfig::validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) throw DomainError("QuadConfig: tolerances must be positive");
    if (max_depth < 1) throw DomainError("QuadConfig: max_depth must be >= 1");
    if (truncation_radius && !(*truncation_radius > 0.0))
        throw DomainError("QuadConfig: truncation radius must be positive");
}

double QuadConfig::cutoff() const {
    if (truncation_radius) return *truncation_radius;
    double r = 1.0;
    while (std::exp(-0.25 * r * r) * std::pow(r, 4) >= abs_tol / 100.0) r += 0.5;
    return r;
}

QuadConfig QuadConfig::tightened(double factor) const {
    QuadConfig out = *this;
    out.abs_tol *= factor;
    out.rel_tol *= factor;
    return out;
}

QuadResult integrate_1d(const Integrand1D& f, double lo, double hi, const QuadConfig& cfg) {
    cfg.validate();
    if (!(lo < hi)) throw DomainError("integrate_1d: need lo < hi");

    std::priority_queue<Segment> heap;
    Segment first = gauss_kronrod(f, lo, hi, 0);
    long evals = 21;
    double total = first.value;
    double total_err = first.err;
    heap.push(first);

    while (total_err > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total))) {
        Segment worst = heap.top();
        if (worst.depth >= cfg.max_depth || static_cast<int>(heap.size()) >= kMaxSegments)
            throw ConvergenceError("integrate_1d: maximum subdivision depth exceeded", total, total_err);
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const Segment left = gauss_kronrod(f, worst.a, mid, worst.depth + 1);
        const Segment right = gauss_kronrod(f, mid, worst.b, worst.depth + 1);
        evals += 42;
        total += left.value + right.value - worst.value;
        total_err += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
    }

    // Re-sum to shed drift from the incremental updates.
    double value = 0.0, err = 0.0;
    while (!heap.empty()) {
        value += heap.top().value;
        err += heap.top().err;
        heap.pop();
    }
    return {value, err, evals};
}

QuadResult integrate_to_cutoff(const Integrand1D& f, double lo, const QuadConfig& cfg) {
    const double hi = cfg.cutoff();
    if (!(lo < hi)) throw DomainError("integrate_to_cutoff: lower limit beyond truncation radius");
    return integrate_1d(f, lo, hi, cfg);
}

QuadResult integrate_2d(const Integrand2D& f, const Region& region, const QuadConfig& cfg) {
    cfg.validate();
    const QuadConfig inner_cfg = cfg.tightened(0.1);
    long evals = 0;
    double inner_err = 0.0;

    auto run = [&](double x0, double x1, auto&& y_lo, auto&& y_hi) {
        auto outer = [&](double x) {
            const double lo = y_lo(x);
            const double hi = y_hi(x);
            if (!(hi > lo)) return 0.0;
            const double width = hi - lo;
            const QuadResult r = integrate_1d([&](double s) { return f(x, lo + width * s); }, 0.0, 1.0, inner_cfg);
            evals += r.evaluations;
            inner_err = std::max(inner_err, r.err_est * width);
            return r.value * width;
        };
        QuadResult r = integrate_1d(outer, x0, x1, cfg);
        r.err_est += inner_err * (x1 - x0);
        r.evaluations = evals;
        return r;
    };

    if (const auto* rect = std::get_if<Rectangle>(&region)) {
        if (!(rect->x0 < rect->x1) || !(rect->y0 < rect->y1)) throw DomainError("integrate_2d: empty rectangle");
        return run(rect->x0, rect->x1, [&](double) { return rect->y0; }, [&](double) { return rect->y1; });
    }
    if (std::holds_alternative<AngleSimplex>(region)) {
        const double pi = std::numbers::pi;
        return run(0.0, pi, [](double) { return 0.0; }, [pi](double x) { return pi - x; });
    }
    const auto& vr = std::get<VerticalRegion>(region);
    if (!(vr.x0 < vr.x1)) throw DomainError("integrate_2d: empty region");
    return run(vr.x0, vr.x1, vr.y_lo, vr.y_hi);
}

QuadResult integrate_sqrt_singular(const Integrand1D& h, double y_lo, double y_hi, const QuadConfig& cfg,
                                   std::optional<std::pair<double, double>> window) {
    if (!(y_lo < y_hi)) throw DomainError("integrate_sqrt_singular: need y_lo < y_hi");
    const double m = 0.5 * (y_lo + y_hi);
    const double r = 0.5 * (y_hi - y_lo);
    const double half_pi = 0.5 * std::numbers::pi;
    double t0 = -half_pi;
    double t1 = half_pi;
    if (window) {
        auto to_t = [&](double y) { return std::asin(std::clamp((y - m) / r, -1.0, 1.0)); };
        t0 = to_t(std::max(window->first, y_lo));
        t1 = to_t(std::min(window->second, y_hi));
        if (!(t0 < t1)) return {0.0, 0.0, 0};
    }
    return integrate_1d([&](double t) { return h(m + r * std::sin(t)); }, t0, t1, cfg);
}

double sum_bessel_series(const std::function<double(int)>& term, const specfun::SpecTolerance& cfg) {
    cfg.validate();
    double sum = 0.0;
    int quiet = 0;
    double last = 0.0;
    for (int k = 0; k < cfg.max_terms; ++k) {
        last = (k == 0 ? 1.0 : 2.0) * term(k);
        sum += last;
        if (std::abs(last) <= cfg.abs_tol * std::abs(sum)) {
            if (++quiet == 3) return sum;
        } else {
            quiet = 0;
        }
    }
    throw ConvergenceError("sum_bessel_series: no convergence within max_terms", sum, std::abs(last));
}

}  // namespace gtri::numerics
