#include "gausstri/suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include "json.hpp"

#include "gausstri/densities.hpp"
#include "gausstri/error.hpp"
#include "gausstri/specfun.hpp"

namespace gtri::suites {

namespace {

using numerics::QuadConfig;
using numerics::QuadResult;
using std::numbers::pi;

// Published decimal values the closed forms are checked against.
constexpr double kStakedRiceMean = 1.5485724605511453806;
constexpr double kAnchoredRiceMean = 1.3304473406107031708;
constexpr double kStakedEab = 2.2627965282687383013;
constexpr double kAnchoredEab = 2.0303939030262620132;
constexpr double kStakedAcute5dp = 0.23685;
constexpr double kAnchoredAcute5dp = 0.26542;
constexpr double kRhoAlphaBeta3sf = -0.226;
constexpr double kRhoAlphaGamma3sf = -0.622;

double round_to(double v, int decimals) {
    const double s = std::pow(10.0, decimals);
    return std::round(v * s) / s;
}

QuadResult sub(const QuadResult& x, const QuadResult& y) {
    return {x.value - y.value, x.err_est + y.err_est, x.evaluations + y.evaluations};
}

QuadResult add(const QuadResult& x, const QuadResult& y) {
    return {x.value + y.value, x.err_est + y.err_est, x.evaluations + y.evaluations};
}

std::string family_label(const FamilySpec& f) {
    std::string s(to_string(f.family));
    if (f.family == Family::pinned || f.family == Family::pure) s += "/dim" + std::to_string(f.dim);
    return s;
}

mc::Estimate complement(mc::Estimate e) {
    e.value = 1.0 - e.value;
    return e;
}

// Integral over the strip |x - c| < y < x + c of a side density whose
// smooth part is `smooth`; the column integral uses the arcsine map and
// the outer integral is split at the kink x = c.
QuadResult strip_integral(const std::function<double(double, double)>& smooth, double c, const QuadConfig& quad) {
    const QuadConfig inner = quad.tightened(0.01);
    auto column = [&](double x) {
        if (x <= 0.0) return 0.0;
        return numerics::integrate_sqrt_singular([&](double y) { return smooth(x, y); }, std::abs(x - c), x + c,
                                                 inner)
            .value;
    };
    return add(numerics::integrate_1d(column, 0.0, c, quad), numerics::integrate_1d(column, c, quad.cutoff(), quad));
}

ReportEntry normalization(std::string name, std::string family, const QuadResult& q, double tol,
                          bool conjecture = false) {
    ReportEntry e;
    e.name = std::move(name);
    e.family = std::move(family);
    e.closed_form = 1.0;
    e.quadrature = q;
    e.tolerance = tol;
    e.pass = std::abs(q.value - 1.0) <= tol;
    e.conjecture_flag = conjecture;
    return e;
}

ReportEntry acute_entry(const std::string& name, const acuteness::AcutenessReport& r, double quad_tol,
                        double reference_5dp) {
    ReportEntry e;
    e.name = name;
    e.family = family_label(r.family);
    e.closed_form = r.p_acute_closed();
    if (r.p_obtuse_quad) e.quadrature = QuadResult{1.0 - r.p_obtuse_quad->value, r.p_obtuse_quad->err_est,
                                                   r.p_obtuse_quad->evaluations};
    if (r.p_obtuse_mc) e.mc = complement(*r.p_obtuse_mc);
    e.tolerance = quad_tol;
    const bool rounded = round_to(*e.closed_form, 5) == reference_5dp;
    const bool quad_ok = !e.quadrature || std::abs(e.quadrature->value - *e.closed_form) <= quad_tol;
    e.pass = rounded && quad_ok && r.mc_match;
    e.details["reference_5dp"] = reference_5dp;
    if (e.mc) e.details["mc_band"] = 3.0 * e.mc->std_error;
    return e;
}

ReportEntry strip_circle_entry(Family family, double acute_closed, const QuadConfig& quad) {
    const double tol = 1e-8;
    const QuadResult strip = acuteness::strip_probability_quad(family, quad);
    const QuadResult circle = acuteness::circle_probability_quad(family, quad);
    ReportEntry e;
    e.name = std::string(to_string(family)) + "_strip_minus_circle";
    e.family = std::string(to_string(family));
    e.closed_form = acute_closed;
    e.quadrature = sub(strip, circle);
    e.tolerance = tol;
    const double strip_closed = acuteness::strip_probability(family);
    const double circle_closed = acuteness::circle_probability(family);
    e.pass = std::abs(e.quadrature->value - acute_closed) <= tol &&
             std::abs(strip_closed - circle_closed - acute_closed) <= tol &&
             std::abs(strip.value - strip_closed) <= tol && std::abs(circle.value - circle_closed) <= tol;
    e.details["strip_closed"] = strip_closed;
    e.details["strip_quadrature"] = strip.value;
    e.details["circle_closed"] = circle_closed;
    e.details["circle_quadrature"] = circle.value;
    if (family == Family::staked) {
        const double gj = acuteness::circle_probability_goldstein();
        e.details["circle_goldstein"] = gj;
        e.pass = e.pass && std::abs(gj - circle_closed) <= tol;
    }
    return e;
}

moments::MomentOptions moment_options(const SuiteOptions& opt, double quad_tol) {
    moments::MomentOptions m;
    m.mc_samples = opt.mc_samples;
    m.seed = opt.seed;
    m.mc = opt.mc;
    m.quad = opt.quad;
    m.quad_tolerance = quad_tol;
    return m;
}

acuteness::AcuteOptions acute_options(const SuiteOptions& opt, double quad_tol) {
    acuteness::AcuteOptions a;
    a.mc_samples = opt.mc_samples;
    a.seed = opt.seed;
    a.mc = opt.mc;
    a.quad = opt.quad;
    a.quad_tolerance = quad_tol;
    return a;
}

void pinned_angle_section(std::vector<ReportEntry>& out, const SuiteOptions& opt) {
    auto rs = moments::pinned_angle_moments(moment_options(opt, 1e-6));
    for (auto& r : rs) {
        ReportEntry e = entry_from_moment(r, "pinned/dim2");
        if (r.name == "rho_alpha_beta" || r.name == "rho_alpha_gamma") {
            const double want = r.name == "rho_alpha_beta" ? kRhoAlphaBeta3sf : kRhoAlphaGamma3sf;
            e.details["reference_3sf"] = want;
            e.pass = round_to(*r.closed_form, 3) == want && round_to(r.quadrature->value, 3) == want;
            e.notes = "rounded to 3 significant figures";
        }
        out.push_back(std::move(e));
    }
}

void g_section(std::vector<ReportEntry>& out, const SuiteOptions& opt) {
    {
        const QuadResult q = numerics::integrate_1d(densities::pinned_angle_marginal_g, 0.0, pi, opt.quad);
        out.push_back(normalization("pinned_g_normalization", "pinned/dim2", q, 1e-8));
    }
    {
        ReportEntry e;
        e.name = "pinned_G_half_pi";
        e.family = "pinned/dim2";
        e.closed_form = 0.5 + 1.0 / (2.0 * std::numbers::sqrt2);
        e.quadrature = numerics::integrate_1d(densities::pinned_angle_marginal_g, 0.0, pi / 2.0, opt.quad);
        e.tolerance = 1e-10;
        const double g = densities::pinned_angle_cdf_G(pi / 2.0);
        e.details["G_closed_form"] = g;
        e.pass = std::abs(g - *e.closed_form) <= 1e-10 && std::abs(e.quadrature->value - *e.closed_form) <= 1e-8;
        out.push_back(std::move(e));
    }
    {
        ReportEntry e;
        e.name = "pinned_g_defining_integral";
        e.family = "pinned/dim2";
        e.tolerance = 1e-6;
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const double x = pi * (i + 0.5) / 20.0;
            const double q =
                numerics::integrate_1d([x](double y) { return densities::pinned_angles_ndim(2, {x, y}); }, 0.0,
                                       pi - x, opt.quad)
                    .value;
            worst = std::max(worst, std::abs(q - densities::pinned_angle_marginal_g(x)));
        }
        e.details["max_abs_deviation"] = worst;
        e.details["grid_points"] = 20;
        e.pass = worst <= e.tolerance;
        out.push_back(std::move(e));
    }
}

void acute_section(std::vector<ReportEntry>& out, const SuiteOptions& opt) {
    const auto ao = acute_options(opt, 1e-6);
    {
        const auto r = acuteness::pinned_obtuse_2d(ao);
        ReportEntry e;
        e.name = "pinned_obtuse_2d";
        e.family = "pinned/dim2";
        e.closed_form = r.p_obtuse_closed;
        e.quadrature = r.p_obtuse_quad;
        e.mc = r.p_obtuse_mc;
        e.tolerance = 1e-6;
        e.pass = r.quad_match && r.mc_match;
        e.notes = "closed form " + r.table_value->to_string();
        out.push_back(std::move(e));
    }
    const auto qo = acute_options(opt, 1e-5);
    const auto st = acuteness::staked_obtuse(qo);
    const auto an = acuteness::anchored_obtuse(qo);
    out.push_back(acute_entry("staked_acute", st, 1e-5, kStakedAcute5dp));
    out.push_back(strip_circle_entry(Family::staked, st.p_acute_closed(), opt.quad));
    out.push_back(acute_entry("anchored_acute", an, 1e-5, kAnchoredAcute5dp));
    out.push_back(strip_circle_entry(Family::anchored, an.p_acute_closed(), opt.quad));
    {
        ReportEntry e;
        e.name = "anchored_acute_exceeds_staked";
        e.family = "anchored";
        e.closed_form = an.p_acute_closed() - st.p_acute_closed();
        e.pass = *e.closed_form > 0.0;
        e.notes = "difference of acute probabilities, anchored minus staked";
        out.push_back(std::move(e));
    }
}

void rice_section(std::vector<ReportEntry>& out, const SuiteOptions& opt) {
    for (auto& r : moments::rice_marginal_moments(moment_options(opt, 1e-8))) {
        const bool staked = r.name.rfind("staked", 0) == 0;
        ReportEntry e = entry_from_moment(r, staked ? "staked" : "anchored");
        if (r.name == "staked_b_mean" || r.name == "anchored_a_mean") {
            const double ref = staked ? kStakedRiceMean : kAnchoredRiceMean;
            e.details["reference"] = ref;
            e.pass = e.pass && std::abs(*r.closed_form - ref) <= 1e-10;
        }
        out.push_back(std::move(e));
    }
    {
        const auto rm = moments::rice_mean_meansq(0.0, 1.0, moment_options(opt, 1e-8).quad);
        ReportEntry e;
        e.name = "rayleigh_limit_mean";
        e.family = "rice/nu0";
        e.closed_form = std::sqrt(pi / 2.0);
        e.quadrature = rm.mean;
        e.tolerance = 1e-8;
        e.pass = std::abs(rm.mean.value - *e.closed_form) <= 1e-8;
        out.push_back(std::move(e));
    }
}

void eab_section(std::vector<ReportEntry>& out, const SuiteOptions& opt) {
    {
        const auto r = moments::staked_E_ab(moment_options(opt, 1e-6));
        ReportEntry e = entry_from_moment(r, "staked");
        e.details["reference"] = kStakedEab;
        e.pass = e.pass && std::abs(*r.closed_form - kStakedEab) <= 1e-8;
        e.notes = "closed_form is the elliptic single integral; quadrature is the direct strip integral";
        out.push_back(std::move(e));
    }
    {
        const auto r = moments::anchored_E_ab(moment_options(opt, 1e-8));
        ReportEntry e = entry_from_moment(r, "anchored");
        e.details["reference"] = kAnchoredEab;
        e.pass = e.pass && std::abs(*r.closed_form - kAnchoredEab) <= 1e-10;
        e.notes = "quadrature is the factored u, v product of 1D integrals";
        out.push_back(std::move(e));
    }
    {
        auto rs = moments::pinned_side_cross_moments(moment_options(opt, 1e-6));
        for (auto& r : rs) {
            ReportEntry e = entry_from_moment(r, "pinned/dim2");
            if (r.name == "E_ac") {
                const double published = moments::pinned_E_ac_published();
                e.details["published"] = published;
                e.details["published_minus_closed"] = published - *r.closed_form;
                if (r.mc) e.details["mc_sigmas_from_published"] = std::abs(r.mc->value - published) / r.mc->std_error;
                e.notes = "published value sqrt(2 pi) differs from the elliptic closed form by 2.5e-3";
            }
            out.push_back(std::move(e));
        }
    }
}

void normalization_section(std::vector<ReportEntry>& out, const SuiteOptions& opt) {
    const double tol = 1e-6;
    auto simplex = [&](const numerics::Integrand2D& f) {
        return numerics::integrate_2d(f, numerics::AngleSimplex{}, opt.quad);
    };
    out.push_back(normalization(
        "norm_pinned_angles", "pinned/dim2",
        simplex([](double x, double y) { return densities::pinned_angles_ndim(2, {x, y}); }), tol));
    out.push_back(normalization("norm_staked_angles", "staked",
                                simplex([](double x, double y) { return densities::staked_angles(1.0, {x, y}); }),
                                tol));
    out.push_back(normalization(
        "norm_anchored_angles", "anchored",
        simplex([](double x, double y) { return densities::anchored_angles(1.0, {x, y}); }), tol));
    {
        auto m = moment_options(opt, tol);
        m.mc_samples = 0;
        const auto r = moments::generic_moment({Family::pinned, 2}, [](const Triangle&) { return 1.0; },
                                               moments::Method::quadrature, m, "one");
        out.push_back(normalization("norm_pinned_sides3", "pinned/dim2", *r.quadrature, tol));
    }
    out.push_back(normalization(
        "norm_staked_sides", "staked",
        strip_integral([](double x, double y) { return densities::staked_sides_smooth(1.0, x, y); }, 1.0, opt.quad),
        tol));
    out.push_back(normalization(
        "norm_anchored_sides", "anchored",
        strip_integral([](double x, double y) { return densities::anchored_sides_smooth(1.0, x, y); }, 1.0,
                       opt.quad),
        tol));
    auto line = [&](const numerics::Integrand1D& f) { return numerics::integrate_1d(f, 0.0, opt.quad.cutoff(), opt.quad); };
    out.push_back(normalization("norm_pinned_side_a", "pinned/dim2", line([](double x) {
                                    return densities::pinned_side_marginal(densities::Side::a, x);
                                }),
                                tol));
    out.push_back(normalization("norm_pinned_side_c", "pinned/dim2", line([](double x) {
                                    return densities::pinned_side_marginal(densities::Side::c, x);
                                }),
                                tol));
    out.push_back(normalization("norm_staked_side_b", "staked", line(densities::staked_side_b_marginal), tol));
    out.push_back(normalization("norm_anchored_side", "anchored", line(densities::anchored_side_marginal), tol));
}

void appendix_section(std::vector<ReportEntry>& out, const SuiteOptions& opt) {
    std::mt19937_64 gen(opt.seed);
    std::uniform_real_distribution<double> ux(0.05, 4.0), us(0.02, 0.98);
    for (const bool staked : {true, false}) {
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const double x = ux(gen);
            const double lo = std::abs(x - 1.0), hi = x + 1.0;
            const double y = lo + (hi - lo) * us(gen);
            const double direct = staked ? densities::staked_sides(1.0, x, y) : densities::anchored_sides(1.0, x, y);
            const double via =
                staked ? densities::staked_sides_via_angles(1.0, x, y) : densities::anchored_sides_via_angles(1.0, x, y);
            if (direct > 0.0) worst = std::max(worst, std::abs(via - direct) / direct);
        }
        ReportEntry e;
        e.name = staked ? "staked_sides_via_angles" : "anchored_sides_via_angles";
        e.family = staked ? "staked" : "anchored";
        e.tolerance = 1e-10;
        e.details["max_rel_deviation"] = worst;
        e.details["points"] = 100;
        e.pass = worst <= e.tolerance;
        out.push_back(std::move(e));
    }
}

void corr_rice_section(std::vector<ReportEntry>& out, const SuiteOptions& opt) {
    using densities::CorrRiceVariant;
    {
        std::mt19937_64 gen(opt.seed + 1);
        std::uniform_real_distribution<double> u(0.01, 5.0);
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            const double a = u(gen), b = u(gen);
            const double product = densities::rice_density(a, 0.5, 1.0) * densities::rice_density(b, 0.5, 1.0);
            for (auto v : {CorrRiceVariant::same_center, CorrRiceVariant::opposite_center}) {
                const double d = densities::corr_rice_density({0.0, {}}, v, a, b);
                worst = std::max(worst, std::abs(d - product) / product);
            }
        }
        ReportEntry e;
        e.name = "corr_rice_rho0_factorization";
        e.family = "corr_rice";
        e.tolerance = 1e-12;
        e.details["max_rel_deviation"] = worst;
        e.pass = worst <= e.tolerance;
        out.push_back(std::move(e));
    }
    QuadConfig q = opt.quad;
    q.abs_tol = 1e-8;
    q.rel_tol = 1e-8;
    const double r = q.cutoff();
    for (double rho : {0.25, 0.5, 0.9}) {
        for (auto v : {CorrRiceVariant::same_center, CorrRiceVariant::opposite_center}) {
            const QuadResult n = numerics::integrate_2d(
                [rho, v](double a, double b) { return densities::corr_rice_density({rho, {}}, v, a, b); },
                numerics::Rectangle{0.0, r, 0.0, r}, q);
            char buf[64];
            std::snprintf(buf, sizeof buf, "norm_corr_rice_%s_rho%.2f",
                          v == CorrRiceVariant::same_center ? "same" : "opposite", rho);
            out.push_back(normalization(buf, "corr_rice", n, 1e-4));
        }
    }
    for (double rho : {0.5, 0.9, 0.95}) {
        const QuadResult m = numerics::integrate_2d(
            [rho](double a, double b) {
                return a * b * densities::corr_rice_density({rho, {}}, CorrRiceVariant::opposite_center, a, b);
            },
            numerics::Rectangle{0.0, r, 0.0, r}, q);
        char buf[64];
        std::snprintf(buf, sizeof buf, "corr_rice_E_ab_rho%.2f", rho);
        ReportEntry e;
        e.name = buf;
        e.family = "corr_rice";
        e.quadrature = m;
        e.pass = true;
        e.conjecture_flag = true;
        e.details["anchored_E_ab"] = moments::anchored_E_ab_closed();
        e.notes = "informational trend toward the anchored E(ab) as rho grows";
        out.push_back(std::move(e));
    }
}

// %.17g numbers inside an otherwise standard JSON dump.
void write_json(std::string& s, const nlohmann::json& j, int indent, int depth) {
    const std::string pad = indent > 0 ? "\n" + std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
    const std::string close = indent > 0 ? "\n" + std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
    switch (j.type()) {
        case nlohmann::json::value_t::object: {
            if (j.empty()) {
                s += "{}";
                return;
            }
            s += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) s += ',';
                first = false;
                s += pad;
                s += nlohmann::json(it.key()).dump();
                s += indent > 0 ? ": " : ":";
                write_json(s, it.value(), indent, depth + 1);
            }
            s += close;
            s += '}';
            return;
        }
        case nlohmann::json::value_t::array: {
            if (j.empty()) {
                s += "[]";
                return;
            }
            s += '[';
            bool first = true;
            for (const auto& v : j) {
                if (!first) s += ',';
                first = false;
                s += pad;
                write_json(s, v, indent, depth + 1);
            }
            s += close;
            s += ']';
            return;
        }
        case nlohmann::json::value_t::number_float: {
            const double v = j.get<double>();
            if (!std::isfinite(v)) {
                s += "null";
                return;
            }
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            s += buf;
            return;
        }
        default: s += j.dump(); return;
    }
}

nlohmann::json entry_json(const ReportEntry& e) {
    nlohmann::json j;
    j["name"] = e.name;
    j["family"] = e.family;
    if (e.closed_form) j["closed_form"] = *e.closed_form;
    if (e.quadrature) {
        j["quadrature"] = e.quadrature->value;
        j["quadrature_err"] = e.quadrature->err_est;
    }
    if (e.mc) {
        j["mc"] = e.mc->value;
        j["stderr"] = e.mc->std_error;
        j["resampled"] = e.mc->resampled;
    }
    j["n"] = e.mc ? e.mc->n : 0;
    j["seed"] = e.mc ? e.mc->seed : 0;
    j["tolerance"] = e.tolerance;
    j["pass"] = e.pass;
    j["conjecture_flag"] = e.conjecture_flag;
    j["notes"] = e.notes;
    j["details"] = nlohmann::json::object();
    for (const auto& [k, v] : e.details) j["details"][k] = v;
    for (const auto& [k, v] : e.flags) j["details"][k] = v;
    return j;
}

}  // namespace

ReportEntry entry_from_moment(const moments::MomentReport& r, std::string family) {
    ReportEntry e;
    e.name = r.name;
    e.family = std::move(family);
    e.closed_form = r.closed_form;
    e.quadrature = r.quadrature;
    e.mc = r.mc;
    e.tolerance = r.tolerance;
    e.pass = r.consistent;
    return e;
}

std::vector<ReportEntry> verify_suite(const SuiteOptions& opt) {
    opt.quad.validate();
    std::vector<ReportEntry> out;
    acute_section(out, opt);
    pinned_angle_section(out, opt);
    g_section(out, opt);
    rice_section(out, opt);
    eab_section(out, opt);
    normalization_section(out, opt);
    appendix_section(out, opt);
    corr_rice_section(out, opt);
    return out;
}

std::vector<ReportEntry> conjecture_suite(int n_lo, int n_hi, const SuiteOptions& opt) {
    if (n_lo < 2 || n_hi > 8 || n_lo > n_hi) throw DomainError("conjecture_suite: range must lie within 2..8");
    std::vector<ReportEntry> out;
    const auto ao = acute_options(opt, 1e-6);
    for (const Family fam : {Family::pinned, Family::pure}) {
        for (int n = n_lo; n <= n_hi; ++n) {
            const FamilySpec spec{fam, n, 1.0};
            const bool conjectured = densities::angle_density_conjectured(spec);
            const std::string label = family_label(spec);
            const std::string stem = std::string(to_string(fam)) + "_n" + std::to_string(n);
            auto density = [spec](double x, double y) { return densities::angle_density(spec, {x, y}); };

            out.push_back(normalization(stem + "_normalization", label,
                                        numerics::integrate_2d(density, numerics::AngleSimplex{}, opt.quad), 1e-6,
                                        conjectured));

            const auto r = fam == Family::pure ? acuteness::pure_obtuse_ndim(n, ao)
                           : n == 2            ? acuteness::pinned_obtuse_2d(ao)
                                               : acuteness::pinned_obtuse_ndim(n, ao);
            ReportEntry e;
            e.name = stem + "_obtuse";
            e.family = label;
            e.closed_form = r.table_value->value();
            e.quadrature = r.p_obtuse_quad;
            e.mc = r.p_obtuse_mc;
            e.tolerance = 1e-6;
            e.conjecture_flag = conjectured;
            e.flags["table_match"] = r.quad_match;
            e.flags["mc_within_3_stderr"] = r.mc_match;
            e.flags["table_discrepancy"] = r.table_discrepancy;
            if (r.p_obtuse_mc) {
                e.details["mc_deviation_sigmas"] =
                    std::abs(r.p_obtuse_mc->value - *e.closed_form) / r.p_obtuse_mc->std_error;
            }
            e.pass = r.quad_match && !r.table_discrepancy;
            e.notes = "table value " + r.table_value->to_string();
            if (r.table_discrepancy) e.notes += "; table_discrepancy: Monte Carlo disagrees beyond 5 stderr";
            if (!r.quad_match) {
                e.notes += "; density prediction differs from the table";
                if (r.p_obtuse_quad && std::abs(r.p_obtuse_quad->value - (1.0 - *e.closed_form)) <= 1e-6)
                    e.notes += " and equals 1 minus the table value";
            }
            out.push_back(std::move(e));

            if (opt.gof_samples > 0) {
                const mc::GofResult g = mc::histogram_gof(spec, {mc::Coordinate::angles2d, 10},
                                                          numerics::Integrand2D(density), opt.gof_samples,
                                                          opt.seed, opt.mc, opt.quad);
                ReportEntry ge;
                ge.name = stem + "_gof";
                ge.family = label;
                ge.conjecture_flag = conjectured;
                ge.tolerance = 1e-3;
                ge.pass = g.p_value > 1e-3;
                ge.details["chi2"] = g.chi2;
                ge.details["dof"] = g.dof;
                ge.details["p_value"] = g.p_value;
                ge.details["bins"] = g.bins;
                ge.details["samples"] = static_cast<double>(opt.gof_samples);
                ge.notes = "chi-square of simulated angles against the angle density";
                out.push_back(std::move(ge));
            }
        }
    }
    return out;
}

bool has_gating_failure(const std::vector<ReportEntry>& entries) noexcept {
    return std::any_of(entries.begin(), entries.end(), [](const ReportEntry& e) { return !e.pass && !e.conjecture_flag; });
}

std::string to_json(const std::vector<ReportEntry>& entries, int indent) {
    nlohmann::json root;
    root["entries"] = nlohmann::json::array();
    for (const auto& e : entries) root["entries"].push_back(entry_json(e));
    std::string s;
    write_json(s, root, indent, 0);
    s += '\n';
    return s;
}

std::string to_csv(const std::vector<ReportEntry>& entries) {
    auto num = [](const std::optional<double>& v) {
        if (!v || !std::isfinite(*v)) return std::string();
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", *v);
        return std::string(buf);
    };
    auto quoted = [](const std::string& t) {
        std::string q = "\"";
        for (char ch : t) {
            if (ch == '"') q += '"';
            q += ch;
        }
        return q + "\"";
    };
    std::string s = "name,family,closed_form,quadrature,mc,stderr,n,seed,tolerance,pass,conjecture_flag,notes\n";
    for (const auto& e : entries) {
        s += quoted(e.name) + ',' + quoted(e.family) + ',' + num(e.closed_form) + ',' +
             num(e.quadrature ? std::optional<double>(e.quadrature->value) : std::nullopt) + ',' +
             num(e.mc ? std::optional<double>(e.mc->value) : std::nullopt) + ',' +
             num(e.mc ? std::optional<double>(e.mc->std_error) : std::nullopt) + ',' +
             std::to_string(e.mc ? e.mc->n : 0) + ',' + std::to_string(e.mc ? e.mc->seed : 0) + ',' +
             num(e.tolerance) + ',' + (e.pass ? "true" : "false") + ',' + (e.conjecture_flag ? "true" : "false") +
             ',' + quoted(e.notes) + '\n';
    }
    return s;
}

}  // namespace gtri::suites
