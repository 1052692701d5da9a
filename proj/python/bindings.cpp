#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "gausstri/acuteness.hpp"
#include "gausstri/densities.hpp"
#include "gausstri/error.hpp"
#include "gausstri/moments.hpp"
#include "gausstri/montecarlo.hpp"
#include "gausstri/samplers.hpp"
#include "gausstri/specfun.hpp"
#include "gausstri/suites.hpp"

namespace py = pybind11;
using namespace gtri;

namespace {

FamilySpec family_spec(const std::string& family, int dim, double c) {
    FamilySpec f{family_from_string(family), dim, c};
    f.validate();
    return f;
}

py::dict estimate_dict(const mc::Estimate& e) {
    py::dict d;
    d["value"] = e.value;
    d["stderr"] = e.std_error;
    d["n"] = e.n;
    d["seed"] = e.seed;
    d["resampled"] = e.resampled;
    return d;
}

// Rows (a, b, c, alpha, beta, gamma) in the same chunk order the CLI uses.
std::vector<std::tuple<double, double, double, double, double, double>> sample_rows(const std::string& family, int dim,
                                                                               double c, std::uint64_t n,
                                                                               std::uint64_t seed, unsigned workers) {
    const FamilySpec f = family_spec(family, dim, c);
    mc::McConfig cfg;
    cfg.workers = workers;
    std::vector<std::vector<std::tuple<double, double, double, double, double, double>>> chunks(
        mc::chunk_count(n, cfg));
    {
        py::gil_scoped_release release;
        mc::for_each_triangle(f, n, seed, cfg, [&](std::uint64_t i, const Triangle& t) {
            chunks[i].emplace_back(t.sides.a(), t.sides.b(), t.sides.c(), t.angles.alpha(), t.angles.beta(),
                                   t.angles.gamma());
        });
    }
    std::vector<std::tuple<double, double, double, double, double, double>> out;
    out.reserve(n);
    for (auto& ch : chunks) out.insert(out.end(), ch.begin(), ch.end());
    return out;
}

py::dict acuteness_report(const std::string& family, int dim, std::uint64_t n, std::uint64_t seed) {
    acuteness::AcuteOptions opt;
    opt.mc_samples = n;
    opt.seed = seed;
    const FamilySpec f = family_spec(family, dim, 1.0);
    acuteness::AcutenessReport r;
    {
        py::gil_scoped_release release;
        switch (f.family) {
            case Family::pinned:
                r = dim == 2 ? acuteness::pinned_obtuse_2d(opt) : acuteness::pinned_obtuse_ndim(dim, opt);
                break;
            case Family::pure: r = acuteness::pure_obtuse_ndim(dim, opt); break;
            case Family::staked: r = acuteness::staked_obtuse(opt); break;
            case Family::anchored: r = acuteness::anchored_obtuse(opt); break;
        }
    }
    py::dict d;
    d["p_obtuse_closed"] = r.p_obtuse_closed ? py::cast(*r.p_obtuse_closed) : py::none();
    d["p_obtuse_quad"] = r.p_obtuse_quad ? py::cast(r.p_obtuse_quad->value) : py::none();
    d["p_obtuse_mc"] = r.p_obtuse_mc ? py::object(estimate_dict(*r.p_obtuse_mc)) : py::none();
    d["table_value"] = r.table_value ? py::cast(r.table_value->value()) : py::none();
    d["table_string"] = r.table_value ? py::cast(r.table_value->to_string()) : py::none();
    d["conjectured"] = r.conjectured;
    d["table_discrepancy"] = r.table_discrepancy;
    d["quad_match"] = r.quad_match;
    d["mc_match"] = r.mc_match;
    return d;
}

suites::SuiteOptions suite_options(std::uint64_t n, std::uint64_t seed, unsigned workers) {
    suites::SuiteOptions o;
    o.mc_samples = n;
    o.gof_samples = std::min<std::uint64_t>(n, 100'000);
    o.seed = seed;
    o.mc.workers = workers;
    return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Random Gaussian triangles: samplers, densities, moments and acuteness";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<DegenerateTriangle>(m, "DegenerateTriangle", PyExc_ValueError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

    m.attr("DEFAULT_SEED") = moments::kDefaultSeed;

    m.def("erf", &specfun::erf, py::arg("x"));
    m.def("bessel_i", [](int k, double x) { return specfun::bessel_i(k, x); }, py::arg("order"), py::arg("x"));
    m.def("bessel_k", [](int k, double x) { return specfun::bessel_k(k, x); }, py::arg("order"), py::arg("x"));
    m.def("ellip_e", &specfun::ellip_e, py::arg("k"));
    m.def("goldstein_j", [](double p, double q) { return specfun::goldstein_j(p, q); }, py::arg("p"), py::arg("q"));

    m.def(
        "angles_from_sides",
        [](double a, double b, double c) {
            const auto t = angles_from_sides(TriangleSides(a, b, c));
            return std::make_tuple(t.alpha(), t.beta(), t.gamma());
        },
        py::arg("a"), py::arg("b"), py::arg("c"));
    m.def(
        "classify",
        [](double a, double b, double c) { return std::string(to_string(classify(angles_from_sides(TriangleSides(a, b, c))))); },
        py::arg("a"), py::arg("b"), py::arg("c"));

    m.def("sample", &sample_rows, py::arg("family") = "pinned", py::arg("dim") = 2, py::arg("c") = 1.0,
          py::arg("n") = 1000, py::arg("seed") = moments::kDefaultSeed, py::arg("workers") = 0u);

    m.def(
        "angle_density",
        [](const std::string& family, double x, double y, int dim, double c) {
            return densities::angle_density(family_spec(family, dim, c), {x, y});
        },
        py::arg("family"), py::arg("x"), py::arg("y"), py::arg("dim") = 2, py::arg("c") = 1.0);
    m.def("pinned_sides3", &densities::pinned_sides3, py::arg("x"), py::arg("y"), py::arg("z"));
    m.def("staked_sides", &densities::staked_sides, py::arg("c"), py::arg("x"), py::arg("y"));
    m.def("anchored_sides", &densities::anchored_sides, py::arg("c"), py::arg("x"), py::arg("y"));
    m.def("rice_density", &densities::rice_density, py::arg("x"), py::arg("nu"), py::arg("sigma"));
    m.def("pinned_angle_marginal_g", &densities::pinned_angle_marginal_g, py::arg("x"));
    m.def("pinned_angle_cdf_G", &densities::pinned_angle_cdf_G, py::arg("x"));

    m.def(
        "estimate_obtuse",
        [](const std::string& family, int dim, double c, std::uint64_t n, std::uint64_t seed, unsigned workers) {
            mc::McConfig cfg;
            cfg.workers = workers;
            const FamilySpec f = family_spec(family, dim, c);
            mc::Estimate e;
            {
                py::gil_scoped_release release;
                e = mc::estimate_probability(
                    f, [](const Triangle& t) { return classify(t.angles) == Shape::obtuse; }, n, seed, cfg);
            }
            return estimate_dict(e);
        },
        py::arg("family") = "pinned", py::arg("dim") = 2, py::arg("c") = 1.0, py::arg("n") = 1'000'000,
        py::arg("seed") = moments::kDefaultSeed, py::arg("workers") = 0u);

    m.def("acuteness", &acuteness_report, py::arg("family") = "pinned", py::arg("dim") = 2,
          py::arg("n") = 1'000'000, py::arg("seed") = moments::kDefaultSeed);

    m.def("pinned_E_ac", &moments::pinned_E_ac_closed);
    m.def("anchored_E_ab", &moments::anchored_E_ab_closed);
    m.def("staked_rice_mean", &moments::staked_rice_mean_closed);
    m.def("anchored_rice_mean", &moments::anchored_rice_mean_closed);

    m.def(
        "verify_json",
        [](std::uint64_t n, std::uint64_t seed, unsigned workers) {
            py::gil_scoped_release release;
            return suites::to_json(suites::verify_suite(suite_options(n, seed, workers)));
        },
        py::arg("n") = 1'000'000, py::arg("seed") = moments::kDefaultSeed, py::arg("workers") = 0u);
    m.def(
        "conjecture_json",
        [](int lo, int hi, std::uint64_t n, std::uint64_t seed, unsigned workers) {
            py::gil_scoped_release release;
            return suites::to_json(suites::conjecture_suite(lo, hi, suite_options(n, seed, workers)));
        },
        py::arg("lo") = 2, py::arg("hi") = 8, py::arg("n") = 1'000'000, py::arg("seed") = moments::kDefaultSeed,
        py::arg("workers") = 0u);
}
