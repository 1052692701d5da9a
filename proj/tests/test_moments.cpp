#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "gausstri/error.hpp"
#include "gausstri/moments.hpp"
#include "oracles.hpp"

using namespace gtri;
using namespace gtri::moments;

namespace {

constexpr double kPi = std::numbers::pi;

// E g(C) for C standard normal in the plane, in polar coordinates about the
// origin. g may have an isolated kink; adaptive Simpson copes with it.
double gaussian_plane_oracle(const std::function<double(double, double)>& g) {
    return oracle::simpson(
               [&](double r) {
                   return r * std::exp(-r * r / 2) *
                          oracle::simpson([&](double t) { return g(r, t); }, 0.0, 2 * kPi, 1e-11, 30);
               },
               0.0, 12.0, 1e-10, 30) /
           (2 * kPi);
}

// 2F1(-1/2, -1/2; 1; x) by its series.
double hyp_half(double x) {
    double s = 0, t = 1;
    for (int n = 0; n < 400; ++n) {
        s += t;
        t *= (n - 0.5) * (n - 0.5) / ((n + 1.0) * (n + 1.0)) * x;
    }
    return s;
}

MomentOptions no_mc() {
    MomentOptions o;
    o.mc_samples = 0;
    return o;
}

}  // namespace

TEST(PinnedCross, EacMatchesHypergeometricOracle) {
    // E |X||Y| for planar Gaussians with componentwise correlation r is
    // (pi/2) 2F1(-1/2, -1/2; 1; r^2) per unit variance; here r^2 = 1/2 and
    // |A - B| has variance 2.
    const double oracle_value = std::numbers::sqrt2 * kPi / 2 * hyp_half(0.5);
    EXPECT_NEAR(pinned_E_ac_closed(), oracle_value, 1e-14);
    EXPECT_NEAR(pinned_E_ac_published(), std::sqrt(2 * kPi), 1e-15);
    EXPECT_GT(pinned_E_ac_closed() - pinned_E_ac_published(), 2.5e-3);
}

TEST(PinnedCross, QuadratureAgreesWithClosedForms) {
    const auto r = pinned_side_cross_moments(no_mc());
    ASSERT_EQ(r.size(), 2u);
    EXPECT_EQ(r[0].name, "E_ab");
    EXPECT_NEAR(r[0].closed_form.value(), kPi / 2, 1e-15);
    for (const auto& m : r) {
        EXPECT_TRUE(m.consistent) << m.name;
        EXPECT_NEAR(m.quadrature->value, *m.closed_form, 1e-6) << m.name;
        EXPECT_FALSE(m.mc.has_value());
    }
}

TEST(PinnedAngles, MomentsConsistentAndSymmetric) {
    const auto r = pinned_angle_moments(no_mc());
    ASSERT_EQ(r.size(), 8u);
    std::map<std::string, double> v;
    for (const auto& m : r) {
        EXPECT_TRUE(m.consistent) << m.name;
        v[m.name] = m.closed_form.value();
    }
    // E alpha = E beta, and the three means add to pi.
    EXPECT_NEAR(2 * v["E_alpha"] + v["E_gamma"], kPi, 1e-12);
    EXPECT_NEAR(v["rho_alpha_beta"], -0.226, 5e-4);
    EXPECT_NEAR(v["rho_alpha_gamma"], -0.622, 5e-4);
}

TEST(StakedEab, InnerIntegralAndOracle) {
    for (double x : {0.2, 0.9, 1.0, 1.1, 3.0})
        EXPECT_NEAR(staked_inner_integral(x).value, staked_inner_integral_elliptic(x), 1e-10) << x;
    const auto r = staked_E_ab(no_mc());
    EXPECT_TRUE(r.consistent);
    const double ref = gaussian_plane_oracle(
        [](double rr, double t) { return rr * std::sqrt(rr * rr - 2 * rr * std::cos(t) + 1); });
    EXPECT_NEAR(*r.closed_form, ref, 1e-8);
    EXPECT_NEAR(r.quadrature->value, ref, 1e-7);
}

TEST(AnchoredEab, ClosedFormAgainstOracle) {
    const double ref = gaussian_plane_oracle([](double rr, double t) {
        return std::sqrt(rr * rr - rr * std::cos(t) + 0.25) * std::sqrt(rr * rr + rr * std::cos(t) + 0.25);
    });
    EXPECT_NEAR(anchored_E_ab_closed(), ref, 1e-8);
    EXPECT_NEAR(anchored_E_ab_uv().value, anchored_E_ab_closed(), 1e-9);
    // Independent Bessel values from the test oracles.
    const double z = 1.0 / 16;
    const double i0 = oracle::bessel_i_series(0, z), i1 = oracle::bessel_i_series(1, z);
    const double k0 = oracle::bessel_k_integral(0, z), k1 = oracle::bessel_k_integral(1, z);
    EXPECT_NEAR(anchored_E_ab_closed(), (i0 * k0 + 8 * i0 * k1 - 8 * i1 * k0 + i1 * k1) / 64, 1e-12);
}

TEST(Rice, ClosedMeansAgainstIntegral) {
    auto mean = [](double nu) {
        return oracle::simpson(
            [&](double x) { return x * x * std::exp(-(x * x + nu * nu) / 2) * oracle::bessel_i_series(0, x * nu); },
            0.0, 14.0, 1e-13);
    };
    EXPECT_NEAR(staked_rice_mean_closed(), mean(1.0), 1e-11);
    EXPECT_NEAR(anchored_rice_mean_closed(), mean(0.5), 1e-11);
    const auto rm = rice_mean_meansq(1.0, 1.0);
    EXPECT_NEAR(rm.mean.value, mean(1.0), 1e-9);
    EXPECT_NEAR(rm.mean_square.value, 3.0, 1e-9);  // nu^2 + 2 sigma^2
    for (const auto& r : rice_marginal_moments(no_mc())) EXPECT_TRUE(r.consistent) << r.name;
}

TEST(Generic, QuadratureAndMonteCarlo) {
    MomentOptions opt;
    opt.mc_samples = 40000;
    const FamilySpec pinned{Family::pinned, 2, 1.0};
    const mc::TriangleFunction ab = [](const Triangle& t) { return t.sides.a() * t.sides.b(); };
    const auto q = generic_moment(pinned, ab, Method::quadrature, opt, "ab");
    EXPECT_NEAR(q.quadrature->value, kPi / 2, 1e-6);
    const auto m = generic_moment(pinned, ab, Method::mc, opt, "ab");
    EXPECT_NEAR(m.mc->value, kPi / 2, 4 * m.mc->std_error);

    const FamilySpec staked{Family::staked, 2, 1.0};
    const auto a = generic_moment(staked, [](const Triangle& t) { return t.sides.a(); }, Method::quadrature, opt);
    EXPECT_NEAR(a.quadrature->value, std::sqrt(kPi / 2), 1e-6);

    EXPECT_THROW(generic_moment({Family::pure, 3, 1.0}, ab, Method::quadrature, opt), DomainError);
}

TEST(MomentReport, CheckLogic) {
    MomentReport r;
    r.closed_form = 1.0;
    r.quadrature = numerics::QuadResult{1.0 + 1e-8, 0.0, 1};
    r.mc = mc::Estimate{1.02, 0.01, 10000, 1, 0};
    r.check(1e-6);
    EXPECT_TRUE(r.consistent);
    EXPECT_DOUBLE_EQ(r.tolerance, 0.03);
    r.mc->value = 1.05;
    r.check(1e-6);
    EXPECT_FALSE(r.consistent);
}
