#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "gausstri/error.hpp"
#include "gausstri/specfun.hpp"
#include "oracles.hpp"

using namespace gtri;
using namespace gtri::specfun;

TEST(Erf, ZeroAndSymmetry) {
    EXPECT_EQ(specfun::erf(0.0), 0.0);
    EXPECT_DOUBLE_EQ(specfun::erf(-0.3), -specfun::erf(0.3));
    for (double x = -6.0; x <= 6.0; x += 0.25) {
        EXPECT_LE(std::abs(specfun::erf(x)), 1.0);
        EXPECT_EQ(specfun::erf(-x), -specfun::erf(x));
    }
}

TEST(Erf, MatchesMaclaurinSeries) {
    EXPECT_NEAR(specfun::erf(1.0 / std::numbers::sqrt2), oracle::erf_maclaurin(1.0 / std::numbers::sqrt2), 1e-15);
    EXPECT_NEAR(specfun::erf(1.0 / std::numbers::sqrt2), 0.6826894921370859, 1e-15);
    for (double x : {0.01, 0.2, 0.5, 1.0, 1.7, 2.5}) EXPECT_NEAR(specfun::erf(x), oracle::erf_maclaurin(x), 2e-15) << x;
}

TEST(Erf, RejectsNonFinite) {
    EXPECT_THROW(specfun::erf(std::numeric_limits<double>::quiet_NaN()), DomainError);
    EXPECT_THROW(specfun::erf(std::numeric_limits<double>::infinity()), DomainError);
}

TEST(BesselI, SeriesConstantTerm) {
    EXPECT_EQ(bessel_i(0, 0.0), 1.0);
    EXPECT_EQ(bessel_i(1, 0.0), 0.0);
    EXPECT_NEAR(bessel_i(0, 0.25), oracle::bessel_i_series(0, 0.25), 1e-15);
    EXPECT_NEAR(bessel_i(0, 0.25), 1.015686141, 1e-9);
}

TEST(BesselI, MatchesSeriesAcrossOrdersAndArguments) {
    for (int m : {0, 1, 2, 5, 12})
        for (double x : {0.0625, 0.5, 1.0, 4.0, 10.0, 25.0})
            EXPECT_NEAR(bessel_i(m, x) / oracle::bessel_i_series(m, x), 1.0, 1e-13) << m << " " << x;
}

TEST(BesselI, LargeArgumentBranch) {
    // Above the series switch the value comes from Miller's recurrence.
    for (double x : {31.0, 50.0}) {
        EXPECT_NEAR(bessel_i(0, x) / oracle::bessel_i_series(0, x), 1.0, 1e-12);
        EXPECT_NEAR(bessel_i(3, x) / oracle::bessel_i_series(3, x), 1.0, 1e-12);
    }
    EXPECT_NEAR(bessel_i_scaled(0, 700.0) * std::sqrt(2.0 * std::numbers::pi * 700.0), 1.0, 1e-3);
}

TEST(BesselI, ScaledSequenceMatchesSingleValues) {
    for (double x : {0.3, 2.0, 40.0, 300.0}) {
        const auto seq = bessel_i_scaled_sequence(x, 30);
        ASSERT_EQ(seq.size(), 31u);
        for (int k = 0; k <= 30; k += 3) {
            const double single = bessel_i_scaled(k, x);
            EXPECT_NEAR(seq[k], single, 1e-13 * std::max(single, 1e-300) + 1e-300) << x << " " << k;
        }
    }
}

TEST(BesselI, DomainErrors) {
    EXPECT_THROW(bessel_i(-1, 1.0), DomainError);
    EXPECT_THROW(bessel_i(0, -1.0), DomainError);
}

TEST(BesselK, MatchesIntegralRepresentation) {
    EXPECT_NEAR(bessel_k(0, 1.0 / 16.0) / oracle::bessel_k_integral(0, 1.0 / 16.0), 1.0, 1e-12);
    EXPECT_NEAR(bessel_k(1, 1.0 / 16.0) / oracle::bessel_k_integral(1, 1.0 / 16.0), 1.0, 1e-12);
    for (double x : {0.01, 0.5, 1.9, 2.1, 5.0, 20.0})
        for (int m : {0, 1, 2})
            EXPECT_NEAR(bessel_k(m, x) / oracle::bessel_k_integral(m, x), 1.0, 1e-11) << m << " " << x;
}

TEST(BesselK, Wronskian) {
    for (double x : {1.0 / 16.0, 0.25, 1.0, 4.0}) {
        const double w = bessel_i(0, x) * bessel_k(1, x) + bessel_i(1, x) * bessel_k(0, x);
        EXPECT_NEAR(w * x, 1.0, 1e-12) << x;
    }
}

TEST(BesselK, DecreasingAndDomain) {
    double prev = bessel_k(0, 0.01);
    for (double x = 0.02; x < 10.0; x += 0.05) {
        const double k = bessel_k(0, x);
        EXPECT_GT(k, 0.0);
        EXPECT_LT(k, prev);
        prev = k;
    }
    EXPECT_THROW(bessel_k(0, 0.0), DomainError);
    EXPECT_THROW(bessel_k(1, -1.0), DomainError);
}

TEST(EllipE, EndpointsAndQuadratureGrid) {
    EXPECT_NEAR(ellip_e(0.0), std::numbers::pi / 2.0, 1e-15);
    EXPECT_EQ(ellip_e(1.0), 1.0);
    EXPECT_NEAR(ellip_e(0.5), oracle::ellip_e_integral(0.5), 1e-12);
    double prev = ellip_e(0.0);
    for (int i = 0; i < 100; ++i) {
        const double k = i / 99.0;
        const double e = ellip_e(k);
        EXPECT_NEAR(e, oracle::ellip_e_integral(k), 1e-10) << k;
        EXPECT_LE(e, prev + 1e-15);
        EXPECT_GE(e, 1.0 - 1e-15);
        prev = e;
    }
    EXPECT_THROW(ellip_e(-0.1), DomainError);
    EXPECT_THROW(ellip_e(1.1), DomainError);
}

TEST(IncompleteGamma, KnownValues) {
    for (double x : {0.1, 1.0, 3.0, 20.0}) {
        EXPECT_NEAR(gamma_p(1.0, x), -std::expm1(-x), 1e-14);
        EXPECT_NEAR(gamma_p(2.5, x) + gamma_q(2.5, x), 1.0, 1e-14);
    }
    // chi-square with 2 dof: survival e^{-x/2}.
    EXPECT_NEAR(gamma_q(1.0, 5.0), std::exp(-5.0), 1e-15);
}

TEST(Goldstein, TrivialCases) {
    EXPECT_NEAR(goldstein_j(0.0, 1.0), 1.0 - std::exp(-1.0), 1e-15);
    EXPECT_EQ(goldstein_j(0.125, 0.0), 0.0);
}

TEST(Goldstein, CircleIdentity) {
    const double lhs = std::exp(-0.125) * goldstein_j(0.125, 0.125);
    const double rhs = 0.5 * (1.0 - std::exp(-0.25) * oracle::bessel_i_series(0, 0.25));
    EXPECT_NEAR(lhs, rhs, 1e-14);
}

TEST(Goldstein, MatchesBruteForceAndBounds) {
    for (double p : {0.0, 0.125, 0.5, 1.0})
        for (double q : {0.05, 0.125, 0.5, 1.0}) {
            const double j = goldstein_j(p, q);
            EXPECT_NEAR(j, oracle::goldstein_bruteforce(p, q), 1e-8) << p << " " << q;
            EXPECT_GE(j, 0.0);
            // J <= q only holds while p stays small against 1/q; this grid stays there.
            EXPECT_LE(j, q);
        }
    EXPECT_THROW(goldstein_j(-1.0, 1.0), DomainError);
    EXPECT_THROW(goldstein_j(1.0, -1.0), DomainError);
}

TEST(SpecTolerance, Validates) {
    EXPECT_THROW((SpecTolerance{0.0, 10}.validate()), DomainError);
    EXPECT_THROW((SpecTolerance{1e-12, 0}.validate()), DomainError);
    EXPECT_NO_THROW(SpecTolerance{}.validate());
}
