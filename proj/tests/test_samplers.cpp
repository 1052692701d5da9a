#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "gausstri/error.hpp"
#include "gausstri/montecarlo.hpp"
#include "gausstri/samplers.hpp"

using namespace gtri;

namespace {

struct Means {
    double a = 0, b = 0, c = 0, a2 = 0, b2 = 0, c2 = 0;
};

Means sample_means(const FamilySpec& f, int n, std::uint64_t seed) {
    RngStream rng(seed, 0);
    Means m;
    for (int i = 0; i < n; ++i) {
        const auto s = sample(f, rng);
        m.a += s.a();
        m.b += s.b();
        m.c += s.c();
        m.a2 += s.a() * s.a();
        m.b2 += s.b() * s.b();
        m.c2 += s.c() * s.c();
    }
    for (double* v : {&m.a, &m.b, &m.c, &m.a2, &m.b2, &m.c2}) *v /= n;
    return m;
}

constexpr int kN = 200000;

}  // namespace

TEST(RngStream, DeterministicPerSeedAndStream) {
    RngStream r1(42, 3), r2(42, 3), r3(42, 4), r4(43, 3);
    bool differs3 = false, differs4 = false;
    for (int i = 0; i < 1000; ++i) {
        const double x = r1.normal();
        EXPECT_EQ(x, r2.normal());
        differs3 |= (x != r3.normal());
        differs4 |= (x != r4.normal());
    }
    EXPECT_TRUE(differs3);
    EXPECT_TRUE(differs4);
}

TEST(RngStream, UniformAndNormalMoments) {
    RngStream rng(1, 0);
    double su = 0, sn = 0, sn2 = 0;
    for (int i = 0; i < kN; ++i) {
        const double u = rng.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        su += u;
        const double z = rng.normal();
        sn += z;
        sn2 += z * z;
    }
    EXPECT_NEAR(su / kN, 0.5, 5 * std::sqrt(1.0 / 12.0 / kN));
    EXPECT_NEAR(sn / kN, 0.0, 5 / std::sqrt(double(kN)));
    EXPECT_NEAR(sn2 / kN, 1.0, 5 * std::sqrt(2.0 / kN));
}

TEST(Samplers, PinnedPlanarMeans) {
    const auto m = sample_means({Family::pinned, 2, 1.0}, kN, 5);
    // a, b ~ Rayleigh(1); c ~ Rayleigh(sqrt 2).
    const double ea = std::sqrt(std::numbers::pi / 2.0);
    const double sd = std::sqrt(2.0 - ea * ea);
    EXPECT_NEAR(m.a, ea, 5 * sd / std::sqrt(double(kN)));
    EXPECT_NEAR(m.b, ea, 5 * sd / std::sqrt(double(kN)));
    EXPECT_NEAR(m.c, std::sqrt(std::numbers::pi), 5 * std::sqrt(2.0) * sd / std::sqrt(double(kN)));
    EXPECT_NEAR(m.c2, 4.0, 5 * 4.0 / std::sqrt(double(kN)));
}

TEST(Samplers, PinnedAndPureMeanSquaresInHigherDimension) {
    for (int n : {3, 5}) {
        const auto p = sample_means({Family::pinned, n, 1.0}, kN / 4, 10 + n);
        const double tol = 5 * std::sqrt(2.0 * n) / std::sqrt(kN / 4.0);
        EXPECT_NEAR(p.a2, n, tol);
        EXPECT_NEAR(p.b2, n, tol);
        EXPECT_NEAR(p.c2, 2.0 * n, 2 * tol);
        const auto q = sample_means({Family::pure, n, 1.0}, kN / 4, 20 + n);
        for (double v : {q.a2, q.b2, q.c2}) EXPECT_NEAR(v, 2.0 * n, 2 * tol);
    }
}

TEST(Samplers, StakedAndAnchoredFixedSide) {
    const auto s = sample_means({Family::staked, 2, 1.0}, kN, 6);
    EXPECT_DOUBLE_EQ(s.c, 1.0);
    // a = |C| is Rayleigh(1); b = |C - A| has E b^2 = 2 + 1.
    EXPECT_NEAR(s.a, std::sqrt(std::numbers::pi / 2.0), 5 * 0.66 / std::sqrt(double(kN)));
    EXPECT_NEAR(s.b2, 3.0, 5 * 3.0 / std::sqrt(double(kN)));

    const auto t = sample_means({Family::anchored, 2, 2.0}, kN, 7);
    EXPECT_DOUBLE_EQ(t.c, 2.0);
    EXPECT_NEAR(t.a2, 3.0, 5 * 3.0 / std::sqrt(double(kN)));
    EXPECT_NEAR(t.b2, 3.0, 5 * 3.0 / std::sqrt(double(kN)));
}

TEST(Samplers, PinnedSidesAExchangeableWithB) {
    RngStream rng(99, 0);
    std::vector<double> a, b;
    for (int i = 0; i < 20000; ++i) {
        const auto s = sample_pinned(2, rng);
        a.push_back(s.a());
        b.push_back(s.b());
    }
    EXPECT_GT(mc::ks_two_sample(a, b).p_value, 1e-3);
    // Rayleigh CDF for a.
    EXPECT_GT(mc::ks_test(a, [](double x) { return x <= 0 ? 0.0 : -std::expm1(-x * x / 2.0); }).p_value, 1e-3);
}

TEST(Samplers, RejectsBadFamilies) {
    RngStream rng(1, 0);
    EXPECT_THROW(sample({Family::staked, 2, 0.0}, rng), DomainError);
    EXPECT_THROW(sample({Family::pinned, 1, 1.0}, rng), DomainError);
}
