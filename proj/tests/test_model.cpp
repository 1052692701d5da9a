#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "gausstri/error.hpp"
#include "gausstri/model.hpp"

using namespace gtri;

namespace {

constexpr double kPi = std::numbers::pi;

// Law of cosines in long double; the sign of the largest-side excess decides the shape.
Shape classify_by_sides(double a, double b, double c) {
    std::array<long double, 3> s{a, b, c};
    std::sort(s.begin(), s.end());
    const long double excess = s[2] * s[2] - s[0] * s[0] - s[1] * s[1];
    if (excess > 0) return Shape::obtuse;
    if (excess == 0) return Shape::right;
    return Shape::acute;
}

}  // namespace

TEST(TriangleSides, RejectsDegenerateAndInvalid) {
    EXPECT_THROW(TriangleSides(1.0, 2.0, 3.0), DegenerateTriangle);
    EXPECT_THROW(TriangleSides(1.0, 1.0, 2.0 + 1e-3), DegenerateTriangle);
    EXPECT_THROW(TriangleSides(0.0, 1.0, 1.0), DegenerateTriangle);
    EXPECT_THROW(TriangleSides(-1.0, 1.0, 1.0), DegenerateTriangle);
    EXPECT_THROW(TriangleSides(std::nan(""), 1.0, 1.0), DegenerateTriangle);
    EXPECT_FALSE(TriangleSides::make(1.0, 2.0, 3.0).has_value());
    EXPECT_TRUE(TriangleSides::make(1.0, 2.0, 2.5).has_value());
}

TEST(TriangleAngles, ValidatesSumAndRange) {
    EXPECT_THROW(TriangleAngles(1.0, 1.0, 1.0), DomainError);
    EXPECT_THROW(TriangleAngles(kPi, 0.0, 0.0), DomainError);
    EXPECT_NO_THROW(TriangleAngles::from_pair(1.0, 1.0));
    EXPECT_DOUBLE_EQ(TriangleAngles::from_pair(0.5, 0.7).gamma(), kPi - 1.2);
}

TEST(AnglesFromSides, RightTriangleIsExact) {
    const Triangle t(TriangleSides(3.0, 4.0, 5.0));
    EXPECT_EQ(t.angles.gamma(), kPi / 2.0);
    EXPECT_EQ(classify(t.angles), Shape::right);
    EXPECT_NEAR(t.angles.alpha(), std::atan2(3.0, 4.0), 1e-15);
}

TEST(AnglesFromSides, EquilateralAndObtuseExamples) {
    const Triangle eq(TriangleSides(1.0, 1.0, 1.0));
    for (double t : {eq.angles.alpha(), eq.angles.beta(), eq.angles.gamma()}) EXPECT_NEAR(t, kPi / 3.0, 1e-15);
    EXPECT_EQ(classify(eq.angles), Shape::acute);

    const Triangle ob(TriangleSides(2.0, 2.0, 3.0));
    EXPECT_NEAR(ob.angles.gamma(), std::acos(-1.0 / 8.0), 1e-14);
    EXPECT_EQ(classify(ob.angles), Shape::obtuse);
}

TEST(AnglesFromSides, RandomTriplesSumToPiAndClassifyBySides) {
    std::mt19937_64 gen(7);
    std::normal_distribution<double> n01;
    int checked = 0;
    for (int i = 0; i < 100000; ++i) {
        const std::array<double, 2> p1{n01(gen), n01(gen)}, p2{n01(gen), n01(gen)}, p3{n01(gen), n01(gen)};
        const double a = std::hypot(p2[0] - p3[0], p2[1] - p3[1]);
        const double b = std::hypot(p1[0] - p3[0], p1[1] - p3[1]);
        const double c = std::hypot(p1[0] - p2[0], p1[1] - p2[1]);
        const auto sides = TriangleSides::make(a, b, c);
        if (!sides) continue;
        const auto angles = angles_from_sides(*sides);
        ASSERT_NEAR(angles.alpha() + angles.beta() + angles.gamma(), kPi, 1e-12);
        // Skip near-right triangles, where the rounding of the sides decides.
        const double m = std::max({a, b, c});
        const double excess = 2.0 * m * m - (a * a + b * b + c * c);
        if (std::abs(excess) < 1e-10 * m * m) continue;
        ASSERT_EQ(classify(angles), classify_by_sides(a, b, c)) << a << " " << b << " " << c;
        // Law of sines.
        ASSERT_NEAR(a / std::sin(angles.alpha()), c / std::sin(angles.gamma()), 1e-9 * (a / std::sin(angles.alpha())));
        ++checked;
    }
    EXPECT_GT(checked, 99000);
}

TEST(AnglesFromSides, ThinTriangles) {
    const Triangle t(TriangleSides(1.0, 1e-7, 1.0 - 0.5e-7));
    EXPECT_NEAR(t.angles.alpha() + t.angles.beta() + t.angles.gamma(), kPi, 1e-12);
    EXPECT_EQ(classify(t.angles), Shape::obtuse);
}

TEST(SidesFromVertices, LabelsOppositeVertices) {
    const std::array<double, 2> A{0.0, 0.0}, B{3.0, 0.0}, C{0.0, 4.0};
    const auto s = sides_from_vertices(A, B, C);
    EXPECT_DOUBLE_EQ(s.a(), 5.0);
    EXPECT_DOUBLE_EQ(s.b(), 4.0);
    EXPECT_DOUBLE_EQ(s.c(), 3.0);
    const std::array<double, 3> d3{0.0, 0.0, 1.0};
    EXPECT_THROW(sides_from_vertices(A, B, d3), DomainError);
    EXPECT_THROW(sides_from_vertices(A, A, C), DegenerateTriangle);
}

TEST(SidesFromAngles, RoundTrip) {
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> u(0.01, 0.99);
    for (int i = 0; i < 1000; ++i) {
        const double alpha = u(gen) * kPi;
        const double beta = u(gen) * (kPi - alpha);
        if (kPi - alpha - beta < 1e-3) continue;
        const auto sides = sides_from_angles(alpha, beta, 1.7);
        EXPECT_DOUBLE_EQ(sides.c(), 1.7);
        const auto back = angles_from_sides(sides);
        EXPECT_NEAR(back.alpha(), alpha, 1e-11);
        EXPECT_NEAR(back.beta(), beta, 1e-11);
    }
}

TEST(Delta, HeronProduct) {
    EXPECT_DOUBLE_EQ(delta(TriangleSides(3.0, 4.0, 5.0)), 16.0 * 36.0);
    EXPECT_NEAR(delta(TriangleSides(1.0, 1.0, 1.0)), 3.0, 1e-15);
}

TEST(FamilySpec, ValidationAndNames) {
    EXPECT_THROW((FamilySpec{Family::staked, 3, 1.0}.validate()), DomainError);
    EXPECT_THROW((FamilySpec{Family::pinned, 1, 1.0}.validate()), DomainError);
    EXPECT_THROW((FamilySpec{Family::anchored, 2, 0.0}.validate()), DomainError);
    EXPECT_NO_THROW((FamilySpec{Family::pure, 5, 1.0}.validate()));
    for (Family f : {Family::pinned, Family::staked, Family::anchored, Family::pure})
        EXPECT_EQ(family_from_string(to_string(f)), f);
    EXPECT_THROW(family_from_string("loose"), DomainError);
    EXPECT_EQ(to_string(Shape::right), "right");
}
