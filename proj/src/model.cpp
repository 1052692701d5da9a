#include "gausstri/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "gausstri/error.hpp"

namespace gtri {

namespace {

bool proper_triangle(double a, double b, double c) noexcept {
    if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(c))) return false;
    if (!(a > 0.0 && b > 0.0 && c > 0.0)) return false;
    const double slack = kDegeneracyThreshold * (a + b + c);
    return (a + b - c) > slack && (a - b + c) > slack && (-a + b + c) > slack;
}

}  // namespace

TriangleSides::TriangleSides(double a, double b, double c) : a_(a), b_(b), c_(c) {
    if (!proper_triangle(a, b, c))
        throw DegenerateTriangle("sides (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                                 std::to_string(c) + ") do not form a proper triangle");
}

std::optional<TriangleSides> TriangleSides::make(double a, double b, double c) noexcept {
    if (!proper_triangle(a, b, c)) return std::nullopt;
    return TriangleSides(a, b, c, Unchecked{});
}

TriangleAngles::TriangleAngles(double alpha, double beta, double gamma)
    : alpha_(alpha), beta_(beta), gamma_(gamma) {
    const double pi = std::numbers::pi;
    for (double t : {alpha, beta, gamma})
        if (!(t > 0.0 && t < pi)) throw DomainError("TriangleAngles: each angle must lie in (0, pi)");
    if (std::abs(alpha + beta + gamma - pi) > 1e-12) throw DomainError("TriangleAngles: angles must sum to pi");
}

TriangleAngles TriangleAngles::from_pair(double alpha, double beta) {
    return TriangleAngles(alpha, beta, std::numbers::pi - alpha - beta);
}

double TriangleAngles::largest() const noexcept { return std::max({alpha_, beta_, gamma_}); }

std::string_view to_string(Family f) noexcept {
    switch (f) {
        case Family::pinned: return "pinned";
        case Family::staked: return "staked";
        case Family::anchored: return "anchored";
        case Family::pure: return "pure";
    }
    return "unknown";
}

Family family_from_string(std::string_view name) {
    if (name == "pinned") return Family::pinned;
    if (name == "staked") return Family::staked;
    if (name == "anchored") return Family::anchored;
    if (name == "pure") return Family::pure;
    throw DomainError("unknown triangle family '" + std::string(name) + "'");
}

void FamilySpec::validate() const {
    if (dim < 2) throw DomainError("FamilySpec: dim must be >= 2");
    if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("FamilySpec: c must be positive and finite");
    if ((family == Family::staked || family == Family::anchored) && dim != 2)
        throw DomainError("FamilySpec: staked and anchored triangles are planar only");
}

std::string_view to_string(Shape s) noexcept {
    switch (s) {
        case Shape::acute: return "acute";
        case Shape::right: return "right";
        case Shape::obtuse: return "obtuse";
    }
    return "unknown";
}

double delta(const TriangleSides& s) noexcept {
    // Kahan's ordering p >= q >= r keeps every factor free of cancellation.
    double p = s.a(), q = s.b(), r = s.c();
    if (p < q) std::swap(p, q);
    if (q < r) std::swap(q, r);
    if (p < q) std::swap(p, q);
    return (p + (q + r)) * (r - (p - q)) * (r + (p - q)) * (p + (q - r));
}

TriangleAngles angles_from_sides(const TriangleSides& s) {
    const double a = s.a(), b = s.b(), c = s.c();
    const double root = std::sqrt(delta(s));
    // tan(alpha) = sqrt(delta) / (b^2 + c^2 - a^2), and cyclically. The
    // numerator of the largest angle cancels badly for thin triangles, so
    // that angle is taken as the complement of the other two.
    const double alpha = std::atan2(root, b * b + c * c - a * a);
    const double beta = std::atan2(root, a * a + c * c - b * b);
    const double gamma = std::atan2(root, a * a + b * b - c * c);
    const double pi = std::numbers::pi;
    if (a >= b && a >= c) return TriangleAngles(pi - beta - gamma, beta, gamma);
    if (b >= c) return TriangleAngles(alpha, pi - alpha - gamma, gamma);
    return TriangleAngles(alpha, beta, pi - alpha - beta);
}

TriangleSides sides_from_angles(double alpha, double beta, double c) {
    const auto angles = TriangleAngles::from_pair(alpha, beta);
    const double s = std::sin(alpha + beta);
    return TriangleSides(c * std::sin(angles.alpha()) / s, c * std::sin(angles.beta()) / s, c);
}

TriangleSides sides_from_vertices(std::span<const double> p1, std::span<const double> p2,
                                  std::span<const double> p3) {
    if (p1.size() != p2.size() || p1.size() != p3.size())
        throw DomainError("sides_from_vertices: points must share one dimension");
    if (p1.size() < 2) throw DomainError("sides_from_vertices: dimension must be >= 2");
    double a2 = 0.0, b2 = 0.0, c2 = 0.0;
    for (std::size_t i = 0; i < p1.size(); ++i) {
        const double d23 = p2[i] - p3[i];
        const double d13 = p1[i] - p3[i];
        const double d12 = p1[i] - p2[i];
        a2 += d23 * d23;
        b2 += d13 * d13;
        c2 += d12 * d12;
    }
    return TriangleSides(std::sqrt(a2), std::sqrt(b2), std::sqrt(c2));
}

Shape classify(const TriangleAngles& angles) noexcept {
    const double largest = angles.largest();
    const double right = std::numbers::pi / 2.0;
    if (largest > right) return Shape::obtuse;
    if (largest == right) return Shape::right;
    return Shape::acute;
}

}  // namespace gtri
