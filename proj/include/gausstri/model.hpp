#pragma once

#include <optional>
#include <span>
#include <string_view>

namespace gtri {

// Labeling used throughout: vertex A is opposite side a, B opposite b and
// C opposite c. For pinned triangles C is the origin; for staked and
// anchored triangles A and B are the fixed vertices and C is random.

/// Relative slack on the triangle inequality below which a triple is
/// treated as degenerate.
inline constexpr double kDegeneracyThreshold = 1e-14;

class TriangleSides {
public:
    /// Throws DegenerateTriangle unless |a - b| < c < a + b (with slack).
    TriangleSides(double a, double b, double c);

    /// Non-throwing variant for samplers.
    static std::optional<TriangleSides> make(double a, double b, double c) noexcept;

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    double c() const noexcept { return c_; }

    friend bool operator==(const TriangleSides&, const TriangleSides&) = default;

private:
    struct Unchecked {};
    TriangleSides(double a, double b, double c, Unchecked) noexcept : a_(a), b_(b), c_(c) {}

    double a_;
    double b_;
    double c_;
};

class TriangleAngles {
public:
    /// Throws DomainError unless every angle is in (0, pi) and the sum is pi
    /// within 1e-12.
    TriangleAngles(double alpha, double beta, double gamma);

    /// gamma = pi - alpha - beta.
    static TriangleAngles from_pair(double alpha, double beta);

    double alpha() const noexcept { return alpha_; }
    double beta() const noexcept { return beta_; }
    double gamma() const noexcept { return gamma_; }
    double largest() const noexcept;

private:
    double alpha_;
    double beta_;
    double gamma_;
};

enum class Family { pinned, staked, anchored, pure };

std::string_view to_string(Family f) noexcept;
Family family_from_string(std::string_view name);

/// Which triangle family, in which ambient dimension, with which base length.
/// The base length is only meaningful for staked and anchored triangles.
struct FamilySpec {
    Family family = Family::pinned;
    int dim = 2;
    double c = 1.0;

    void validate() const;
};

enum class Shape { acute, right, obtuse };

std::string_view to_string(Shape s) noexcept;

/// Heron product (a+b+c)(-a+b+c)(a-b+c)(a+b-c) = 16 * area^2.
double delta(const TriangleSides& sides) noexcept;

/// Angles opposite a, b, c, from atan2(sqrt(delta), cosine numerator). The
/// largest angle is pi minus the other two, which also keeps (3, 4, 5) exact.
TriangleAngles angles_from_sides(const TriangleSides& sides);

/// Sides with the given base c: a = c sin(alpha) / sin(alpha+beta), etc.
TriangleSides sides_from_angles(double alpha, double beta, double c);

/// a = |p2 - p3|, b = |p1 - p3|, c = |p1 - p2|.
TriangleSides sides_from_vertices(std::span<const double> p1, std::span<const double> p2,
                                  std::span<const double> p3);

/// Exact comparison of the largest angle against pi/2.
Shape classify(const TriangleAngles& angles) noexcept;

/// Sides and angles of one realized triangle.
struct Triangle {
    TriangleSides sides;
    TriangleAngles angles;

    explicit Triangle(const TriangleSides& s) : sides(s), angles(angles_from_sides(s)) {}
};

}  // namespace gtri
