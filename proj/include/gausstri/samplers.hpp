#pragma once

#include <cstdint>
#include <random>

#include "gausstri/model.hpp"

namespace gtri {

/// A reproducible stream of standard normals.
///
/// The engine is mt19937_64 seeded from (seed, stream_id) through
/// std::seed_seq; uniforms take the top 53 bits and normals use the
/// Marsaglia polar method. All three steps are fully specified, so a given
/// (seed, stream_id) yields the same sequence on every conforming platform.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id);

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream_id() const noexcept { return stream_id_; }

    /// Uniform on [0, 1).
    double uniform() noexcept;
    double normal() noexcept;

    /// Degenerate draws discarded by the samplers on this stream.
    std::uint64_t rejections() const noexcept { return rejections_; }
    void note_rejection() noexcept { ++rejections_; }

private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
    std::uint64_t rejections_ = 0;
};

/// Vertex C at the origin, A and B i.i.d. standard normal in R^dim.
TriangleSides sample_pinned(int dim, RngStream& rng);

/// A = (c, 0), B = (0, 0), C standard normal in the plane.
TriangleSides sample_staked(double c, RngStream& rng);

/// A = (c/2, 0), B = (-c/2, 0), C standard normal in the plane.
TriangleSides sample_anchored(double c, RngStream& rng);

/// A, B, C i.i.d. standard normal in R^dim.
TriangleSides sample_pure(int dim, RngStream& rng);

/// Dispatch on FamilySpec.
TriangleSides sample(const FamilySpec& family, RngStream& rng);

}  // namespace gtri
