#include "gausstri/samplers.hpp"

#include <array>
#include <cmath>

#include "gausstri/error.hpp"

namespace gtri {

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id) : seed_(seed), stream_id_(stream_id) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream_id), static_cast<std::uint32_t>(stream_id >> 32)};
    engine_.seed(seq);
}

double RngStream::uniform() noexcept { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double RngStream::normal() noexcept {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u = 0.0, v = 0.0, s = 0.0;
    do {
        u = 2.0 * uniform() - 1.0;
        v = 2.0 * uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
}

namespace {

void require_dim(int dim) {
    if (dim < 2) throw DomainError("sampler: dim must be >= 2");
}

void require_base(double c) {
    if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("sampler: c must be positive and finite");
}

// Draw until the triple is a proper triangle; degenerate draws are counted.
template <class Draw>
TriangleSides draw_until_proper(RngStream& rng, Draw&& draw) {
    for (;;) {
        const std::array<double, 3> s = draw();
        if (auto t = TriangleSides::make(s[0], s[1], s[2])) return *t;
        rng.note_rejection();
    }
}

}  // namespace

TriangleSides sample_pinned(int dim, RngStream& rng) {
    require_dim(dim);
    return draw_until_proper(rng, [&] {
        double a2 = 0.0, b2 = 0.0, c2 = 0.0;
        for (int i = 0; i < dim; ++i) {
            const double pa = rng.normal();
            const double pb = rng.normal();
            b2 += pa * pa;  // |A - C|
            a2 += pb * pb;  // |B - C|
            c2 += (pa - pb) * (pa - pb);
        }
        return std::array{std::sqrt(a2), std::sqrt(b2), std::sqrt(c2)};
    });
}

TriangleSides sample_staked(double c, RngStream& rng) {
    require_base(c);
    return draw_until_proper(rng, [&] {
        const double u = rng.normal();
        const double v = rng.normal();
        return std::array{std::hypot(u, v), std::hypot(u - c, v), c};
    });
}

TriangleSides sample_anchored(double c, RngStream& rng) {
    require_base(c);
    const double half = 0.5 * c;
    return draw_until_proper(rng, [&] {
        const double u = rng.normal();
        const double v = rng.normal();
        return std::array{std::hypot(u + half, v), std::hypot(u - half, v), c};
    });
}

TriangleSides sample_pure(int dim, RngStream& rng) {
    require_dim(dim);
    return draw_until_proper(rng, [&] {
        double a2 = 0.0, b2 = 0.0, c2 = 0.0;
        for (int i = 0; i < dim; ++i) {
            const double pa = rng.normal();
            const double pb = rng.normal();
            const double pc = rng.normal();
            a2 += (pb - pc) * (pb - pc);
            b2 += (pa - pc) * (pa - pc);
            c2 += (pa - pb) * (pa - pb);
        }
        return std::array{std::sqrt(a2), std::sqrt(b2), std::sqrt(c2)};
    });
}

TriangleSides sample(const FamilySpec& family, RngStream& rng) {
    switch (family.family) {
        case Family::pinned: return sample_pinned(family.dim, rng);
        case Family::staked: return sample_staked(family.c, rng);
        case Family::anchored: return sample_anchored(family.c, rng);
        case Family::pure: return sample_pure(family.dim, rng);
    }
    throw DomainError("sample: unknown family");
}

}  // namespace gtri
