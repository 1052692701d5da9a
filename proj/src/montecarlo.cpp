#include "gausstri/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <thread>

#include "gausstri/error.hpp"
#include "gausstri/samplers.hpp"
#include "gausstri/specfun.hpp"

namespace gtri::mc {

namespace {

constexpr double kPi = std::numbers::pi;

void require_samples(std::uint64_t n) {
    if (n < kMinSamples) throw DomainError("Monte Carlo estimates need at least 100 samples");
}

// Welford running moments; merge() is Chan's pairwise update.
struct Running {
    double count = 0.0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        count += 1.0;
        const double d = x - mean;
        mean += d / count;
        m2 += d * (x - mean);
    }

    void merge(const Running& o) {
        if (o.count == 0.0) return;
        if (count == 0.0) {
            *this = o;
            return;
        }
        const double total = count + o.count;
        const double d = o.mean - mean;
        mean += d * o.count / total;
        m2 += o.m2 + d * d * count * o.count / total;
        count = total;
    }
};

}  // namespace

std::uint64_t chunk_count(std::uint64_t n, const McConfig& cfg) {
    if (cfg.chunk_size == 0) throw DomainError("McConfig: chunk_size must be positive");
    return (n + cfg.chunk_size - 1) / cfg.chunk_size;
}

std::uint64_t for_each_triangle(const FamilySpec& family, std::uint64_t n, std::uint64_t seed,
                                const McConfig& cfg,
                                const std::function<void(std::uint64_t, const Triangle&)>& body) {
    family.validate();
    const std::uint64_t chunks = chunk_count(n, cfg);
    if (chunks == 0) return 0;

    std::vector<std::uint64_t> rejected(chunks, 0);
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto work = [&] {
        try {
            for (;;) {
                const std::uint64_t i = next.fetch_add(1);
                if (i >= chunks) return;
                RngStream rng(seed, i);
                const std::uint64_t count = std::min(cfg.chunk_size, n - i * cfg.chunk_size);
                for (std::uint64_t j = 0; j < count; ++j) body(i, Triangle(sample(family, rng)));
                rejected[i] = rng.rejections();
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next.store(chunks);
        }
    };

    unsigned workers = cfg.workers != 0 ? cfg.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, chunks));
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);

    std::uint64_t total = 0;
    for (std::uint64_t r : rejected) total += r;
    return total;
}

std::vector<Estimate> estimate_moments(const FamilySpec& family, std::span<const TriangleFunction> fs,
                                       std::uint64_t n, std::uint64_t seed, const McConfig& cfg) {
    require_samples(n);
    const std::uint64_t chunks = chunk_count(n, cfg);
    std::vector<std::vector<Running>> per_chunk(chunks, std::vector<Running>(fs.size()));
    const std::uint64_t resampled = for_each_triangle(family, n, seed, cfg, [&](std::uint64_t i, const Triangle& t) {
        auto& acc = per_chunk[i];
        for (std::size_t k = 0; k < fs.size(); ++k) acc[k].add(fs[k](t));
    });

    std::vector<Estimate> out;
    out.reserve(fs.size());
    for (std::size_t k = 0; k < fs.size(); ++k) {
        Running total;
        for (const auto& chunk : per_chunk) total.merge(chunk[k]);
        const double var = total.count > 1.0 ? total.m2 / (total.count - 1.0) : 0.0;
        out.push_back({total.mean, std::sqrt(var / total.count), n, seed, resampled});
    }
    return out;
}

Estimate estimate_moment(const FamilySpec& family, const TriangleFunction& f, std::uint64_t n, std::uint64_t seed,
                         const McConfig& cfg) {
    return estimate_moments(family, std::span(&f, 1), n, seed, cfg).front();
}

std::vector<Estimate> estimate_probabilities(const FamilySpec& family, std::span<const TriangleEvent> events,
                                             std::uint64_t n, std::uint64_t seed, const McConfig& cfg) {
    require_samples(n);
    const std::uint64_t chunks = chunk_count(n, cfg);
    std::vector<std::vector<std::uint64_t>> hits(chunks, std::vector<std::uint64_t>(events.size(), 0));
    const std::uint64_t resampled = for_each_triangle(family, n, seed, cfg, [&](std::uint64_t i, const Triangle& t) {
        for (std::size_t k = 0; k < events.size(); ++k)
            if (events[k](t)) ++hits[i][k];
    });

    std::vector<Estimate> out;
    out.reserve(events.size());
    for (std::size_t k = 0; k < events.size(); ++k) {
        std::uint64_t total = 0;
        for (const auto& chunk : hits) total += chunk[k];
        const double p = static_cast<double>(total) / static_cast<double>(n);
        out.push_back({p, std::sqrt(p * (1.0 - p) / static_cast<double>(n)), n, seed, resampled});
    }
    return out;
}

Estimate estimate_probability(const FamilySpec& family, const TriangleEvent& event, std::uint64_t n,
                              std::uint64_t seed, const McConfig& cfg) {
    return estimate_probabilities(family, std::span(&event, 1), n, seed, cfg).front();
}

GofResult chi2_gof(std::span<const std::uint64_t> counts, std::span<const double> probs) {
    if (counts.size() != probs.size() || counts.empty()) throw DomainError("chi2_gof: size mismatch");
    double psum = 0.0;
    std::uint64_t n = 0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        if (!(probs[i] >= 0.0)) throw DomainError("chi2_gof: negative cell probability");
        psum += probs[i];
        n += counts[i];
    }
    if (std::abs(psum - 1.0) > 1e-6) throw DomainError("chi2_gof: cell probabilities do not sum to 1");
    const double total = static_cast<double>(n);

    // Greedy merge of adjacent cells; a short remainder joins the last group.
    std::vector<std::pair<double, double>> groups;  // (observed, expected)
    double obs = 0.0, expct = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        obs += static_cast<double>(counts[i]);
        expct += total * probs[i];
        if (expct >= 5.0) {
            groups.emplace_back(obs, expct);
            obs = expct = 0.0;
        }
    }
    if (expct > 0.0 || obs > 0.0) {
        if (groups.empty()) {
            groups.emplace_back(obs, expct);
        } else {
            groups.back().first += obs;
            groups.back().second += expct;
        }
    }
    if (groups.size() < 2) throw DomainError("chi2_gof: fewer than two usable cells");

    double chi2 = 0.0;
    for (auto [o, e] : groups) chi2 += (o - e) * (o - e) / e;
    const int dof = static_cast<int>(groups.size()) - 1;
    return {chi2, dof, specfun::gamma_q(0.5 * dof, 0.5 * chi2), static_cast<int>(groups.size())};
}

std::vector<double> gof_cell_probabilities(const GofSpec& spec, const DensityOracle& oracle,
                                           const numerics::QuadConfig& quad) {
    if (spec.bins < 1) throw DomainError("GofSpec: bins must be >= 1");
    const int nb = spec.bins;
    std::vector<double> probs;

    switch (spec.coordinate) {
        case Coordinate::angle_marginal:
        case Coordinate::side_marginal: {
            const auto* f = std::get_if<numerics::Integrand1D>(&oracle);
            if (!f) throw DomainError("histogram_gof: marginal coordinates need a 1D density");
            const bool angle = spec.coordinate == Coordinate::angle_marginal;
            const double hi = angle ? kPi : spec.upper;
            const double w = hi / nb;
            for (int i = 0; i < nb; ++i) probs.push_back(numerics::integrate_1d(*f, i * w, (i + 1) * w, quad).value);
            if (!angle) probs.push_back(numerics::integrate_1d(*f, hi, std::max(quad.cutoff(), 2.0 * hi), quad).value);
            break;
        }
        case Coordinate::angles2d: {
            const auto* f = std::get_if<numerics::Integrand2D>(&oracle);
            if (!f) throw DomainError("histogram_gof: angles2d needs a 2D density");
            const double w = kPi / nb;
            const double h = 1.0 / nb;
            auto mapped = [&](double x, double s) { return (*f)(x, (kPi - x) * s) * (kPi - x); };
            for (int i = 0; i < nb; ++i)
                for (int j = 0; j < nb; ++j)
                    probs.push_back(
                        numerics::integrate_2d(mapped, numerics::Rectangle{i * w, (i + 1) * w, j * h, (j + 1) * h},
                                               quad)
                            .value);
            break;
        }
        case Coordinate::sides2d: {
            const double w = spec.upper / nb;
            double inside = 0.0;
            for (int i = 0; i < nb; ++i) {
                for (int j = 0; j < nb; ++j) {
                    const double x0 = i * w, x1 = (i + 1) * w, y0 = j * w, y1 = (j + 1) * w;
                    double p = 0.0;
                    if (const auto* f = std::get_if<numerics::Integrand2D>(&oracle)) {
                        p = numerics::integrate_2d(*f, numerics::Rectangle{x0, x1, y0, y1}, quad).value;
                    } else if (const auto* s = std::get_if<ArcsineStripDensity>(&oracle)) {
                        const numerics::QuadConfig inner = quad.tightened(0.1);
                        auto column = [&](double x) {
                            const double lo = s->lo(x), hi = s->hi(x);
                            if (!(hi > lo)) return 0.0;
                            return numerics::integrate_sqrt_singular([&](double y) { return s->smooth(x, y); }, lo,
                                                                     hi, inner, std::pair{y0, y1})
                                .value;
                        };
                        p = numerics::integrate_1d(column, x0, x1, quad).value;
                    } else {
                        throw DomainError("histogram_gof: sides2d needs a 2D density");
                    }
                    probs.push_back(p);
                    inside += p;
                }
            }
            probs.push_back(std::max(0.0, 1.0 - inside));
            break;
        }
    }
    return probs;
}

GofResult histogram_gof(const FamilySpec& family, const GofSpec& spec, const DensityOracle& oracle, std::uint64_t n,
                        std::uint64_t seed, const McConfig& cfg, const numerics::QuadConfig& quad) {
    require_samples(n);
    if (spec.angle < 0 || spec.angle > 2) throw DomainError("GofSpec: angle index must be 0, 1 or 2");
    const std::vector<double> probs = gof_cell_probabilities(spec, oracle, quad);
    const int nb = spec.bins;
    const std::size_t cells = probs.size();

    auto bin_of = [nb](double v, double hi) {
        return std::clamp(static_cast<int>(v / hi * nb), 0, nb - 1);
    };
    auto side_of = [&](const Triangle& t) {
        switch (spec.side) {
            case densities::Side::a: return t.sides.a();
            case densities::Side::b: return t.sides.b();
            case densities::Side::c: return t.sides.c();
        }
        return t.sides.a();
    };
    auto cell_of = [&](const Triangle& t) -> std::size_t {
        switch (spec.coordinate) {
            case Coordinate::angle_marginal: {
                const double v = spec.angle == 0 ? t.angles.alpha()
                                 : spec.angle == 1 ? t.angles.beta()
                                                   : t.angles.gamma();
                return static_cast<std::size_t>(bin_of(v, kPi));
            }
            case Coordinate::side_marginal: {
                const double v = side_of(t);
                return v >= spec.upper ? static_cast<std::size_t>(nb) : static_cast<std::size_t>(bin_of(v, spec.upper));
            }
            case Coordinate::angles2d: {
                const double a = t.angles.alpha();
                const double s = t.angles.beta() / (kPi - a);
                return static_cast<std::size_t>(bin_of(a, kPi) * nb + bin_of(s, 1.0));
            }
            case Coordinate::sides2d: {
                const double a = t.sides.a(), b = t.sides.b();
                if (a >= spec.upper || b >= spec.upper) return cells - 1;
                return static_cast<std::size_t>(bin_of(a, spec.upper) * nb + bin_of(b, spec.upper));
            }
        }
        return 0;
    };

    const std::uint64_t chunks = chunk_count(n, cfg);
    std::vector<std::vector<std::uint64_t>> per_chunk(chunks, std::vector<std::uint64_t>(cells, 0));
    for_each_triangle(family, n, seed, cfg, [&](std::uint64_t i, const Triangle& t) { ++per_chunk[i][cell_of(t)]; });
    std::vector<std::uint64_t> counts(cells, 0);
    for (const auto& chunk : per_chunk)
        for (std::size_t k = 0; k < cells; ++k) counts[k] += chunk[k];
    return chi2_gof(counts, probs);
}

double kolmogorov_q(double lambda) {
    if (lambda <= 0.0) return 1.0;
    if (lambda < 1.18) {
        // 1 - sqrt(2 pi)/lambda sum_j exp(-(2j-1)^2 pi^2 / (8 lambda^2))
        double sum = 0.0;
        for (int j = 1; j <= 20; ++j) {
            const double k = 2.0 * j - 1.0;
            sum += std::exp(-k * k * kPi * kPi / (8.0 * lambda * lambda));
        }
        return std::clamp(1.0 - std::sqrt(2.0 * kPi) / lambda * sum, 0.0, 1.0);
    }
    double sum = 0.0;
    for (int j = 1; j <= 100; ++j) {
        const double term = std::exp(-2.0 * j * j * lambda * lambda);
        sum += (j % 2 == 1 ? term : -term);
        if (term < 1e-18) break;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsResult ks_test(std::vector<double> samples, const std::function<double(double)>& cdf) {
    if (samples.empty()) throw DomainError("ks_test: no samples");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        d = std::max({d, (i + 1) / n - f, f - i / n});
    }
    const double root = std::sqrt(n);
    return {d, kolmogorov_q((root + 0.12 + 0.11 / root) * d)};
}

KsResult ks_two_sample(std::vector<double> x, std::vector<double> y) {
    if (x.empty() || y.empty()) throw DomainError("ks_two_sample: empty sample");
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    const double nx = static_cast<double>(x.size()), ny = static_cast<double>(y.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < x.size() && j < y.size()) {
        const double v = std::min(x[i], y[j]);
        while (i < x.size() && x[i] <= v) ++i;
        while (j < y.size() && y[j] <= v) ++j;
        d = std::max(d, std::abs(i / nx - j / ny));
    }
    const double ne = std::sqrt(nx * ny / (nx + ny));
    return {d, kolmogorov_q((ne + 0.12 + 0.11 / ne) * d)};
}

}  // namespace gtri::mc
