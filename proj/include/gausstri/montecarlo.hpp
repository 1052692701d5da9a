#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "gausstri/densities.hpp"
#include "gausstri/model.hpp"
#include "gausstri/numerics.hpp"

namespace gtri::mc {

/// Monte Carlo result. std_error is sample_std / sqrt(n) (binomial for
/// probabilities); `resampled` counts degenerate draws that were discarded.
struct Estimate {
    double value = 0.0;
    double std_error = 0.0;
    std::uint64_t n = 0;
    std::uint64_t seed = 0;
    std::uint64_t resampled = 0;
};

struct McConfig {
    std::uint64_t chunk_size = std::uint64_t{1} << 16;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned workers = 0;
};

using TriangleEvent = std::function<bool(const Triangle&)>;
using TriangleFunction = std::function<double(const Triangle&)>;

/// Smallest sample count the estimators accept.
inline constexpr std::uint64_t kMinSamples = 100;

std::uint64_t chunk_count(std::uint64_t n, const McConfig& cfg);

/// Draws n triangles of `family`. Chunk i has min(chunk_size, remaining)
/// triangles drawn from RngStream(seed, i); chunks run on worker threads and
/// `body(chunk_index, triangle)` must only touch state owned by that chunk.
/// Returns the number of degenerate draws that were resampled.
std::uint64_t for_each_triangle(const FamilySpec& family, std::uint64_t n, std::uint64_t seed,
                                const McConfig& cfg,
                                const std::function<void(std::uint64_t, const Triangle&)>& body);

Estimate estimate_probability(const FamilySpec& family, const TriangleEvent& event, std::uint64_t n,
                              std::uint64_t seed, const McConfig& cfg = {});

Estimate estimate_moment(const FamilySpec& family, const TriangleFunction& f, std::uint64_t n, std::uint64_t seed,
                         const McConfig& cfg = {});

/// Several moments from one shared batch of triangles.
std::vector<Estimate> estimate_moments(const FamilySpec& family, std::span<const TriangleFunction> fs,
                                       std::uint64_t n, std::uint64_t seed, const McConfig& cfg = {});

/// Several probabilities from one shared batch of triangles.
std::vector<Estimate> estimate_probabilities(const FamilySpec& family, std::span<const TriangleEvent> events,
                                             std::uint64_t n, std::uint64_t seed, const McConfig& cfg = {});

struct GofResult {
    double chi2 = 0.0;
    int dof = 0;
    double p_value = 0.0;
    /// Bins actually used after merging.
    int bins = 0;
};

/// Pearson chi-square of observed counts against cell probabilities.
/// Adjacent cells are merged (in the order given) until every merged cell
/// expects at least 5 counts. Probabilities must sum to 1 within 1e-6.
GofResult chi2_gof(std::span<const std::uint64_t> counts, std::span<const double> probs);

enum class Coordinate { sides2d, angles2d, side_marginal, angle_marginal };

/// density(x, y) = smooth(x, y) / sqrt((y - lo(x)) (hi(x) - y)) on lo < y < hi.
/// This is the shape of the staked and anchored side densities, whose
/// inverse-square-root edges need the arcsine substitution.
struct ArcsineStripDensity {
    std::function<double(double)> lo;
    std::function<double(double)> hi;
    std::function<double(double, double)> smooth;
};

using DensityOracle = std::variant<numerics::Integrand1D, numerics::Integrand2D, ArcsineStripDensity>;

struct GofSpec {
    Coordinate coordinate = Coordinate::angles2d;
    /// Bins per axis.
    int bins = 10;
    /// Side coordinates are binned on [0, upper] with one extra tail cell.
    double upper = 6.0;
    densities::Side side = densities::Side::a;
    /// angle_marginal: 0 = alpha, 1 = beta, 2 = gamma.
    int angle = 0;
};

/// Bins n simulated triangles and compares against cell probabilities
/// obtained by quadrature of the oracle density.
///
/// angles2d cells live in (alpha, s) with beta = (pi - alpha) s; sides2d
/// cells are squares in (a, b). A 1D oracle goes with the marginal
/// coordinates, a 2D oracle (or ArcsineStripDensity for sides2d) with the
/// bivariate ones.
GofResult histogram_gof(const FamilySpec& family, const GofSpec& spec, const DensityOracle& oracle, std::uint64_t n,
                        std::uint64_t seed, const McConfig& cfg = {}, const numerics::QuadConfig& quad = {});

/// Cell probabilities used by histogram_gof, exposed for calibration tests.
std::vector<double> gof_cell_probabilities(const GofSpec& spec, const DensityOracle& oracle,
                                           const numerics::QuadConfig& quad = {});

struct KsResult {
    double statistic = 0.0;
    double p_value = 0.0;
};

/// Survival function of the Kolmogorov distribution.
double kolmogorov_q(double lambda);

/// One-sample Kolmogorov-Smirnov test against a continuous CDF.
KsResult ks_test(std::vector<double> samples, const std::function<double(double)>& cdf);

/// Two-sample Kolmogorov-Smirnov test.
KsResult ks_two_sample(std::vector<double> x, std::vector<double> y);

}  // namespace gtri::mc
