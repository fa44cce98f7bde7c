#pragma once

// Monte-Carlo oracle for the feed-forward device. Quadrature amplitudes of the
// input and of every vacuum port are drawn as independent zero-mean normals
// and pushed through the protocol sample by sample; the empirical variances
// are then compared with the closed forms in purification.hpp.
//
// RNG: std::mt19937_64 seeded through std::seed_seq from the 64-bit run seed
// (and, in sweeps, the grid point index and attempt number), normals from
// std::normal_distribution. Results are bit-identical for a given seed on a
// given standard library.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sqz/gaussian.hpp"
#include "sqz/purification.hpp"

namespace sqz {

struct SampleRun {
    std::size_t n_samples = 100000;
    std::uint64_t seed = 0;
    FeedForwardConfig config;
    GaussianMode input = GaussianMode::vacuum();
};

struct EmpiricalVariances {
    double vx_t;
    double vy_t;
    double stderr_x;
    double stderr_y;
};

EmpiricalVariances sample_protocol(const SampleRun& run);

// Grid axes for sweep_verify. The phase variance axis is given as multiples
// of the pure-state value 1 / vx so every point is physical.
struct VerifyGrid {
    std::vector<double> vx;
    std::vector<double> vy_over_pure;
    std::vector<double> eta;
    std::vector<double> eps;

    std::size_t size() const noexcept { return vx.size() * vy_over_pure.size() * eta.size() * eps.size(); }
    // 5 x 5 x 9 x 3 = 675 points, eta endpoints included.
    static VerifyGrid default_grid();
};

struct VerifyPoint {
    std::size_t index;
    GaussianMode input;
    FeedForwardConfig config;  // gain set to the optimal gain
    double analytic_vx;
    double analytic_vy;
    EmpiricalVariances empirical;
    bool reran;
    bool passed;
};

struct VerifyReport {
    std::vector<VerifyPoint> points;  // ordered by grid index
    std::vector<std::size_t> failures;

    bool ok() const noexcept { return failures.empty(); }
    std::string to_text() const;
};

// Acceptance: |empirical - analytic| <= 5 stderr on both quadratures.
inline constexpr double kSigmaBudget = 5.0;

bool within_budget(double empirical, double analytic, double stderr_value) noexcept;

// Samples every grid point at the optimal gain and checks it against the
// analytic variances. A failing point is resampled once on an independent
// stream before being reported.
VerifyReport sweep_verify(const VerifyGrid& grid, std::size_t n_samples, std::uint64_t seed);

}  // namespace sqz
