#pragma once

// Single-mode zero-mean Gaussian states described by their two quadrature
// variances.
//
// Normalization: all variances are in shot-noise units. The vacuum has
// Var(X) = Var(Y) = 1, which corresponds to quadratures X = a^+ + a,
// Y = i(a^+ - a) with [X, Y] = 2i. Every formula in this library assumes it.

#include <cstddef>
#include <vector>

namespace sqz {

// Absolute tolerance used on closed-form variance algebra.
inline constexpr double kVarianceTol = 1e-12;

class GaussianMode {
public:
    // Bypasses validation. Only intended for exercising error paths.
    static constexpr GaussianMode unchecked(double vx, double vy) noexcept {
        return GaussianMode(vx, vy);
    }
    static constexpr GaussianMode vacuum() noexcept { return GaussianMode(1.0, 1.0); }

    constexpr double vx() const noexcept { return vx_; }
    constexpr double vy() const noexcept { return vy_; }
    constexpr double product() const noexcept { return vx_ * vy_; }

    bool is_pure(double tol = kVarianceTol) const noexcept;

    friend constexpr bool operator==(const GaussianMode&, const GaussianMode&) = default;

private:
    constexpr GaussianMode(double vx, double vy) noexcept : vx_(vx), vy_(vy) {}

    double vx_;
    double vy_;
};

// Checked constructor. Throws NonPositiveVariance for vx <= 0 or vy <= 0 and
// HeisenbergViolation when vx * vy < 1 beyond kVarianceTol.
GaussianMode make_mode(double vx, double vy);

// tr(rho^2) = 1 / sqrt(vx * vy).
double purity(const GaussianMode& m);

// Mixes the mode with vacuum at intensity transmission eta: v -> eta v + 1 - eta.
// Models both beam-splitter loss and finite detection efficiency.
GaussianMode attenuate(const GaussianMode& m, double eta);

// Outputs of the tap-off beam splitter with the fixed convention
//   t = sqrt(eta) a + sqrt(1 - eta) v,   r = sqrt(1 - eta) a - sqrt(eta) v
// where v is vacuum. cov_* are the X-X and Y-Y cross covariances of t and r.
struct TapResult {
    GaussianMode transmitted;
    GaussianMode reflected;
    double cov_x;
    double cov_y;
};

TapResult tap(const GaussianMode& m, double eta);

// Decibel helpers. Variances are linear; dB = 10 log10(v).
double to_db(double variance);
double from_db(double db);
// Squeezing is quoted as positive dB for v < 1.
double squeezing_db(double variance);
double variance_from_squeezing_db(double db);
double variance_from_antisqueezing_db(double db);

// `steps` evenly spaced points from start to stop inclusive; steps == 1 gives {start}.
std::vector<double> linspace(double start, double stop, std::size_t steps);

}  // namespace sqz
