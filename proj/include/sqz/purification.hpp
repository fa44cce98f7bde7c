#pragma once

// Optimal deterministic purification of amplitude-squeezed Gaussian states.
//
// Two routes are provided and kept algebraically separate:
//  * the abstract bound: the smallest phase variance any linear Gaussian
//    channel X' = nu X + X_N, Y' = mu Y + Y_N can reach for a given output
//    amplitude variance (parameterized by vx_target);
//  * the tap / homodyne / feed-forward device, parameterized by the tap
//    transmission eta, the electronic gain and the in-loop efficiency eps.
// With eps = 1 and the optimal gain the device sits exactly on the bound.
//
// Sign convention: the tap follows sqz::tap, which makes the Y_t / Y_r
// covariance positive and therefore the optimal gain negative.

#include "sqz/gaussian.hpp"

namespace sqz {

// Amplitude/phase gains of a linear Gaussian channel and the variances of the
// noise it adds.
struct GaussianChannelGains {
    double nu = 1.0;
    double mu = 1.0;
    double vnx = 0.0;
    double vny = 0.0;

    // vnx * vny >= (1 - nu mu)^2
    bool satisfies_uncertainty(double tol = kVarianceTol) const noexcept;
    // vnx >= 1 - nu^2, i.e. a coherent input is not squeezed by the channel.
    bool preserves_classicality(double tol = kVarianceTol) const noexcept;
};

// Default in-loop efficiency reflecting the ~70% phase detection of the
// demonstration setup.
inline constexpr double kDefaultInLoopEfficiency = 0.70;

struct FeedForwardConfig {
    double eta = 1.0;      // tap transmission
    double gain = 0.0;     // electronic feed-forward gain
    double eps = 1.0;      // in-loop homodyne efficiency
    double eta_det = 1.0;  // verification detection efficiency

    // Throws ConfigOutOfRange unless every ratio lies in [0, 1] and the gain is finite.
    void validate() const;
};

struct PurificationResult {
    GaussianMode output;
    double gain_used;
    double bound;  // optimal phase variance at the same output amplitude variance
    double purity_in;
    double purity_out;
};

enum class GainChoice { Configured, Optimal };

// Saturated-uncertainty lower bound on the output phase variance for fixed
// channel gains: (1 - nu mu)^2 / (vx_target - nu^2 vx) + mu^2 vy.
// Throws InfeasibleTarget when vx_target <= nu^2 vx.
double min_y_given_gains(double nu, double mu, const GaussianMode& in, double vx_target);

// Feasible squared amplitude gain, nu2 in [nu2_min, nu2_max).
struct NuSquaredRange {
    double nu2_min;
    double nu2_max;
};
NuSquaredRange nu_feasible_range(double vx, double vx_target);

// Optimal output phase variance for a given output amplitude variance:
//   vy (1 - vx) / ((1 - vx_target) + vy (vx_target - vx)).
// Requires 0 < vx < 1 and vx <= vx_target <= 1.
double optimal_bound(const GaussianMode& in, double vx_target);
// Same bound, parameterized by the equivalent tap transmission
// (vx_target = eta vx + 1 - eta).
double optimal_bound_at_eta(const GaussianMode& in, double eta);

// Phase variance of the transmitted beam for an arbitrary gain:
//   eta vy + 1 - eta + 2 g sqrt(eps) sqrt(eta (1 - eta)) (vy - 1)
//     + g^2 (eps ((1 - eta) vy + eta) + 1 - eps)
double ff_y_variance(double vy, const FeedForwardConfig& cfg);

// Gain minimizing ff_y_variance.
double optimal_gain(double vy, double eta, double eps);

// ff_y_variance at the optimal gain. Evaluated in the cancellation-free form
//   (eps vy + (1 - eps)(eta vy + 1 - eta)) / (eps ((1 - eta) vy + eta) + 1 - eps),
// which reduces to vy / (eta + (1 - eta) vy) at eps = 1.
double ff_y_min(double vy, double eta, double eps);

// The linear channel realized by the feed-forward device, for comparison
// against the abstract bound.
GaussianChannelGains realized_channel(const FeedForwardConfig& cfg);

// Full device: tap, measure, feed forward. Rejects vx >= 1 inputs.
PurificationResult purify(const GaussianMode& in, const FeedForwardConfig& cfg, GainChoice choice);

// Variance seen by a detector of efficiency eta_det.
double measured_variance(double v, double eta_det);

// Measured no-feed-forward over measured (optimal) feed-forward phase variance.
double excess_noise_reduction(double vy, double eta, double eps, double eta_det);

// Input over purified phase variance, vy / ff_y_min.
double thermal_reduction_factor(double vy, double eta, double eps);

// Output phase variance of the noiseless-amplification branch (vnx = 0,
// mu = 1 / nu, nu^2 = vx_target / vx): vy vx / vx_target.
double noiseless_amp_comparison(const GaussianMode& in, double vx_target);

}  // namespace sqz
