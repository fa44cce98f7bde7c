#include "sqz/purification.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sqz/error.hpp"

namespace sqz {

namespace {

bool is_ratio(double r) { return r >= 0.0 && r <= 1.0; }

void require_ratio(double r, const char* name) {
    if (!is_ratio(r)) {
        throw Error(ErrorKind::ConfigOutOfRange, std::string(name) + " = " + std::to_string(r) + " not in [0, 1]");
    }
}

void require_squeezed(double vx) {
    if (!(vx > 0.0)) {
        throw Error(ErrorKind::NonPositiveVariance, "vx = " + std::to_string(vx));
    }
    if (vx == 1.0) {
        throw Error(ErrorKind::CoherentInputDegenerate, "coherent amplitude (vx = 1) cannot be traded for purity");
    }
    if (vx > 1.0) {
        throw Error(ErrorKind::NotSqueezed, "input is not amplitude squeezed, vx = " + std::to_string(vx));
    }
}

void require_target(double vx, double vx_target) {
    if (!(vx_target >= vx && vx_target <= 1.0)) {
        throw Error(ErrorKind::TargetOutOfRange,
                    "vx_target = " + std::to_string(vx_target) + " not in [" + std::to_string(vx) + ", 1]");
    }
}

// Variance of the in-loop photocurrent sqrt(eps) Y_r + sqrt(1 - eps) Y_u.
double loop_signal_variance(double vy, double eta, double eps) {
    return eps * ((1.0 - eta) * vy + eta) + (1.0 - eps);
}

// Covariance of Y_t with the in-loop photocurrent.
double loop_covariance(double vy, double eta, double eps) {
    return std::sqrt(eps) * std::sqrt(eta * (1.0 - eta)) * (vy - 1.0);
}

}  // namespace

bool GaussianChannelGains::satisfies_uncertainty(double tol) const noexcept {
    const double forced = (1.0 - nu * mu) * (1.0 - nu * mu);
    return vnx * vny >= forced - tol * std::max(1.0, forced);
}

bool GaussianChannelGains::preserves_classicality(double tol) const noexcept {
    return vnx >= 1.0 - nu * nu - tol;
}

void FeedForwardConfig::validate() const {
    require_ratio(eta, "eta");
    require_ratio(eps, "eps");
    require_ratio(eta_det, "eta_det");
    if (!std::isfinite(gain)) {
        throw Error(ErrorKind::ConfigOutOfRange, "gain must be finite");
    }
}

double min_y_given_gains(double nu, double mu, const GaussianMode& in, double vx_target) {
    const double denom = vx_target - nu * nu * in.vx();
    if (!(denom > 0.0)) {
        throw Error(ErrorKind::InfeasibleTarget,
                    "vx_target = " + std::to_string(vx_target) + " not above nu^2 vx = " +
                        std::to_string(nu * nu * in.vx()));
    }
    const double forced = 1.0 - nu * mu;
    return forced * forced / denom + mu * mu * in.vy();
}

NuSquaredRange nu_feasible_range(double vx, double vx_target) {
    require_squeezed(vx);
    require_target(vx, vx_target);
    return {(1.0 - vx_target) / (1.0 - vx), vx_target / vx};
}

double optimal_bound(const GaussianMode& in, double vx_target) {
    const double vx = in.vx();
    const double vy = in.vy();
    require_squeezed(vx);
    require_target(vx, vx_target);
    return vy * (1.0 - vx) / ((1.0 - vx_target) + vy * (vx_target - vx));
}

double optimal_bound_at_eta(const GaussianMode& in, double eta) {
    if (!is_ratio(eta)) {
        throw Error(ErrorKind::EtaOutOfRange, "eta = " + std::to_string(eta) + " not in [0, 1]");
    }
    require_squeezed(in.vx());
    // vx <= eta vx + 1 - eta <= 1 holds mathematically; rounding can leave it
    // an ulp outside, so clamp before delegating.
    const double target = std::clamp(eta * in.vx() + (1.0 - eta), in.vx(), 1.0);
    return optimal_bound(in, target);
}

double ff_y_variance(double vy, const FeedForwardConfig& cfg) {
    cfg.validate();
    const double eta = cfg.eta;
    const double g = cfg.gain;
    return eta * vy + (1.0 - eta) + 2.0 * g * loop_covariance(vy, eta, cfg.eps) +
           g * g * loop_signal_variance(vy, eta, cfg.eps);
}

double optimal_gain(double vy, double eta, double eps) {
    require_ratio(eta, "eta");
    require_ratio(eps, "eps");
    const double var_loop = loop_signal_variance(vy, eta, eps);
    if (var_loop == 0.0) return 0.0;
    return -loop_covariance(vy, eta, eps) / var_loop;
}

double ff_y_min(double vy, double eta, double eps) {
    require_ratio(eta, "eta");
    require_ratio(eps, "eps");
    if (!(vy > 0.0)) {
        throw Error(ErrorKind::NonPositiveVariance, "vy = " + std::to_string(vy));
    }
    const double unassisted = eta * vy + (1.0 - eta);
    return (eps * vy + (1.0 - eps) * unassisted) / loop_signal_variance(vy, eta, eps);
}

GaussianChannelGains realized_channel(const FeedForwardConfig& cfg) {
    cfg.validate();
    const double t = std::sqrt(cfg.eta);
    const double r = std::sqrt(1.0 - cfg.eta);
    const double ge = cfg.gain * std::sqrt(cfg.eps);
    // Y' = (t + ge r) Y_a + (r - ge t) Y_v + g sqrt(1 - eps) Y_u
    const double vacuum_weight = r - ge * t;
    return GaussianChannelGains{
        .nu = t,
        .mu = t + ge * r,
        .vnx = 1.0 - cfg.eta,
        .vny = vacuum_weight * vacuum_weight + cfg.gain * cfg.gain * (1.0 - cfg.eps),
    };
}

PurificationResult purify(const GaussianMode& in, const FeedForwardConfig& cfg, GainChoice choice) {
    cfg.validate();
    require_squeezed(in.vx());
    if (in.product() < 1.0 - kVarianceTol) {
        throw Error(ErrorKind::HeisenbergViolation, "input violates vx * vy >= 1");
    }

    const double gain = choice == GainChoice::Optimal ? optimal_gain(in.vy(), cfg.eta, cfg.eps) : cfg.gain;
    const double vy_out = choice == GainChoice::Optimal ? ff_y_min(in.vy(), cfg.eta, cfg.eps)
                                                        : ff_y_variance(in.vy(), FeedForwardConfig{cfg.eta, gain, cfg.eps, cfg.eta_det});
    const GaussianMode out = GaussianMode::unchecked(attenuate(in, cfg.eta).vx(), vy_out);

    return PurificationResult{
        .output = out,
        .gain_used = gain,
        .bound = optimal_bound_at_eta(in, cfg.eta),
        .purity_in = purity(in),
        .purity_out = purity(out),
    };
}

double measured_variance(double v, double eta_det) {
    require_ratio(eta_det, "eta_det");
    return eta_det * v + (1.0 - eta_det);
}

double excess_noise_reduction(double vy, double eta, double eps, double eta_det) {
    require_ratio(eta, "eta");
    const double without = measured_variance(eta * vy + (1.0 - eta), eta_det);
    const double with = measured_variance(ff_y_min(vy, eta, eps), eta_det);
    return without / with;
}

double thermal_reduction_factor(double vy, double eta, double eps) { return vy / ff_y_min(vy, eta, eps); }

double noiseless_amp_comparison(const GaussianMode& in, double vx_target) {
    require_squeezed(in.vx());
    require_target(in.vx(), vx_target);
    return in.vy() * in.vx() / vx_target;
}

}  // namespace sqz
