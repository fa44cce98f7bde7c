#include "sqz/gaussian.hpp"

#include <cmath>
#include <string>

#include "sqz/error.hpp"

namespace sqz {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NonPositiveVariance: return "NonPositiveVariance";
        case ErrorKind::HeisenbergViolation: return "HeisenbergViolation";
        case ErrorKind::EtaOutOfRange: return "EtaOutOfRange";
        case ErrorKind::InfeasibleTarget: return "InfeasibleTarget";
        case ErrorKind::CoherentInputDegenerate: return "CoherentInputDegenerate";
        case ErrorKind::TargetOutOfRange: return "TargetOutOfRange";
        case ErrorKind::ConfigOutOfRange: return "ConfigOutOfRange";
        case ErrorKind::NotSqueezed: return "NotSqueezed";
        case ErrorKind::InvalidRun: return "InvalidRun";
        case ErrorKind::NegativePhotonNumber: return "NegativePhotonNumber";
        case ErrorKind::SignalBudgetExhausted: return "SignalBudgetExhausted";
        case ErrorKind::TOutOfRange: return "TOutOfRange";
        case ErrorKind::UnphysicalCovariance: return "UnphysicalCovariance";
    }
    return "Unknown";
}

namespace {

void require_eta(double eta) {
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw Error(ErrorKind::EtaOutOfRange, "eta = " + std::to_string(eta) + " not in [0, 1]");
    }
}

double mix_with_vacuum(double v, double eta) { return eta * v + (1.0 - eta); }

}  // namespace

bool GaussianMode::is_pure(double tol) const noexcept { return std::abs(product() - 1.0) <= tol; }

GaussianMode make_mode(double vx, double vy) {
    if (!(vx > 0.0) || !(vy > 0.0)) {
        throw Error(ErrorKind::NonPositiveVariance,
                    "variances must be positive, got (" + std::to_string(vx) + ", " + std::to_string(vy) + ")");
    }
    if (vx * vy < 1.0 - kVarianceTol) {
        throw Error(ErrorKind::HeisenbergViolation,
                    "vx * vy = " + std::to_string(vx * vy) + " < 1");
    }
    return GaussianMode::unchecked(vx, vy);
}

double purity(const GaussianMode& m) { return 1.0 / std::sqrt(m.product()); }

GaussianMode attenuate(const GaussianMode& m, double eta) {
    require_eta(eta);
    return GaussianMode::unchecked(mix_with_vacuum(m.vx(), eta), mix_with_vacuum(m.vy(), eta));
}

TapResult tap(const GaussianMode& m, double eta) {
    require_eta(eta);
    const double cross = std::sqrt(eta * (1.0 - eta));
    return TapResult{
        .transmitted = GaussianMode::unchecked(mix_with_vacuum(m.vx(), eta), mix_with_vacuum(m.vy(), eta)),
        .reflected = GaussianMode::unchecked(mix_with_vacuum(m.vx(), 1.0 - eta),
                                             mix_with_vacuum(m.vy(), 1.0 - eta)),
        .cov_x = cross * (m.vx() - 1.0),
        .cov_y = cross * (m.vy() - 1.0),
    };
}

double to_db(double variance) {
    if (!(variance > 0.0)) {
        throw Error(ErrorKind::NonPositiveVariance, "cannot convert " + std::to_string(variance) + " to dB");
    }
    return 10.0 * std::log10(variance);
}

double from_db(double db) { return std::pow(10.0, db / 10.0); }

double squeezing_db(double variance) { return -to_db(variance); }

double variance_from_squeezing_db(double db) { return from_db(-db); }

double variance_from_antisqueezing_db(double db) { return from_db(db); }

std::vector<double> linspace(double start, double stop, std::size_t steps) {
    std::vector<double> out;
    if (steps == 0) return out;
    out.reserve(steps);
    if (steps == 1) {
        out.push_back(start);
        return out;
    }
    const double n = static_cast<double>(steps - 1);
    for (std::size_t i = 0; i < steps; ++i) {
        // Endpoints are reproduced exactly.
        const double f = static_cast<double>(i) / n;
        out.push_back(i + 1 == steps ? stop : start + (stop - start) * f);
    }
    return out;
}

}  // namespace sqz
