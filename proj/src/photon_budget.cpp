#include "sqz/photon_budget.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sqz/error.hpp"
#include "sqz/purification.hpp"

namespace sqz {

namespace {

void require_photons(double n) {
    if (!(n >= 0.0)) {
        throw Error(ErrorKind::NegativePhotonNumber, "n = " + std::to_string(n));
    }
}

}  // namespace

PhotonBudget photon_budget(const GaussianMode& m, BudgetPolicy policy) {
    const double vx = m.vx();
    const double vy = m.vy();
    if (!(vx > 0.0) || !(vy > 0.0)) {
        throw Error(ErrorKind::NonPositiveVariance, "variances must be positive");
    }
    if (vx > 1.0 && policy == BudgetPolicy::Strict) {
        throw Error(ErrorKind::NotSqueezed, "vx = " + std::to_string(vx) + " > 1");
    }
    if (policy == BudgetPolicy::Strict && m.product() < 1.0 - kVarianceTol) {
        throw Error(ErrorKind::HeisenbergViolation, "vx * vy = " + std::to_string(m.product()));
    }
    const double total = (vx + vy - 2.0) / 4.0;
    if (vx > 1.0) return PhotonBudget{total, 0.0, total};

    const double noncl = (vx + 1.0 / vx - 2.0) / 4.0;
    // vy - 1/vx is the excess over the pure state with the same squeezing;
    // negative exactly when vx * vy < 1.
    double thermal = (vy - 1.0 / vx) / 4.0;
    if (policy == BudgetPolicy::Strict) thermal = std::max(0.0, thermal);
    return PhotonBudget{total, noncl, thermal};
}

double holevo_capacity(const CapacityQuery& q) {
    const double n = q.n_cp;
    require_photons(n);
    if (n == 0.0) return 0.0;
    // (1+n) log2(1+n) - n log2 n == log2(1+n) + n log2(1 + 1/n)
    return std::log2(1.0 + n) + n * std::log1p(1.0 / n) / std::log(2.0);
}

double squeezing_denominator(double n_noncl) {
    require_photons(n_noncl);
    return 1.0 / (2.0 * n_noncl + 1.0 + 2.0 * std::sqrt(n_noncl * n_noncl + n_noncl));
}

std::optional<double> epr_capacity_from_budget(double n_noncl, double n_thermal, const CapacityQuery& q) {
    require_photons(q.n_cp);
    require_photons(n_thermal);
    const double signal = q.n_cp - n_thermal - n_noncl;
    if (signal < 0.0) return std::nullopt;
    return std::log2(1.0 + signal / squeezing_denominator(n_noncl));
}

double epr_capacity(const GaussianMode& m, const CapacityQuery& q) {
    const PhotonBudget b = photon_budget(m);
    const auto c = epr_capacity_from_budget(b.n_noncl, b.n_thermal, q);
    if (!c) {
        throw Error(ErrorKind::SignalBudgetExhausted,
                    "state uses " + std::to_string(b.n_total) + " photons, more than n_cp = " + std::to_string(q.n_cp));
    }
    return *c;
}

bool dense_coding_success(const GaussianMode& m, const CapacityQuery& q) {
    return epr_capacity(m, q) > holevo_capacity(q);
}

std::vector<TrajectoryPoint> trajectory(const GaussianMode& in, std::span<const double> etas, TrajectoryMode mode,
                                        double eps) {
    std::vector<double> sorted(etas.begin(), etas.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());

    std::vector<TrajectoryPoint> out;
    out.reserve(sorted.size());
    for (double eta : sorted) {
        GaussianMode state = in;
        if (mode == TrajectoryMode::AttenuateOnly) {
            state = attenuate(in, eta);
        } else {
            state = purify(in, FeedForwardConfig{eta, 0.0, eps, 1.0}, GainChoice::Optimal).output;
        }
        out.push_back(TrajectoryPoint{eta, state, photon_budget(state)});
    }
    return out;
}

std::vector<ContourCell> capacity_contours(std::span<const double> n_noncl, std::span<const double> n_thermal,
                                           const CapacityQuery& q) {
    const double holevo = holevo_capacity(q);
    std::vector<ContourCell> cells;
    cells.reserve(n_noncl.size() * n_thermal.size());
    for (double nc : n_noncl) {
        for (double nt : n_thermal) {
            ContourCell cell{nc, nt, epr_capacity_from_budget(nc, nt, q), std::nullopt};
            if (cell.c_epr && holevo > 0.0) cell.ratio = *cell.c_epr / holevo;
            cells.push_back(cell);
        }
    }
    return cells;
}

}  // namespace sqz
