#pragma once

// Photon-number bookkeeping for squeezed beams and the dense-coding capacity
// that follows from it.
//
// All photon numbers are mean photons per bandwidth per time for a *single*
// squeezed beam. Bookkeeping that refers to the whole entangled system (two
// identical beams) uses twice these values for the minimum, excess and total
// photon numbers; the encoding photon number n_cp is the same in both.

#include <optional>
#include <span>
#include <vector>

#include "sqz/gaussian.hpp"

namespace sqz {

struct PhotonBudget {
    double n_total;
    double n_noncl;
    double n_thermal;
};

enum class BudgetPolicy {
    Strict,      // vx > 1 is NotSqueezed, vx * vy < 1 is HeisenbergViolation
    Permissive,  // vx > 1 counts as zero non-classical photons; unphysical
                 // states give a negative n_thermal instead of an error
};

// n_total = (vx + vy - 2) / 4, n_noncl = (vx + 1/vx - 2) / 4, n_thermal the rest.
PhotonBudget photon_budget(const GaussianMode& m, BudgetPolicy policy = BudgetPolicy::Strict);

inline constexpr double kDefaultPhotonsPerChannelUse = 400.0;

struct CapacityQuery {
    double n_cp = kDefaultPhotonsPerChannelUse;
};

// (1 + n) log2(1 + n) - n log2(n), bits per channel use.
double holevo_capacity(const CapacityQuery& q);

// 2n + 1 - 2 sqrt(n^2 + n) for n non-classical photons, evaluated as its
// reciprocal-conjugate 1 / (2n + 1 + 2 sqrt(n^2 + n)). Equals vx.
double squeezing_denominator(double n_noncl);

// log2(1 + n_signal / squeezing_denominator(n_noncl)) with
// n_signal = n_cp - n_thermal - n_noncl. Empty when n_signal < 0.
std::optional<double> epr_capacity_from_budget(double n_noncl, double n_thermal, const CapacityQuery& q);

// Throws SignalBudgetExhausted when the state alone uses more than n_cp photons.
double epr_capacity(const GaussianMode& m, const CapacityQuery& q);

// C_EPR > C_Holevo.
bool dense_coding_success(const GaussianMode& m, const CapacityQuery& q);

enum class TrajectoryMode { AttenuateOnly, FeedForward };

struct TrajectoryPoint {
    double eta;
    GaussianMode state;
    PhotonBudget budget;
};

// Applies the selected channel for each eta and returns the resulting budgets,
// sorted by eta descending. Feed-forward uses the optimal gain at efficiency eps.
std::vector<TrajectoryPoint> trajectory(const GaussianMode& in, std::span<const double> etas,
                                        TrajectoryMode mode, double eps);

struct ContourCell {
    double n_noncl;
    double n_thermal;
    std::optional<double> c_epr;  // empty where n_signal < 0
    std::optional<double> ratio;  // c_epr / C_Holevo
};

// Row-major over (n_noncl, n_thermal).
std::vector<ContourCell> capacity_contours(std::span<const double> n_noncl, std::span<const double> n_thermal,
                                           const CapacityQuery& q);

}  // namespace sqz
