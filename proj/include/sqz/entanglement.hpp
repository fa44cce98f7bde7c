#pragma once

// Two-mode Gaussian states produced by interfering two squeezed beams, and
// their logarithmic negativity.
//
// Quadrature ordering is (X1, Y1, X2, Y2); covariances are in shot-noise
// units so the vacuum is the identity. Logarithmic negativity stands in for
// entanglement of formation: it is computable in closed form from the
// covariance matrix without a normal-form reduction.

#include <span>
#include <vector>

#include <Eigen/Core>

#include "sqz/gaussian.hpp"

namespace sqz {

struct TwoModeCovariance {
    Eigen::Matrix2d a = Eigen::Matrix2d::Identity();
    Eigen::Matrix2d b = Eigen::Matrix2d::Identity();
    Eigen::Matrix2d c = Eigen::Matrix2d::Zero();

    Eigen::Matrix4d full() const;
    static TwoModeCovariance from_full(const Eigen::Matrix4d& m);
};

struct SymplecticSpectrum {
    double minus;
    double plus;
};

// Seralian Delta = det A + det B + 2 det C, nu^2 = (Delta -+ sqrt(Delta^2 - 4 det sigma)) / 2.
SymplecticSpectrum symplectic_eigenvalues(const TwoModeCovariance& cm);

// Smallest symplectic eigenvalue of the partial transpose (Y2 -> -Y2).
double partial_transpose_min_eigenvalue(const TwoModeCovariance& cm);

// Symmetric, A and B positive definite, both symplectic eigenvalues >= 1 - 1e-9.
bool is_physical(const TwoModeCovariance& cm);

TwoModeCovariance swap_modes(const TwoModeCovariance& cm);

// Interferes m1 (squeezed in X) with m2 (squeezed in Y: its vx/vy are swapped
// before mixing) on a beam splitter of intensity transmission t:
//   X1' = sqrt(t) X1 + sqrt(1-t) X2,  X2' = -sqrt(1-t) X1 + sqrt(t) X2, same for Y.
TwoModeCovariance entangle(const GaussianMode& m1, const GaussianMode& m2, double t);

// max(0, -log2 nu~_-). Throws UnphysicalCovariance.
double log_negativity(const TwoModeCovariance& cm);

struct EntanglementRow {
    double eta;
    GaussianMode purified;
    double log_neg;
};

// Purifies two identical (squeezing, antisqueezing) beams at each eta with the
// optimal gain, interferes them at transmission t and reports E_N. The eta = 1
// baseline is always present; rows follow the input order with the baseline
// appended when missing.
std::vector<EntanglementRow> entanglement_vs_purification(double squeezing, double antisqueezing, double t,
                                                          std::span<const double> etas, double eps);

}  // namespace sqz
