#include "sqz/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "sqz/error.hpp"
#include "sqz/purification.hpp"

namespace sqz {

namespace {

constexpr double kPhysicalTol = 1e-9;

// Symplectic eigenvalues of a positive-definite 4x4 covariance: the singular
// values of the antisymmetric S Omega S, with S = sigma^(1/2), each appear twice.
// Working with symmetric matrices keeps degenerate spectra (pure states) accurate.
SymplecticSpectrum spectrum_of(const Eigen::Matrix4d& sigma) {
    Eigen::Matrix4d omega = Eigen::Matrix4d::Zero();
    omega(0, 1) = omega(2, 3) = 1.0;
    omega(1, 0) = omega(3, 2) = -1.0;
    const Eigen::Matrix4d root = Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d>(sigma).operatorSqrt();
    const Eigen::Matrix4d m = root * omega * root;
    const Eigen::Vector4d sv = Eigen::JacobiSVD<Eigen::Matrix4d>(m).singularValues();  // descending
    return {0.5 * (sv(2) + sv(3)), 0.5 * (sv(0) + sv(1))};
}

bool positive_definite(const Eigen::Matrix4d& m) {
    return Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d>(m, Eigen::EigenvaluesOnly).eigenvalues()(0) > 0.0;
}

Eigen::Matrix4d partial_transpose(const TwoModeCovariance& cm) {
    const Eigen::Vector4d flip(1.0, 1.0, 1.0, -1.0);
    return flip.asDiagonal() * cm.full() * flip.asDiagonal();
}

}  // namespace

Eigen::Matrix4d TwoModeCovariance::full() const {
    Eigen::Matrix4d m;
    m << a, c, c.transpose(), b;
    return m;
}

TwoModeCovariance TwoModeCovariance::from_full(const Eigen::Matrix4d& m) {
    return TwoModeCovariance{m.topLeftCorner<2, 2>(), m.bottomRightCorner<2, 2>(), m.topRightCorner<2, 2>()};
}

SymplecticSpectrum symplectic_eigenvalues(const TwoModeCovariance& cm) { return spectrum_of(cm.full()); }

double partial_transpose_min_eigenvalue(const TwoModeCovariance& cm) {
    return spectrum_of(partial_transpose(cm)).minus;
}

bool is_physical(const TwoModeCovariance& cm) {
    const Eigen::Matrix4d m = cm.full();
    if (!m.isApprox(m.transpose(), 1e-12)) return false;
    if (!positive_definite(m)) return false;
    return symplectic_eigenvalues(cm).minus >= 1.0 - kPhysicalTol;
}

TwoModeCovariance swap_modes(const TwoModeCovariance& cm) {
    return TwoModeCovariance{cm.b, cm.a, cm.c.transpose()};
}

TwoModeCovariance entangle(const GaussianMode& m1, const GaussianMode& m2, double t) {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw Error(ErrorKind::TOutOfRange, "beam splitter transmission " + std::to_string(t) + " not in [0, 1]");
    }
    Eigen::Matrix4d input = Eigen::Matrix4d::Zero();
    input.diagonal() << m1.vx(), m1.vy(), m2.vy(), m2.vx();

    const double st = std::sqrt(t);
    const double sr = std::sqrt(1.0 - t);
    Eigen::Matrix4d bs;
    bs << st, 0.0, sr, 0.0,
          0.0, st, 0.0, sr,
          -sr, 0.0, st, 0.0,
          0.0, -sr, 0.0, st;
    return TwoModeCovariance::from_full(bs * input * bs.transpose());
}

double log_negativity(const TwoModeCovariance& cm) {
    if (!is_physical(cm)) {
        throw Error(ErrorKind::UnphysicalCovariance, "covariance matrix violates the uncertainty principle");
    }
    return std::max(0.0, -std::log2(partial_transpose_min_eigenvalue(cm)));
}

std::vector<EntanglementRow> entanglement_vs_purification(double squeezing, double antisqueezing, double t,
                                                          std::span<const double> etas, double eps) {
    const GaussianMode input = make_mode(squeezing, antisqueezing);
    std::vector<double> grid(etas.begin(), etas.end());
    if (std::find(grid.begin(), grid.end(), 1.0) == grid.end()) grid.push_back(1.0);

    std::vector<EntanglementRow> rows;
    rows.reserve(grid.size());
    for (double eta : grid) {
        const GaussianMode beam = purify(input, FeedForwardConfig{eta, 0.0, eps, 1.0}, GainChoice::Optimal).output;
        rows.push_back(EntanglementRow{eta, beam, log_negativity(entangle(beam, beam, t))});
    }
    return rows;
}

}  // namespace sqz
