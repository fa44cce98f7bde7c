#pragma once

// Test-only reference computations. Nothing here calls into the closed forms
// under test; each helper takes a different computational route.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace sqz::oracle {

// Symplectic eigenvalues as the moduli of the eigenvalues of i Omega sigma
// (each appears twice), sorted ascending.
inline std::vector<double> symplectic_spectrum(const Eigen::MatrixXd& sigma) {
    const Eigen::Index n = sigma.rows() / 2;
    Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(sigma.rows(), sigma.cols());
    for (Eigen::Index k = 0; k < n; ++k) {
        omega(2 * k, 2 * k + 1) = 1.0;
        omega(2 * k + 1, 2 * k) = -1.0;
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(std::complex<double>(0.0, 1.0) * (omega * sigma).cast<std::complex<double>>());
    std::vector<double> mods;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) mods.push_back(std::abs(solver.eigenvalues()(i)));
    std::sort(mods.begin(), mods.end());
    std::vector<double> out;
    for (std::size_t i = 0; i < mods.size(); i += 2) out.push_back(0.5 * (mods[i] + mods[i + 1]));
    return out;
}

// Covariance of linear combinations of independent zero-mean variables:
// Cov(out_i, out_j) = sum_k w_ik w_jk var_k.
inline Eigen::MatrixXd mixed_covariance(const Eigen::MatrixXd& weights, const Eigen::VectorXd& variances) {
    return weights * variances.asDiagonal() * weights.transpose();
}

// Golden-section minimization of a unimodal function on [lo, hi].
inline double golden_min(const std::function<double(double)>& f, double lo, double hi, int iters = 200) {
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - phi * (b - a), d = a + phi * (b - a);
    for (int i = 0; i < iters; ++i) {
        if (f(c) < f(d)) {
            b = d;
        } else {
            a = c;
        }
        c = b - phi * (b - a);
        d = a + phi * (b - a);
    }
    return 0.5 * (a + b);
}

// Fixed-seed generator for hand-rolled property tests.
class Generator {
public:
    explicit Generator(std::uint64_t seed) : engine_(seed) {}
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
    double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }

private:
    std::mt19937_64 engine_;
};

}  // namespace sqz::oracle
