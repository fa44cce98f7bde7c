#pragma once

// Command-line front end. Every subcommand renders its complete output in
// memory first, so a failing run never leaves a partial file behind.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sqz/gaussian.hpp"

namespace sqz::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsage = 1,
    kVerificationFailed = 2,
};

struct SweepSpec {
    std::string subcommand;
    std::optional<GaussianMode> input;
    double eta_start = 0.0;
    double eta_stop = 1.0;
    std::size_t eta_steps = 101;
    double eps = 0.70;
    double eta_det = 1.0;
    double n_cp = 400.0;
    double bs_t = 0.5;
    std::size_t samples = 100000;
    std::uint64_t seed = 1;
    double noncl_max = 2.0;
    std::size_t noncl_steps = 41;
    double thermal_max = 200.0;
    std::size_t thermal_steps = 41;
    std::string out;  // empty: standard output

    // Throws sqz::Error (ConfigOutOfRange and friends) on any invalid field.
    void validate() const;
    std::vector<double> eta_grid() const;
};

// CSV renderers, one per subcommand. Numbers carry 15 significant digits;
// undefined cells are written as "nan".
std::string purify_sweep_csv(const SweepSpec& spec);
std::string optimal_bound_csv(const SweepSpec& spec);
std::string photon_diagram_csv(const SweepSpec& spec);
std::string dense_coding_csv(const SweepSpec& spec);
std::string entanglement_sweep_csv(const SweepSpec& spec);

struct VerifyOutcome {
    std::string report;
    bool ok;
};
VerifyOutcome mc_verify(const SweepSpec& spec);

// Parses args (without the program name), runs the subcommand and returns
// the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sqz::cli
