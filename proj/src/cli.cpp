#include "sqz/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "sqz/entanglement.hpp"
#include "sqz/error.hpp"
#include "sqz/photon_budget.hpp"
#include "sqz/purification.hpp"
#include "sqz/sampling.hpp"

namespace sqz::cli {

namespace {

std::string num(double v) {
    if (std::isnan(v)) return "nan";
    return fmt::format("{:.15g}", v + 0.0);  // no "-0"
}

std::string num(const std::optional<double>& v) { return v ? num(*v) : std::string("nan"); }

void require_unit(double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw Error(ErrorKind::ConfigOutOfRange, fmt::format("{} = {} not in [0, 1]", name, v));
    }
}

const GaussianMode& require_input(const SweepSpec& spec) {
    if (!spec.input) {
        throw Error(ErrorKind::InvalidRun, spec.subcommand + " needs an input state (--vx/--vy, dB flags or --preset)");
    }
    return *spec.input;
}

}  // namespace

void SweepSpec::validate() const {
    require_unit(eta_start, "eta-start");
    require_unit(eta_stop, "eta-stop");
    require_unit(eps, "eps");
    require_unit(eta_det, "eta-det");
    if (!(bs_t >= 0.0 && bs_t <= 1.0)) {
        throw Error(ErrorKind::TOutOfRange, fmt::format("bs-t = {} not in [0, 1]", bs_t));
    }
    if (eta_steps < 1 || noncl_steps < 1 || thermal_steps < 1) {
        throw Error(ErrorKind::ConfigOutOfRange, "step counts must be at least 1");
    }
    if (!(n_cp > 0.0)) {
        throw Error(ErrorKind::NegativePhotonNumber, fmt::format("n-cp = {} must be positive", n_cp));
    }
    if (!(noncl_max >= 0.0) || !(thermal_max >= 0.0)) {
        throw Error(ErrorKind::NegativePhotonNumber, "contour ranges must be non-negative");
    }
    if (samples < 2) {
        throw Error(ErrorKind::InvalidRun, "samples must be at least 2");
    }
    if (input) make_mode(input->vx(), input->vy());
}

std::vector<double> SweepSpec::eta_grid() const { return linspace(eta_start, eta_stop, eta_steps); }

std::string purify_sweep_csv(const SweepSpec& spec) {
    spec.validate();
    const GaussianMode& in = require_input(spec);
    std::ostringstream out;
    out << "eta,vx_t,vy_noff,vy_ff_ideal,vy_ff_eps,vy_min_bound,product_noff,product_ff,purity_in,purity_out,"
           "excess_reduction\n";
    for (double eta : spec.eta_grid()) {
        const GaussianMode plain = attenuate(in, eta);
        const PurificationResult ideal = purify(in, FeedForwardConfig{eta, 0.0, 1.0, spec.eta_det}, GainChoice::Optimal);
        const PurificationResult real = purify(in, FeedForwardConfig{eta, 0.0, spec.eps, spec.eta_det}, GainChoice::Optimal);
        out << num(eta) << ',' << num(plain.vx()) << ',' << num(plain.vy()) << ',' << num(ideal.output.vy()) << ','
            << num(real.output.vy()) << ',' << num(real.bound) << ',' << num(plain.product()) << ','
            << num(real.output.product()) << ',' << num(real.purity_in) << ',' << num(real.purity_out) << ','
            << num(excess_noise_reduction(in.vy(), eta, spec.eps, spec.eta_det)) << '\n';
    }
    return out.str();
}

std::string optimal_bound_csv(const SweepSpec& spec) {
    spec.validate();
    const GaussianMode& in = require_input(spec);
    std::ostringstream out;
    out << "vx_target,vy_min\n";
    for (double target : linspace(in.vx(), 1.0, spec.eta_steps)) {
        out << num(target) << ',' << num(optimal_bound(in, target)) << '\n';
    }
    return out.str();
}

std::string photon_diagram_csv(const SweepSpec& spec) {
    spec.validate();
    const GaussianMode& in = require_input(spec);
    const CapacityQuery q{spec.n_cp};
    const double holevo = holevo_capacity(q);
    const std::vector<double> etas = spec.eta_grid();

    std::ostringstream out;
    out << "eta,mode,n_noncl,n_thermal,c_ratio\n";
    for (auto [mode, label] : {std::pair{TrajectoryMode::AttenuateOnly, "attenuate"},
                               std::pair{TrajectoryMode::FeedForward, "feed-forward"}}) {
        for (const TrajectoryPoint& p : trajectory(in, etas, mode, spec.eps)) {
            const auto c = epr_capacity_from_budget(p.budget.n_noncl, p.budget.n_thermal, q);
            const std::optional<double> ratio = c ? std::optional(*c / holevo) : std::nullopt;
            out << num(p.eta) << ',' << label << ',' << num(p.budget.n_noncl) << ',' << num(p.budget.n_thermal)
                << ',' << num(ratio) << '\n';
        }
    }
    return out.str();
}

std::string dense_coding_csv(const SweepSpec& spec) {
    spec.validate();
    const std::vector<double> noncl = linspace(0.0, spec.noncl_max, spec.noncl_steps);
    const std::vector<double> thermal = linspace(0.0, spec.thermal_max, spec.thermal_steps);
    std::ostringstream out;
    out << "n_noncl,n_thermal,c_epr,c_ratio\n";
    for (const ContourCell& cell : capacity_contours(noncl, thermal, CapacityQuery{spec.n_cp})) {
        out << num(cell.n_noncl) << ',' << num(cell.n_thermal) << ',' << num(cell.c_epr) << ',' << num(cell.ratio)
            << '\n';
    }
    return out.str();
}

std::string entanglement_sweep_csv(const SweepSpec& spec) {
    spec.validate();
    const GaussianMode& in = require_input(spec);
    const std::vector<double> etas = spec.eta_grid();
    std::ostringstream out;
    out << "eta,vx_purified,vy_purified,log_negativity\n";
    for (const EntanglementRow& row : entanglement_vs_purification(in.vx(), in.vy(), spec.bs_t, etas, spec.eps)) {
        out << num(row.eta) << ',' << num(row.purified.vx()) << ',' << num(row.purified.vy()) << ','
            << num(row.log_neg) << '\n';
    }
    return out.str();
}

VerifyOutcome mc_verify(const SweepSpec& spec) {
    spec.validate();
    VerifyGrid grid = VerifyGrid::default_grid();
    if (spec.input) {
        grid = VerifyGrid{{spec.input->vx()}, {spec.input->product()}, spec.eta_grid(), {spec.eps}};
    }
    const VerifyReport report = sweep_verify(grid, spec.samples, spec.seed);
    return {report.to_text(), report.ok()};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Squeezed-state purification toolbox: plot-ready CSV sweeps and Monte-Carlo verification.", "sqzpurify"};
    app.set_config("--config", "", "flat key=value file mirroring the long flags; command-line flags win");
    app.require_subcommand(1);

    SweepSpec spec;
    std::optional<double> vx, vy, sqz_db, anti_db;
    std::string preset;

    auto* o_vx = app.add_option("--vx", vx, "amplitude quadrature variance (shot-noise units)");
    auto* o_vy = app.add_option("--vy", vy, "phase quadrature variance (shot-noise units)");
    auto* o_sdb = app.add_option("--squeezing-db", sqz_db, "squeezing in dB (positive means vx < 1)");
    auto* o_adb = app.add_option("--antisqueezing-db", anti_db, "antisqueezing in dB (positive means vy > 1)");
    o_vx->excludes(o_sdb);
    o_vy->excludes(o_adb);
    app.add_option("--preset", preset, "named input state")->check(CLI::IsMember({"fig3b", "fig3-b"}));
    app.add_option("--eta-start", spec.eta_start, "first tap transmission")->capture_default_str();
    app.add_option("--eta-stop", spec.eta_stop, "last tap transmission")->capture_default_str();
    app.add_option("--eta-steps", spec.eta_steps, "number of grid points")->capture_default_str();
    app.add_option("--eps", spec.eps, "in-loop homodyne efficiency")->capture_default_str();
    app.add_option("--eta-det", spec.eta_det, "verification detection efficiency")->capture_default_str();
    app.add_option("--n-cp", spec.n_cp, "photons per bandwidth per time for communication")->capture_default_str();
    app.add_option("--bs-t", spec.bs_t, "entangling beam splitter transmission")->capture_default_str();
    app.add_option("--samples", spec.samples, "Monte-Carlo samples per grid point")->capture_default_str();
    app.add_option("--seed", spec.seed, "Monte-Carlo seed")->capture_default_str();
    app.add_option("--noncl-max", spec.noncl_max, "contour grid: largest non-classical photon number")
        ->capture_default_str();
    app.add_option("--noncl-steps", spec.noncl_steps, "contour grid: non-classical points")->capture_default_str();
    app.add_option("--thermal-max", spec.thermal_max, "contour grid: largest thermal photon number")
        ->capture_default_str();
    app.add_option("--thermal-steps", spec.thermal_steps, "contour grid: thermal points")->capture_default_str();
    app.add_option("--out", spec.out, "output file (default: standard output)");

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"purify-sweep", "quadrature variances, purity and excess-noise reduction versus tap transmission"},
        {"optimal-bound", "optimal phase variance versus target amplitude variance"},
        {"photon-diagram", "photon-number trajectories with and without feed-forward"},
        {"dense-coding", "dense-coding capacity contours normalized to the Holevo limit"},
        {"entanglement-sweep", "logarithmic negativity versus purification strength"},
        {"mc-verify", "Monte-Carlo check of every analytic variance"},
    };
    for (const auto& [name, help] : commands) {
        app.add_subcommand(name, help)->fallthrough();
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    spec.subcommand = app.get_subcommands().front()->get_name();

    std::string text;
    bool verification_failed = false;
    try {
        if (!preset.empty() && (vx || vy || sqz_db || anti_db)) {
            throw Error(ErrorKind::InvalidRun, "--preset cannot be combined with explicit variances");
        }
        if (!preset.empty()) {
            spec.input = make_mode(0.3, 400.0);
        } else {
            const std::optional<double> x = vx ? vx : sqz_db ? std::optional(variance_from_squeezing_db(*sqz_db)) : std::nullopt;
            const std::optional<double> y =
                vy ? vy : anti_db ? std::optional(variance_from_antisqueezing_db(*anti_db)) : std::nullopt;
            if (x.has_value() != y.has_value()) {
                throw Error(ErrorKind::InvalidRun, "give both quadratures or neither");
            }
            if (x) spec.input = make_mode(*x, *y);
        }

        const std::string& cmd = spec.subcommand;
        if (cmd == "purify-sweep") {
            text = purify_sweep_csv(spec);
        } else if (cmd == "optimal-bound") {
            text = optimal_bound_csv(spec);
        } else if (cmd == "photon-diagram") {
            text = photon_diagram_csv(spec);
        } else if (cmd == "dense-coding") {
            text = dense_coding_csv(spec);
        } else if (cmd == "entanglement-sweep") {
            text = entanglement_sweep_csv(spec);
        } else {
            VerifyOutcome outcome = mc_verify(spec);
            text = std::move(outcome.report);
            verification_failed = !outcome.ok;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    if (spec.out.empty()) {
        out << text;
    } else {
        std::ofstream file(spec.out, std::ios::binary | std::ios::trunc);
        if (!file) {
            err << "error: cannot open " << spec.out << " for writing\n";
            return kUsage;
        }
        file << text;
        if (!file.flush()) {
            err << "error: failed writing " << spec.out << '\n';
            return kUsage;
        }
    }
    if (verification_failed) {
        err << "mc-verify: grid points outside the " << kSigmaBudget << " sigma budget\n";
        return kVerificationFailed;
    }
    return kSuccess;
}

}  // namespace sqz::cli
