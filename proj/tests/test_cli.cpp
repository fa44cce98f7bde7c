#include "sqz/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <gtest/gtest.h>

using sqz::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

using Row = std::map<std::string, std::string>;

std::vector<Row> parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    std::vector<std::string> header;
    {
        std::istringstream h(line);
        std::string cell;
        while (std::getline(h, cell, ',')) header.push_back(cell);
    }
    std::vector<Row> rows;
    while (std::getline(in, line)) {
        std::istringstream l(line);
        std::string cell;
        Row row;
        for (std::size_t i = 0; std::getline(l, cell, ','); ++i) row[header.at(i)] = cell;
        EXPECT_EQ(row.size(), header.size()) << line;
        rows.push_back(row);
    }
    return rows;
}

double num(const Row& r, const std::string& key) { return std::stod(r.at(key)); }

class TempDir {
public:
    TempDir() : path_(std::filesystem::temp_directory_path() / ("sqz_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name())) {
        std::filesystem::remove_all(path_);
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    std::filesystem::path path_;
};

}  // namespace

TEST(Cli, purify_sweep_operating_point) {
    const Result r = invoke({"purify-sweep", "--vx", "0.47", "--vy", "100", "--eta-steps", "101", "--eps", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = parse_csv(r.out);
    ASSERT_EQ(rows.size(), 101u);
    const Row& op = rows[92];
    EXPECT_NEAR(num(op, "eta"), 0.92, 1e-15);
    EXPECT_NEAR(num(op, "vx_t"), 0.5124, 1e-12);
    EXPECT_NEAR(num(op, "vy_ff_ideal"), 11.2107623318386, 1e-11);
    EXPECT_NEAR(num(op, "vy_min_bound"), 11.2107623318386, 1e-11);
    EXPECT_NEAR(num(op, "excess_reduction"), 8.213536, 1e-9);
    // 15 significant digits on every number.
    EXPECT_NE(op.at("vy_ff_ideal").find("11.2107623318386"), std::string::npos);
}

TEST(Cli, purify_sweep_single_step_is_identity) {
    const Result r = invoke({"purify-sweep", "--vx", "0.47", "--vy", "100", "--eta-start", "1", "--eta-steps", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = parse_csv(r.out);
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(num(rows[0], "vx_t"), 0.47);
    EXPECT_EQ(num(rows[0], "vy_noff"), 100.0);
    EXPECT_EQ(num(rows[0], "vy_ff_ideal"), 100.0);
    EXPECT_EQ(num(rows[0], "vy_ff_eps"), 100.0);
    EXPECT_EQ(num(rows[0], "purity_out"), num(rows[0], "purity_in"));
}

TEST(Cli, inefficient_loop_sits_above_ideal) {
    const Result r = invoke({"purify-sweep", "--vx", "0.47", "--vy", "100", "--eps", "0.7"});
    ASSERT_EQ(r.code, 0) << r.err;
    for (const Row& row : parse_csv(r.out)) {
        EXPECT_GE(num(row, "vy_ff_eps"), num(row, "vy_ff_ideal") * (1 - 1e-14));
        EXPECT_LE(num(row, "vy_ff_eps"), num(row, "vy_noff") * (1 + 1e-14));
    }
}

TEST(Cli, decibel_inputs) {
    const Result db = invoke({"purify-sweep", "--squeezing-db", "3.4", "--antisqueezing-db", "20", "--eta-steps", "3"});
    ASSERT_EQ(db.code, 0) << db.err;
    const auto rows = parse_csv(db.out);
    EXPECT_NEAR(num(rows.back(), "vx_t"), std::pow(10.0, -0.34), 1e-14);
    EXPECT_NEAR(num(rows.back(), "vy_noff"), 100.0, 1e-11);

    EXPECT_EQ(invoke({"purify-sweep", "--vx", "0.5", "--squeezing-db", "3", "--vy", "4"}).code, 1);
    EXPECT_EQ(invoke({"purify-sweep", "--vx", "0.5"}).code, 1);
}

TEST(Cli, optimal_bound_endpoints) {
    const Result r = invoke({"optimal-bound", "--vx", "0.47", "--vy", "100", "--eta-steps", "11"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = parse_csv(r.out);
    ASSERT_EQ(rows.size(), 11u);
    EXPECT_EQ(num(rows.front(), "vx_target"), 0.47);
    EXPECT_NEAR(num(rows.front(), "vy_min"), 100.0, 1e-12);
    EXPECT_EQ(num(rows.back(), "vx_target"), 1.0);
    EXPECT_NEAR(num(rows.back(), "vy_min"), 1.0, 1e-14);
    for (const Row& row : rows) {
        const double target = num(row, "vx_target");
        const double eta = (1 - target) / (1 - 0.47);
        EXPECT_NEAR(num(row, "vy_min"), 100.0 / (eta + (1 - eta) * 100.0), 1e-10);
    }
}

TEST(Cli, photon_diagram_preset) {
    const Result r = invoke({"photon-diagram", "--preset", "fig3b", "--eps", "1", "--eta-start", "0.9", "--eta-steps", "101"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = parse_csv(r.out);
    ASSERT_EQ(rows.size(), 202u);
    EXPECT_EQ(rows[0].at("mode"), "attenuate");
    EXPECT_EQ(rows[101].at("mode"), "feed-forward");
    for (std::size_t start : {std::size_t{0}, std::size_t{101}}) {
        EXPECT_EQ(num(rows[start], "eta"), 1.0);
        EXPECT_NEAR(num(rows[start], "n_noncl"), 0.408333333333333, 1e-12);
        EXPECT_NEAR(num(rows[start], "n_thermal"), 99.1666666666667, 1e-11);
        EXPECT_LT(num(rows[start], "c_ratio"), 1.0);
    }
    bool attenuate_success = false, ff_success = false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        (i < 101 ? attenuate_success : ff_success) |= num(rows[i], "c_ratio") > 1.0;
    }
    EXPECT_FALSE(attenuate_success);
    EXPECT_TRUE(ff_success);
}

TEST(Cli, dense_coding_grid) {
    const Result r = invoke({"dense-coding", "--noncl-max", "1", "--noncl-steps", "3", "--thermal-max", "500",
                             "--thermal-steps", "6"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = parse_csv(r.out);
    ASSERT_EQ(rows.size(), 18u);
    EXPECT_EQ(num(rows[0], "n_noncl"), 0.0);
    EXPECT_NEAR(num(rows[0], "c_epr"), std::log2(401.0), 1e-12);
    EXPECT_EQ(rows[5].at("c_ratio"), "nan");  // 500 thermal photons > n_cp
    EXPECT_EQ(rows[5].at("c_epr"), "nan");
    for (std::size_t i = 1; i < 5; ++i) EXPECT_LT(num(rows[i], "c_ratio"), num(rows[i - 1], "c_ratio"));
}

TEST(Cli, entanglement_sweep_symmetric) {
    const Result r = invoke({"entanglement-sweep", "--vx", "0.3", "--vy", "400", "--bs-t", "0.5", "--eps", "1",
                             "--eta-start", "1", "--eta-stop", "1", "--eta-steps", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = parse_csv(r.out);
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_NEAR(num(rows[0], "log_negativity"), -std::log2(0.3), 1e-10);
}

TEST(Cli, mc_verify_is_deterministic) {
    const std::vector<std::string> args{"mc-verify", "--vx", "0.3", "--vy", "40", "--eta-steps", "3", "--eps", "0.8",
                                        "--samples", "20000", "--seed", "77"};
    const Result a = invoke(args);
    const Result b = invoke(args);
    ASSERT_EQ(a.code, 0) << a.out << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out.find("failures=0"), std::string::npos);
}

TEST(Cli, usage_errors_write_nothing) {
    TempDir dir;
    const std::string out = dir.file("out.csv");
    EXPECT_EQ(invoke({"purify-sweep", "--vx", "0.47", "--vy", "100", "--eta-start", "1.5", "--out", out}).code, 1);
    EXPECT_EQ(invoke({"purify-sweep", "--vx", "0.5", "--vy", "0.5", "--out", out}).code, 1);
    EXPECT_EQ(invoke({"purify-sweep", "--vx", "2", "--vy", "3", "--out", out}).code, 1);
    EXPECT_EQ(invoke({"purify-sweep", "--vx", "0.47", "--vy", "100", "--eta-steps", "0", "--out", out}).code, 1);
    EXPECT_EQ(invoke({"bogus"}).code, 1);
    EXPECT_EQ(invoke({}).code, 1);
    EXPECT_EQ(invoke({"photon-diagram", "--no-such-flag"}).code, 1);
    const Result r = invoke({"photon-diagram", "--preset", "fig3b", "--vx", "0.3", "--out", out});
    EXPECT_EQ(r.code, 1);
    EXPECT_FALSE(r.err.empty());
    EXPECT_FALSE(std::filesystem::exists(out));
}

TEST(Cli, writes_output_file) {
    TempDir dir;
    const std::string out = dir.file("bound.csv");
    const Result r = invoke({"optimal-bound", "--vx", "0.5", "--vy", "2", "--eta-steps", "5", "--out", out});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(out);
    std::stringstream text;
    text << in.rdbuf();
    EXPECT_EQ(parse_csv(text.str()).size(), 5u);
}

TEST(Cli, config_file_with_flag_override) {
    TempDir dir;
    const std::string cfg = dir.file("run.conf");
    std::ofstream(cfg) << "vx=0.47\nvy=100\neta-steps=11\neps=1\n";
    const Result from_file = invoke({"purify-sweep", "--config", cfg});
    ASSERT_EQ(from_file.code, 0) << from_file.err;
    EXPECT_EQ(parse_csv(from_file.out).size(), 11u);

    const Result overridden = invoke({"purify-sweep", "--config", cfg, "--eta-steps", "3"});
    ASSERT_EQ(overridden.code, 0) << overridden.err;
    const auto rows = parse_csv(overridden.out);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(num(rows[1], "eta"), 0.5);
    EXPECT_EQ(num(rows[2], "vy_ff_eps"), num(rows[2], "vy_ff_ideal"));
}

TEST(Cli, help_succeeds) {
    const Result r = invoke({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("purify-sweep"), std::string::npos);
}
