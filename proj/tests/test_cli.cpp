#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <sys/wait.h>

#include "starbessel/cli/output.hpp"

namespace cli = starbessel::cli;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(STARBESSEL_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        return r;
    }
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        r.out.append(buf.data(), n);
    }
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string temp_path(const std::string& name) { return ::testing::TempDir() + name; }

} // namespace

TEST(Cli, CriticalJson) {
    const auto r = run("critical --theorem 1 --alpha 0");
    ASSERT_EQ(r.status, 0);
    const auto rec = cli::OutputRecord::parse(r.out);
    EXPECT_EQ(rec.command, "critical");
    EXPECT_NEAR(rec.result.at("nu_star").get<double>(), 0.3900100534, 1e-9);
    EXPECT_EQ(rec.inputs.at("theorem"), "1");
    EXPECT_TRUE(rec.diagnostics.contains("residual"));
}

TEST(Cli, OutputIsDeterministic) {
    EXPECT_EQ(run("critical --theorem C").out, run("critical --theorem C").out);
    EXPECT_EQ(run("--format csv zeros --kind j1 --nu 2 --count 5").out,
              run("--format csv zeros --kind j1 --nu 2 --count 5").out);
}

TEST(Cli, CriticalDiniAndCsv) {
    const auto r = run("--format csv critical --theorem D --a 2 --b 3 --c 1");
    ASSERT_EQ(r.status, 0);
    EXPECT_EQ(r.out.rfind("theorem,alpha,a,b,c,nu_star", 0), 0u);
    EXPECT_NE(r.out.find("D,,2,3,1,1.1512157"), std::string::npos);
}

TEST(Cli, Zeros) {
    const auto r = run("zeros --kind j --nu 0 --count 3");
    ASSERT_EQ(r.status, 0);
    const auto zeros = cli::OutputRecord::parse(r.out).result.at("zeros");
    ASSERT_EQ(zeros.size(), 3u);
    EXPECT_NEAR(zeros[0].get<double>(), 2.404825557695773, 1e-12);
}

TEST(Cli, Rayleigh) {
    const auto r = run("--max-zeros 100 rayleigh --kind j1 --nu 1");
    ASSERT_EQ(r.status, 0);
    const auto rec = cli::OutputRecord::parse(r.out);
    const double closed = rec.result.at("closed_form").get<double>();
    const double direct = rec.result.at("zero_sum").get<double>();
    EXPECT_LE(std::abs(closed - direct), rec.diagnostics.at("tail_bound").get<double>() + 1e-8);
    EXPECT_EQ(rec.diagnostics.at("n_terms"), 100);
}

TEST(Cli, RayleighBelowUnitZero) {
    const auto r = run("rayleigh --kind j1 --nu 0.2");
    ASSERT_EQ(r.status, 0);
    EXPECT_TRUE(cli::OutputRecord::parse(r.out).result.at("zero_sum").is_null());
}

TEST(Cli, VerifyExitCodes) {
    const auto ok = run("verify --function hA --nu 0.8");
    EXPECT_EQ(ok.status, 0);
    const auto rec = cli::OutputRecord::parse(ok.out);
    EXPECT_EQ(rec.result.at("verdict"), "SUPPORTED");
    EXPECT_EQ(rec.result.at("shah_trimble").at("holds"), true);

    const auto bad = run("verify --function f --nu 0.3");
    EXPECT_EQ(bad.status, 3);
    EXPECT_EQ(cli::OutputRecord::parse(bad.out).result.at("verdict"), "REFUTED");

    EXPECT_EQ(run("verify --function hD --nu 1.2 --a 2 --b 3 --c 1").status, 0);
    EXPECT_EQ(run("verify --function g --nu 0.5 --alpha 0.2").status, 0);
}

TEST(Cli, VerifyCustomGrid) {
    const auto r = run("--rmax 0.95 --ntheta 90 verify --function g --nu 0.5");
    ASSERT_EQ(r.status, 0);
    const auto rec = cli::OutputRecord::parse(r.out);
    EXPECT_EQ(rec.diagnostics.at("r_grid").size(), 3u);
    EXPECT_EQ(rec.inputs.at("ntheta"), 90);
}

TEST(Cli, SweepWritesMonotoneCsv) {
    const std::string path = temp_path("starbessel_sweep.csv");
    const auto r = run("sweep --theorem 2 --from 0 --to 0.9 --steps 10 --out " + path);
    ASSERT_EQ(r.status, 0);
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    const std::string csv = ss.str();
    EXPECT_EQ(csv.rfind("alpha,nu\n", 0), 0u);
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);
    double prev = -1e9;
    int rows = 0;
    while (std::getline(lines, line)) {
        const double nu = std::stod(line.substr(line.find(',') + 1));
        EXPECT_GT(nu, prev);
        prev = nu;
        ++rows;
    }
    EXPECT_EQ(rows, 10);
}

TEST(Cli, GrowthOrder) {
    const auto r = run("growth-order --a 2 --b 3 --c 1 --nu 1");
    ASSERT_EQ(r.status, 0);
    EXPECT_NEAR(cli::OutputRecord::parse(r.out).result.at("estimate").get<double>(), 0.5, 0.02);
}

TEST(Cli, ConfigFileAndOverride) {
    const std::string path = temp_path("starbessel.ini");
    {
        std::ofstream f(path);
        f << "format=csv\n";
    }
    const auto from_config = run("--config " + path + " zeros --kind j --nu 0 --count 2");
    ASSERT_EQ(from_config.status, 0);
    EXPECT_EQ(from_config.out.rfind("n,zero\n", 0), 0u);
    const auto overridden = run("--config " + path + " --format json zeros --kind j --nu 0 --count 2");
    ASSERT_EQ(overridden.status, 0);
    EXPECT_EQ(overridden.out.front(), '{');
}

TEST(Cli, InvalidInputsExitTwo) {
    EXPECT_EQ(run("critical --theorem 1").status, 2);
    EXPECT_EQ(run("critical --theorem 1 --alpha 1").status, 2);
    EXPECT_EQ(run("critical --theorem Z").status, 2);
    EXPECT_EQ(run("critical --theorem D --a 1 --b 0.5 --c 1").status, 2);
    EXPECT_EQ(run("zeros --kind j1 --nu -0.5 --count 3").status, 2);
    EXPECT_EQ(run("verify --function hB --nu 1").status, 2);
    EXPECT_EQ(run("sweep --theorem A").status, 2);
    EXPECT_EQ(run("frobnicate").status, 2);
    EXPECT_EQ(run("").status, 2);
    EXPECT_TRUE(run("critical --theorem 1").out.empty());
}
