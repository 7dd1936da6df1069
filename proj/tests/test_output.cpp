#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "starbessel/cli/output.hpp"

namespace cli = starbessel::cli;

TEST(Output, NumberFormatting) {
    EXPECT_EQ(cli::format_number(0.1), "0.1");
    EXPECT_EQ(cli::format_number(1.0 / 3.0), "0.333333333333333");
    EXPECT_EQ(cli::format_number(-2.5e-12), "-2.5e-12");
    EXPECT_EQ(cli::format_number(std::numeric_limits<double>::infinity()), "null");
    EXPECT_EQ(cli::format_number(std::nan("")), "null");
}

TEST(Output, RecordRoundTrip) {
    cli::OutputRecord rec{"critical"};
    rec.inputs = {{"theorem", "A"}, {"tol", 1e-12}};
    rec.result = {{"nu_star", 0.701938144512460}, {"bracket", {0.7, 0.71}}};
    rec.diagnostics = {{"iterations", 40}};
    const auto parsed = cli::OutputRecord::parse(rec.dump());
    EXPECT_EQ(parsed.command, "critical");
    EXPECT_EQ(parsed.inputs.at("theorem"), "A");
    EXPECT_DOUBLE_EQ(parsed.result.at("nu_star").get<double>(), 0.70193814451246);
    EXPECT_EQ(parsed.diagnostics.at("iterations"), 40);
    EXPECT_EQ(parsed.dump(), rec.dump());
}

TEST(Output, SortedKeysAndStableLayout) {
    cli::OutputRecord rec{"zeros"};
    rec.result = {{"zeros", {1.5, 2.25}}, {"count", 2}};
    const std::string text = rec.dump();
    EXPECT_LT(text.find("\"command\""), text.find("\"diagnostics\""));
    EXPECT_LT(text.find("\"diagnostics\""), text.find("\"inputs\""));
    EXPECT_LT(text.find("\"count\""), text.find("\"zeros\": [1.5, 2.25]"));
    EXPECT_EQ(text.back(), '\n');
}

TEST(Output, Csv) {
    cli::CsvTable t({"alpha", "nu"});
    t.add_row({"0", "0.39"});
    t.add_row({"0.5", "0.8"});
    EXPECT_EQ(t.str(), "alpha,nu\n0,0.39\n0.5,0.8\n");
}
