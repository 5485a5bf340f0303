#include "cli_app.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

namespace hermitian::cli {
namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "hermitian-cli");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

ordered_json invoke_json(const std::vector<std::string>& args) {
    const auto r = invoke(args);
    EXPECT_EQ(r.code, 0) << r.err;
    return ordered_json::parse(r.out);
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.emplace_back();
        rows.push_back(cells);
    }
    return rows;
}

std::string emit_csv(const std::vector<std::vector<std::string>>& rows) {
    std::string s;
    for (const auto& r : rows) s += csv_join(r);
    return s;
}

TEST(Zeta, Examples) {
    auto j = invoke_json({"zeta", "--q", "2", "--kmax", "2"});
    EXPECT_EQ(j["class_number"], "9");
    EXPECT_EQ(j["A"], (std::vector<std::string>{"1", "9", "45"}));
    EXPECT_EQ(j["l_polynomial"], (std::vector<std::string>{"1", "4", "4"}));
    for (const auto& row : j["bound_check"]) EXPECT_TRUE(row["holds"].get<bool>());

    j = invoke_json({"zeta", "--q", "3", "--kmax", "0"});
    EXPECT_EQ(j["A"], (std::vector<std::string>{"1"}));

    const auto bad = invoke({"zeta", "--q", "6", "--kmax", "2"});
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("not a prime power"), std::string::npos) << bad.err;
    EXPECT_EQ(std::count(bad.err.begin(), bad.err.end(), '\n'), 1);
    EXPECT_TRUE(bad.out.empty());
}

TEST(Zeta, BigIntegersAreExactStrings) {
    const auto j = invoke_json({"zeta", "--q", "4", "--kmax", "1"});
    EXPECT_EQ(j["class_number"], "244140625");
    EXPECT_EQ(j["A"][1], "65");
    EXPECT_EQ(invoke({"zeta", "--q", "2", "--kmax", "20000"}).code, 3);
}

TEST(Code, Examples) {
    auto j = invoke_json({"code", "--q", "2", "--t", "5", "--exact-distance"});
    EXPECT_EQ(j["n"], 8);
    EXPECT_EQ(j["k"], 5);
    EXPECT_EQ(j["goppa_bound"], 3);
    EXPECT_EQ(j["yang_kumar_band"]["lo"], 3);
    EXPECT_EQ(j["yang_kumar_band"]["hi"], 5);
    EXPECT_EQ(j["exact_distance"]["d"], 3);

    j = invoke_json({"code", "--q", "2", "--t", "0", "--exact-distance"});
    EXPECT_EQ(j["n"], 8);
    EXPECT_EQ(j["k"], 1);
    EXPECT_EQ(j["exact_distance"]["d"], 8);
    EXPECT_TRUE(j["yang_kumar_band"].is_null());

    EXPECT_EQ(invoke({"code", "--q", "3", "--t", "30"}).code, 2);
    EXPECT_EQ(invoke({"code", "--q", "3", "--t", "27"}).code, 2);
    EXPECT_EQ(invoke({"code", "--q", "3", "--t", "-1"}).code, 2);
}

TEST(Code, SizeGuardNamesTheOverride) {
    const auto r = invoke({"code", "--q", "3", "--t", "12", "--exact-distance"});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("--force-size"), std::string::npos) << r.err;
    // Without the distance the same code is cheap.
    EXPECT_EQ(invoke({"code", "--q", "3", "--t", "12"}).code, 0);
}

TEST(Code, MatrixRowsAreMonomialEvaluations) {
    const auto j = invoke_json({"code", "--q", "2", "--t", "3", "--matrix"});
    ASSERT_EQ(j["generator_matrix"].size(), 3u);
    for (const auto& cell : j["generator_matrix"][0]) EXPECT_EQ(cell, "1:0");
}

TEST(Prospect, Examples) {
    auto j = invoke_json({"prospect", "--q", "2", "--criterion", "exact"});
    ASSERT_EQ(j["rows"].size(), 3u);
    const auto& last = j["rows"][2];
    EXPECT_EQ(last["l"], 1);
    EXPECT_EQ(last["t"], 0);
    EXPECT_EQ(last["k"], 1);
    EXPECT_EQ(last["d_lower"], 8);

    j = invoke_json({"prospect", "--q", "2", "--criterion", "exact", "--l", "1"});
    ASSERT_EQ(j["rows"].size(), 1u);

    j = invoke_json({"prospect", "--q", "2", "--criterion", "prop23"});
    ASSERT_EQ(j["rows"].size(), 1u);
    EXPECT_EQ(j["rows"][0]["l"], 8);

    j = invoke_json({"prospect", "--q", "4", "--criterion", "prop23", "--k-min", "100"});
    EXPECT_TRUE(j["rows"].empty());

    EXPECT_EQ(invoke({"prospect", "--q", "2", "--criterion", "bogus"}).code, 2);
    EXPECT_EQ(invoke({"prospect", "--q", "128"}).code, 3);
}

TEST(Prospect, TextHasFooterCsvDoesNot) {
    const auto text = invoke({"prospect", "--q", "3", "--format", "text"});
    EXPECT_NE(text.out.find("g - q"), std::string::npos);
    const auto csv = invoke({"prospect", "--q", "3", "--format", "csv"});
    EXPECT_EQ(csv.out.find("g - q"), std::string::npos);
    EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "l,t,s,k,d_lower,goppa_d_lower,improvement,criterion");
}

TEST(VerifyLemma, Examples) {
    auto j = invoke_json({"verify-lemma", "--q", "2", "--eval", "4", "--s", "1", "--m", "1"});
    EXPECT_EQ(j["status"], "pass");
    EXPECT_EQ(j["exact_distance"], 4);
    EXPECT_EQ(j["k"], 1);

    j = invoke_json({"verify-lemma", "--q", "2", "--eval", "4", "--s", "2", "--m", "2"});
    EXPECT_EQ(j["status"], "pass");
    EXPECT_GE(j["exact_distance"].get<int>(), 3);

    EXPECT_EQ(invoke({"verify-lemma", "--q", "3", "--eval", "4", "--s", "1", "--m", "1"}).code, 2);
    EXPECT_EQ(invoke({"verify-lemma", "--q", "2", "--eval", "4", "--s", "5", "--m", "1"}).code, 2);
    EXPECT_EQ(invoke({"verify-lemma", "--q", "2", "--eval", "9", "--s", "1", "--m", "1"}).code, 2);
    EXPECT_EQ(invoke({"verify-lemma", "--q", "2", "--eval", "8", "--s", "8", "--m", "8"}).code, 2);
}

TEST(VerifyLemma, AllHitReportsNoClass) {
    // Eight points with s = m + 2 hit every class.
    const auto j = invoke_json({"verify-lemma", "--q", "2", "--eval", "8", "--s", "3", "--m", "1"});
    EXPECT_EQ(j["hit_count"], 9);
    EXPECT_EQ(j["status"], "no-good-class");
    EXPECT_TRUE(j["good_class"].is_null());
}

TEST(Asymptotic, Examples) {
    const auto j = invoke_json({"asymptotic", "--q", "16"});
    EXPECT_EQ(j["l"], 2);
    for (const auto& key : {"alpha", "entropy", "theta_star", "theta", "margin"})
        EXPECT_TRUE(std::isfinite(j[key].get<double>())) << key;
    EXPECT_EQ(j["k_plus_d"].get<long long>(),
              j["n"].get<long long>() + j["t"].get<long long>() - j["genus"].get<long long>() + 2);
    EXPECT_FALSE(j["k_positive"].get<bool>());
    EXPECT_EQ(invoke({"asymptotic", "--q", "2"}).code, 2);
    EXPECT_EQ(invoke({"asymptotic", "--q", "16", "--q-eps", "0.5"}).code, 2);
}

TEST(Parsing, ValidationErrors) {
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"zeta", "--q", "2", "--bogus"}).code, 2);
    EXPECT_EQ(invoke({"zeta", "code", "--q", "2"}).code, 2);
    EXPECT_EQ(invoke({"frobnicate"}).code, 2);
    EXPECT_EQ(invoke({"zeta"}).code, 2);
    EXPECT_EQ(invoke({"zeta", "--q", "two"}).code, 2);
    EXPECT_EQ(invoke({"zeta", "--q", "2", "--format", "xml"}).code, 2);
    EXPECT_EQ(invoke({"code", "--q", "2"}).code, 2);
}

TEST(ExitCodes, Mapping) {
    EXPECT_EQ(exit_code_for(SizeGuard("x")), 3);
    EXPECT_EQ(exit_code_for(AssertionFailure("x")), 4);
    EXPECT_EQ(exit_code_for(RangeError("x")), 2);
    EXPECT_EQ(exit_code_for(ScopeError("x")), 2);
}

const std::vector<std::vector<std::string>> kCommands{
    {"zeta", "--q", "3", "--kmax", "12"},
    {"code", "--q", "2", "--t", "6", "--exact-distance", "--matrix"},
    {"code", "--q", "3", "--t", "8", "--exact-distance"},
    {"prospect", "--q", "4", "--criterion", "exact"},
    {"prospect", "--q", "5", "--criterion", "prop23"},
    {"verify-lemma", "--q", "2", "--eval", "5", "--s", "3", "--m", "2"},
    {"asymptotic", "--q", "64"},
};

TEST(Csv, RoundTrips) {
    for (auto args : kCommands) {
        args.insert(args.end(), {"--format", "csv"});
        const auto r = invoke(args);
        ASSERT_EQ(r.code, 0) << r.err;
        const auto rows = parse_csv(r.out);
        ASSERT_GE(rows.size(), 1u);
        for (const auto& row : rows) EXPECT_EQ(row.size(), rows.front().size()) << args[0];
        EXPECT_EQ(emit_csv(rows), r.out) << args[0];
    }
}

TEST(Determinism, RepeatedRunsAndFormats) {
    for (const auto& format : {"json", "csv", "text"})
        for (auto args : kCommands) {
            args.insert(args.end(), {"--format", format});
            const auto a = invoke(args), b = invoke(args);
            EXPECT_EQ(a.out, b.out) << args[0] << " " << format;
        }
}

TEST(Determinism, ThreadCounts) {
    const std::vector<std::string> base{"code", "--q", "3", "--t", "9", "--exact-distance"};
    auto one = base, many = base;
    one.insert(one.end(), {"--threads", "1"});
    many.insert(many.end(), {"--threads", "7"});
    EXPECT_EQ(invoke(one).out, invoke(many).out);
    EXPECT_EQ(invoke(one).out, invoke(base).out);
}

TEST(Output, OutFileMatchesStdout) {
    const auto path = std::filesystem::temp_directory_path() / "hermitian_cli_test_out.json";
    const auto r = invoke({"zeta", "--q", "2", "--kmax", "3", "--out", path.string()});
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path, std::ios::binary);
    const std::string written((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    EXPECT_EQ(written, invoke({"zeta", "--q", "2", "--kmax", "3"}).out);
    std::filesystem::remove(path);
    EXPECT_EQ(invoke({"zeta", "--q", "2", "--out", "/nonexistent/dir/x.json"}).code, 2);
}

}  // namespace
}  // namespace hermitian::cli
