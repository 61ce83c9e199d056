#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qtheta/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream o, e;
    int code = qtheta::run(args, o, e);
    return {code, o.str(), e.str()};
}

nlohmann::json parse(const std::string& s) { return nlohmann::json::parse(s); }

}  // namespace

TEST(Cli, VerifyPass) {
    auto r = run({"verify", "--id", "thm-1.3", "--l", "2", "--order", "200", "--format", "json"});
    EXPECT_EQ(r.code, 0) << r.err;
    auto j = parse(r.out);
    EXPECT_EQ(j["id"], "thm-1.3");
    EXPECT_EQ(j["status"], "PASS");
    EXPECT_EQ(j["params"]["l"], 2);
    EXPECT_TRUE(j["first_discrepancy"].is_null());
    EXPECT_FALSE(j.contains("elapsed_ms"));
}

TEST(Cli, VerifyFail) {
    auto r = run({"verify", "--id", "cor-3.3", "--k", "2", "--i", "1", "--order", "30", "--format", "json"});
    EXPECT_EQ(r.code, 1);
    auto j = parse(r.out);
    EXPECT_EQ(j["status"], "FAIL");
    EXPECT_EQ(j["first_discrepancy"]["exponent"], "0");
}

TEST(Cli, UsageErrors) {
    for (std::vector<std::string> a : {
             std::vector<std::string>{"verify", "--id", "no-such-id"},
             {"verify", "--id", "thm-1.3"},
             {"verify", "--id", "thm-1.3", "--l", "2", "--k", "1"},
             {"verify", "--id", "thm-1.3", "--l", "1..3"},
             {"verify", "--id", "thm-1.3", "--l", "x"},
             {"verify", "--id", "thm-1.3", "--l", "1", "--format", "csv"},
             {"transform", "--id", "heine", "--c", "q^4"},
             {"transform", "--id", "thm-1.3", "--l", "1"},
             {"scan", "--id", "thm-1.3", "--l", "1"},
             {"scan", "--id", "conj-bm", "--k", "1", "--l", "4"},
             {"frobnicate"},
             {},
         }) {
        auto r = run(a);
        EXPECT_EQ(r.code, 2) << (a.empty() ? "" : a[0]);
        EXPECT_EQ(r.err.rfind("qtheta: ", 0), 0u) << r.err;
        EXPECT_EQ(r.err.find('\n'), r.err.size() - 1) << r.err;
    }
}

TEST(Cli, DeterministicJson) {
    std::vector<std::string> a{"verify", "--id", "thm-4.1", "--l", "3", "--order", "150", "--format", "json"};
    EXPECT_EQ(run(a).out, run(a).out);
    std::vector<std::string> s{"scan", "--id", "ineq-1.6", "--k", "3", "--nmax", "400", "--format", "json"};
    auto r1 = run(s), r2 = run(s);
    EXPECT_EQ(r1.out, r2.out);
    auto j = parse(r1.out);
    EXPECT_EQ(j["status"], "PASS");
    EXPECT_EQ(j["threshold"], 15);
}

TEST(Cli, Timing) {
    auto r = run({"verify", "--id", "eq-1.1", "--order", "50", "--format", "json", "--timing"});
    EXPECT_TRUE(parse(r.out).contains("elapsed_ms"));
}

TEST(Cli, Scans) {
    auto r = run({"scan", "--id", "conj-bm", "--k", "1", "--l", "6", "--nmax", "300", "--format", "json"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(parse(r.out)["threshold"], 2);
    r = run({"scan", "--id", "conj-bm", "--k", "1", "--l", "4", "--nmax", "100", "--permissive"});
    EXPECT_EQ(r.code, 0) << r.err;
    r = run({"scan", "--id", "thm-5.2-factor", "--l", "4", "--nmax", "50", "--permissive", "--format", "json"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(parse(r.out)["violations"][0], 4);
}

TEST(Cli, Grid) {
    auto r = run({"verify", "--id", "thm-1.2", "--k", "1..2", "--i", "1", "--l", "0..1", "--order", "40", "--grid",
                  "--format", "json"});
    EXPECT_EQ(r.code, 0) << r.err;
    auto j = parse(r.out);
    ASSERT_TRUE(j.is_array());
    EXPECT_EQ(j.size(), 4u);
}

TEST(Cli, Tabulate) {
    auto r = run({"tabulate", "--id", "thm-1.3", "--l", "1", "--order", "6"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out,
              "id,param_assignments,n,coefficient\n"
              "thm-1.3,l=1,0,1\nthm-1.3,l=1,1,0\nthm-1.3,l=1,2,1\nthm-1.3,l=1,3,1\n"
              "thm-1.3,l=1,4,2\nthm-1.3,l=1,5,2\nthm-1.3,l=1,6,4\n");
    r = run({"tabulate", "--id", "thm-5.1-series", "--k", "1", "--nmax", "3", "--format", "json"});
    EXPECT_EQ(parse(r.out)["coefficients"].size(), 4u);
}

TEST(Cli, NegativeMonomials) {
    auto r = run({"transform", "--id", "rogers-fine", "--beta=-q^2", "--tau=-q", "--order", "40"});
    EXPECT_EQ(r.code, 0) << r.err;
    r = run({"transform", "--id", "heine", "--a=q^(1/2)", "--c", "q^2", "--b", "q", "--z", "q", "--order", "30"});
    EXPECT_EQ(r.code, 0) << r.err;
}

TEST(Cli, List) {
    auto r = run({"list", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    auto j = parse(r.out);
    ASSERT_TRUE(j.is_array());
    EXPECT_GE(j.size(), 25u);
    for (const auto& e : j) {
        EXPECT_TRUE(e.contains("id"));
        EXPECT_TRUE(e.contains("kind"));
        EXPECT_TRUE(e.contains("paper_display"));
        EXPECT_TRUE(e["params"].is_array());
    }
    r = run({"list", "--format", "csv"});
    EXPECT_EQ(r.out.rfind("id,kind,params\n", 0), 0u);
}

TEST(Cli, OutFile) {
    const std::string path = testing::TempDir() + "qtheta_out.json";
    auto r = run({"verify", "--id", "eq-1.1", "--order", "40", "--format", "json", "--out", path});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(parse(ss.str())["status"], "PASS");
    std::remove(path.c_str());
}
