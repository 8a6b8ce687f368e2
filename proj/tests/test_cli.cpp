#include "theta_cli.hpp"

#include "json.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = theta::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, MultiplierOfTAtLevelThree)
{
    const Result r = run({"multiplier", "--level", "3", "--matrix", "0,-1,1,0", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["nu"], "18/24");
    EXPECT_EQ(j["value"], "-i");
}

TEST(Cli, MultiplierTextAndOracleCheck)
{
    const Result r = run({"multiplier", "--level", "4", "--matrix", "0,-1,1,0", "--check"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("nu: 18/24"), std::string::npos);
    EXPECT_NE(r.out.find("value: -i"), std::string::npos);
    EXPECT_NE(r.out.find("oracle_verdict: PASS"), std::string::npos);
}

TEST(Cli, MembershipOfTranslation)
{
    const Result r = run({"membership", "--level", "4", "--matrix", "1,1,0,1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "false\n");
    const Result s = run({"membership", "--level", "3", "--matrix", "1,3,0,1"});
    EXPECT_EQ(s.out, "true\n");
}

TEST(Cli, MembershipCsv)
{
    const Result r = run({"membership", "--level", "4", "--matrix", "-1,0,0,-1", "--format", "csv"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "matrix,level,member\n\"-1,0,0,-1\",4,true\n");
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"membership", "--level", "5", "--matrix", "1,0,0,1"}).code, 2);
    EXPECT_EQ(run({"membership", "--level", "3"}).code, 2);
    EXPECT_EQ(run({"membership", "--level", "3", "--matrix", "1,2,3"}).code, 2);
    EXPECT_EQ(run({"membership", "--level", "3", "--matrix", "2,0,0,1"}).code, 2);
    EXPECT_EQ(run({"membership", "--level", "3", "--matrix", "1,0,0,1", "--format", "xml"}).code, 2);
    // Flags belong to their subcommand.
    const Result r = run({"membership", "--level", "3", "--matrix", "1,0,0,1", "--k", "2"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("--k"), std::string::npos);
    EXPECT_EQ(run({"verify", "--suite", "nope"}).code, 2);
    EXPECT_EQ(run({"verify", "--suite", "cusps", "--tol", "-1"}).code, 2);
}

TEST(Cli, ErrorsNameTheOffendingInput)
{
    const Result r = run({"multiplier", "--level", "3", "--matrix", "1,1,0,1"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("--matrix"), std::string::npos);
    const Result c = run({"cusp", "--level", "3", "inf", "1/0"});
    EXPECT_EQ(c.code, 2);
    EXPECT_NE(c.err.find("1/0"), std::string::npos);
}

TEST(Cli, HelpExitsZero)
{
    const Result r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("verify"), std::string::npos);
}

TEST(Cli, KernelQueries)
{
    const Result table = run({"kernel", "--level", "3", "--k", "4", "--format", "json"});
    ASSERT_EQ(table.code, 0) << table.err;
    const auto j = nlohmann::json::parse(table.out);
    EXPECT_EQ(j["image_size"], 3);
    EXPECT_EQ(j["coset_reps"].size(), 3U);
    const Result m = run({"kernel", "--level", "4", "--k", "12", "--matrix", "0,-1,1,0", "--format", "json"});
    ASSERT_EQ(m.code, 0);
    EXPECT_EQ(nlohmann::json::parse(m.out)["in_kernel"], true);
}

TEST(Cli, CosetsAndCusps)
{
    const Result reps = run({"cosets", "--level", "4", "--format", "json"});
    ASSERT_EQ(reps.code, 0);
    const auto j = nlohmann::json::parse(reps.out);
    EXPECT_EQ(j["index"], 6);
    EXPECT_EQ(j["reps"].size(), 6U);
    const Result one = run({"cosets", "--level", "3", "--matrix", "1,1,0,1", "--format", "json"});
    EXPECT_EQ(nlohmann::json::parse(one.out)["rep_index"], 1);

    const Result classes = run({"cusp", "--level", "3", "--format", "json"});
    const auto c = nlohmann::json::parse(classes.out);
    EXPECT_EQ(c["class_count"], 2);
    EXPECT_EQ(c["classes"][0]["leader"], "inf");
    EXPECT_EQ(c["classes"][1]["leader"], "-1");
    const Result eq = run({"cusp", "--level", "4", "inf", "0", "--format", "json"});
    EXPECT_EQ(nlohmann::json::parse(eq.out)["equivalent"], true);
    const Result ne = run({"cusp", "--level", "4", "inf", "-1/1", "--format", "json"});
    EXPECT_EQ(nlohmann::json::parse(ne.out)["equivalent"], false);
}

TEST(Cli, VerifyCsvHasOneRowPerCheck)
{
    const Result r = run({"verify", "--suite", "cosets", "--format", "csv", "--seed", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.rfind("suite,case,verdict,residual\n", 0), 0U);
    EXPECT_NE(r.out.find("cosets,level 3,PASS,\n"), std::string::npos);
    EXPECT_NE(r.out.find("cosets,level 4,PASS,\n"), std::string::npos);
}

TEST(Cli, VerifyIsDeterministic)
{
    const std::vector<std::string> args{"verify", "--suite", "all", "--samples", "200",
                                        "--oracle-samples", "10", "--seed", "11", "--format", "json"};
    const Result a = run(args);
    const Result b = run(args);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    const auto j = nlohmann::json::parse(a.out);
    EXPECT_EQ(j["verdict"], "PASS");
    EXPECT_EQ(j["seed"], 11);
    EXPECT_EQ(j["suites"].size(), 8U);
}

TEST(Cli, SeedFallsBackToEnvironment)
{
    const std::vector<std::string> args{"verify", "--suite", "character", "--samples", "50", "--format", "json"};
    ::setenv("THETA_KERNEL_SEED", "123", 1);
    const Result env = run(args);
    ::setenv("THETA_KERNEL_SEED", "not-a-number", 1);
    const Result bad = run(args);
    ::unsetenv("THETA_KERNEL_SEED");
    std::vector<std::string> explicit_args = args;
    explicit_args.insert(explicit_args.end(), {"--seed", "123"});
    const Result flag = run(explicit_args);
    EXPECT_EQ(env.code, 0);
    EXPECT_EQ(env.out, flag.out);
    EXPECT_EQ(nlohmann::json::parse(env.out)["seed"], 123);
    EXPECT_EQ(bad.code, 2);
}

TEST(Cli, VerifyTextEndsWithOverallLine)
{
    const Result r = run({"verify", "--suite", "cusps"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("PASS cusps\n"), std::string::npos);
    EXPECT_NE(r.out.find("PASS overall (seed 7)\n"), std::string::npos);
}
