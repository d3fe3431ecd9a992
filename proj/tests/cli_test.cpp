#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "../tools/cli_app.hpp"

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = gwcli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, InvariantsText) {
    const CliRun r = run({"invariants", "--order", "4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("4\t15517926796875/64\t242467530000\n"), std::string::npos) << r.out;
    const CliRun one = run({"invariants", "--order", "1", "--format", "csv"});
    EXPECT_EQ(one.out, "d,N_d,n_d\n1,2875,2875\n");
    const CliRun zero = run({"invariants", "--order", "0", "--format", "csv"});
    EXPECT_EQ(zero.code, 0);
    EXPECT_EQ(zero.out, "d,N_d,n_d\n");
}

TEST(Cli, InvariantsJsonRoundTrips) {
    const CliRun r = run({"invariants", "--order", "2", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["m"], 4);
    EXPECT_EQ(j["l"], 5);
    ASSERT_EQ(j["rows"].size(), 2U);
    EXPECT_EQ(j["rows"][1]["d"], 2);
    EXPECT_EQ(j["rows"][1]["N"], "4876875/8");
    EXPECT_EQ(gwmirror::parse_rational(j["rows"][1]["n"].get<std::string>()), 609250);
}

TEST(Cli, InvariantsRejectsOtherHypersurfaces) {
    const CliRun r = run({"invariants", "--m", "3", "--l", "4"});
    EXPECT_EQ(r.code, 2);
    EXPECT_FALSE(r.err.empty());
}

TEST(Cli, VerifyExitCodes) {
    EXPECT_EQ(run({"verify", "picard-fuchs", "--order", "5"}).code, 0);
    EXPECT_EQ(run({"verify", "mirror-identity", "--order", "5"}).code, 0);
    EXPECT_EQ(run({"verify", "case-i", "--m", "4", "--l", "5"}).code, 2);
    EXPECT_EQ(run({"verify", "case-i", "--m", "5", "--l", "3", "--order", "3"}).code, 0);
    EXPECT_EQ(run({"verify", "case-ii", "--m", "3", "--l", "3", "--order", "3"}).code, 0);
    EXPECT_EQ(run({"verify", "recursion-i", "--m", "5", "--l", "3", "--order", "2"}).code, 0);
    EXPECT_EQ(run({"verify", "recursion-ii", "--m", "3", "--l", "3", "--order", "2"}).code, 0);
    EXPECT_EQ(run({"verify", "recursion-cy", "--order", "2"}).code, 0);
    EXPECT_EQ(run({"verify", "class-p", "--order", "2"}).code, 0);
    EXPECT_EQ(run({"verify", "phi-poly", "--order", "2"}).code, 0);
    EXPECT_EQ(run({"verify", "transformations", "--order", "2"}).code, 0);
    EXPECT_EQ(run({"verify", "descendents", "--m", "2", "--order", "3"}).code, 0);
    EXPECT_EQ(run({"verify", "descendents", "--m", "2", "--order", "3", "--hbar-depth", "4"}).code, 2);
    EXPECT_EQ(run({"verify", "no-such-check"}).code, 2);
    EXPECT_EQ(run({"verify", "recursion-cy", "--lambda", "1,2,3"}).code, 2);
    EXPECT_EQ(run({"verify", "recursion-cy", "--lambda", "1,1,2,3,4"}).code, 2);
    EXPECT_EQ(run({"verify", "recursion-cy", "--order", "0"}).code, 2);
    EXPECT_EQ(run({"--bogus"}).code, 2);
}

TEST(Cli, VerifyExplicitLambda) {
    const CliRun r = run({"verify", "recursion-cy", "--order", "2", "--lambda", "3,-5/2,7/3,11/5,-13/7", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["check"], "recursion-cy");
    EXPECT_TRUE(j["passed"].get<bool>());
    EXPECT_FALSE(j["results"][0]["anchor"].get<std::string>().empty());
}

TEST(Cli, VerifyCsvReport) {
    const CliRun r = run({"verify", "mirror-identity", "--order", "3", "--format", "csv"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("identity,anchor,status,first_failure\n", 0), 0U);
    EXPECT_NE(r.out.find(",pass,"), std::string::npos);
}

TEST(Cli, Oracle) {
    const CliRun one = run({"oracle", "--degree", "1"});
    EXPECT_EQ(one.code, 0);
    EXPECT_EQ(one.out.substr(0, one.out.find('\n')), "2875");
    const CliRun two = run({"oracle", "--degree", "2"});
    EXPECT_EQ(two.code, 0);
    EXPECT_EQ(two.out.substr(0, two.out.find('\n')), "4876875/8");
    EXPECT_EQ(run({"oracle", "--degree", "3"}).code, 2);
}

TEST(Cli, DeterministicAcrossRunsAndThreads) {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"invariants", "--order", "6", "--format", "json"},
             {"oracle", "--degree", "2", "--seed", "5", "--format", "json"},
             {"verify", "transformations", "--order", "2", "--seed", "3", "--format", "json"},
             {"verify", "class-p", "--order", "2", "--seed", "4"}}) {
        const CliRun a = run(args);
        const CliRun b = run(args);
        auto threaded = args;
        threaded.insert(threaded.end(), {"--threads", "4"});
        const CliRun c = run(threaded);
        EXPECT_EQ(a.out, b.out);
        EXPECT_EQ(a.out, c.out);
        EXPECT_EQ(a.code, c.code);
    }
}

TEST(Cli, OutFileMatchesStdout) {
    const std::string path = ::testing::TempDir() + "gwmirror_cli_out.txt";
    const CliRun r = run({"invariants", "--order", "3", "--format", "csv", "--out", path});
    ASSERT_EQ(r.code, 0);
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    EXPECT_EQ(ss.str(), r.out);
    std::remove(path.c_str());
}
