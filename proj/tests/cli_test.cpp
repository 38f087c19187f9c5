// Spawns the pushforward binary and checks output and exit status.

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct RunResult {
    int status;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(PUSHFORWARD_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

TEST(Cli, Genus0Json) {
    const RunResult r = run("g0 --n 3 --m 0 --format json");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out,
              "{\"splitting\":[{\"twist\":0,\"mult\":1},{\"twist\":-1,\"mult\":2}],\"rank\":3,\"degree\":-2,"
              "\"h0\":1,\"h1\":0,\"spread\":1}\n");
}

TEST(Cli, Genus0Text) {
    const RunResult r = run("g0 --n 5 --m 7");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("splitting: {1, 1, 1, 0, 0}"), std::string::npos) << r.out;
}

TEST(Cli, ExtractAndCsv) {
    const RunResult r = run("extract --h0 3,1,0,0 --lo -1 --rank 2 --format csv");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "splitting,rank,degree,h0,h1,spread\n0 -1,2,-1,1,0,1\n");
}

TEST(Cli, Genus1Flags) {
    EXPECT_EQ(run("g1 --n 2 --r 2 --d 0 --exceptional yes --format json").status, 0);
    const auto j = nlohmann::json::parse(run("g1 --n 2 --r 2 --d 0 --exceptional yes --format json").out);
    EXPECT_EQ(j["spread"], 2);
    EXPECT_EQ(run("g1 --n 2 --r 1 --d 0").status, 2);                     // missing flag
    EXPECT_EQ(run("g1 --n 2 --r 1 --d 1 --exceptional no").status, 2);    // excess flag
}

TEST(Cli, Bounds) {
    const auto j = nlohmann::json::parse(run("bounds --g 4 --n 3 --format json").out);
    EXPECT_EQ(j["bound"], "13/3");
    EXPECT_EQ(j["floor"], 4);
    const auto k = nlohmann::json::parse(run("bounds --g 4 --n 4 --d 2 --mode degree --format json").out);
    EXPECT_EQ(k["bound"], "3");
    EXPECT_EQ(k["equality_condition"], "L = f^*O(-1) (x) K");
    EXPECT_EQ(run("bounds --g 1 --n 4").status, 2);
    EXPECT_EQ(run("bounds --g 4 --n 4 --mode degree").status, 2);
}

TEST(Cli, HyperPush) {
    const RunResult r = run("hyper push --curve \"p=7; f=0,1,0,0,0,1\" --divisor \"inf:0\" --m 1 --format json");
    EXPECT_EQ(r.status, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["genus"], 2);
    EXPECT_EQ(j["splitting"][0]["twist"], 0);
    EXPECT_EQ(j["splitting"][1]["twist"], -3);
    EXPECT_EQ(j["a_lo"], -3);
    EXPECT_EQ(j["a_values"], nlohmann::json::parse("[5,3,2,1,0,0]"));

    const RunResult pt = run("hyper push --curve \"p=7; f=0,1,0,0,0,1\" --divisor \"pt:1,3:1\" --m 3");
    EXPECT_EQ(pt.status, 0);
    EXPECT_NE(pt.out.find("splitting: {0, -1, -1, -1, -1, -2}"), std::string::npos) << pt.out;

    EXPECT_EQ(run("hyper push --curve \"p=7; f=0,1,0,0,0,1\" --divisor \"pt:1,1:1\" --m 1").status, 2);
    EXPECT_EQ(run("hyper push --curve \"p=7; f=0,0,0,1\" --divisor \"inf:0\" --m 1").status, 2);
    EXPECT_EQ(run("hyper push --curve \"p=7; f=0,1,0,0,0,1\" --divisor \"bogus\" --m 1").status, 2);
}

TEST(Cli, DeterministicJson) {
    const std::string args = "hyper push --curve \"p=11; f=0,-1,0,0,0,1\" --divisor \"inf:3; pt:0,0:1\" --m 2 --format json";
    EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, VerifyCampaign) {
    const RunResult r = run("verify --campaign duality --seed 7 --trials 50 --max-genus 3 --format json");
    EXPECT_EQ(r.status, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["instances"], 50);
    EXPECT_EQ(j["failed"], 0);
    EXPECT_TRUE(j["exemplars"].empty());
}

TEST(Cli, ScanCsv) {
    const RunResult r = run("scan --g 2 --m 2 --seed 3 --trials 5 --format csv");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "p,g,curve,divisor,m,n,d,splitting,spread,bound,within_bound");
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 6);
}

TEST(Cli, ParseErrorsExitTwo) {
    EXPECT_EQ(run("").status, 2);
    EXPECT_EQ(run("g0 --n 3").status, 2);
    EXPECT_EQ(run("g0 --n x --m 1").status, 2);
    EXPECT_EQ(run("g0 --n 0 --m 1").status, 2);
    EXPECT_EQ(run("extract --h0 3,1,0 --lo -1 --rank 2").status, 2);
    EXPECT_EQ(run("verify --campaign nope --seed 1 --trials 1").status, 2);
}

TEST(Cli, OutFile) {
    const std::string path = ::testing::TempDir() + "pushforward_out.json";
    EXPECT_EQ(run("g0 --n 2 --m 1 --format json --out " + path).status, 0);
    FILE* f = std::fopen(path.c_str(), "r");
    ASSERT_NE(f, nullptr);
    std::array<char, 256> buf{};
    const std::size_t got = std::fread(buf.data(), 1, buf.size(), f);
    std::fclose(f);
    EXPECT_NE(std::string(buf.data(), got).find("\"rank\":2"), std::string::npos);
}

}  // namespace
