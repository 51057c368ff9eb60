#include <array>
#include <cstdio>
#include <string>

#include <sys/wait.h>

#include <gtest/gtest.h>

#include "json.hpp"

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args)
{
    const std::string cmd = std::string(RROOT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return {-1, ""};
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json without_timing(const std::string& text)
{
    auto j = nlohmann::json::parse(text);
    j.erase("timing_ms");
    return j;
}

}  // namespace

TEST(Cli, RthRoot)
{
    const auto r = run("rth-root --modulus 13 --r 2 --beta 3");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out == "4\n" || r.out == "9\n") << r.out;
    const auto none = run("rth-root --modulus 13 --r 2 --beta 5");
    EXPECT_EQ(none.code, 1);
    EXPECT_EQ(none.out, "NoRoot\n");
}

TEST(Cli, RthRootJsonTrace)
{
    const auto r = run("rth-root --modulus 13 --r 2 --beta 3 --trace --json");
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["command"], "rth-root");
    EXPECT_EQ(j["inputs"]["modulus"], "13");
    ASSERT_TRUE(j["trace"].is_array());
    EXPECT_TRUE(j.contains("timing_ms"));
}

TEST(Cli, IsPrime)
{
    const auto c = run("is-prime --n 55");
    EXPECT_EQ(c.code, 1);
    EXPECT_NE(c.out.find("Composite"), std::string::npos);
    const auto p = run("is-prime --n 13 --json");
    EXPECT_EQ(p.code, 0);
    const auto j = nlohmann::json::parse(p.out);
    EXPECT_EQ(j["verdict"]["verdict"], "Prime");
    EXPECT_EQ(j["verdict"]["witness_value"], "2");
    EXPECT_EQ(j["verdict"]["r"], "2");
    EXPECT_EQ(j["verdict"]["e"], "2");
    EXPECT_EQ(j["verdict"]["t"], "3");
    EXPECT_EQ(run("is-prime --n 13 --r 2 --e 2 --t 3").code, 0);
    EXPECT_EQ(run("is-prime --n 31").code, 2);
    EXPECT_EQ(run("is-prime --n 0x3001").code, 0);  // 12289 = 3 * 2^12 + 1
}

TEST(Cli, Solve)
{
    const auto none = run("solve --modulus 7 --poly 1,0,1");
    EXPECT_EQ(none.code, 1);
    const auto two = run("solve --modulus 13 --poly -4,0,1 --json");
    EXPECT_EQ(two.code, 0);
    EXPECT_EQ(nlohmann::json::parse(two.out)["result"], nlohmann::json::array({"2", "11"}));
}

TEST(Cli, EcRoot)
{
    const auto r = run("ec-root --modulus 13 --a4 1 --a6 0 --n 2 --q-infinity");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "(0, 0) (5, 0) (8, 0)\n");
    EXPECT_EQ(run("ec-root --modulus 13 --a4 1 --a6 0 --n 3 --q-infinity").code, 1);
    EXPECT_EQ(run("ec-root --modulus 13 --a4 1 --a6 0 --n 2 --qx 2 --qy 5").code, 2);
}

TEST(Cli, NonresidueAndPrimitive)
{
    const auto nr = run("nonresidue --modulus 13 --r 2");
    EXPECT_EQ(nr.code, 0);
    EXPECT_TRUE(nr.out == "5\n" || nr.out == "8\n");
    const auto g = run("primitive --modulus 19");
    EXPECT_EQ(g.code, 0);
    EXPECT_EQ(run("nonresidue --modulus 13 --r 5").code, 2);
}

TEST(Cli, Oracle)
{
    EXPECT_EQ(run("oracle rth-roots --modulus 19 --r 3 --beta 8").out, "2 3 14\n");
    EXPECT_EQ(run("oracle nonresidues --modulus 13 --r 2").out, "2 5 6 7 8 11\n");
    EXPECT_EQ(run("oracle trial-division --n 55").out, "5\n");
    EXPECT_EQ(run("oracle rth-roots --modulus 6007 --r 2 --beta 4").code, 2);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("rth-root --modulus 13").code, 2);
    EXPECT_EQ(run("rth-root --modulus 12 --r 2 --beta 3").code, 2);
    EXPECT_EQ(run("rth-root --modulus banana --r 2 --beta 3").code, 2);
    EXPECT_EQ(run("solve --modulus 13 --poly 1,,2").code, 2);
}

TEST(Cli, ScanBounds)
{
    // One phase-1 base; 25 is then exposed while building a root of unity.
    EXPECT_EQ(run("is-prime --n 25 --scan-bound 1").code, 1);
    // 2 is a square mod 17, so a one-candidate scan finds no nonresidue.
    const auto r = run("is-prime --n 17 --scan-bound 1 --zeta-scan-bound 2 --json");
    EXPECT_EQ(r.code, 3);
    EXPECT_EQ(nlohmann::json::parse(r.out)["verdict"]["verdict"], "Inconclusive");
}

TEST(Cli, JsonDeterministic)
{
    const std::string args = "solve --modulus 97 --poly 5,3,0,1 --json";
    EXPECT_EQ(without_timing(run(args).out), without_timing(run(args).out));
    const std::string ec = "ec-root --modulus 13 --a4 1 --a6 0 --n 2 --qx 9 --qy 7 --json";
    EXPECT_EQ(without_timing(run(ec).out), without_timing(run(ec).out));
}
