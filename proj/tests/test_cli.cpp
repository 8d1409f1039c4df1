#include "oracles.hpp"

#include "vcs/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = vcs::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string cat(const std::string& rel) { return std::string(VCS_CATALOG) + "/" + rel; }

std::string temp_file(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("vcs_test_" + name);
    std::ofstream(path) << text;
    return path.string();
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST(Cli, ClassifyChargeless) {
    const CliResult r = run({"classify", cat("manifolds/chargeless_mixed.m3")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "VCS: yes (nongeometric, chargeless)");
    EXPECT_TRUE(contains(r.out, "block S2: chargeless, witness (1,1,1)"));
}

TEST(Cli, ClassifyCharged) {
    const CliResult r = run({"classify", cat("manifolds/charged_mixed.m3")});
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(contains(r.out, "VCS: no (nongeometric, charged: S2)"));
}

TEST(Cli, ClassifySol) {
    const CliResult r = run({"classify", cat("manifolds/sol.m3")});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out, "VCS: no (geometric: Sol)\n");
}

TEST(Cli, SpecialCheckNamesOneSidedHyperplane) {
    const CliResult r = run({"special-check", cat("complexes/moebius_square.cc")});
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(contains(r.out, "special: no"));
    EXPECT_TRUE(contains(r.out, "hyperplane H1 (edges 0-3 1-4 2-5): one-sided"));
    EXPECT_EQ(run({"special-check", cat("complexes/square.cc")}).code, 0);
}

TEST(Cli, InputErrorsExitTwoWithLine) {
    const CliResult r = run({"validate", cat("negative/bad_determinant.m3")});
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(contains(r.err, "bad_determinant.m3:3:")) << r.err;
    EXPECT_TRUE(contains(r.err, "[determinant]"));
    for (const auto& entry : std::filesystem::directory_iterator(cat("negative")))
        EXPECT_EQ(run({"classify", entry.path().string()}).code, 2) << entry.path();
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"classify"}).code, 2);
    EXPECT_EQ(run({"classify", "/nonexistent/file.m3"}).code, 2);
    EXPECT_EQ(run({"torus-walls", "--slope", "1"}).code, 2);
    EXPECT_EQ(run({"torus-walls", "--slope", "0,0"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Deterministic) {
    const std::vector<std::vector<std::string>> cmds{
        {"classify", cat("manifolds/chargeless_mixed.m3")},
        {"dual-cube", cat("wallspaces/two_crossing.ws")},
        {"torus-walls", "--slope", "1,0", "--slope", "0,1", "--slope", "1,1"},
        {"classify", "--json", cat("manifolds/charged_mixed.m3")},
    };
    for (const auto& c : cmds) EXPECT_EQ(run(c).out, run(c).out);
}

TEST(Cli, JsonRecords) {
    const CliResult r = run({"classify", "--json", cat("manifolds/chargeless_mixed.m3")});
    EXPECT_EQ(r.code, 0);
    std::istringstream lines(r.out);
    std::vector<nlohmann::json> recs;
    for (std::string l; std::getline(lines, l);) recs.push_back(nlohmann::json::parse(l));
    ASSERT_EQ(recs.size(), 2U);
    EXPECT_EQ(recs[0]["kind"], "classify");
    EXPECT_EQ(recs[0]["vcs"], true);
    EXPECT_EQ(recs[0]["reason"], "nongeometric-chargeless");
    EXPECT_EQ(recs[1]["kind"], "block");
    EXPECT_EQ(recs[1]["witness"], nlohmann::json::array({"1", "1", "1"}));

    const CliResult e = run({"--json", "validate", cat("negative/unknown_key.m3")});
    EXPECT_EQ(e.code, 2);
    const auto err = nlohmann::json::parse(e.out);
    EXPECT_EQ(err["code"], "unknown-key");
    EXPECT_EQ(err["line"], 1);
}

TEST(Cli, Homology) {
    const CliResult r = run({"homology", cat("manifolds/trefoil_exterior.m3")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "block K: H1 = Z\n");
    EXPECT_EQ(run({"homology", "--block", "P", cat("manifolds/thickened_torus.m3")}).out, "block P: H1 = Z^2\n");
    EXPECT_EQ(run({"homology", "--block", "Q", cat("manifolds/thickened_torus.m3")}).code, 2);
}

TEST(Cli, Euler) {
    const CliResult r = run({"euler", cat("manifolds/chargeless_mixed.m3"), "--block", "S2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "block S2: e = 0 after filling")) << r.out;
    EXPECT_EQ(run({"euler", cat("manifolds/s3.m3")}).out, "block M: e = -1\n");
}

TEST(Cli, Chargeless) {
    EXPECT_EQ(run({"chargeless", cat("manifolds/chargeless_mixed.m3")}).code, 0);
    EXPECT_EQ(run({"chargeless", cat("manifolds/charged_mixed.m3")}).code, 1);
    EXPECT_EQ(run({"chargeless", "--block", "S1", cat("manifolds/charged_mixed.m3")}).code, 2);
    EXPECT_EQ(run({"chargeless", cat("manifolds/self_glued.m3")}).code, 1);
    EXPECT_EQ(run({"chargeless", "--per-torus", cat("manifolds/self_glued.m3")}).code, 1);
}

TEST(Cli, DualCubeAndTorus) {
    const CliResult d = run({"dual-cube", cat("wallspaces/two_crossing.ws")});
    EXPECT_EQ(d.code, 0);
    EXPECT_TRUE(contains(d.out, "dimension 2: 4 0-cubes, 4 1-cubes, 1 2-cubes"));
    EXPECT_EQ(run({"dual-cube", "--budget", "2", cat("wallspaces/two_crossing.ws")}).code, 2);
    const CliResult t = run({"torus-walls", "--slope", "1,0", "--slope", "0,1", "--window", "1"});
    EXPECT_EQ(t.code, 0);
    EXPECT_TRUE(contains(t.out, "dimension 2: 16 0-cubes, 24 1-cubes, 9 2-cubes"));
}

TEST(Cli, Helly) {
    const std::string ok = temp_file("helly_ok", "vertices 3\nedge 0 1\nedge 1 2\nsubtree 0 1\nsubtree 1 2\n");
    const CliResult r = run({"helly-demo", ok});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "common vertex: 1\n");
    const std::string bad = temp_file("helly_bad", "vertices 3\nedge 0 1\nedge 1 2\nsubtree 0\nsubtree 2\n");
    EXPECT_EQ(run({"helly-demo", bad}).code, 1);
    const std::string broken = temp_file("helly_broken", "vertices 3\nedge 0 x\n");
    const CliResult b = run({"helly-demo", broken});
    EXPECT_EQ(b.code, 2);
    EXPECT_TRUE(contains(b.err, ":2: ")) << b.err;
    EXPECT_EQ(run({"helly-demo", "--seed", "5"}).out, run({"helly-demo", "--seed", "5"}).out);
    EXPECT_EQ(run({"helly-demo", "--seed", "5"}).code, 0);
}

TEST(Cli, AssemblyPlan) {
    const std::string f = temp_file("plan", "torus T1 r=2 s=3 a=2 b=3\ntorus T2 r=4 s=0 a=4 b=5\n");
    const CliResult r = run({"assembly-plan", f});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "core copies: 60\ntorus T1: 60 alpha-caps, 60 beta-caps\ntorus T2: 60 alpha-caps, 0 beta-caps\n");
    EXPECT_EQ(run({"assembly-plan", temp_file("plan_bad", "torus T r=1 s=1 a=1 c=1\n")}).code, 2);
}
