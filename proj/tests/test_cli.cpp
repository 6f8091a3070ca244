#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

/// Runs the CLI with --threads 1; stderr is merged into the captured output.
Run cli(const std::string& args) {
    const std::string cmd = std::string(FLAGTUTTE_CLI) + " " + args + " 2>&1";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), buf.size(), p)) r.out += buf.data();
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string sample(const std::string& name) { return std::string(FLAGTUTTE_SAMPLES) + "/" + name; }

std::string compute(const std::string& invariant, const std::string& file, const std::string& extra = "") {
    return "compute --threads 1 --invariant " + invariant + " --input " + sample(file) + extra;
}

bool has(const std::string& s, const std::string& what) { return s.find(what) != std::string::npos; }

}  // namespace

TEST(Cli, GoldenCompute) {
    auto r = cli(compute("kt", "flag_u13_u23.json"));
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "x^2*y^2 + x^2*y + x*y^2 + x^2 + 2*x*y + y^2\n");
    r = cli(compute("lvt", "flag_u13_u23.json"));
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "x*z + 2*z + y + 2\n");
    r = cli(compute("tutte", "uniform_1_2.json"));
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "x + y\n");
}

TEST(Cli, OtherInvariants) {
    EXPECT_EQ(cli(compute("h", "uniform_1_2.json")).out, "s\nphi: -u*v + 1\n");
    EXPECT_EQ(cli(compute("kchar", "flag_u13_u23.json")).out, "q^2 - 2*q + 1\n");
    EXPECT_EQ(cli(compute("beta", "flag_u13_u23.json")).out, "2*q - 2\n");
    EXPECT_EQ(cli(compute("beta-reduced", "flag_u13_u23.json")).out, "2\nvia_higgs: 2\n");
    EXPECT_EQ(cli(compute("beta", "uniform_1_2.json")).out, "1\n");
    EXPECT_EQ(cli(compute("char", "k4_graphic.json")).out, "q^3 - 6*q^2 + 11*q - 6\n");
    const auto lv = cli(compute("h-lv", "flag_u24_u34_lvdiagram.json"));
    EXPECT_EQ(lv.code, 0);
    EXPECT_TRUE(has(lv.out, "in_uv: true")) << lv.out;
}

TEST(Cli, JsonAndEquivariant) {
    const auto r = cli(compute("kt", "flag_u13_u23.json", " --format json --equivariant"));
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(has(r.out, "\"invariant\": \"kt\"")) << r.out;
    EXPECT_TRUE(has(r.out, "\"equivariant\"")) << r.out;
    EXPECT_TRUE(has(r.out, "\"input_hash\"")) << r.out;
    const auto lv = cli(compute("lvt", "flag_u13_u23.json", " --equivariant"));
    EXPECT_EQ(lv.code, 0);
    EXPECT_TRUE(has(lv.out, "x*z + 2*z + y + 2")) << lv.out;
}

TEST(Cli, Verify) {
    auto r = cli("verify --threads 1 --identity kt22 --input " + sample("flag_u13_u23.json"));
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(has(r.out, "KT(2,2)=48")) << r.out;
    EXPECT_TRUE(has(r.out, "|pB|=6")) << r.out;

    r = cli("verify --threads 1 --identity brion-example");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(has(r.out, "PASS")) << r.out;

    // the Las Vergnas diagram push-pull of (U24, U34) lies in Q[uv], so the check is falsified
    r = cli("verify --threads 1 --identity h-uv --input " + sample("flag_u24_u34_lvdiagram.json"));
    EXPECT_EQ(r.code, 4) << r.out;
    EXPECT_TRUE(has(r.out, "(in Q[uv])")) << r.out;

    r = cli("verify --threads 1 --identity delcont --element 1 --input " + sample("k4_graphic.json"));
    EXPECT_EQ(r.code, 0) << r.out;
    r = cli("verify --threads 1 --identity delcont --input " + sample("uniform_1_2.json"));
    EXPECT_EQ(r.code, 0) << r.out;
}

TEST(Cli, Pseudobases) {
    auto r = cli("pseudobases --input " + sample("flag_u13_u23.json"));
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(has(r.out, "1 (3):")) << r.out;
    EXPECT_TRUE(has(r.out, "2 (3):")) << r.out;
    r = cli("pseudobases --input " + sample("flag_u14_u34.json"));
    EXPECT_TRUE(has(r.out, "1 (4):")) << r.out;
    EXPECT_TRUE(has(r.out, "2 (6):")) << r.out;
    EXPECT_TRUE(has(r.out, "3 (4):")) << r.out;
    EXPECT_EQ(cli("pseudobases --input " + sample("uniform_1_2.json")).code, 2);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(cli("compute --invariant nonsense --input " + sample("uniform_1_2.json")).code, 2);
    EXPECT_EQ(cli("compute --invariant kt --input /nonexistent.json").code, 2);
    EXPECT_EQ(cli(R"(compute --invariant kt --input '{"type": "bases", "n": 4, "bases": [[1, 2], [3, 4]]}')").code, 2);
    EXPECT_EQ(cli("compute --invariant lvt --input " + sample("uniform_1_2.json")).code, 2);
    EXPECT_EQ(cli("compute --invariant h --input " + sample("k4_graphic.json") + " --format xml").code, 2);
    EXPECT_EQ(cli("verify --identity nonsense").code, 2);
    EXPECT_EQ(cli("frobnicate").code, 2);
    const auto parse = cli(R"(compute --invariant kt --input '{"type": "bases", "n": 3, "bases": [[1, 9]]}')");
    EXPECT_EQ(parse.code, 2);
    EXPECT_TRUE(has(parse.out, "$.bases[0]")) << parse.out;
    // h requires no coloops; U22 has two
    EXPECT_EQ(cli(R"(compute --invariant h --input '{"type": "uniform", "r": 2, "n": 2}')").code, 2);
}

TEST(Cli, Deterministic) {
    const std::string args = compute("kt", "flag_u14_u34.json", " --format json --equivariant");
    const auto a = cli(args);
    const auto b = cli(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    const auto t2 = cli("compute --threads 2 --invariant kt --format json --equivariant --input " + sample("flag_u14_u34.json"));
    EXPECT_EQ(a.out, t2.out);
    EXPECT_EQ(cli("corpus --seed 5").out, cli("corpus --seed 5").out);
    EXPECT_TRUE(has(cli("corpus").out, "matroids,")) << cli("corpus").out;
}
