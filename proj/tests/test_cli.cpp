#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace fs = std::filesystem;

namespace
{

struct Result {
    int code = -1;
    std::string out;
};

Result run(const std::string &args)
{
    const std::string cmd = std::string(SZT_CLI_PATH) + " " + args + " 2>/dev/null";
    Result r;
    FILE *p = popen(cmd.c_str(), "r");
    if (!p) {
        return r;
    }
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) {
        r.out.append(buf.data(), got);
    }
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

class Cli : public ::testing::Test
{
protected:
    void SetUp() override
    {
        dir = fs::temp_directory_path() / ("szt_cli_" + std::to_string(::getpid()) + "_" +
                                           ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir);
    }
    void TearDown() override { fs::remove_all(dir); }

    std::string file(const std::string &name, const std::string &body)
    {
        const auto path = dir / name;
        std::ofstream(path) << body;
        return path.string();
    }

    fs::path dir;
};

} // namespace

TEST_F(Cli, GenSquares)
{
    const auto r = run("gen --kind squares --n 4");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1\n4\n9\n16\n");
}

TEST_F(Cli, GenGeometricWithParam)
{
    const auto r = run("gen --kind gp --n 4 --param 2");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1\n2\n4\n8\n");
}

TEST_F(Cli, GenToFile)
{
    const auto path = (dir / "a.txt").string();
    EXPECT_EQ(run("--out " + path + " gen --kind cubes --n 3").code, 0);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(ss.str(), "1\n8\n27\n");
}

TEST_F(Cli, GenZeroSizeIsAnError) { EXPECT_EQ(run("gen --kind squares --n 0").code, 2); }

TEST_F(Cli, UsageErrors)
{
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("gen --kind squares").code, 2);
    EXPECT_EQ(run("compute energy --set " + (dir / "missing.txt").string()).code, 2);
}

TEST_F(Cli, ComputeEnergy)
{
    const auto a = file("a.txt", "0\n1\n2\n");
    auto r = run("compute energy --k 2 --set " + a);
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "19\n");
    EXPECT_EQ(run("compute energy --k 3 --set " + a).out, "45\n");
    r = run("compute energy --k 3/2 --set " + a);
    EXPECT_NEAR(std::stod(r.out), 12.8530, 5e-5);
    r = run("compute energy --sets " + a + " " + a + " --format json");
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["value"], "19");
    EXPECT_TRUE(j["exact"].get<bool>());
}

TEST_F(Cli, ComputeSpectrum)
{
    const auto a = file("a.txt", "0\n1\n2\n");
    const auto r = run("compute spectrum --g self-corr --set " + a);
    EXPECT_EQ(r.code, 0);
    std::istringstream in(r.out);
    double v[3];
    in >> v[0] >> v[1] >> v[2];
    EXPECT_NEAR(v[0], 6.37228, 1e-5);
    EXPECT_NEAR(v[1], 2.0, 1e-9);
    EXPECT_NEAR(v[2], 0.62772, 1e-5);
    EXPECT_EQ(run("compute spectrum --budget 4 --set " + a).code, 2);
}

TEST_F(Cli, ComputeTail)
{
    const auto a = file("a.txt", "1\n2\n4\n8\n");
    const auto r = run("compute tail --a " + a + " --b " + a);
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1 10\n2 6\n3 0\n4 0\n");
}

TEST_F(Cli, ComputeSumsetConvAndQ)
{
    const auto a = file("a.txt", "# comment\n0\n1\n2\n");
    EXPECT_EQ(run("compute sumset --set " + a).out, "0\n1\n2\n3\n4\n");
    EXPECT_EQ(run("compute conv --op minus --set " + a).out, "-2 1\n-1 2\n0 3\n1 2\n2 1\n");
    EXPECT_NEAR(std::stod(run("compute q --set " + a).out), 25.0 / 3, 1e-12);
    const auto b = file("b.txt", "1\n2\n");
    const auto one = file("one.txt", "1\n");
    EXPECT_EQ(std::stod(run("compute q --set " + b + " --shift 1 --candidates " + one).out), 4.0);
}

TEST_F(Cli, ComputeEstimateC)
{
    const auto a = file("a.txt", "1\n4\n9\n16\n25\n");
    const auto point = file("p.txt", "0\n");
    const auto j = nlohmann::json::parse(run("compute estimate-c --set " + a + " --probes " + point + " --format json").out);
    EXPECT_EQ(j["c_hat"], 5.0);
}

TEST_F(Cli, ReadsSetFromStdin)
{
    const auto r = run("compute energy --k 2 --set - < " + file("a.txt", "0\n1\n2\n"));
    EXPECT_EQ(r.out, "19\n");
}

TEST_F(Cli, VerifySingleStatement)
{
    const auto r = run("verify --only thm-main --family squares --n 64");
    EXPECT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j["reports"].size(), 1u);
    EXPECT_EQ(j["reports"][0]["statement_id"], "thm-main");
    EXPECT_TRUE(j["passed"].get<bool>());
}

TEST_F(Cli, VerifySmokeConfigCsv)
{
    const auto r = run("verify --config " SZT_CONFIG_DIR "/smoke.ini --format csv");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("statement_id,", 0), 0u);
}

TEST_F(Cli, VerifyExitCodes)
{
    const auto strict = file("strict.ini", "statements = thm-main\n[constants]\nthm-main = 1e-9\n[sweep]\nfamilies = squares\nsizes = 16\n");
    EXPECT_EQ(run("verify --config " + strict).code, 1);
    const auto tiny = file("tiny.ini", "[budget]\ndense_entries = 10\n[sweep]\nfamilies = squares\nsizes = 16\n");
    EXPECT_EQ(run("verify --config " + tiny).code, 2);
    const auto bad = file("bad.ini", "[sweep]\ncolour = red\n");
    EXPECT_EQ(run("verify --config " + bad).code, 2);
    EXPECT_EQ(run("verify --only no-such-statement --n 16").code, 2);
}

TEST_F(Cli, VerifyTimingsFlag)
{
    const auto plain = nlohmann::json::parse(run("verify --only thm-main --family gp --n 16").out);
    EXPECT_FALSE(plain["reports"][0].contains("runtime_ms"));
    const auto timed = nlohmann::json::parse(run("verify --only thm-main --family gp --n 16 --timings").out);
    EXPECT_TRUE(timed["reports"][0].contains("runtime_ms"));
}
