// Copyright 2026 The kraus-forge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <fmt/format.h>
#include <gtest/gtest.h>

#include "kraus_forge/bloch.h"
#include "kraus_forge/cli.h"
#include "kraus_forge/error.h"
#include "kraus_forge/pd_channel.h"
#include "kraus_forge/serialize.h"

namespace kraus_forge {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "kraus-forge");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    const int code = cli::run(int(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("kraus_forge_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override {
        fs::remove_all(dir_);
    }
    std::string path(const std::string &name) const {
        return (dir_ / name).string();
    }
    fs::path dir_;
};

KrausSet first_point(const std::string &doc) {
    return kraus_set_from_json(json::parse(doc).at("points").at(0));
}

TEST_F(CliTest, DerivePureDephasing) {
    const Result r = run({"derive", "--channel", "pd", "--rate", "1", "--t", "0.5"});
    ASSERT_EQ(r.code, 0) << r.err;
    const KrausSet k = first_point(r.out);
    ASSERT_EQ(k.size(), 2u);
    EXPECT_LT(choi_distance(k, pd_kraus(PdParams{1.0}, 0.5)), 1e-12);
    const json doc = json::parse(r.out);
    EXPECT_EQ(doc["channel"], "pd");
    EXPECT_EQ(doc["points"][0]["t"].get<double>(), 0.5);
}

TEST_F(CliTest, DeriveStandardAmplitudeDamping) {
    const Result r =
        run({"derive", "--channel", "gad", "--scaled", "--theta", "0", "--omega", "-2", "--tau", "0.693"});
    ASSERT_EQ(r.code, 0) << r.err;
    const KrausSet k = first_point(r.out);
    ASSERT_EQ(k.size(), 2u);
    EXPECT_LT(choi_distance(k, textbook_ad_kraus(-std::expm1(-2 * 0.693))), 1e-12);
}

TEST_F(CliTest, PhysicalRouteMatchesScaledRoute) {
    const Result phys = run({"derive", "--channel", "gad", "--physical", "--alpha", "0.02", "--omega0",
                             "10", "--cutoff", "15", "--temperature", "0", "--t", "1"});
    ASSERT_EQ(phys.code, 0) << phys.err;
    const json doc = json::parse(phys.out);
    const double tau = doc["points"][0]["scaled"]["tau"].get<double>();
    EXPECT_EQ(doc["points"][0]["scaled"]["omega"].get<double>(), -2.0);
    const Result scaled = run({"derive", "--scaled", "--theta", "0", "--omega", "-2", "--tau",
                               fmt::format("{}", tau)});
    ASSERT_EQ(scaled.code, 0) << scaled.err;
    EXPECT_LT(choi_distance(first_point(phys.out), first_point(scaled.out)), 1e-9);
}

TEST_F(CliTest, TimeGridAndCsv) {
    const Result r = run({"derive", "--rates", "--x", "0.5", "--y", "2", "--z", "0.5", "--t-start", "0",
                          "--t-end", "1", "--steps", "5", "--format", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')),
              "t,index,weight,completeness_residual,e00_re,e00_im,e01_re,e01_im,e10_re,e10_im,e11_re,"
              "e11_im");
    const Result j = run({"derive", "--rates", "--y", "2", "--t-start", "0", "--t-end", "1", "--steps", "5"});
    ASSERT_EQ(j.code, 0);
    const json doc = json::parse(j.out);
    ASSERT_EQ(doc["points"].size(), 5u);
    EXPECT_EQ(doc["points"][4]["t"].get<double>(), 1.0);
    EXPECT_EQ(doc["points"][0]["kraus"].size(), 1u);
}

TEST_F(CliTest, ConfigFileWithFlagOverride) {
    {
        std::ofstream f(path("run.json"));
        f << R"({"channel": "gad",
                 "parameterization": {"kind": "scaled", "theta": 1, "omega": -1},
                 "time": {"start": 0.5, "end": 1.0, "steps": 2},
                 "output": {"format": "json"}})";
    }
    const Result r = run({"derive", "--config", path("run.json"), "--t", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json doc = json::parse(r.out);
    ASSERT_EQ(doc["points"].size(), 1u);
    EXPECT_LT(choi_distance(first_point(r.out), gad_kraus_closed(GadScaled{1.0, -1.0, 1.0})), 1e-9);

    const Result o = run({"derive", "--config", path("run.json"), "--omega", "-0.5"});
    ASSERT_EQ(o.code, 0) << o.err;
    EXPECT_EQ(json::parse(o.out)["parameterization"]["omega"].get<double>(), -0.5);
    EXPECT_EQ(json::parse(o.out)["parameterization"]["theta"].get<double>(), 1.0);
}

TEST_F(CliTest, ConfigErrorsExitTwo) {
    {
        std::ofstream f(path("bad.json"));
        f << R"({"channel": "gad", "colour": "blue"})";
    }
    {
        std::ofstream f(path("broken.json"));
        f << "{ not json";
    }
    EXPECT_EQ(run({"derive", "--config", path("bad.json"), "--t", "1"}).code, 2);
    EXPECT_EQ(run({"derive", "--config", path("broken.json")}).code, 2);
    EXPECT_EQ(run({"derive", "--config", path("missing.json")}).code, 2);
    EXPECT_EQ(run({"derive", "--x", "1", "--theta", "1", "--t", "1"}).code, 2);
    EXPECT_EQ(run({"derive", "--scaled", "--omega", "-3", "--t", "1"}).code, 2);
    EXPECT_EQ(run({"derive", "--rates", "--y", "1", "--z", "2", "--t", "1"}).code, 2);
    EXPECT_EQ(run({"derive", "--rates", "--t-start", "2", "--t-end", "1"}).code, 2);
    EXPECT_EQ(run({"derive", "--rates", "--steps", "0", "--t-end", "1"}).code, 2);
    EXPECT_EQ(run({"derive", "--scaled"}).code, 2);
    EXPECT_EQ(run({"derive", "--channel", "pd", "--scaled", "--t", "1"}).code, 2);
    EXPECT_EQ(run({"derive", "--no-such-flag"}).code, 2);
    EXPECT_EQ(run({"derive", "--channel", "xyz", "--t", "1"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"derive", "--rates", "--t", "1", "--tol", "nonsense"}).code, 2);
}

TEST_F(CliTest, PipelineErrorExitsThree) {
    const Result r = run({"derive", "--rates", "--y", "1e200", "--t", "1e200"});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("OverflowDetected"), std::string::npos) << r.err;
}

TEST_F(CliTest, UnwritableOutputExitsFour) {
    EXPECT_EQ(run({"derive", "--rates", "--t", "1", "-o", "/proc/kraus_forge/none.json"}).code, 4);
    EXPECT_EQ(run({"figure", "volume_rate", "-o", "/proc/kraus_forge"}).code, 4);
}

TEST_F(CliTest, HelpExitsZero) {
    const Result r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("derive"), std::string::npos);
}

TEST_F(CliTest, VerifyPasses) {
    const Result r = run({"verify", "-o", path("report.json")});
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
    const json report = json::parse(slurp(path("report.json")));
    EXPECT_TRUE(report["passed"].get<bool>());
    EXPECT_GE(report["checks"].size(), 15u);
    for (const auto &c : report["checks"]) {
        EXPECT_LE(c["residual"].get<double>(), c["tolerance"].get<double>()) << c["name"];
    }
}

TEST_F(CliTest, VerifyToleranceOverrides) {
    const Result tight = run({"verify", "--tol", "gad.asymptotic=1e-12"});
    EXPECT_EQ(tight.code, 1);
    EXPECT_NE(tight.out.find("FAIL gad.asymptotic"), std::string::npos);

    ::setenv("KRAUS_FORGE_TOL", "1e-30", 1);
    const Result env = run({"verify"});
    // A per-check value still beats the environment.
    const Result mixed = run({"verify", "--tol", "gad.asymptotic=1"});
    ::unsetenv("KRAUS_FORGE_TOL");
    EXPECT_EQ(env.code, 1);
    EXPECT_NE(mixed.out.find("PASS gad.asymptotic"), std::string::npos);
}

TEST_F(CliTest, RoundTripThroughVerifyInput) {
    const std::string doc = path("derived.json");
    ASSERT_EQ(run({"derive", "--scaled", "--theta", "5", "--omega", "-0.1", "--t-start", "0", "--t-end",
                   "3", "--steps", "7", "-o", doc})
                  .code,
              0);
    const Result r = run({"verify", "--input", doc});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("PASS input.recorded_residual"), std::string::npos);
    EXPECT_EQ(run({"verify", "--input", path("absent.json")}).code, 4);
}

TEST_F(CliTest, DeterministicOutput) {
    const std::vector<std::string> args{"derive", "--physical", "--temperature", "100", "--lamb-shift",
                                        "quadrature", "--t-start", "0", "--t-end", "0.2", "--steps", "4"};
    auto a = args;
    a.insert(a.end(), {"-o", path("a.json")});
    auto b = args;
    b.insert(b.end(), {"-o", path("b.json")});
    ASSERT_EQ(run(a).code, 0);
    ASSERT_EQ(run(b).code, 0);
    EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));

    ASSERT_EQ(run({"figure", "bloch3d", "-o", path("f1")}).code, 0);
    ASSERT_EQ(run({"figure", "bloch3d", "-o", path("f2")}).code, 0);
    for (const auto &entry : fs::directory_iterator(path("f1"))) {
        EXPECT_EQ(slurp(entry.path()), slurp(fs::path(path("f2")) / entry.path().filename()));
    }
}

TEST_F(CliTest, BlochFigureFiles) {
    const Result r = run({"figure", "bloch3d", "-o", path("fig")});
    ASSERT_EQ(r.code, 0) << r.err;
    for (const char *name :
         {"bloch3d_T100_t0.csv", "bloch3d_T100_t0.05.csv", "bloch3d_T300_t0.csv", "bloch3d_T300_t0.05.csv",
          "bloch3d_T1_t0.csv", "bloch3d_T1_t2.5.csv", "bloch3d_standard_ad_t0.csv",
          "bloch3d_standard_ad_t2.5.csv", "bloch3d_summary.csv"}) {
        EXPECT_TRUE(fs::exists(fs::path(path("fig")) / name)) << name;
    }
    const std::string cloud = slurp(fs::path(path("fig")) / "bloch3d_T300_t0.05.csv");
    EXPECT_EQ(cloud.substr(0, 10), "u,v,x,y,z\n");
    EXPECT_EQ(std::count(cloud.begin(), cloud.end(), '\n'), 1 + 24 * 11 + 2);

    const Result custom = run({"figure", "bloch3d", "--temperatures", "50", "--times", "0.1", "0.2",
                               "--grid-u", "6", "--grid-v", "4", "--compare-standard-ad", "-o",
                               path("custom")});
    ASSERT_EQ(custom.code, 0) << custom.err;
    EXPECT_TRUE(fs::exists(fs::path(path("custom")) / "bloch3d_T50_t0.2.csv"));
    EXPECT_TRUE(fs::exists(fs::path(path("custom")) / "bloch3d_standard_ad_t0.1.csv"));
}

TEST_F(CliTest, VolumeRateFigure) {
    ASSERT_EQ(run({"figure", "volume_rate", "-o", path("vol")}).code, 0);
    const std::string t100 = slurp(fs::path(path("vol")) / "volume_rate_T100.csv");
    const std::string t300 = slurp(fs::path(path("vol")) / "volume_rate_T300.csv");
    EXPECT_EQ(std::count(t100.begin(), t100.end(), '\n'), 42);
    auto kappa0 = [](const std::string &csv) {
        const auto line = csv.substr(csv.find('\n') + 1);
        return std::stod(line.substr(line.find(',') + 1));
    };
    EXPECT_LT(kappa0(t100), 0.0);
    EXPECT_LT(kappa0(t300), kappa0(t100));
}

TEST(CliConfig, StrictJsonReader) {
    EXPECT_THROW(cli::config_from_json(json{{"parameterization", {{"kind", "rates"}, {"theta", 1}}}}),
                 cli::ConfigError);
    EXPECT_THROW(cli::config_from_json(json{{"t", 1}, {"tau", 2}}), cli::ConfigError);
    EXPECT_THROW(cli::config_from_json(json{{"t", "one"}}), cli::ConfigError);
    const cli::RunConfig cfg = cli::config_from_json(
        json{{"channel", "pd"}, {"parameterization", {{"kind", "rates"}, {"r", 2.5}}}, {"t", 0.1},
             {"tolerances", {{"pd.channel_action", 1e-3}}}, {"kraus_cutoff", 1e-10}});
    EXPECT_EQ(cfg.channel, cli::Channel::Pd);
    EXPECT_EQ(std::get<cli::RatesParams>(cfg.params).pd.r, 2.5);
    EXPECT_EQ(cfg.time->points(), std::vector<double>{0.1});
    EXPECT_EQ(cli::resolve_tolerance(cfg, "pd.channel_action", 1.0), 1e-3);
    EXPECT_EQ(cli::resolve_tolerance(cfg, "other", 1.0), 1.0);
    EXPECT_EQ(cfg.kraus_cutoff, 1e-10);
}

TEST(CliConfig, TimeGridPoints) {
    const cli::TimeGrid g{0.0, 0.2, 41};
    const auto p = g.points();
    ASSERT_EQ(p.size(), 41u);
    EXPECT_EQ(p.front(), 0.0);
    EXPECT_EQ(p.back(), 0.2);
    EXPECT_NEAR(p[20], 0.1, 1e-17);
}

TEST(CliBinary, ExitCodesFromProcess) {
    const std::string exe = KF_CLI_PATH;
    auto status = [&](const std::string &args) {
        const int raw = std::system((exe + " " + args + " > /dev/null 2>&1").c_str());
        return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    };
    EXPECT_EQ(status("derive --channel pd --rate 1 --t 0.5"), 0);
    EXPECT_EQ(status("derive --bogus"), 2);
    EXPECT_EQ(status("derive --rates --y 1e200 --t 1e200"), 3);
    EXPECT_EQ(status("figure bloch3d -o /proc/kraus_forge"), 4);
    EXPECT_EQ(status("verify --tol gad.asymptotic=0"), 1);
}

}  // namespace
}  // namespace kraus_forge
