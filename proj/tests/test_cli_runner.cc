// Copyright 2026 The kicked-ising Authors
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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "kising/cli_runner.h"

namespace kising {
namespace {

namespace fs = std::filesystem;

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "kising");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path &p) {
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), {}};
}

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("kising_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override {
        fs::remove_all(dir_);
    }
    fs::path dir_;
};

TEST_F(CliTest, PeriodExample) {
    const Outcome o = invoke({"--command", "period", "--n", "6", "--coupling", "1/3"});
    ASSERT_EQ(o.code, 0) << o.err;
    const auto j = nlohmann::json::parse(o.out);
    EXPECT_EQ(j["predicted_period"], 12);
    EXPECT_EQ(j["measured_period"], 12);
    EXPECT_EQ(j["projective_period"], 6);
    EXPECT_EQ(o.out.rfind("{\"command\":\"period\"", 0), 0u);
    EXPECT_EQ(std::count(o.out.begin(), o.out.end(), '\n'), 1);
}

TEST_F(CliTest, OracleCheckPasses) {
    const Outcome o = invoke({"--command", "oracle-check", "--n", "8", "--coupling", "sqrt(5)/3", "--theta0", "0.7",
                              "--phi0", "-0.4", "--kicks", "9"});
    ASSERT_EQ(o.code, 0) << o.out << o.err;
    EXPECT_TRUE(nlohmann::json::parse(o.out)["all_pass"].get<bool>());
}

TEST_F(CliTest, ConfigErrors) {
    Outcome o = invoke({"--command", "spectrum", "--n", "100", "--coupling", "7/2x"});
    EXPECT_EQ(o.code, kExitConfig);
    EXPECT_EQ(nlohmann::json::parse(o.err)["error"], "config");
    EXPECT_EQ(invoke({"--command", "spectrum", "--n", "100"}).code, kExitConfig);
    EXPECT_EQ(invoke({"--command", "bogus", "--n", "100", "--coupling", "1"}).code, kExitConfig);
    EXPECT_EQ(invoke({"--command", "spectrum", "--n", "10", "--coupling", "1", "--sector", "up"}).code, kExitConfig);
    EXPECT_EQ(invoke({"--command", "period", "--n", "10", "--coupling", "sqrt(2)"}).code, kExitConfig);
    EXPECT_EQ(invoke({"--command", "spacings", "--n", "1000", "--coupling", "sqrt(2)", "--k", "9"}).code, kExitConfig);
    EXPECT_EQ(invoke({"--command", "spectrum", "--n", "10,20", "--coupling", "1"}).code, kExitConfig);
    EXPECT_EQ(invoke({"--nonsense"}).code, kExitConfig);
}

TEST_F(CliTest, ResourceAndNumericErrorsLeaveNoFile) {
    const fs::path out = dir_ / "a.csv";
    Outcome o = invoke({"--command", "oracle-check", "--n", "11", "--coupling", "1", "--out", out.string()});
    EXPECT_EQ(o.code, kExitResource);
    o = invoke({"--command", "eigenstate-ee", "--n", "30000", "--coupling", "1", "--out", out.string()});
    EXPECT_EQ(o.code, kExitResource);
    o = invoke({"--command", "rbar", "--n", "50", "--coupling", "sqrt(2)", "--out", out.string()});
    EXPECT_EQ(o.code, kExitNumeric);
    EXPECT_EQ(nlohmann::json::parse(o.err)["error"], "numeric");
    EXPECT_FALSE(fs::exists(out));
    EXPECT_TRUE(fs::is_empty(dir_));
}

TEST_F(CliTest, DeterministicFiles) {
    for (const char *format : {"csv", "json"}) {
        const fs::path a = dir_ / (std::string("a.") + format);
        const fs::path b = dir_ / (std::string("b.") + format);
        for (const fs::path &p : {a, b}) {
            const Outcome o = invoke({"--command", "spacings", "--n", "4000", "--coupling", "sqrt(5)/3", "--k", "2",
                                      "--format", format, "--out", p.string()});
            ASSERT_EQ(o.code, 0) << o.err;
        }
        EXPECT_EQ(slurp(a), slurp(b));
        EXPECT_FALSE(slurp(a).empty());
    }
    EXPECT_EQ(slurp(dir_ / "a.csv").substr(0, 27), "center,empirical,reference\n");
    const auto doc = nlohmann::json::parse(slurp(dir_ / "a.json"));
    EXPECT_EQ(doc["summary"]["k"], 2);
    EXPECT_EQ(doc["rows"].size(), 50u);
}

TEST_F(CliTest, EveryCommandRuns) {
    const std::vector<std::vector<std::string>> runs = {
        {"--command", "entropy-series", "--n", "8", "--coupling", "7/20", "--theta0", "0.785398", "--phi0", "-0.785398",
         "--kicks", "60"},
        {"--command", "spectrum", "--n", "100", "--coupling", "1/3", "--sector", "pooled"},
        {"--command", "ratios", "--n", "3000", "--coupling", "sqrt(5)/3", "--k", "3", "--unfold", "local:41"},
        {"--command", "rbar", "--n", "3000", "--coupling", "sqrt(5)/3"},
        {"--command", "eigenstate-ee", "--n", "8,16,32,64", "--coupling", "1", "--perturb", "tau", "--delta", "1e-10"},
        {"--command", "qkt-map", "--n", "10", "--coupling", "1", "--kicks", "20"},
    };
    for (const auto &r : runs) {
        const Outcome o = invoke(r);
        ASSERT_EQ(o.code, 0) << r[1] << ": " << o.err;
        EXPECT_TRUE(nlohmann::json::parse(o.out).is_object());
    }
    const auto series = nlohmann::json::parse(invoke(runs[0]).out);
    EXPECT_EQ(series["detected_period"], 20);
    const auto ee = nlohmann::json::parse(invoke(runs[4]).out);
    EXPECT_GT(ee["intercept"].get<double>(), 0.0);
    const auto top = nlohmann::json::parse(invoke(runs[5]).out);
    EXPECT_NEAR(top["k_prime"].get<double>(), 10 * M_PI, 1e-12);
    EXPECT_EQ(top["lle_analytic"], 0.0);
}

TEST_F(CliTest, DegenerateEnsembleWarns) {
    const Outcome o = invoke({"--command", "eigenstate-ee", "--n", "12", "--coupling", "1/3", "--delta", "0"});
    ASSERT_EQ(o.code, 0);
    EXPECT_NE(o.err.find("warning"), std::string::npos);
    EXPECT_TRUE(nlohmann::json::parse(o.out)["degenerate"].get<bool>());
}

}  // namespace
}  // namespace kising
