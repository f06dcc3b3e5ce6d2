// Copyright 2026 The symgm Authors
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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "gtest/gtest.h"
#include "json.hpp"

namespace {

struct CliRun {
    int code = -1;
    std::string out;
};

CliRun run(const std::string &args) {
    std::string cmd = std::string(SYMGM_CLI) + " " + args + " 2>/dev/null";
    CliRun r;
    FILE *p = popen(cmd.c_str(), "r");
    if (!p) {
        return r;
    }
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) {
        r.out.append(buf, n);
    }
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const std::string &name) {
    return std::string(SYMGM_TEST_DATA) + "/" + name;
}

nlohmann::json run_json(const std::string &args) {
    CliRun r = run("--json " + args);
    EXPECT_EQ(r.code, 0) << args;
    return nlohmann::json::parse(r.out);
}

}  // namespace

TEST(cli, perm) {
    EXPECT_NEAR(run_json("perm " + data("qubit_sic.json"))["perm_A"].get<double>(), 8.0 / 3, 1e-12);
    auto w = run_json("perm " + data("w3.json"));
    EXPECT_NEAR(w["perm_A"].get<double>(), 2, 1e-12);
    EXPECT_EQ(w["parties"].get<int>(), 3);
    EXPECT_NEAR(w["norm_const"].get<double>(), std::sqrt(3.0), 1e-12);
    auto d = run_json("perm " + data("dicke_1111.json"));
    EXPECT_NEAR(d["perm_A"].get<double>(), 4, 1e-12);
    EXPECT_NEAR(d["perm_A_dicke"].get<double>(), 4, 1e-12);
}

TEST(cli, gm) {
    EXPECT_NEAR(run_json("gm " + data("w3.json"))["gm_bits"].get<double>(), std::log2(9.0 / 4), 1e-6);
    EXPECT_NEAR(run_json("gm " + data("qubit_sic.json"))["gm_bits"].get<double>(), std::log2(3.0), 1e-6);
    auto p = run_json("gm " + data("product3.json"));
    EXPECT_NEAR(p["gm_bits"].get<double>(), 0, 1e-12);
    EXPECT_TRUE(p["saturated"].get<bool>());
    auto nats = run_json("--nats gm " + data("w3.json"));
    EXPECT_NEAR(nats["gm_nats"].get<double>(), std::log(9.0 / 4), 1e-6);
}

TEST(cli, key_order_is_fixed) {
    CliRun r = run("--json gm " + data("w3.json"));
    auto a = r.out.find("\"lambda_sq\""), b = r.out.find("\"gm_bits\""), c = r.out.find("\"witness\"");
    EXPECT_LT(a, b);
    EXPECT_LT(b, c);
}

TEST(cli, other_commands) {
    EXPECT_NEAR(run_json("dicke --counts 1 1 1 1 --theta 1.5707963267948966")["gm_bits"].get<double>(), 1, 1e-6);
    auto m = run_json("mubs --dim 2 --bases 2");
    EXPECT_TRUE(m["saturated"].get<bool>());
    EXPECT_FALSE(run_json("mubs --dim 3 --bases 4")["saturated"].get<bool>());
    EXPECT_NEAR(run_json("sic --dim 3 --t 0")["gm_bits"].get<double>(), std::log2(64.0 / 7), 1e-9);
    auto maj = run_json("majorana " + data("ghz3_dicke.json"));
    EXPECT_EQ(maj["points"].size(), 3u);
    EXPECT_TRUE(maj["half_sphere"].get<bool>());
    EXPECT_FALSE(run_json("majorana " + data("qubit_sic.json"))["half_sphere"].get<bool>());
    auto ml = run_json("ml " + data("qubit_sic.json"));
    EXPECT_NEAR(ml["purity"].get<double>(), 0.5, 1e-8);
    EXPECT_TRUE(run_json("compat --theta 1.5707963267948966 --f 0.5 0.5 0.5 0.5")["compatible"].get<bool>());
    EXPECT_FALSE(run_json("compat --theta 1.5707963267948966 --f 1 0 1 0")["compatible"].get<bool>());
    EXPECT_TRUE(run_json("compat " + data("w3.json"))["compatible"].get<bool>());
    EXPECT_TRUE(run_json("additivity " + data("w3.json"))["certified"].get<bool>());
}

TEST(cli, sic_scan) {
    CliRun r = run("sic-scan");
    ASSERT_EQ(r.code, 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "t,perm_A,G_bits");
    int rows = 0;
    double first = 0, last = 0;
    while (std::getline(in, line)) {
        double g = std::stod(line.substr(line.rfind(',') + 1));
        if (rows == 0) {
            first = g;
        }
        last = g;
        ++rows;
    }
    EXPECT_EQ(rows, 121);
    EXPECT_NEAR(first, std::log2(64.0 / 7), 1e-10);
    EXPECT_NEAR(last, std::log2(16 * 62.0 / 105), 1e-10);

    CliRun two = run("sic-scan --points 2");
    EXPECT_EQ(std::count(two.out.begin(), two.out.end(), '\n'), 3);

    std::string path = std::string(SYMGM_TEST_OUT) + "/scan.csv";
    ASSERT_EQ(run("sic-scan --points 5 --out " + path).code, 0);
    std::ifstream f(path);
    std::stringstream content;
    content << f.rdbuf();
    EXPECT_EQ(content.str(), run("sic-scan --points 5").out);
}

TEST(cli, csv_and_text_formats) {
    CliRun csv = run("--format csv perm " + data("w3.json"));
    EXPECT_EQ(csv.out.rfind("key,value\n", 0), 0u);
    CliRun text = run("perm " + data("w3.json"));
    EXPECT_NE(text.out.find("perm_A: 2\n"), std::string::npos);
}

TEST(cli, exit_codes) {
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("perm /nonexistent.json").code, 2);
    EXPECT_EQ(run("perm " + data("broken.json")).code, 2);
    EXPECT_EQ(run("mubs --dim 4 --bases 2").code, 2);
    EXPECT_EQ(run("sic-scan --dim 2").code, 2);
    EXPECT_EQ(run("--restarts 0 gm " + data("w3.json")).code, 2);
    EXPECT_EQ(run("--help").code, 0);
    // Errors still produce a JSON document under --json.
    CliRun r = run("--json perm " + data("broken.json"));
    EXPECT_EQ(r.code, 2);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["exit_code"].get<int>(), 2);
}

TEST(cli, deterministic_output) {
    for (const std::string args : {"--json gm " + data("qubit_sic.json"), std::string("--json mubs --dim 3 --bases 4"),
                                   "--seed 99 ml " + data("w3.json")}) {
        EXPECT_EQ(run(args).out, run(args).out) << args;
    }
}
