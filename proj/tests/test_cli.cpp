// Copyright 2026 The qinflate Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "oracles.hpp"
#include "qinflate/cli.hpp"
#include "qinflate/io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path &p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

fs::path scratch() {
    auto d = fs::temp_directory_path() / ("qinflate_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
}

Run run(const std::string &args, const std::string &env = "") {
    const auto dir = scratch();
    const auto o = dir / "stdout", e = dir / "stderr";
    const std::string cmd =
        env + " " + QINFLATE_BIN + " " + args + " >" + o.string() + " 2>" + e.string();
    const int status = std::system(cmd.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(o), slurp(e)};
}

std::string data(const std::string &name) { return std::string(QINFLATE_DATA_DIR) + "/" + name; }

std::vector<std::vector<std::string>> csv_rows(const std::string &text) {
    std::vector<std::vector<std::string>> rows;
    std::stringstream ss(text);
    for (std::string line; std::getline(ss, line);) {
        std::vector<std::string> cells;
        std::stringstream ls(line);
        for (std::string c; std::getline(ls, c, ',');) {
            cells.push_back(c);
        }
        rows.push_back(cells);
    }
    return rows;
}

} // namespace

TEST(CliHelpers, ParseGrid) {
    auto g = qinflate::cli::parse_grid("0:1:5");
    ASSERT_EQ(g.size(), 5U);
    EXPECT_DOUBLE_EQ(g[1], 0.25);
    EXPECT_EQ(g.back(), 1.0);
    EXPECT_EQ(qinflate::cli::parse_grid("0.3:0.9:1"), std::vector<double>{0.3});
    EXPECT_QERROR(qinflate::cli::parse_grid("0:1"), InvalidParameter);
    EXPECT_QERROR(qinflate::cli::parse_grid("0:x:3"), InvalidParameter);
    EXPECT_QERROR(qinflate::cli::parse_grid("0:1:0"), InvalidParameter);
}

TEST(CliHelpers, CutSelection) {
    EXPECT_EQ(qinflate::cli::parse_cut_selection("all").size(), 3U);
    EXPECT_EQ(qinflate::cli::parse_cut_selection("ca"), std::vector<std::string>{"AC"});
    EXPECT_QERROR(qinflate::cli::parse_cut_selection("AD"), InvalidParameter);
}

TEST(CliHelpers, SeedFallback) {
    ::unsetenv("QINFLATE_SEED");
    EXPECT_EQ(qinflate::cli::resolve_seed(std::nullopt), qinflate::cli::kDefaultSeed);
    ::setenv("QINFLATE_SEED", "1234", 1);
    EXPECT_EQ(qinflate::cli::resolve_seed(std::nullopt), 1234U);
    EXPECT_EQ(qinflate::cli::resolve_seed(7), 7U);
    ::setenv("QINFLATE_SEED", "12ab", 1);
    EXPECT_QERROR(qinflate::cli::resolve_seed(std::nullopt), InvalidParameter);
    ::unsetenv("QINFLATE_SEED");
}

TEST(CliHelpers, SvgIsWellFormed) {
    auto svg = qinflate::cli::render_svg("t", "x", "y", {{"s", {0, 1, 2}, {-1, 0, 1}}});
    EXPECT_EQ(svg.rfind("<svg", 0), 0U);
    EXPECT_NE(svg.find("<polyline"), std::string::npos);
    EXPECT_NE(svg.find("stroke-dasharray"), std::string::npos); // zero line
    EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

TEST(CliWitness, ExitCodes) {
    auto g = run("witness " + data("ghz.json"));
    EXPECT_EQ(g.code, 2) << g.err;
    EXPECT_NE(g.out.find("witnessed_incompatible"), std::string::npos);
    auto p = run("witness " + data("product.json"));
    EXPECT_EQ(p.code, 0) << p.err;
    auto m = run("witness " + data("malformed.json"));
    EXPECT_EQ(m.code, 1);
    EXPECT_NE(m.err.find("ParseError"), std::string::npos);
    auto missing = run("witness /nonexistent.json");
    EXPECT_EQ(missing.code, 1);
    EXPECT_NE(missing.err.find("IoError"), std::string::npos);
    auto d = run("witness " + data("ghz_distn.json"));
    EXPECT_EQ(d.code, 2);
    EXPECT_NE(d.out.find("(0,0,1)"), std::string::npos);
}

TEST(CliWitness, JsonCutAndTolerance) {
    auto r = run("witness " + data("tri_bell_090.json") + " --format json --cut AB");
    EXPECT_EQ(r.code, 2);
    auto j = json::parse(r.out);
    ASSERT_EQ(j["cuts"].size(), 1U);
    EXPECT_EQ(j["cuts"][0]["cut"], "AB");
    EXPECT_NEAR(j["cuts"][0]["min_eigenvalue"].get<double>(), -0.0529889, 1e-5);
    EXPECT_EQ(j["cuts"][0]["eigenvalues"].size(), 8U);
    EXPECT_EQ(j["verdict"], "witnessed_incompatible");
    auto loose = run("witness " + data("tri_bell_090.json") + " --tol 0.1");
    EXPECT_EQ(loose.code, 0);
}

TEST(CliSweep, WernerGhzThreshold) {
    auto r = run("sweep werner_ghz 0:1:41");
    ASSERT_EQ(r.code, 0) << r.err;
    auto rows = csv_rows(r.out);
    ASSERT_EQ(rows.size(), 42U);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"p", "min_eig_closed_form", "min_eig_assembled", "witnessed"}));
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double p = std::stod(rows[i][0]);
        if (p < 0.5 - 1e-9) EXPECT_EQ(rows[i][3], "false") << p;
        if (p > 0.5 + 1e-9) EXPECT_EQ(rows[i][3], "true") << p;
        EXPECT_NEAR(std::stod(rows[i][1]), std::stod(rows[i][2]), 1e-12);
    }
}

TEST(CliSweep, TothAcinNegativeExceptZero) {
    auto r = run("sweep toth_acin -1:1:21");
    ASSERT_EQ(r.code, 0) << r.err;
    auto rows = csv_rows(r.out);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double c = std::stod(rows[i][0]);
        const double m = std::stod(rows[i][2]);
        if (std::abs(c) < 1e-12) {
            EXPECT_GE(m, -1e-12);
        } else {
            EXPECT_LT(m, 0.0) << c;
        }
    }
}

TEST(CliSweep, TriBellCrossingSvgAndDeterminism) {
    const auto dir = scratch();
    const auto csv1 = (dir / "a.csv").string(), csv2 = (dir / "b.csv").string(), svg = (dir / "a.svg").string();
    auto r1 = run("sweep tri_bell 0.58:0.99:50 --restarts 8 --seed 17 --out " + csv1 + " --svg " + svg);
    ASSERT_EQ(r1.code, 0) << r1.err;
    auto r2 = run("sweep tri_bell 0.58:0.99:50 --restarts 8 --out " + csv2, "QINFLATE_SEED=17");
    ASSERT_EQ(r2.code, 0) << r2.err;
    EXPECT_EQ(slurp(csv1), slurp(csv2));
    EXPECT_EQ(slurp(svg).rfind("<svg", 0), 0U);
    auto rows = csv_rows(slurp(csv1));
    ASSERT_EQ(rows.size(), 51U);
    double last_negative = 0.0, first_positive = 1.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double a = std::stod(rows[i][0]), iota = std::stod(rows[i][2]);
        if (iota < 0) last_negative = std::max(last_negative, a);
        if (iota > 0) first_positive = std::min(first_positive, a);
        EXPECT_LE(iota, std::stod(rows[i][3]) + 1e-6);
    }
    EXPECT_NEAR(0.5 * (last_negative + first_positive), 0.82, 0.02);
    EXPECT_EQ(run("sweep nothing 0:1:3").code, 1);
    EXPECT_EQ(run("sweep werner_w 0:1:3 --out /nonexistent/dir/x.csv").code, 1);
}

TEST(CliDag, CheckInjectablesAndErrors) {
    auto c = run("dag check " + data("ab_cut.dag") + " " + data("triangle.dag"));
    ASSERT_EQ(c.code, 0) << c.err;
    EXPECT_NE(c.out.find("inflation: yes, nonfanout: yes"), std::string::npos);
    EXPECT_NE(c.out.find("(A1,B1)"), std::string::npos);
    auto i = run("dag injectables " + data("ab_cut.dag") + " " + data("triangle.dag"));
    ASSERT_EQ(i.code, 0) << i.err;
    for (const char *s : {"{A1}", "{B1}", "{C1}", "{A1,C1}", "{B1,C1}"}) {
        EXPECT_NE(i.out.find(s), std::string::npos) << s;
    }
    EXPECT_EQ(i.out.find("{A1,B1}"), std::string::npos);
    auto cyc = run("dag check " + data("cyclic.dag") + " " + data("triangle.dag"));
    EXPECT_EQ(cyc.code, 1);
    EXPECT_NE(cyc.err.find("CyclicGraph"), std::string::npos);
    auto j = run("dag check " + data("ab_cut.dag") + " " + data("triangle.dag") + " --format json");
    EXPECT_TRUE(json::parse(j.out)["nonfanout"].get<bool>());
}

TEST(CliReproduce, SingleClaimsAndUnknown) {
    auto r = run("reproduce AC-3");
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_NE(r.out.find("AC-3 PASS"), std::string::npos);
    auto j = run("reproduce AC-1 --format json");
    EXPECT_EQ(j.code, 0);
    auto rep = json::parse(j.out);
    for (const auto &c : rep[0]["checks"]) {
        if (c.contains("expected")) {
            EXPECT_TRUE(c.contains("recomputed"));
            EXPECT_TRUE(c.contains("delta"));
        }
    }
    EXPECT_EQ(run("reproduce AC-99").code, 1);
}

TEST(CliExport, RoundTripThroughWitness) {
    const auto dir = scratch();
    const auto fam = (dir / "fam.json").string(), exp = (dir / "exp.json").string();
    ASSERT_EQ(run("export werner_ghz --param p=0.75 --out " + fam).code, 0);
    ASSERT_EQ(run("export werner_ghz --param p=0.75 --expand --out " + exp).code, 0);
    const auto a = qinflate::load_state_file(fam);
    const auto b = qinflate::load_state_file(exp);
    EXPECT_EQ(b.kind, qinflate::StateKind::Mixed);
    EXPECT_LT(qinflate::max_abs_diff(qinflate::resolve(a).quantum->matrix(), qinflate::resolve(b).quantum->matrix()),
              1e-15);
    EXPECT_EQ(qinflate::dump_state_file(qinflate::load_state_file(exp)), slurp(exp));
    EXPECT_EQ(run("witness " + exp).code, 2);
    EXPECT_EQ(run("export werner_ghz --param p").code, 1);
    EXPECT_EQ(run("export werner_ghz --param p=2").code, 1);
}
