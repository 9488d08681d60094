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
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qinflate/cli.hpp"
#include "qinflate/error.hpp"

namespace qc = qinflate::cli;

int main(int argc, char **argv) {
    CLI::App app{"qinflate: triangle-network incompatibility witnesses"};
    app.require_subcommand(1);

    std::string cut = "all";
    std::string format = "text";
    std::optional<std::uint64_t> seed;
    std::optional<double> tol;
    int restarts = 64;
    unsigned threads = 0;
    std::string out, svg;

    const auto add_common = [&](CLI::App *sub) {
        sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--seed", seed, "RNG seed (falls back to QINFLATE_SEED)");
        sub->add_option("--restarts", restarts, "product-search restarts")->check(CLI::PositiveNumber);
        sub->add_option("--threads", threads, "worker threads, 0 for all cores");
        sub->add_option("--out", out, "write output here instead of stdout");
    };

    std::string state_path;
    auto *witness = app.add_subcommand("witness", "cut witnesses of a state file");
    witness->add_option("state", state_path, "JSON state file")->required();
    witness->add_option("--cut", cut, "AB, AC, BC or all");
    witness->add_option("--tol", tol, "verdict fires when the minimum is below -tol (default 1e-8)");
    add_common(witness);

    std::string family, grid;
    auto *sweep = app.add_subcommand("sweep", "parameter sweep to CSV");
    sweep->add_option("family", family, "tri_bell, werner_ghz, werner_w or toth_acin")->required();
    sweep->add_option("grid", grid, "a:b:n")->required();
    sweep->add_option("--svg", svg, "also write a line plot");
    sweep->add_option("--tol", tol, "threshold for the witnessed column");
    add_common(sweep);

    std::string mode;
    std::vector<std::string> dag_paths;
    auto *dag = app.add_subcommand("dag", "inflation checks on DAG files");
    dag->add_option("mode", mode, "check, injectables or show")->required();
    dag->add_option("paths", dag_paths, "inflation then original")->required();
    add_common(dag);

    std::vector<std::string> claims;
    auto *repro = app.add_subcommand("reproduce", "recompute the acceptance claims");
    repro->add_option("claims", claims, "AC-n ids or all")->required();
    add_common(repro);

    std::string export_family;
    std::vector<std::string> params;
    bool expand = false;
    auto *exp = app.add_subcommand("export", "write a state file for a named family");
    exp->add_option("family", export_family, "family name")->required();
    exp->add_option("--param", params, "key=value, repeatable");
    exp->add_flag("--expand", expand, "write the resolved state instead of the family reference");
    add_common(exp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : qc::kExitError;
    }

    qc::Options opts;
    try {
        opts.cuts = qc::parse_cut_selection(cut);
        opts.format = format == "json" ? qc::Format::Json : qc::Format::Text;
        opts.seed = qc::resolve_seed(seed);
        if (tol) {
            opts.tol = std::abs(*tol);
        }
        opts.restarts = restarts;
        opts.threads = threads;
        opts.out = out;
        opts.svg = svg;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return qc::kExitError;
    }

    if (*witness) {
        return qc::cmd_witness(state_path, opts, std::cout, std::cerr);
    }
    if (*sweep) {
        return qc::cmd_sweep(family, grid, opts, std::cout, std::cerr);
    }
    if (*dag) {
        return qc::cmd_dag(mode, dag_paths, opts, std::cout, std::cerr);
    }
    if (*repro) {
        const bool seed_given = seed.has_value() || std::getenv("QINFLATE_SEED") != nullptr;
        return qc::cmd_reproduce(claims, opts, seed_given, std::cout, std::cerr);
    }
    std::map<std::string, double> kv;
    for (const auto &p : params) {
        const auto eq = p.find('=');
        try {
            if (eq == std::string::npos) {
                throw std::invalid_argument("missing '='");
            }
            std::size_t used = 0;
            const double v = std::stod(p.substr(eq + 1), &used);
            if (used != p.size() - eq - 1) {
                throw std::invalid_argument("trailing characters");
            }
            kv[p.substr(0, eq)] = v;
        } catch (const std::exception &) {
            std::cerr << "error: --param expects key=number, got '" << p << "'\n";
            return qc::kExitError;
        }
    }
    return qc::cmd_export(export_family, kv, expand, opts, std::cout, std::cerr);
}
