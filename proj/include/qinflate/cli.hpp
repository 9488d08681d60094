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
/**
 * @file cli.hpp
 * Command implementations behind the qinflate executable.
 *
 * Every command returns its exit code and never throws: 0 means inconclusive or
 * success, 2 means some witness fired, 1 means an error was reported on `err`.
 */
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace qinflate::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitWitnessed = 2;

inline constexpr std::uint64_t kDefaultSeed = 0x5eedULL;

enum class Format { Text, Json };

struct Options {
    std::vector<std::string> cuts{"AB", "AC", "BC"};
    Format format = Format::Text;
    std::uint64_t seed = kDefaultSeed;
    double tol = 1e-8;
    int restarts = 64;
    unsigned threads = 0;
    std::string out; ///< empty writes to the output stream
    std::string svg;
};

/// Explicit value wins, then QINFLATE_SEED, then `fallback`. Throws InvalidParameter
/// when the environment value is not an unsigned integer.
std::uint64_t resolve_seed(const std::optional<std::uint64_t> &explicit_seed, std::uint64_t fallback = kDefaultSeed);

/// "AB", "AC", "BC" or "all" (case-insensitive). Throws InvalidParameter.
std::vector<std::string> parse_cut_selection(const std::string &s);

/// "a:b:n" gives n evenly spaced points from a to b inclusive. Throws InvalidParameter.
std::vector<double> parse_grid(const std::string &spec);

struct Series {
    std::string name;
    std::vector<double> x;
    std::vector<double> y;
};

/// Minimal line chart: axes, ticks, one polyline per series, a dashed zero line and a legend.
std::string render_svg(const std::string &title, const std::string &xlabel, const std::string &ylabel,
                       const std::vector<Series> &series);

int cmd_witness(const std::string &state_path, const Options &opts, std::ostream &out, std::ostream &err);

/// family: tri_bell (amplitude), werner_ghz (p), werner_w (p) or toth_acin (c).
int cmd_sweep(const std::string &family, const std::string &grid, const Options &opts, std::ostream &out,
              std::ostream &err);

/// mode "check" takes (inflation, original); "injectables" takes the same pair;
/// "show" takes any number of files and prints each one normalised.
int cmd_dag(const std::string &mode, const std::vector<std::string> &paths, const Options &opts, std::ostream &out,
            std::ostream &err);

/// ids may contain "all". Exit 0 iff every gating check passes.
int cmd_reproduce(const std::vector<std::string> &ids, const Options &opts, bool seed_given, std::ostream &out,
                  std::ostream &err);

/// Writes a state file for a named family. With `expand`, the resolved matrix,
/// amplitudes or distribution are written instead of the family reference.
int cmd_export(const std::string &family, const std::map<std::string, double> &params, bool expand,
               const Options &opts, std::ostream &out, std::ostream &err);

} // namespace qinflate::cli
