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
 * @file reproduce.hpp
 * Recomputes every published number and compares it with the expected value.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qinflate {

/// One comparison. Boolean checks carry recomputed = 1 or 0 and no expected value.
struct Check {
    std::string name;
    std::optional<double> expected;
    double recomputed = 0.0;
    double delta = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string note;
    /// Reported for context only; does not affect the claim verdict.
    bool informational = false;
};

struct ClaimResult {
    std::string id;
    std::string title;
    std::vector<Check> checks;
    double seconds = 0.0;
    [[nodiscard]] bool pass() const;
};

struct ReproduceOptions {
    std::uint64_t seed = 20240611ULL;
    int restarts = 64;
    unsigned threads = 0;
};

std::vector<std::string> claim_ids();
/// Throws InvalidParameter for an unknown id.
ClaimResult run_claim(const std::string &id, const ReproduceOptions &opts = {});
std::vector<ClaimResult> run_all(const ReproduceOptions &opts = {});

/// Printed 8x8 I_AB matrix for amplitude 0.9, rows as published.
const std::vector<std::vector<double>> &published_tri_bell_matrix();

} // namespace qinflate
