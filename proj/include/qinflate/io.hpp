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
 * @file io.hpp
 * JSON state files.
 *
 * {"layout": [{"label": "A", "dim": 2}, ...],
 *  "kind": "pure" | "mixed" | "distribution" | "family",
 *  "data": ...}
 *
 * pure: amplitudes as [re, im] pairs. mixed: rows of [re, im] pairs.
 * distribution: flat row-major probabilities. family: {"family_name", "params"}.
 */
#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qinflate/states.hpp"

namespace qinflate {

enum class StateKind { Pure, Mixed, Distribution, Family };

struct FamilySpec {
    std::string name;
    std::map<std::string, double> params;
    bool operator==(const FamilySpec &) const = default;
};

struct StateFile {
    SubsystemLayout layout;
    StateKind kind = StateKind::Pure;
    std::variant<CVec, CMat, std::vector<double>, FamilySpec> data;
};

bool operator==(const StateFile &a, const StateFile &b);

/// Quantum or classical object a state file stands for.
struct ResolvedState {
    std::optional<DensityMatrix> quantum;
    std::optional<Distribution> classical;
};

/// Families: ghz, w, product, omega, tri_bell {t | amplitude}, werner_ghz {p}, werner_w {p},
/// toth_acin {c}, qutrit_pure {p0, p1}, qutrit_mixed {p0, p1},
/// prop5 {a0, a4, a5, a6, a7, phi0}, ghz_distn, w_distn.
ResolvedState resolve_family(const FamilySpec &spec);
std::vector<std::string> family_names();

/// Throws ParseError for malformed JSON, or the domain error naming the violated invariant.
StateFile parse_state_file(const std::string &text);
StateFile load_state_file(const std::string &path);
std::string dump_state_file(const StateFile &f);
void save_state_file(const StateFile &f, const std::string &path);

/// Validates the payload against the domain-type invariants.
ResolvedState resolve(const StateFile &f);

StateFile state_file_from(const PureState &psi);
StateFile state_file_from(const DensityMatrix &rho);
StateFile state_file_from(const Distribution &p);
StateFile state_file_from(const FamilySpec &spec);

} // namespace qinflate
