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
#include "qinflate/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qinflate/error.hpp"
#include "qinflate/witness.hpp"

namespace qinflate {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string &msg) { throw Error(ErrorCode::ParseError, msg); }

cplx to_complex(const json &j, const std::string &where) {
    if (j.is_number()) {
        return {j.get<double>(), 0.0};
    }
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return {j[0].get<double>(), j[1].get<double>()};
    }
    parse_fail(where + ": expected a number or an [re, im] pair");
}

json from_complex(cplx z) { return json::array({z.real(), z.imag()}); }

std::string kind_name(StateKind k) {
    switch (k) {
    case StateKind::Pure: return "pure";
    case StateKind::Mixed: return "mixed";
    case StateKind::Distribution: return "distribution";
    case StateKind::Family: return "family";
    }
    return "?";
}

double param(const FamilySpec &s, const std::string &key) {
    auto it = s.params.find(key);
    if (it == s.params.end()) {
        throw Error(ErrorCode::InvalidParameter, "family '" + s.name + "' needs parameter '" + key + "'");
    }
    return it->second;
}

ResolvedState quantum(const DensityMatrix &rho) { return {rho, std::nullopt}; }

} // namespace

bool operator==(const StateFile &a, const StateFile &b) {
    if (!(a.layout == b.layout) || a.kind != b.kind || a.data.index() != b.data.index()) {
        return false;
    }
    switch (a.data.index()) {
    case 0: return std::get<CVec>(a.data) == std::get<CVec>(b.data);
    case 1: return std::get<CMat>(a.data) == std::get<CMat>(b.data);
    case 2: return std::get<std::vector<double>>(a.data) == std::get<std::vector<double>>(b.data);
    default: return std::get<FamilySpec>(a.data) == std::get<FamilySpec>(b.data);
    }
}

std::vector<std::string> family_names() {
    return {"ghz",        "w",           "product",      "omega", "tri_bell",  "werner_ghz", "werner_w",
            "toth_acin",  "qutrit_pure", "qutrit_mixed", "prop5", "ghz_distn", "w_distn"};
}

ResolvedState resolve_family(const FamilySpec &s) {
    const auto &n = s.name;
    if (n == "ghz") return quantum(ghz_state().density());
    if (n == "w") return quantum(w_state().density());
    if (n == "product") {
        CVec v = CVec::Zero(8);
        v(0) = 1.0;
        return quantum(PureState(SubsystemLayout::uniform(3, 2), v).density());
    }
    if (n == "omega") return quantum(omega_example());
    if (n == "tri_bell") {
        if (s.params.count("amplitude") != 0) {
            return quantum(tri_bell_amplitude(param(s, "amplitude")).density());
        }
        return quantum(tri_bell(param(s, "t")).density());
    }
    if (n == "werner_ghz") return quantum(white_noise_mixture(ghz_state(), param(s, "p")));
    if (n == "werner_w") return quantum(white_noise_mixture(w_state(), param(s, "p")));
    if (n == "toth_acin") return quantum(toth_acin(param(s, "c")));
    if (n == "qutrit_pure") return quantum(qutrit_pair(param(s, "p0"), param(s, "p1")).first.density());
    if (n == "qutrit_mixed") return quantum(qutrit_pair(param(s, "p0"), param(s, "p1")).second);
    if (n == "prop5") {
        Prop5Params p{param(s, "a0"), param(s, "a4"), param(s, "a5"), param(s, "a6"), param(s, "a7"),
                      s.params.count("phi0") != 0 ? param(s, "phi0") : 0.0};
        return quantum(prop5_state(p).density());
    }
    if (n == "ghz_distn") return {std::nullopt, ghz_distn()};
    if (n == "w_distn") return {std::nullopt, w_distn()};
    throw Error(ErrorCode::InvalidParameter, "unknown family '" + n + "'");
}

ResolvedState resolve(const StateFile &f) {
    switch (f.kind) {
    case StateKind::Pure: return quantum(PureState(f.layout, std::get<CVec>(f.data)).density());
    case StateKind::Mixed: return quantum(DensityMatrix(HermitianOperator(f.layout, std::get<CMat>(f.data))));
    case StateKind::Distribution: return {std::nullopt, Distribution(f.layout, std::get<std::vector<double>>(f.data))};
    case StateKind::Family: {
        auto r = resolve_family(std::get<FamilySpec>(f.data));
        const auto &actual = r.quantum ? r.quantum->layout() : r.classical->layout();
        if (f.layout.size() != 0 && !(f.layout == actual)) {
            throw Error(ErrorCode::DimensionError, "layout does not match family '" +
                                                       std::get<FamilySpec>(f.data).name + "'");
        }
        return r;
    }
    }
    throw Error(ErrorCode::ParseError, "unknown state kind");
}

StateFile parse_state_file(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        parse_fail(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) {
        parse_fail("state file must be a JSON object");
    }
    StateFile f;
    if (!j.contains("kind") || !j["kind"].is_string()) {
        parse_fail("missing string field 'kind'");
    }
    const auto kind = j["kind"].get<std::string>();
    if (kind == "pure") {
        f.kind = StateKind::Pure;
    } else if (kind == "mixed") {
        f.kind = StateKind::Mixed;
    } else if (kind == "distribution") {
        f.kind = StateKind::Distribution;
    } else if (kind == "family") {
        f.kind = StateKind::Family;
    } else {
        parse_fail("kind must be pure, mixed, distribution or family; got '" + kind + "'");
    }
    if (j.contains("layout")) {
        if (!j["layout"].is_array()) {
            parse_fail("'layout' must be an array of {label, dim}");
        }
        std::vector<std::string> labels;
        std::vector<std::size_t> dims;
        for (const auto &e : j["layout"]) {
            if (!e.is_object() || !e.contains("label") || !e["label"].is_string() || !e.contains("dim") ||
                !e["dim"].is_number_integer() || e["dim"].get<long long>() < 1) {
                parse_fail("layout entries need a string 'label' and a positive integer 'dim'");
            }
            labels.push_back(e["label"].get<std::string>());
            dims.push_back(e["dim"].get<std::size_t>());
        }
        if (!labels.empty()) {
            f.layout = SubsystemLayout(labels, dims);
        }
    }
    if (f.kind != StateKind::Family && f.layout.size() == 0) {
        parse_fail("'layout' is required for kind '" + kind + "'");
    }
    if (!j.contains("data")) {
        parse_fail("missing field 'data'");
    }
    const auto &d = j["data"];
    switch (f.kind) {
    case StateKind::Pure: {
        if (!d.is_array()) {
            parse_fail("pure data must be an array of amplitudes");
        }
        CVec v(static_cast<Eigen::Index>(d.size()));
        for (std::size_t i = 0; i < d.size(); ++i) {
            v(static_cast<Eigen::Index>(i)) = to_complex(d[i], "amplitude " + std::to_string(i));
        }
        f.data = v;
        break;
    }
    case StateKind::Mixed: {
        if (!d.is_array()) {
            parse_fail("mixed data must be an array of rows");
        }
        const auto n = static_cast<Eigen::Index>(d.size());
        CMat m(n, n);
        for (Eigen::Index r = 0; r < n; ++r) {
            const auto &row = d[static_cast<std::size_t>(r)];
            if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
                parse_fail("mixed data must be a square matrix; row " + std::to_string(r) + " has the wrong length");
            }
            for (Eigen::Index c = 0; c < n; ++c) {
                m(r, c) = to_complex(row[static_cast<std::size_t>(c)],
                                     "entry (" + std::to_string(r) + ", " + std::to_string(c) + ")");
            }
        }
        f.data = m;
        break;
    }
    case StateKind::Distribution: {
        if (!d.is_array()) {
            parse_fail("distribution data must be a flat array of probabilities");
        }
        std::vector<double> p;
        for (const auto &e : d) {
            if (!e.is_number()) {
                parse_fail("probabilities must be numbers");
            }
            p.push_back(e.get<double>());
        }
        f.data = p;
        break;
    }
    case StateKind::Family: {
        if (!d.is_object() || !d.contains("family_name") || !d["family_name"].is_string()) {
            parse_fail("family data needs a string 'family_name'");
        }
        FamilySpec s{d["family_name"].get<std::string>(), {}};
        if (d.contains("params")) {
            if (!d["params"].is_object()) {
                parse_fail("'params' must be an object of numbers");
            }
            for (const auto &[k, v] : d["params"].items()) {
                if (!v.is_number()) {
                    parse_fail("parameter '" + k + "' must be a number");
                }
                s.params[k] = v.get<double>();
            }
        }
        f.data = s;
        break;
    }
    }
    (void)resolve(f);
    return f;
}

StateFile load_state_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_state_file(ss.str());
}

std::string dump_state_file(const StateFile &f) {
    json j;
    json layout = json::array();
    for (std::size_t i = 0; i < f.layout.size(); ++i) {
        layout.push_back({{"label", f.layout.labels()[i]}, {"dim", f.layout.dims()[i]}});
    }
    j["layout"] = layout;
    j["kind"] = kind_name(f.kind);
    switch (f.kind) {
    case StateKind::Pure: {
        json a = json::array();
        const auto &v = std::get<CVec>(f.data);
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            a.push_back(from_complex(v(i)));
        }
        j["data"] = a;
        break;
    }
    case StateKind::Mixed: {
        json rows = json::array();
        const auto &m = std::get<CMat>(f.data);
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            json row = json::array();
            for (Eigen::Index c = 0; c < m.cols(); ++c) {
                row.push_back(from_complex(m(r, c)));
            }
            rows.push_back(row);
        }
        j["data"] = rows;
        break;
    }
    case StateKind::Distribution: j["data"] = std::get<std::vector<double>>(f.data); break;
    case StateKind::Family: {
        const auto &s = std::get<FamilySpec>(f.data);
        j["data"] = {{"family_name", s.name}, {"params", s.params}};
        break;
    }
    }
    return j.dump(2) + "\n";
}

void save_state_file(const StateFile &f, const std::string &path) {
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
    }
    out << dump_state_file(f);
    if (!out) {
        throw Error(ErrorCode::IoError, "write to '" + path + "' failed");
    }
}

StateFile state_file_from(const PureState &psi) { return {psi.layout(), StateKind::Pure, psi.amplitudes()}; }

StateFile state_file_from(const DensityMatrix &rho) { return {rho.layout(), StateKind::Mixed, rho.matrix()}; }

StateFile state_file_from(const Distribution &p) { return {p.layout(), StateKind::Distribution, p.probs()}; }

StateFile state_file_from(const FamilySpec &spec) {
    auto r = resolve_family(spec);
    return {r.quantum ? r.quantum->layout() : r.classical->layout(), StateKind::Family, spec};
}

} // namespace qinflate
