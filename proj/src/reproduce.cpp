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
#include "qinflate/reproduce.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <random>
#include <set>

#include "qinflate/dag.hpp"
#include "qinflate/error.hpp"
#include "qinflate/opt.hpp"
#include "qinflate/witness.hpp"

namespace qinflate {

namespace {

Check approx(std::string name, double expected, double got, double tol, std::string note = {}) {
    Check c;
    c.name = std::move(name);
    c.expected = expected;
    c.recomputed = got;
    c.delta = std::abs(got - expected);
    c.tolerance = tol;
    c.pass = c.delta <= tol;
    c.note = std::move(note);
    return c;
}

Check holds(std::string name, bool ok, double got, std::string note = {}) {
    Check c;
    c.name = std::move(name);
    c.recomputed = got;
    c.pass = ok;
    c.note = std::move(note);
    return c;
}

const Cut kAB{"A", "B"};

double max_entry_diff(const CMat &m, const std::vector<std::vector<double>> &p, bool flip_bc) {
    double worst = 0.0;
    for (std::size_t r = 0; r < 8; ++r) {
        for (std::size_t c = 0; c < 8; ++c) {
            const std::size_t rr = flip_bc ? (r ^ 3U) : r;
            const std::size_t cc = flip_bc ? (c ^ 3U) : c;
            worst = std::max(worst, std::abs(m(static_cast<Eigen::Index>(rr), static_cast<Eigen::Index>(cc)) - p[r][c]));
        }
    }
    return worst;
}

ClaimResult ac1(const ReproduceOptions &) {
    ClaimResult r{"AC-1", "I_AB of the tri-Bell state with amplitude 0.9", {}, 0.0};
    auto w = cut_witness_quantum(tri_bell_amplitude(0.9).density(), kAB);
    r.checks.push_back(approx("min eigenvalue", -0.0529889, w.min_eigenvalue(), 1e-5));
    auto cl = cluster_eigenvalues(w.spectrum().eigenvalues);
    r.checks.push_back(approx("multiplicity of min eigenvalue", 2.0, cl.front().multiplicity, 0.0));
    const auto &pub = published_tri_bell_matrix();
    const double flipped = max_entry_diff(w.op().matrix(), pub, true);
    r.checks.push_back(approx("printed matrix, B and C bits relabelled", 0.0, flipped, 1e-5,
                              "published rows are indexed with B and C flipped (X_B X_C)"));
    Check direct = approx("printed matrix, literal basis", 0.0, max_entry_diff(w.op().matrix(), pub, false), 1e-5,
                          "expected to differ; see relabelled comparison");
    direct.informational = true;
    r.checks.push_back(direct);
    return r;
}

ClaimResult ac2(const ReproduceOptions &) {
    ClaimResult r{"AC-2", "classical cut inequality on GHZ and W distributions", {}, 0.0};
    auto g = cut_witness_classical(ghz_distn(), kAB);
    r.checks.push_back(approx("GHZ I_AB at (0,0,1)", -0.25, g.at({0, 0, 1}), 1e-12));
    for (const auto &cut : all_cuts()) {
        auto t = cut_witness_classical(w_distn(), cut);
        const double lo = *std::min_element(t.values.begin(), t.values.end());
        r.checks.push_back(holds("W min entry, cut " + cut.name() + " >= 0", lo >= 0.0, lo));
    }
    return r;
}

ClaimResult ac3(const ReproduceOptions &) {
    ClaimResult r{"AC-3", "mixed example omega: spectrum and fidelities", {}, 0.0};
    auto omega = omega_example();
    auto w = cut_witness_quantum(omega, kAB);
    auto cl = cluster_eigenvalues(w.spectrum().eigenvalues);
    const std::array<double, 4> expected{-0.0195072, 0.0351218, 0.195995, 0.78839};
    r.checks.push_back(approx("cluster count", 4.0, static_cast<double>(cl.size()), 0.0));
    for (std::size_t i = 0; i < expected.size() && i < cl.size(); ++i) {
        r.checks.push_back(approx("eigenvalue " + std::to_string(i), expected[i], cl[i].value, 1e-5));
        r.checks.push_back(approx("multiplicity " + std::to_string(i), 2.0, cl[i].multiplicity, 0.0));
    }
    auto f = fidelity_witness(omega);
    r.checks.push_back(approx("GHZ fidelity", 0.209, f.f_ghz, 1e-6));
    r.checks.push_back(approx("W fidelity", 0.233333, f.f_w, 1e-6));
    r.checks.push_back(holds("not flagged by fidelity bounds", !f.flagged, f.flagged ? 1.0 : 0.0));
    return r;
}

ClaimResult ac4(const ReproduceOptions &) {
    ClaimResult r{"AC-4", "W state measured in the X basis", {}, 0.0};
    CMat h(2, 2);
    h << 1.0, 1.0, 1.0, -1.0;
    h /= std::sqrt(2.0);
    auto p = measure_local(w_state().density(), LocalBasis({h, h, h}));
    auto t = cut_witness_classical(p, kAB);
    r.checks.push_back(approx("I_AB at (+,+,-)", -1.0 / 12.0, t.at({0, 0, 1}), 1e-10));
    return r;
}

ClaimResult ac5(const ReproduceOptions &) {
    ClaimResult r{"AC-5", "white-noise thresholds", {}, 0.0};
    auto th = werner_thresholds();
    r.checks.push_back(approx("GHZ threshold", 0.5, th.ghz, 1e-6));
    r.checks.push_back(approx("W threshold", 0.627, th.w, 1e-3));
    double worst_ghz = 0.0, worst_w = 0.0;
    bool sign_ok = true;
    for (int k = 0; k <= 40; ++k) {
        const double p = k / 40.0;
        const auto eg = werner_ghz_eigs(p);
        const auto ew = werner_w_eigs(p);
        for (const auto &cut : all_cuts()) {
            auto wg = cut_witness_quantum(white_noise_mixture(ghz_state(), p), cut);
            auto ww = cut_witness_quantum(white_noise_mixture(w_state(), p), cut);
            for (std::size_t i = 0; i < 8; ++i) {
                worst_ghz = std::max(worst_ghz, std::abs(wg.spectrum().eigenvalues(static_cast<Eigen::Index>(i)) - eg[i]));
                worst_w = std::max(worst_w, std::abs(ww.spectrum().eigenvalues(static_cast<Eigen::Index>(i)) - ew[i]));
            }
            const double mg = wg.min_eigenvalue(), mw = ww.min_eigenvalue();
            if ((p < th.ghz - 1e-9 && mg < -1e-12) || (p > th.ghz + 1e-9 && mg >= 0.0)) {
                sign_ok = false;
            }
            if ((p < th.w - 1e-9 && mw < -1e-12) || (p > th.w + 1e-9 && mw >= 0.0)) {
                sign_ok = false;
            }
        }
    }
    r.checks.push_back(approx("GHZ closed form vs eigensolver (41-point grid, all cuts)", 0.0, worst_ghz, 1e-9));
    r.checks.push_back(approx("W closed form vs eigensolver (41-point grid, all cuts)", 0.0, worst_w, 1e-9));
    r.checks.push_back(holds("grid sign pattern agrees with thresholds", sign_ok, sign_ok ? 1.0 : 0.0));
    return r;
}

ClaimResult ac6(const ReproduceOptions &) {
    ClaimResult r{"AC-6", "Toth-Acin family", {}, 0.0};
    for (double c : {-1.0, -0.5, 0.1, 0.5, 1.0}) {
        auto w = cut_witness_quantum(toth_acin_operator(c), kAB);
        auto cf = toth_acin_eigs(c);
        double worst = 0.0;
        for (std::size_t i = 0; i < 8; ++i) {
            worst = std::max(worst, std::abs(w.spectrum().eigenvalues(static_cast<Eigen::Index>(i)) - cf[i]));
        }
        char label[64];
        std::snprintf(label, sizeof label, "c = %+.1f closed form vs eigensolver", c);
        r.checks.push_back(approx(label, 0.0, worst, 1e-9));
        std::snprintf(label, sizeof label, "c = %+.1f min eigenvalue < 0", c);
        r.checks.push_back(holds(label, w.min_eigenvalue() < -kVerdictTol, w.min_eigenvalue()));
    }
    auto w0 = cut_witness_quantum(toth_acin(0.0), kAB);
    r.checks.push_back(holds("c = 0 spectrum non-negative", w0.min_eigenvalue() >= -1e-12, w0.min_eigenvalue()));
    return r;
}

ClaimResult ac7(const ReproduceOptions &) {
    ClaimResult r{"AC-7", "three-qutrit pair", {}, 0.0};
    bool all_match = true;
    int points = 0;
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            auto rep = qutrit_witnesses(0.125 * i, 0.125 * j);
            all_match = all_match && rep.mixed_matches_expected;
            ++points;
        }
    }
    r.checks.push_back(holds("mixed spectra {7/9 x3, 4/9 x12, 1/9 x12} on 5x5 grid", all_match,
                             static_cast<double>(points)));
    auto rep = qutrit_witnesses(0.5, 0.25);
    double closest = 1e300;
    for (const auto &c : rep.cuts) {
        for (Eigen::Index k = 0; k < c.pure.size(); ++k) {
            if (std::abs(c.pure(k) + 0.01348) < std::abs(closest + 0.01348)) {
                closest = c.pure(k);
            }
        }
    }
    r.checks.push_back(approx("pure state eigenvalue at p0 = 2 p1 = 0.5", -0.01348, closest, 1e-4));
    return r;
}

ClaimResult ac8(const ReproduceOptions &opts) {
    ClaimResult r{"AC-8", "2x2x4 closed form for <010|I_AC|010>", {}, 0.0};
    std::mt19937_64 rng(opts.seed ^ 0x8ULL);
    std::normal_distribution<double> g(0.0, 1.0);
    std::uniform_real_distribution<double> ph(0.0, 2.0 * std::numbers::pi);
    double worst = 0.0;
    int draws = 0;
    while (draws < 100) {
        std::array<double, 5> a{};
        double n2 = 0.0;
        for (auto &x : a) {
            x = std::abs(g(rng));
            n2 += x * x;
        }
        for (auto &x : a) {
            x /= std::sqrt(n2);
        }
        const double s = a[0] * a[0] + a[1] * a[1];
        if (!(s > 0.0 && s < 1.0)) {
            continue;
        }
        auto res = prop5_check({a[0], a[1], a[2], a[3], a[4], ph(rng)});
        worst = std::max(worst, std::abs(res.closed_form - res.assembled));
        ++draws;
    }
    r.checks.push_back(approx("max |closed form - matrix entry| over 100 draws", 0.0, worst, 1e-9));
    return r;
}

ClaimResult ac9(const ReproduceOptions &opts) {
    ClaimResult r{"AC-9", "PPT relaxation sweep of the tri-Bell family", {}, 0.0};
    std::vector<double> grid;
    for (int k = 0; k < 42; ++k) {
        grid.push_back(0.58 + 0.01 * k);
    }
    SweepOptions so;
    so.restarts = opts.restarts;
    so.seed = opts.seed;
    so.threads = opts.threads;
    auto table = sweep_tri_bell(grid, so);
    r.checks.push_back(holds("sign change of iota_tilde found", table.crossing.has_value(),
                             table.crossing.value_or(std::nan(""))));
    if (table.crossing) {
        r.checks.push_back(approx("crossing amplitude", 0.82, *table.crossing, 0.02));
    }
    double worst_gap = -1e300, worst_viol = 0.0;
    bool converged = true;
    for (const auto &row : table.rows) {
        worst_gap = std::max(worst_gap, row.iota_tilde - row.iota_upper);
        worst_viol = std::max(worst_viol, row.constraint_violation);
        converged = converged && row.converged;
    }
    r.checks.push_back(holds("iota_tilde <= product min + 1e-6 on every grid point", worst_gap <= 1e-6, worst_gap));
    r.checks.push_back(holds("minimizer constraint violation <= 1e-7", worst_viol <= 1e-7, worst_viol));
    r.checks.push_back(holds("ADMM converged on every grid point", converged, converged ? 1.0 : 0.0));
    return r;
}

ClaimResult ac10(const ReproduceOptions &opts) {
    ClaimResult r{"AC-10", "random-state properties", {}, 0.0};
    std::mt19937_64 rng(opts.seed ^ 0x10ULL);
    std::uniform_int_distribution<int> dim(2, 3);

    double worst_hall = 1e300;
    for (int i = 0; i < 1000; ++i) {
        SubsystemLayout lay({"A", "B", "C"}, {static_cast<std::size_t>(dim(rng)), static_cast<std::size_t>(dim(rng)),
                                              static_cast<std::size_t>(dim(rng))});
        auto rho = random_density_matrix(lay, rng);
        worst_hall = std::min(worst_hall, hall_delta(marginals_of(rho)).min_eigenvalue());
    }
    r.checks.push_back(holds("Hall: min eigenvalue of Delta >= -1e-9 (1000 states)", worst_hall >= -1e-9, worst_hall));

    const auto q3 = SubsystemLayout::uniform(3, 2);
    const auto cuts = all_cuts();
    double worst_defect = -1e300;
    int defect_n = 0;
    while (defect_n < 1000) {
        auto rho = random_pure_state(q3, rng).density();
        const auto &cut = cuts[static_cast<std::size_t>(defect_n) % 3];
        auto d = product_defect(rho, cut.x, cut.y);
        if (d.matrix().norm() <= 1e-6) {
            continue;
        }
        worst_defect = std::max(worst_defect, min_eigenvalue(d));
        ++defect_n;
    }
    r.checks.push_back(holds("product defect: rho_x rho_y - rho_xy has a negative eigenvalue (1000 states)",
                             worst_defect < 0.0, worst_defect));

    int n_entangled = 0, witnessed = 0, supp_ker = 0;
    double worst_overlap = 1.0;
    while (n_entangled < 500) {
        auto psi = random_pure_state(q3, rng);
        if (is_biseparable_pure(psi)) {
            continue;
        }
        ++n_entangled;
        auto rho = psi.density();
        bool any_w = false, any_sk = false;
        double best_overlap = 0.0;
        for (const auto &cut : cuts) {
            any_w = any_w || verdict(cut_witness_quantum(rho, cut)).incompatible();
            auto sk = supp_ker_analysis(rho, cut);
            any_sk = any_sk || sk.intersects;
            best_overlap = std::max(best_overlap, sk.overlap);
        }
        witnessed += any_w ? 1 : 0;
        supp_ker += any_sk ? 1 : 0;
        worst_overlap = std::min(worst_overlap, best_overlap);
    }
    r.checks.push_back(holds("entangled states: some cut witnessed incompatible (500 states)", witnessed == n_entangled, witnessed));
    r.checks.push_back(holds("entangled states: supp/ker intersection found for some cut (500 states)", supp_ker == n_entangled,
                             supp_ker,
                             "worst best-cut overlap " + std::to_string(worst_overlap) +
                                 "; fails when every nu-minus has rank 1"));

    double worst_struct = 0.0;
    std::size_t max_rank = 0;
    for (int i = 0; i < 500; ++i) {
        auto psi = random_pure_state(q3, rng);
        auto rho = psi.density();
        auto delta = hall_delta(marginals_of(rho));
        CVec t = tau_apply(psi.amplitudes());
        CMat rhs = rho.matrix() + t * t.adjoint();
        worst_struct = std::max(worst_struct, max_abs_diff(delta.op().matrix(), rhs));
        max_rank = std::max(max_rank, projector_rank(support_projector(delta.op().matrix())));
    }
    r.checks.push_back(holds("tau structure: rank(Delta) <= 2 (500 states)", max_rank <= 2, static_cast<double>(max_rank)));
    r.checks.push_back(approx("tau structure: max |Delta - rho - tau^-1 rho tau|", 0.0, worst_struct, 1e-9));
    return r;
}

// Reachability by Warshall closure, independent of PartitionedDag::ancestral_closure.
struct Reach {
    std::vector<std::string> names;
    std::map<std::string, std::size_t> idx;
    std::vector<std::vector<bool>> r; // r[a][b]: a is an ancestor of b or a == b
};

Reach reach_of(const PartitionedDag &g) {
    Reach out;
    for (const auto &[n, node] : g.nodes()) {
        out.idx[n] = out.names.size();
        out.names.push_back(n);
    }
    const std::size_t n = out.names.size();
    out.r.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        out.r[i][i] = true;
    }
    for (const auto &[p, c] : g.edges()) {
        out.r[out.idx[p]][out.idx[c]] = true;
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (out.r[i][k] && out.r[k][j]) {
                    out.r[i][j] = true;
                }
            }
        }
    }
    return out;
}

NodeSet oracle_ancestors(const Reach &re, const NodeSet &of) {
    NodeSet out;
    for (std::size_t a = 0; a < re.names.size(); ++a) {
        for (const auto &s : of) {
            if (re.r[a][re.idx.at(s)]) {
                out.insert(re.names[a]);
            }
        }
    }
    return out;
}

bool oracle_injectable(const PartitionedDag &gp, const Reach &rp, const PartitionedDag &g, const Reach &rg,
                       const NodeSet &s) {
    const auto anc = oracle_ancestors(rp, s);
    NodeSet bases;
    for (const auto &n : anc) {
        if (!bases.insert(gp.node(n).base_name).second) {
            return false;
        }
    }
    NodeSet image;
    for (const auto &n : s) {
        image.insert(gp.node(n).base_name);
    }
    if (oracle_ancestors(rg, image) != bases) {
        return false;
    }
    std::set<Edge> e1, e2;
    for (const auto &[p, c] : gp.edges()) {
        if (anc.count(p) && anc.count(c)) {
            e1.insert({gp.node(p).base_name, gp.node(c).base_name});
        }
    }
    for (const auto &[p, c] : g.edges()) {
        if (bases.count(p) && bases.count(c)) {
            e2.insert({p, c});
        }
    }
    return e1 == e2;
}

ClaimResult ac11(const ReproduceOptions &) {
    ClaimResult r{"AC-11", "AB-cut inflation of the triangle", {}, 0.0};
    const auto tri = build_triangle();
    const auto ab = build_cut_inflation("A", "B");
    r.checks.push_back(holds("AB-cut is an inflation", is_inflation(ab, tri), 1.0));
    r.checks.push_back(holds("AB-cut is nonfanout", is_nonfanout(ab, tri), 1.0));
    auto rep = injectable_sets(ab, tri);
    std::vector<NodeSet> pairs;
    for (const auto &s : rep.sets) {
        if (s.size() == 2) {
            pairs.push_back(s);
        }
    }
    const std::vector<NodeSet> want{{"A1", "C1"}, {"B1", "C1"}};
    r.checks.push_back(holds("two-node injectables exactly {A1,C1}, {B1,C1}", pairs == want,
                             static_cast<double>(pairs.size())));
    auto ind = marginal_independent_pairs(ab);
    r.checks.push_back(holds("marginal-independent pairs exactly (A1,B1)", ind == std::set<NodePair>{{"A1", "B1"}},
                             static_cast<double>(ind.size())));

    const auto rp = reach_of(ab), rg = reach_of(tri);
    const auto vis_set = ab.visible();
    const std::vector<std::string> vis(vis_set.begin(), vis_set.end());
    std::vector<NodeSet> oracle_sets;
    for (std::size_t mask = 1; mask < (std::size_t{1} << vis.size()); ++mask) {
        NodeSet s;
        for (std::size_t i = 0; i < vis.size(); ++i) {
            if (mask & (std::size_t{1} << i)) {
                s.insert(vis[i]);
            }
        }
        if (oracle_injectable(ab, rp, tri, rg, s)) {
            oracle_sets.push_back(s);
        }
    }
    std::sort(oracle_sets.begin(), oracle_sets.end(), [](const NodeSet &a, const NodeSet &b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    r.checks.push_back(holds("injectable sets agree with brute-force oracle", oracle_sets == rep.sets,
                             static_cast<double>(oracle_sets.size())));
    std::set<NodePair> oracle_ind;
    for (std::size_t i = 0; i < vis.size(); ++i) {
        for (std::size_t j = i + 1; j < vis.size(); ++j) {
            bool common = false;
            for (const auto &l : ab.latent()) {
                if (rp.r[rp.idx.at(l)][rp.idx.at(vis[i])] && rp.r[rp.idx.at(l)][rp.idx.at(vis[j])]) {
                    common = true;
                }
            }
            if (!common) {
                oracle_ind.insert({vis[i], vis[j]});
            }
        }
    }
    r.checks.push_back(holds("independent pairs agree with brute-force oracle", oracle_ind == ind,
                             static_cast<double>(oracle_ind.size())));
    for (const auto &cut : all_cuts()) {
        const bool ok = derive_cut(cut.x, cut.y).valid();
        r.checks.push_back(holds("cut " + cut.name() + " derivation valid", ok, ok ? 1.0 : 0.0));
    }
    return r;
}

ClaimResult ac12(const ReproduceOptions &) {
    ClaimResult r{"AC-12", "cubic of the tri-Bell witness", {}, 0.0};
    double worst_prod = -1e300;
    for (int k = 1; k <= 1000; ++k) {
        const double t = 2.0 + 98.0 * k / 1000.0;
        worst_prod = std::max(worst_prod, tri_bell_cubic_root_product(t));
    }
    r.checks.push_back(holds("product of roots < 0 on (2, 100]", worst_prod < 0.0, worst_prod));
    for (double t : {3.0, 5.0, 10.0, 50.0}) {
        auto w = cut_witness_quantum(tri_bell(t).density(), kAB);
        auto cf = tri_bell_witness_eigs(t);
        double worst = 0.0;
        for (std::size_t i = 0; i < 8; ++i) {
            worst = std::max(worst, std::abs(w.spectrum().eigenvalues(static_cast<Eigen::Index>(i)) - cf[i]));
        }
        r.checks.push_back(approx("t = " + std::to_string(static_cast<int>(t)) + " closed form vs eigensolver", 0.0,
                                  worst, 1e-8));
    }
    return r;
}

using ClaimFn = ClaimResult (*)(const ReproduceOptions &);

const std::vector<std::pair<std::string, ClaimFn>> &registry() {
    static const std::vector<std::pair<std::string, ClaimFn>> reg{
        {"AC-1", ac1}, {"AC-2", ac2}, {"AC-3", ac3},   {"AC-4", ac4},   {"AC-5", ac5},   {"AC-6", ac6},
        {"AC-7", ac7}, {"AC-8", ac8}, {"AC-9", ac9}, {"AC-10", ac10}, {"AC-11", ac11}, {"AC-12", ac12}};
    return reg;
}

} // namespace

bool ClaimResult::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.informational || c.pass; });
}

std::vector<std::string> claim_ids() {
    std::vector<std::string> ids;
    for (const auto &[id, fn] : registry()) {
        ids.push_back(id);
    }
    return ids;
}

ClaimResult run_claim(const std::string &id, const ReproduceOptions &opts) {
    for (const auto &[cid, fn] : registry()) {
        if (cid == id) {
            const auto t0 = std::chrono::steady_clock::now();
            auto res = fn(opts);
            res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            return res;
        }
    }
    throw Error(ErrorCode::InvalidParameter, "unknown claim '" + id + "'");
}

std::vector<ClaimResult> run_all(const ReproduceOptions &opts) {
    std::vector<ClaimResult> out;
    for (const auto &id : claim_ids()) {
        out.push_back(run_claim(id, opts));
    }
    return out;
}

const std::vector<std::vector<double>> &published_tri_bell_matrix() {
    static const std::vector<std::vector<double>> m{
        {0.73305, 0, 0, 0, 0, 0.277399, 0, 0}, {0, 0.01805, 0.095, 0, 0, 0, 0, 0},
        {0, 0.095, 0.17195, 0, 0, 0, 0, 0.277399}, {0, 0, 0, 0.07695, 0, 0, 0, 0},
        {0, 0, 0, 0, 0.07695, 0, 0, 0}, {0.277399, 0, 0, 0, 0, 0.17195, 0.095, 0},
        {0, 0, 0, 0, 0, 0.095, 0.01805, 0}, {0, 0, 0.277399, 0, 0, 0, 0, 0.73305}};
    return m;
}

} // namespace qinflate
