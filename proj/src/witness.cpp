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
#include "qinflate/witness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qinflate/error.hpp"

namespace qinflate {

namespace {

constexpr double kEquimarginalTol = 1e-8;
constexpr double kClassicalEquimarginalTol = 1e-10;
constexpr double kStructureTol = 1e-9;
constexpr int kBisectionSteps = 60;

std::string join(const LabelSet &s) {
    std::string out;
    for (const auto &l : s) {
        out += l;
    }
    return out.empty() ? "{}" : out;
}

// Canonical layout spanned by the marginals, with dims taken from them.
template <typename Family>
SubsystemLayout family_layout(const Family &fam) {
    std::map<std::string, std::size_t> dims;
    for (const auto &[key, val] : fam) {
        const auto &lay = val.layout();
        if (lay.label_set() != key) {
            throw Error(ErrorCode::InvalidParameter, "marginal keyed " + join(key) + " acts on other labels");
        }
        for (std::size_t i = 0; i < lay.size(); ++i) {
            auto [it, fresh] = dims.emplace(lay.labels()[i], lay.dims()[i]);
            if (!fresh && it->second != lay.dims()[i]) {
                throw Error(ErrorCode::InconsistentMarginals, "subsystem '" + lay.labels()[i] + "' has two dimensions");
            }
        }
    }
    if (dims.empty()) {
        throw Error(ErrorCode::MissingMarginal, "no marginals supplied");
    }
    std::vector<std::string> labels;
    std::vector<std::size_t> d;
    for (const auto &[l, n] : dims) {
        labels.push_back(l);
        d.push_back(n);
    }
    return {labels, d};
}

std::vector<LabelSet> subsets(const std::vector<std::string> &labels, bool include_full) {
    const std::size_t n = labels.size();
    std::vector<LabelSet> out;
    const std::size_t full = (std::size_t{1} << n) - 1;
    for (std::size_t mask = 1; mask < full; ++mask) {
        LabelSet s;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (std::size_t{1} << i)) {
                s.insert(labels[i]);
            }
        }
        out.push_back(s);
    }
    if (include_full) {
        LabelSet all(labels.begin(), labels.end());
        out.push_back(all);
    }
    return out;
}

void check_quantum_family(const MarginalFamily &fam, const std::vector<LabelSet> &needed) {
    for (const auto &x : needed) {
        if (fam.count(x) == 0) {
            throw Error(ErrorCode::MissingMarginal, "no marginal supplied for " + join(x));
        }
    }
    for (const auto &[ky, sy] : fam) {
        for (const auto &[kx, sx] : fam) {
            if (kx.size() >= ky.size() || !std::includes(ky.begin(), ky.end(), kx.begin(), kx.end())) {
                continue;
            }
            auto reduced = canonical(partial_trace(sy.op(), kx));
            auto direct = canonical(sx.op());
            const double dev = max_abs_diff(reduced.matrix(), direct.matrix());
            if (dev > kEquimarginalTol) {
                throw Error(ErrorCode::InconsistentMarginals,
                            "marginal " + join(kx) + " disagrees with the reduction of " + join(ky));
            }
        }
    }
}

HermitianOperator alternating_sum(const MarginalFamily &fam, const SubsystemLayout &v, bool include_full) {
    CMat acc = CMat::Identity(static_cast<Eigen::Index>(v.total_dim()), static_cast<Eigen::Index>(v.total_dim()));
    for (const auto &x : subsets(v.labels(), include_full)) {
        const double sign = (x.size() % 2 == 0) ? 1.0 : -1.0;
        acc += sign * embed(fam.at(x).op(), v).matrix();
    }
    return {v, acc};
}

std::string other_label(const SubsystemLayout &layout, const Cut &cut) {
    if (layout.size() != 3) {
        throw Error(ErrorCode::DimensionError, "cut witnesses need exactly three subsystems");
    }
    if (cut.x == cut.y) {
        throw Error(ErrorCode::InvalidParameter, "cut needs two distinct subsystems");
    }
    (void)layout.index_of(cut.x);
    (void)layout.index_of(cut.y);
    for (const auto &l : layout.labels()) {
        if (l != cut.x && l != cut.y) {
            return l;
        }
    }
    throw Error(ErrorCode::DimensionError, "cut leaves no third subsystem");
}

std::vector<double> sorted(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

Cut Cut::parse(const std::string &s) {
    if (s.size() != 2 || s[0] == s[1]) {
        throw Error(ErrorCode::InvalidParameter, "cut must name two distinct subsystems, got '" + s + "'");
    }
    Cut c{std::string(1, s[0]), std::string(1, s[1])};
    if (c.y < c.x) {
        std::swap(c.x, c.y);
    }
    return c;
}

std::vector<Cut> all_cuts() { return {{"A", "B"}, {"A", "C"}, {"B", "C"}}; }

WitnessOperator::WitnessOperator(HermitianOperator op, WitnessKind kind, std::optional<Cut> cut)
    : op_(std::move(op)), kind_(kind), cut_(std::move(cut)), spectrum_(hermitian_eig(op_)) {}

std::string WitnessOperator::describe() const {
    switch (kind_) {
    case WitnessKind::HallDelta: return "Delta";
    case WitnessKind::HallLambda: return "Lambda";
    case WitnessKind::CutWitness: return "I_" + (cut_ ? cut_->name() : std::string("?"));
    }
    return "?";
}

MarginalFamily marginals_of(const DensityMatrix &rho) {
    MarginalFamily fam;
    for (const auto &x : subsets(rho.layout().labels(), false)) {
        fam.emplace(x, marginal(rho, x));
    }
    return fam;
}

DistributionFamily marginals_of(const Distribution &p) {
    DistributionFamily fam;
    for (const auto &x : subsets(p.layout().labels(), false)) {
        fam.emplace(x, p.marginal(x));
    }
    return fam;
}

WitnessOperator hall_delta(const MarginalFamily &marginals) {
    auto v = family_layout(marginals);
    if (v.size() % 2 == 0) {
        throw Error(ErrorCode::OddCardinalityRequired,
                    "Hall operator needs an odd number of subsystems, got " + std::to_string(v.size()));
    }
    if (marginals.count(v.label_set()) != 0) {
        throw Error(ErrorCode::InvalidParameter, "Hall operator takes proper marginals only");
    }
    check_quantum_family(marginals, subsets(v.labels(), false));
    return {alternating_sum(marginals, v, false), WitnessKind::HallDelta};
}

WitnessOperator hall_lambda(const MarginalFamily &marginals) {
    auto v = family_layout(marginals);
    check_quantum_family(marginals, subsets(v.labels(), true));
    return {alternating_sum(marginals, v, true), WitnessKind::HallLambda};
}

ClassicalTensor classical_delta(const DistributionFamily &marginals) {
    auto v = family_layout(marginals);
    if (v.size() % 2 == 0) {
        throw Error(ErrorCode::OddCardinalityRequired, "classical Hall sum needs an odd number of variables");
    }
    const auto needed = subsets(v.labels(), false);
    for (const auto &x : needed) {
        if (marginals.count(x) == 0) {
            throw Error(ErrorCode::MissingMarginal, "no marginal supplied for " + join(x));
        }
    }
    for (const auto &[ky, py] : marginals) {
        for (const auto &[kx, px] : marginals) {
            if (kx.size() >= ky.size() || !std::includes(ky.begin(), ky.end(), kx.begin(), kx.end())) {
                continue;
            }
            auto red = py.marginal(kx);
            for (std::size_t i = 0; i < red.probs().size(); ++i) {
                if (std::abs(red.probs()[i] - px.probs()[i]) > kClassicalEquimarginalTol) {
                    throw Error(ErrorCode::InconsistentMarginals,
                                "marginal " + join(kx) + " disagrees with the reduction of " + join(ky));
                }
            }
        }
    }
    ClassicalTensor out{v, std::vector<double>(v.total_dim(), 1.0)};
    for (std::size_t i = 0; i < out.values.size(); ++i) {
        auto dg = v.digits(i);
        for (const auto &x : needed) {
            const auto &q = marginals.at(x);
            std::vector<std::size_t> sub;
            for (const auto &l : q.layout().labels()) {
                sub.push_back(dg[v.index_of(l)]);
            }
            out.values[i] += (x.size() % 2 == 0 ? 1.0 : -1.0) * q.at(sub);
        }
    }
    return out;
}

WitnessOperator cut_witness_quantum(const HermitianOperator &rho_in, const Cut &cut) {
    const std::string z = other_label(rho_in.layout(), cut);
    auto rho = canonical(rho_in);
    const auto &v = rho.layout();
    auto rx = partial_trace(rho, {cut.x});
    auto ry = partial_trace(rho, {cut.y});
    auto rz = partial_trace(rho, {z});
    auto rxz = partial_trace(rho, {cut.x, z});
    auto ryz = partial_trace(rho, {cut.y, z});
    CMat m = identity(v).matrix();
    m -= embed(rx, v).matrix();
    m -= embed(ry, v).matrix();
    m -= embed(rz, v).matrix();
    m += embed(kron(rx, ry), v).matrix();
    m += embed(rxz, v).matrix();
    m += embed(ryz, v).matrix();
    return {HermitianOperator(v, m), WitnessKind::CutWitness, cut};
}

WitnessOperator cut_witness_quantum(const DensityMatrix &rho, const Cut &cut) {
    return cut_witness_quantum(rho.op(), cut);
}

ClassicalTensor cut_witness_classical(const Distribution &p, const Cut &cut) {
    const std::string z = other_label(p.layout(), cut);
    auto v = p.layout().canonical();
    auto px = p.marginal({cut.x});
    auto py = p.marginal({cut.y});
    auto pz = p.marginal({z});
    auto pxz = p.marginal({cut.x, z});
    auto pyz = p.marginal({cut.y, z});
    ClassicalTensor out{v, std::vector<double>(v.total_dim())};
    const std::size_t ix = v.index_of(cut.x), iy = v.index_of(cut.y), iz = v.index_of(z);
    auto pair_at = [&](const Distribution &d, const std::string &a, std::size_t oa, std::size_t oz) {
        std::vector<std::size_t> o(2);
        o[d.layout().index_of(a)] = oa;
        o[d.layout().index_of(z)] = oz;
        return d.at(o);
    };
    for (std::size_t i = 0; i < out.values.size(); ++i) {
        auto dg = v.digits(i);
        const double qx = px.at({dg[ix]}), qy = py.at({dg[iy]}), qz = pz.at({dg[iz]});
        out.values[i] = 1.0 - qx - qy - qz + qx * qy + pair_at(pxz, cut.x, dg[ix], dg[iz]) +
                        pair_at(pyz, cut.y, dg[iy], dg[iz]);
    }
    return out;
}

Verdict verdict(const WitnessOperator &w, double tol) {
    Verdict v;
    const double lo = w.min_eigenvalue();
    if (lo < -tol) {
        v.status = VerdictStatus::WitnessedIncompatible;
        v.evidence = Evidence{w.describe(), lo, CVec(w.spectrum().eigenvectors.col(0)), std::nullopt};
    }
    return v;
}

Verdict verdict(const ClassicalTensor &t, double tol) {
    Verdict v;
    auto it = std::min_element(t.values.begin(), t.values.end());
    if (it != t.values.end() && *it < -tol) {
        v.status = VerdictStatus::WitnessedIncompatible;
        v.evidence = Evidence{"classical", *it, std::nullopt,
                              t.layout.digits(static_cast<std::size_t>(it - t.values.begin()))};
    }
    return v;
}

std::vector<Cluster> cluster_eigenvalues(const RVec &values, double tol) {
    std::vector<double> v(values.data(), values.data() + values.size());
    std::sort(v.begin(), v.end());
    std::vector<Cluster> out;
    std::size_t i = 0;
    while (i < v.size()) {
        std::size_t j = i + 1;
        while (j < v.size() && v[j] - v[j - 1] <= tol) {
            ++j;
        }
        double s = 0.0;
        for (std::size_t k = i; k < j; ++k) {
            s += v[k];
        }
        out.push_back({s / static_cast<double>(j - i), static_cast<int>(j - i)});
        i = j;
    }
    return out;
}

SuppKerResult supp_ker_analysis(const DensityMatrix &rho, const Cut &cut) {
    (void)other_label(rho.layout(), cut); // validates the cut against the layout
    const auto v = rho.layout().canonical();
    auto nu = nu_decomposition(rho, cut.x, cut.y);
    CMat p_supp = support_projector(embed(nu.nu_minus, v).matrix());
    auto delta = hall_delta(marginals_of(rho));
    const CMat p_ker = support_kernel_projectors(delta.op()).second;
    SuppKerResult r;
    r.nu_minus_rank = projector_rank(support_projector(nu.nu_minus.matrix()));
    r.kernel_rank = projector_rank(p_ker);
    CMat pqp = p_supp * p_ker * p_supp;
    pqp = 0.5 * (pqp + pqp.adjoint());
    auto sp = hermitian_eig(pqp);
    const Eigen::Index top = sp.eigenvalues.size() - 1;
    r.overlap = sp.eigenvalues(top);
    r.phi = sp.eigenvectors.col(top);
    r.intersects = subspace_intersects(p_supp, p_ker);
    r.phi_value = expectation(cut_witness_quantum(rho, cut).op(), r.phi);
    return r;
}

bool supp_ker_test(const DensityMatrix &rho, const Cut &cut) { return supp_ker_analysis(rho, cut).intersects; }

CVec tau_apply(const CVec &psi) {
    if (psi.size() != 8) {
        throw Error(ErrorCode::DimensionError, "tau acts on three qubits");
    }
    CVec out = CVec::Zero(8);
    for (int idx = 0; idx < 8; ++idx) {
        const int parity = ((idx >> 2) & 1) + ((idx >> 1) & 1) + (idx & 1);
        out(7 - idx) = (parity % 2 == 0 ? 1.0 : -1.0) * std::conj(psi(idx));
    }
    return out;
}

HermitianOperator pure_delta_structure(const PureState &psi) {
    const auto &lay = psi.layout();
    if (lay.size() != 3 || lay.total_dim() != 8) {
        throw Error(ErrorCode::DimensionError, "tau structure is defined for three qubits");
    }
    // tau^2 = -1, so tau^-1 rho tau is the projector onto tau psi.
    CVec t = tau_apply(psi.amplitudes());
    HermitianOperator conj_rho(lay, t * t.adjoint());
    auto rho = psi.density();
    auto delta = hall_delta(marginals_of(rho));
    CMat rhs = canonical(rho.op()).matrix() + canonical(conj_rho).matrix();
    const double dev = max_abs_diff(delta.op().matrix(), rhs);
    if (dev > kStructureTol) {
        throw Error(ErrorCode::ConstraintViolated, "Delta differs from rho + tau^-1 rho tau by " + std::to_string(dev));
    }
    return conj_rho;
}

FidelityReport fidelity_witness(const DensityMatrix &rho) {
    if (rho.layout().size() != 3 || rho.dim() != 8) {
        throw Error(ErrorCode::DimensionError, "fidelity witness is defined for three qubits");
    }
    auto r = canonical(rho.op());
    const double fg = expectation(r, ghz_state().amplitudes());
    const double fw = expectation(r, w_state().amplitudes());
    return {fg, fw, fg >= kGhzFidelityBound || fw >= kWFidelityBound};
}

double tri_bell_cubic_root_product(double t) {
    return -(8.0 - 20.0 * t + 14.0 * t * t - 5.0 * t * t * t + t * t * t * t);
}

CubicReport tri_bell_cubic(double t) {
    if (!(t >= 3.0)) {
        throw Error(ErrorCode::DomainError, "cubic is taken for t >= 3");
    }
    const double b = -t * t + t - 2.0;
    const double c = -4.0 + 8.0 * t - 5.0 * t * t + t * t * t;
    const double d = 8.0 - 20.0 * t + 14.0 * t * t - 5.0 * t * t * t + t * t * t * t;
    CubicReport rep{{1.0, b, c, d}, {0.0, 0.0, 0.0}, tri_bell_cubic_root_product(t)};
    // Trigonometric form for three real roots of the depressed cubic.
    const double p = c - b * b / 3.0;
    const double q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
    if (p >= 0.0) {
        const double y = std::cbrt(-q);
        rep.roots = {y - b / 3.0, y - b / 3.0, y - b / 3.0};
    } else {
        const double m = 2.0 * std::sqrt(-p / 3.0);
        const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
        const double th = std::acos(arg) / 3.0;
        for (int k = 0; k < 3; ++k) {
            rep.roots[static_cast<std::size_t>(k)] = m * std::cos(th - 2.0 * std::numbers::pi * k / 3.0) - b / 3.0;
        }
    }
    std::sort(rep.roots.begin(), rep.roots.end());
    return rep;
}

std::vector<double> tri_bell_witness_eigs(double t) {
    auto cub = tri_bell_cubic(t);
    std::vector<double> out;
    const double t2 = t * t;
    for (int rep = 0; rep < 2; ++rep) {
        out.push_back((t - 2.0) / t2);
        for (double r : cub.roots) {
            out.push_back(r / t2);
        }
    }
    return sorted(out);
}

PureState prop5_state(const Prop5Params &p) {
    return schmidt224({p.a0, 0.0, 0.0, 0.0, p.a4, p.a5, p.a6, p.a7}, p.phi0, 0.0, Schmidt224Options{false});
}

double prop5_entry(const Prop5Params &p) {
    (void)prop5_state(p);
    return -p.a0 * p.a0 * (1.0 - p.a0 * p.a0 - p.a4 * p.a4);
}

Prop5Result prop5_check(const Prop5Params &p) {
    auto psi = prop5_state(p);
    auto w = cut_witness_quantum(psi.density(), Cut{"A", "C"});
    // |010> on the 2x2x4 layout.
    const double entry = w.op()(4, 4).real();
    return {prop5_entry(p), entry};
}

std::vector<double> werner_ghz_eigs(double p) {
    return sorted({0.25, 0.25, 0.25, 0.25, 0.25 * (1.0 + 2.0 * p), 0.25 * (1.0 + 2.0 * p),
                   0.25 * (1.0 - 2.0 * p), 0.25 * (1.0 - 2.0 * p)});
}

std::vector<double> werner_w_eigs(double p) {
    const double r = std::sqrt(297.0 * p * p + 6.0 * p * p * p + p * p * p * p);
    const std::array<double, 4> base{9.0 - p * p, 9.0 - 6.0 * p + p * p, 9.0 + 3.0 * p + r, 9.0 + 3.0 * p - r};
    std::vector<double> out;
    for (double b : base) {
        out.push_back(b / 36.0);
        out.push_back(b / 36.0);
    }
    return sorted(out);
}

WernerThresholds werner_thresholds() {
    auto bisect = [](auto eigs) {
        double lo = 0.0, hi = 1.0;
        for (int i = 0; i < kBisectionSteps; ++i) {
            const double mid = 0.5 * (lo + hi);
            if (eigs(mid).front() < 0.0) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        return 0.5 * (lo + hi);
    };
    return {bisect(werner_ghz_eigs), bisect(werner_w_eigs)};
}

std::vector<double> toth_acin_eigs(double c) {
    const double r = 2.0 * std::sqrt(4.0 + 6.0 * c + 9.0 * c * c);
    const double a = (8.0 - 3.0 * c) / 24.0;
    const double hi = (4.0 + 3.0 * c + r) / 24.0;
    const double lo = (4.0 + 3.0 * c - r) / 24.0;
    return sorted({a, a, a, a, hi, hi, lo, lo});
}

QutritReport qutrit_witnesses(double p0, double p1) {
    auto [pure, mixed] = qutrit_pair(p0, p1);
    QutritReport rep{p0, p1, {}, true, 0.0};
    std::vector<double> expected;
    for (int i = 0; i < 12; ++i) {
        expected.push_back(1.0 / 9.0);
        expected.push_back(4.0 / 9.0);
    }
    for (int i = 0; i < 3; ++i) {
        expected.push_back(7.0 / 9.0);
    }
    expected = sorted(expected);
    rep.pure_min = 1e300;
    auto pure_rho = pure.density();
    for (const auto &cut : all_cuts()) {
        auto wm = cut_witness_quantum(mixed, cut);
        auto wp = cut_witness_quantum(pure_rho, cut);
        for (std::size_t k = 0; k < expected.size(); ++k) {
            if (std::abs(wm.spectrum().eigenvalues(static_cast<Eigen::Index>(k)) - expected[k]) > 1e-9) {
                rep.mixed_matches_expected = false;
            }
        }
        rep.pure_min = std::min(rep.pure_min, wp.min_eigenvalue());
        rep.cuts.push_back({cut, wm.spectrum().eigenvalues, wp.spectrum().eigenvalues});
    }
    return rep;
}

} // namespace qinflate
