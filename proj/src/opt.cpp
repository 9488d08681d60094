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
#include "qinflate/opt.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <numeric>
#include <random>
#include <thread>

#include "qinflate/error.hpp"

namespace qinflate {

namespace {

CMat project_psd(const CMat &m) {
    auto sp = hermitian_eig(CMat(0.5 * (m + m.adjoint())));
    RVec clipped = sp.eigenvalues.cwiseMax(0.0);
    return sp.eigenvectors * clipped.asDiagonal() * sp.eigenvectors.adjoint();
}

// T_0 = id, T_k = partial transpose on factor k - 1.
CMat apply_t(const CMat &m, const SubsystemLayout &layout, std::size_t i) {
    return i == 0 ? m : partial_transpose(m, layout, i - 1);
}

double min_eig_raw(const CMat &m) { return hermitian_eig(CMat(0.5 * (m + m.adjoint()))).eigenvalues(0); }

} // namespace

SdpResult ppt_min(const HermitianOperator &w_in, const SdpOptions &opts) {
    const auto w = canonical(w_in);
    const auto &layout = w.layout();
    if (layout.size() != 3) {
        throw Error(ErrorCode::DimensionError, "PPT relaxation expects three subsystems");
    }
    if (layout.total_dim() > 16) {
        throw Error(ErrorCode::DimensionError, "PPT relaxation is limited to total dimension 16");
    }
    const std::size_t cones = layout.size() + 1;
    const auto n = static_cast<Eigen::Index>(layout.total_dim());
    const double rho = opts.penalty;
    const CMat &wm = w.matrix();
    const CMat id = CMat::Identity(n, n);

    CMat x = id / static_cast<double>(n);
    std::vector<CMat> y(cones), u(cones, CMat::Zero(n, n));
    for (std::size_t i = 0; i < cones; ++i) {
        y[i] = apply_t(x, layout, i);
    }

    SdpResult res;
    for (int it = 1; it <= opts.max_iterations; ++it) {
        CMat acc = CMat::Zero(n, n);
        for (std::size_t i = 0; i < cones; ++i) {
            acc += apply_t(y[i] - u[i], layout, i);
        }
        x = acc / static_cast<double>(cones) - wm / (static_cast<double>(cones) * rho);
        x += (1.0 - x.trace().real()) / static_cast<double>(n) * id;
        x = 0.5 * (x + x.adjoint());

        double r2 = 0.0, s2 = 0.0;
        for (std::size_t i = 0; i < cones; ++i) {
            CMat tx = apply_t(x, layout, i);
            CMat ynew = project_psd(tx + u[i]);
            s2 += (ynew - y[i]).squaredNorm();
            y[i] = ynew;
            CMat r = tx - y[i];
            r2 += r.squaredNorm();
            u[i] += r;
        }
        res.primal_residual = std::sqrt(r2);
        res.dual_residual = rho * std::sqrt(s2);
        res.iterations = it;
        if (std::max(res.primal_residual, res.dual_residual) < opts.tolerance) {
            res.converged = true;
            break;
        }
    }

    CMat cand = y[0];
    const double tr = cand.trace().real();
    cand = tr > 1e-12 ? CMat(cand / tr) : project_psd(x);
    cand /= cand.trace().real();
    double lam = 0.0;
    for (std::size_t i = 0; i < cones; ++i) {
        lam = std::min(lam, min_eig_raw(apply_t(cand, layout, i)));
    }
    if (lam < 0.0) {
        const double nd = static_cast<double>(n);
        const double eps = -lam * nd / (1.0 - lam * nd);
        cand = (1.0 - eps) * cand + eps / nd * id;
    }
    double viol = 0.0;
    for (std::size_t i = 0; i < cones; ++i) {
        viol = std::min(viol, min_eig_raw(apply_t(cand, layout, i)));
    }
    res.constraint_violation = -viol;
    res.minimizer = DensityMatrix(HermitianOperator(layout, cand));
    res.value = (res.minimizer.matrix() * wm).trace().real();
    return res;
}

SdpResult ppt_min(const WitnessOperator &w, const SdpOptions &opts) { return ppt_min(w.op(), opts); }

CVec spherical_unit_vector(const double *params, std::size_t d) {
    CVec v(static_cast<Eigen::Index>(d));
    double prod = 1.0;
    for (std::size_t k = 0; k + 1 < d; ++k) {
        v(static_cast<Eigen::Index>(k)) = prod * std::cos(params[k]);
        prod *= std::sin(params[k]);
    }
    v(static_cast<Eigen::Index>(d - 1)) = prod;
    for (std::size_t k = 1; k < d; ++k) {
        v(static_cast<Eigen::Index>(k)) *= std::polar(1.0, params[d - 1 + k - 1]);
    }
    return v;
}

CMat complete_basis(const CVec &v) {
    const Eigen::Index d = v.size();
    CMat u(d, d);
    u.col(0) = v / v.norm();
    Eigen::Index filled = 1;
    for (Eigen::Index e = 0; e < d && filled < d; ++e) {
        CVec c = CVec::Zero(d);
        c(e) = 1.0;
        for (int pass = 0; pass < 2; ++pass) {
            for (Eigen::Index j = 0; j < filled; ++j) {
                c -= u.col(j) * (u.col(j).adjoint() * c)(0, 0);
            }
        }
        const double nrm = c.norm();
        if (nrm > 1e-6) {
            u.col(filled++) = c / nrm;
        }
    }
    return u;
}

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double> &)> &f, std::vector<double> x0,
                             const NelderMeadOptions &opts) {
    const std::size_t n = x0.size();
    std::vector<std::vector<double>> pts(n + 1, x0);
    std::vector<double> fv(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        pts[i + 1][i] += opts.initial_step;
    }
    int evals = 0;
    auto eval = [&](const std::vector<double> &p) {
        ++evals;
        return f(p);
    };
    for (std::size_t i = 0; i <= n; ++i) {
        fv[i] = eval(pts[i]);
    }
    std::vector<std::size_t> order(n + 1);
    while (evals < opts.max_evaluations) {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
        const std::size_t best = order.front(), worst = order.back(), second = order[n - 1];
        if (fv[worst] - fv[best] <= opts.f_tolerance) {
            break;
        }
        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i <= n; ++i) {
            if (i != worst) {
                for (std::size_t k = 0; k < n; ++k) {
                    centroid[k] += pts[i][k] / static_cast<double>(n);
                }
            }
        }
        auto along = [&](double coef) {
            std::vector<double> p(n);
            for (std::size_t k = 0; k < n; ++k) {
                p[k] = centroid[k] + coef * (pts[worst][k] - centroid[k]);
            }
            return p;
        };
        auto xr = along(-1.0);
        const double fr = eval(xr);
        if (fr < fv[best]) {
            auto xe = along(-2.0);
            const double fe = eval(xe);
            if (fe < fr) {
                pts[worst] = xe;
                fv[worst] = fe;
            } else {
                pts[worst] = xr;
                fv[worst] = fr;
            }
        } else if (fr < fv[second]) {
            pts[worst] = xr;
            fv[worst] = fr;
        } else {
            const bool outside = fr < fv[worst];
            auto xc = along(outside ? -0.5 : 0.5);
            const double fc = eval(xc);
            if (fc < (outside ? fr : fv[worst])) {
                pts[worst] = xc;
                fv[worst] = fc;
            } else {
                for (std::size_t i = 0; i <= n; ++i) {
                    if (i == best) {
                        continue;
                    }
                    for (std::size_t k = 0; k < n; ++k) {
                        pts[i][k] = pts[best][k] + 0.5 * (pts[i][k] - pts[best][k]);
                    }
                    fv[i] = eval(pts[i]);
                }
            }
        }
    }
    const auto it = std::min_element(fv.begin(), fv.end());
    const auto bi = static_cast<std::size_t>(it - fv.begin());
    return {pts[bi], fv[bi], evals};
}

ProductSearchResult product_min(const HermitianOperator &w_in, int restarts, std::uint64_t seed) {
    const auto w = canonical(w_in);
    const auto &dims = w.layout().dims();
    std::vector<std::size_t> offset;
    std::size_t nparam = 0;
    for (auto d : dims) {
        offset.push_back(nparam);
        nparam += 2 * (d - 1);
    }
    auto vector_of = [&](const std::vector<double> &p) {
        CVec v = spherical_unit_vector(p.data() + offset[0], dims[0]);
        for (std::size_t s = 1; s < dims.size(); ++s) {
            v = kron(CMat(v), CMat(spherical_unit_vector(p.data() + offset[s], dims[s])));
        }
        return v;
    };
    const CMat &wm = w.matrix();
    auto objective = [&](const std::vector<double> &p) {
        CVec v = vector_of(p);
        return (v.adjoint() * wm * v)(0, 0).real();
    };

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    ProductSearchResult best;
    best.value = std::numeric_limits<double>::infinity();
    std::vector<double> best_x;
    const int runs = std::max(1, restarts);
    for (int r = 0; r < runs; ++r) {
        std::vector<double> x0(nparam);
        for (auto &v : x0) {
            v = angle(rng);
        }
        auto res = nelder_mead(objective, x0);
        res = nelder_mead(objective, res.x, NelderMeadOptions{0.05, 1e-15, 20000});
        if (res.f < best.value) {
            best.value = res.f;
            best_x = res.x;
        }
    }
    best.restarts_used = runs;
    std::vector<CMat> bases;
    for (std::size_t s = 0; s < dims.size(); ++s) {
        bases.push_back(complete_basis(spherical_unit_vector(best_x.data() + offset[s], dims[s])));
    }
    best.bases = LocalBasis(bases);
    CVec v = bases[0].col(0);
    for (std::size_t s = 1; s < bases.size(); ++s) {
        v = kron(CMat(v), CMat(bases[s].col(0)));
    }
    best.value = expectation(w, v);
    return best;
}

ProductSearchResult product_min(const WitnessOperator &w, int restarts, std::uint64_t seed) {
    return product_min(w.op(), restarts, seed);
}

ClassicalTensor distribution_witness(const DensityMatrix &rho, const Cut &cut, const LocalBasis &bases) {
    return cut_witness_classical(measure_local(rho, bases), cut);
}

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)> &fn) {
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex fail_mu;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(fail_mu);
                    if (!failure) {
                        failure = std::current_exception();
                    }
                }
            }
        });
    }
    for (auto &th : pool) {
        th.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

SweepTable sweep_tri_bell(const std::vector<double> &grid, const SweepOptions &opts) {
    for (double a : grid) {
        (void)tri_bell_t_from_amplitude(a);
    }
    const Cut ab{"A", "B"};
    SweepTable table;
    table.rows.resize(grid.size());
    parallel_for(grid.size(), opts.threads, [&](std::size_t i) {
        const double a = grid[i];
        auto w = cut_witness_quantum(tri_bell_amplitude(a).density(), ab);
        auto sdp = ppt_min(w, opts.sdp);
        auto prod = product_min(w, opts.restarts, opts.seed + i);
        table.rows[i] = {a,          tri_bell_t_from_amplitude(a), w.min_eigenvalue(), sdp.value, prod.value,
                         sdp.converged, sdp.constraint_violation};
    });
    if (!opts.locate_crossing) {
        return table;
    }
    for (std::size_t i = 0; i + 1 < table.rows.size(); ++i) {
        if (table.rows[i].iota_tilde < 0.0 && table.rows[i + 1].iota_tilde >= 0.0) {
            double lo = table.rows[i].amplitude, hi = table.rows[i + 1].amplitude;
            for (int s = 0; s < opts.bisection_steps; ++s) {
                const double mid = 0.5 * (lo + hi);
                auto w = cut_witness_quantum(tri_bell_amplitude(mid).density(), ab);
                if (ppt_min(w, opts.sdp).value < 0.0) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            table.crossing = 0.5 * (lo + hi);
            break;
        }
    }
    return table;
}

void write_sweep_csv(const SweepTable &table, std::ostream &os) {
    os << "amplitude,min_eig,iota_tilde,iota_upper,converged\n";
    char buf[256];
    for (const auto &r : table.rows) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%s\n", r.amplitude, r.min_eig, r.iota_tilde,
                      r.iota_upper, r.converged ? "true" : "false");
        os << buf;
    }
}

} // namespace qinflate
