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
#include "qinflate/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "qinflate/dag.hpp"
#include "qinflate/error.hpp"
#include "qinflate/io.hpp"
#include "qinflate/opt.hpp"
#include "qinflate/reproduce.hpp"
#include "qinflate/witness.hpp"

namespace qinflate::cli {

using nlohmann::json;

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_short(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string upper(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return s;
}

// Runs body and turns any exception into exit code 1 with a message on err.
int guarded(std::ostream &err, const std::function<int()> &body) {
    try {
        return body();
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
    }
    return kExitError;
}

void write_text(const std::string &path, const std::string &content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
    }
    f << content;
    if (!f) {
        throw Error(ErrorCode::IoError, "write to '" + path + "' failed");
    }
}

// Output is assembled in full and written once.
void emit(const Options &opts, std::ostream &out, const std::string &content) {
    if (opts.out.empty()) {
        out << content;
    } else {
        write_text(opts.out, content);
    }
}

json vec_json(const RVec &v) {
    json a = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        a.push_back(v(i));
    }
    return a;
}

json evidence_json(const Verdict &v) {
    if (!v.evidence) {
        return nullptr;
    }
    json e{{"witness", v.evidence->witness}, {"min_value", v.evidence->min_value}};
    if (v.evidence->vector) {
        json a = json::array();
        for (Eigen::Index i = 0; i < v.evidence->vector->size(); ++i) {
            const cplx z = (*v.evidence->vector)(i);
            a.push_back(json::array({z.real(), z.imag()}));
        }
        e["vector"] = a;
    }
    if (v.evidence->outcome) {
        e["outcome"] = *v.evidence->outcome;
    }
    return e;
}

const char *status_name(const Verdict &v) { return v.incompatible() ? "witnessed_incompatible" : "inconclusive"; }

std::string clusters_text(const RVec &eigs) {
    std::string s;
    for (const auto &c : cluster_eigenvalues(eigs)) {
        if (!s.empty()) {
            s += ", ";
        }
        s += fmt_short(c.value);
        if (c.multiplicity > 1) {
            s += " x" + std::to_string(c.multiplicity);
        }
    }
    return s;
}

std::string outcome_text(const std::vector<std::size_t> &o) {
    std::string s = "(";
    for (std::size_t i = 0; i < o.size(); ++i) {
        s += (i ? "," : "") + std::to_string(o[i]);
    }
    return s + ")";
}

struct ClosedFormFamily {
    std::string parameter;
    std::function<std::vector<double>(double)> closed;
    std::function<HermitianOperator(double)> state;
};

std::optional<ClosedFormFamily> closed_form_family(const std::string &name) {
    if (name == "werner_ghz") {
        return ClosedFormFamily{"p", werner_ghz_eigs,
                                [](double p) { return white_noise_mixture(ghz_state(), p).op(); }};
    }
    if (name == "werner_w") {
        return ClosedFormFamily{"p", werner_w_eigs, [](double p) { return white_noise_mixture(w_state(), p).op(); }};
    }
    if (name == "toth_acin") {
        // The operator is used directly: it stops being PSD near c = -1.
        return ClosedFormFamily{"c", toth_acin_eigs, toth_acin_operator};
    }
    return std::nullopt;
}

} // namespace

std::uint64_t resolve_seed(const std::optional<std::uint64_t> &explicit_seed, std::uint64_t fallback) {
    if (explicit_seed) {
        return *explicit_seed;
    }
    if (const char *env = std::getenv("QINFLATE_SEED"); env != nullptr && *env != '\0') {
        const std::string s(env);
        if (!std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; })) {
            throw Error(ErrorCode::InvalidParameter, "QINFLATE_SEED must be an unsigned integer, got '" + s + "'");
        }
        try {
            return std::stoull(s);
        } catch (const std::out_of_range &) {
            throw Error(ErrorCode::InvalidParameter, "QINFLATE_SEED out of range: '" + s + "'");
        }
    }
    return fallback;
}

std::vector<std::string> parse_cut_selection(const std::string &s) {
    const auto u = upper(s);
    if (u == "ALL") {
        return {"AB", "AC", "BC"};
    }
    if (u == "AB" || u == "AC" || u == "BC") {
        return {u};
    }
    if (u == "BA" || u == "CA" || u == "CB") {
        return {Cut::parse(u).name()};
    }
    throw Error(ErrorCode::InvalidParameter, "--cut must be AB, AC, BC or all; got '" + s + "'");
}

std::vector<double> parse_grid(const std::string &spec) {
    const auto bad = [&](const std::string &why) {
        return Error(ErrorCode::InvalidParameter, "grid '" + spec + "': " + why + " (expected a:b:n)");
    };
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    for (std::string p; std::getline(ss, p, ':');) {
        parts.push_back(p);
    }
    if (parts.size() != 3) {
        throw bad("need three fields");
    }
    double a = 0.0, b = 0.0;
    long long n = 0;
    try {
        std::size_t used = 0;
        a = std::stod(parts[0], &used);
        if (used != parts[0].size()) throw bad("bad start");
        b = std::stod(parts[1], &used);
        if (used != parts[1].size()) throw bad("bad stop");
        n = std::stoll(parts[2], &used);
        if (used != parts[2].size()) throw bad("bad count");
    } catch (const std::logic_error &) {
        throw bad("fields must be numbers");
    }
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw bad("bounds must be finite");
    }
    if (n < 1 || n > 100000) {
        throw bad("count must be between 1 and 100000");
    }
    if (n == 1) {
        return {a};
    }
    std::vector<double> g(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i) {
        g[static_cast<std::size_t>(i)] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    g.back() = b;
    return g;
}

std::string render_svg(const std::string &title, const std::string &xlabel, const std::string &ylabel,
                       const std::vector<Series> &series) {
    constexpr double W = 640, H = 420, L = 70, R = 20, T = 40, B = 60;
    static const char *colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};
    double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
    for (const auto &s : series) {
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
            if (!std::isfinite(s.y[i])) {
                continue;
            }
            x0 = std::min(x0, s.x[i]);
            x1 = std::max(x1, s.x[i]);
            y0 = std::min(y0, s.y[i]);
            y1 = std::max(y1, s.y[i]);
        }
    }
    if (x0 > x1) {
        x0 = 0, x1 = 1, y0 = 0, y1 = 1;
    }
    if (x1 - x0 < 1e-300) {
        x0 -= 0.5, x1 += 0.5;
    }
    if (y1 - y0 < 1e-300) {
        y0 -= 0.5, y1 += 0.5;
    }
    const double pad = 0.05 * (y1 - y0);
    y0 -= pad, y1 += pad;
    const auto px = [&](double x) { return L + (x - x0) / (x1 - x0) * (W - L - R); };
    const auto py = [&](double y) { return H - B - (y - y0) / (y1 - y0) * (H - T - B); };
    char buf[256];
    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"420\" viewBox=\"0 0 640 420\">\n";
    o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    o << "<text x=\"320\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">" << title
      << "</text>\n";
    std::snprintf(buf, sizeof buf,
                  "<path d=\"M%.2f %.2f L%.2f %.2f L%.2f %.2f\" fill=\"none\" stroke=\"black\"/>\n", L, T, L, H - B,
                  W - R, H - B);
    o << buf;
    for (int k = 0; k <= 4; ++k) {
        const double xv = x0 + (x1 - x0) * k / 4.0;
        const double yv = y0 + (y1 - y0) * k / 4.0;
        std::snprintf(buf, sizeof buf,
                      "<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"middle\" font-family=\"sans-serif\" "
                      "font-size=\"11\">%.4g</text>\n",
                      px(xv), H - B + 16, xv);
        o << buf;
        std::snprintf(buf, sizeof buf,
                      "<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"end\" font-family=\"sans-serif\" "
                      "font-size=\"11\">%.4g</text>\n",
                      L - 6, py(yv) + 4, yv);
        o << buf;
    }
    if (y0 < 0.0 && y1 > 0.0) {
        std::snprintf(buf, sizeof buf,
                      "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"gray\" stroke-dasharray=\"4 4\"/>\n",
                      L, py(0.0), W - R, py(0.0));
        o << buf;
    }
    o << "<text x=\"" << (L + W - R) / 2 << "\" y=\"" << H - 18
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" << xlabel << "</text>\n";
    o << "<text x=\"16\" y=\"" << (T + H - B) / 2 << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
      << "font-size=\"13\" transform=\"rotate(-90 16 " << (T + H - B) / 2 << ")\">" << ylabel << "</text>\n";
    for (std::size_t k = 0; k < series.size(); ++k) {
        const auto &s = series[k];
        const char *color = colors[k % 5];
        o << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        bool first = true;
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
            if (!std::isfinite(s.y[i])) {
                continue;
            }
            std::snprintf(buf, sizeof buf, "%s%.2f,%.2f", first ? "" : " ", px(s.x[i]), py(s.y[i]));
            o << buf;
            first = false;
        }
        o << "\"/>\n";
        const double ly = T + 14 + 16 * static_cast<double>(k);
        std::snprintf(buf, sizeof buf,
                      "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"%s\" stroke-width=\"2\"/>\n",
                      W - R - 150, ly - 4, W - R - 130, ly - 4, color);
        o << buf;
        std::snprintf(buf, sizeof buf,
                      "<text x=\"%.2f\" y=\"%.2f\" font-family=\"sans-serif\" font-size=\"12\">", W - R - 124, ly);
        o << buf << s.name << "</text>\n";
    }
    o << "</svg>\n";
    return o.str();
}

int cmd_witness(const std::string &state_path, const Options &opts, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        const auto file = load_state_file(state_path);
        const auto state = resolve(file);
        bool any = false;
        json rep{{"input", state_path}, {"tolerance", opts.tol}, {"cuts", json::array()}};
        std::ostringstream text;
        text << "state: " << state_path << "\n";
        if (state.quantum) {
            const auto &rho = *state.quantum;
            text << "kind: quantum, dim " << rho.dim() << "\n";
            rep["kind"] = "quantum";
            for (const auto &name : opts.cuts) {
                const auto cut = Cut::parse(name);
                const auto w = cut_witness_quantum(rho, cut);
                const auto v = verdict(w, opts.tol);
                any = any || v.incompatible();
                const auto &eigs = w.spectrum().eigenvalues;
                rep["cuts"].push_back({{"cut", cut.name()},
                                       {"eigenvalues", vec_json(eigs)},
                                       {"min_eigenvalue", w.min_eigenvalue()},
                                       {"verdict", status_name(v)},
                                       {"evidence", evidence_json(v)}});
                text << "cut " << cut.name() << ": min eigenvalue " << fmt_short(w.min_eigenvalue()) << ", "
                     << status_name(v) << "\n  spectrum: " << clusters_text(eigs) << "\n";
            }
        } else {
            const auto &p = *state.classical;
            text << "kind: distribution, " << p.probs().size() << " outcomes\n";
            rep["kind"] = "distribution";
            for (const auto &name : opts.cuts) {
                const auto cut = Cut::parse(name);
                const auto t = cut_witness_classical(p, cut);
                const auto v = verdict(t, opts.tol);
                any = any || v.incompatible();
                const double lo = *std::min_element(t.values.begin(), t.values.end());
                rep["cuts"].push_back({{"cut", cut.name()},
                                       {"values", t.values},
                                       {"min_value", lo},
                                       {"verdict", status_name(v)},
                                       {"evidence", evidence_json(v)}});
                text << "cut " << cut.name() << ": min entry " << fmt_short(lo) << ", " << status_name(v);
                if (v.evidence && v.evidence->outcome) {
                    text << " at " << outcome_text(*v.evidence->outcome);
                }
                text << "\n";
            }
        }
        rep["verdict"] = any ? "witnessed_incompatible" : "inconclusive";
        text << "verdict: " << (any ? "witnessed_incompatible" : "inconclusive") << "\n";
        emit(opts, out, opts.format == Format::Json ? rep.dump(2) + "\n" : text.str());
        return any ? kExitWitnessed : kExitOk;
    });
}

int cmd_sweep(const std::string &family, const std::string &grid_spec, const Options &opts, std::ostream &out,
              std::ostream &err) {
    return guarded(err, [&] {
        const auto grid = parse_grid(grid_spec);
        std::ostringstream csv;
        std::vector<Series> series;
        std::string xlabel;
        if (family == "tri_bell") {
            SweepOptions so;
            so.restarts = opts.restarts;
            so.seed = opts.seed;
            so.threads = opts.threads;
            const auto table = sweep_tri_bell(grid, so);
            write_sweep_csv(table, csv);
            Series mine{"min eig I_AB", {}, {}}, tilde{"iota tilde (PPT)", {}, {}}, upperb{"product search", {}, {}};
            for (const auto &r : table.rows) {
                mine.x.push_back(r.amplitude);
                mine.y.push_back(r.min_eig);
                tilde.x.push_back(r.amplitude);
                tilde.y.push_back(r.iota_tilde);
                upperb.x.push_back(r.amplitude);
                upperb.y.push_back(r.iota_upper);
            }
            series = {mine, tilde, upperb};
            xlabel = "amplitude";
            if (table.crossing) {
                err << "iota_tilde changes sign near amplitude " << fmt_short(*table.crossing) << "\n";
            }
        } else if (auto fam = closed_form_family(family)) {
            csv << fam->parameter << ",min_eig_closed_form,min_eig_assembled,witnessed\n";
            Series closed{"closed form", {}, {}}, assembled{"assembled I_AB", {}, {}};
            for (double x : grid) {
                const auto eigs = fam->closed(x);
                const double cf = *std::min_element(eigs.begin(), eigs.end());
                const auto w = cut_witness_quantum(fam->state(x), Cut{"A", "B"});
                const double as = w.min_eigenvalue();
                csv << fmt(x) << "," << fmt(cf) << "," << fmt(as) << "," << (as < -opts.tol ? "true" : "false")
                    << "\n";
                closed.x.push_back(x);
                closed.y.push_back(cf);
                assembled.x.push_back(x);
                assembled.y.push_back(as);
            }
            series = {closed, assembled};
            xlabel = fam->parameter;
        } else {
            throw Error(ErrorCode::InvalidParameter,
                        "unknown sweep family '" + family + "' (tri_bell, werner_ghz, werner_w, toth_acin)");
        }
        if (!opts.svg.empty()) {
            write_text(opts.svg, render_svg(family + " sweep", xlabel, "value", series));
        }
        emit(opts, out, csv.str());
        return kExitOk;
    });
}

int cmd_dag(const std::string &mode, const std::vector<std::string> &paths, const Options &opts, std::ostream &out,
            std::ostream &err) {
    return guarded(err, [&] {
        std::vector<PartitionedDag> dags;
        for (const auto &p : paths) {
            dags.push_back(load_dag(p));
        }
        std::ostringstream text;
        json rep;
        if (mode == "show") {
            rep = json::array();
            for (std::size_t i = 0; i < dags.size(); ++i) {
                text << "# " << paths[i] << "\n" << format_dag(dags[i]);
                rep.push_back({{"path", paths[i]}, {"text", format_dag(dags[i])}});
            }
        } else if (mode == "check" || mode == "injectables") {
            if (dags.size() != 2) {
                throw Error(ErrorCode::InvalidParameter, "dag " + mode + " takes <inflation> <original>");
            }
            const auto &gp = dags[0], &g = dags[1];
            const bool infl = is_inflation(gp, g);
            if (mode == "check") {
                const bool nf = infl && is_nonfanout(gp, g);
                text << "inflation: " << (infl ? "yes" : "no") << ", nonfanout: " << (nf ? "yes" : "no") << "\n";
                rep = {{"inflation", infl}, {"nonfanout", nf}};
                try {
                    const auto ind = marginal_independent_pairs(gp);
                    json pairs = json::array();
                    text << "independent pairs:";
                    for (const auto &[a, b] : ind) {
                        text << " (" << a << "," << b << ")";
                        pairs.push_back({a, b});
                    }
                    text << "\n";
                    rep["independent_pairs"] = pairs;
                } catch (const Error &e) {
                    if (e.code() != ErrorCode::NotANetwork) {
                        throw;
                    }
                }
            } else {
                if (!infl) {
                    throw Error(ErrorCode::NotAnInflation, "'" + paths[0] + "' is not an inflation of '" + paths[1] + "'");
                }
                const auto r = injectable_sets(gp, g);
                rep = json::array();
                for (std::size_t i = 0; i < r.sets.size(); ++i) {
                    std::string s = "{", im = "{";
                    for (const auto &n : r.sets[i]) {
                        s += (s.size() > 1 ? "," : "") + n;
                    }
                    for (const auto &n : r.images[i]) {
                        im += (im.size() > 1 ? "," : "") + n;
                    }
                    text << s << "} -> " << im << "}\n";
                    rep.push_back({{"set", r.sets[i]}, {"image", r.images[i]}});
                }
            }
        } else {
            throw Error(ErrorCode::InvalidParameter, "dag mode must be check, injectables or show; got '" + mode + "'");
        }
        emit(opts, out, opts.format == Format::Json ? rep.dump(2) + "\n" : text.str());
        return kExitOk;
    });
}

int cmd_reproduce(const std::vector<std::string> &ids, const Options &opts, bool seed_given, std::ostream &out,
                  std::ostream &err) {
    return guarded(err, [&] {
        std::vector<std::string> todo;
        for (const auto &id : ids) {
            if (upper(id) == "ALL") {
                todo = claim_ids();
                break;
            }
            todo.push_back(upper(id));
        }
        if (todo.empty()) {
            throw Error(ErrorCode::InvalidParameter, "reproduce needs a claim id or 'all'");
        }
        ReproduceOptions ro;
        if (seed_given) {
            ro.seed = opts.seed;
        }
        ro.restarts = opts.restarts;
        ro.threads = opts.threads;
        std::ostringstream text;
        json rep = json::array();
        bool all_pass = true;
        for (const auto &id : todo) {
            const auto res = run_claim(id, ro);
            all_pass = all_pass && res.pass();
            text << res.id << " " << (res.pass() ? "PASS" : "FAIL") << "  " << res.title << "\n";
            json checks = json::array();
            for (const auto &c : res.checks) {
                const char *tag = c.informational ? "info" : (c.pass ? "ok" : "FAIL");
                text << "  [" << tag << "] " << c.name << ": recomputed " << fmt_short(c.recomputed);
                json jc{{"name", c.name}, {"recomputed", c.recomputed}, {"pass", c.pass},
                        {"informational", c.informational}};
                if (c.expected) {
                    text << ", expected " << fmt_short(*c.expected) << ", delta " << fmt_short(c.delta) << ", tol "
                         << fmt_short(c.tolerance);
                    jc["expected"] = *c.expected;
                    jc["delta"] = c.delta;
                    jc["tolerance"] = c.tolerance;
                }
                if (!c.note.empty()) {
                    text << " (" << c.note << ")";
                    jc["note"] = c.note;
                }
                text << "\n";
                checks.push_back(jc);
            }
            rep.push_back({{"id", res.id}, {"title", res.title}, {"pass", res.pass()}, {"checks", checks}});
        }
        emit(opts, out, opts.format == Format::Json ? rep.dump(2) + "\n" : text.str());
        return all_pass ? kExitOk : kExitError;
    });
}

int cmd_export(const std::string &family, const std::map<std::string, double> &params, bool expand,
               const Options &opts, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        const FamilySpec spec{family, params};
        StateFile f = state_file_from(spec);
        if (expand) {
            const auto r = resolve_family(spec);
            f = r.quantum ? state_file_from(*r.quantum) : state_file_from(*r.classical);
        }
        emit(opts, out, dump_state_file(f));
        return kExitOk;
    });
}

} // namespace qinflate::cli
