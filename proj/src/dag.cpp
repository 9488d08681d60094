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
#include "qinflate/dag.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "qinflate/error.hpp"

namespace qinflate {

PartitionedDag::PartitionedDag(std::vector<DagNode> nodes, std::set<Edge> edges) : edges_(std::move(edges)) {
    bool any_zero = false, any_copy = false;
    for (auto &n : nodes) {
        if (n.name.empty()) {
            throw Error(ErrorCode::InvalidParameter, "node with empty name");
        }
        if (n.copy_index < 0) {
            throw Error(ErrorCode::InvalidParameter, "node '" + n.name + "' has a negative copy index");
        }
        if (n.base_name.empty()) {
            n.base_name = derive_base_name(n.name, n.copy_index);
        }
        (n.copy_index == 0 ? any_zero : any_copy) = true;
        if (!nodes_.emplace(n.name, n).second) {
            throw Error(ErrorCode::DuplicateLabel, "node '" + n.name + "' declared twice");
        }
    }
    if (any_zero && any_copy) {
        throw Error(ErrorCode::InvalidParameter, "copy index 0 is reserved for original DAGs; do not mix it with copies");
    }
    for (const auto &[p, c] : edges_) {
        if (!has_node(p) || !has_node(c)) {
            throw Error(ErrorCode::UnknownLabel, "edge " + p + " -> " + c + " names an undeclared node");
        }
        if (p == c) {
            throw Error(ErrorCode::CyclicGraph, "self loop on '" + p + "'");
        }
        if (nodes_.at(c).kind == NodeKind::Latent) {
            throw Error(ErrorCode::InvalidParameter, "latent node '" + c + "' must not have parents");
        }
    }
    // Kahn's algorithm.
    std::map<std::string, int> indeg;
    for (const auto &[name, n] : nodes_) {
        indeg[name] = 0;
    }
    for (const auto &e : edges_) {
        ++indeg[e.second];
    }
    std::vector<std::string> ready;
    for (const auto &[name, d] : indeg) {
        if (d == 0) {
            ready.push_back(name);
        }
    }
    std::size_t seen = 0;
    while (!ready.empty()) {
        auto cur = ready.back();
        ready.pop_back();
        ++seen;
        for (const auto &ch : children(cur)) {
            if (--indeg[ch] == 0) {
                ready.push_back(ch);
            }
        }
    }
    if (seen != nodes_.size()) {
        throw Error(ErrorCode::CyclicGraph, "graph contains a directed cycle");
    }
}

const DagNode &PartitionedDag::node(const std::string &name) const {
    auto it = nodes_.find(name);
    if (it == nodes_.end()) {
        throw Error(ErrorCode::UnknownLabel, "no node named '" + name + "'");
    }
    return it->second;
}

NodeSet PartitionedDag::visible() const {
    NodeSet out;
    for (const auto &[name, n] : nodes_) {
        if (n.kind == NodeKind::Visible) {
            out.insert(name);
        }
    }
    return out;
}

NodeSet PartitionedDag::latent() const {
    NodeSet out;
    for (const auto &[name, n] : nodes_) {
        if (n.kind == NodeKind::Latent) {
            out.insert(name);
        }
    }
    return out;
}

NodeSet PartitionedDag::parents(const std::string &name) const {
    NodeSet out;
    for (const auto &[p, c] : edges_) {
        if (c == name) {
            out.insert(p);
        }
    }
    return out;
}

NodeSet PartitionedDag::children(const std::string &name) const {
    NodeSet out;
    for (const auto &[p, c] : edges_) {
        if (p == name) {
            out.insert(c);
        }
    }
    return out;
}

NodeSet PartitionedDag::ancestral_closure(const NodeSet &of) const {
    NodeSet out;
    std::vector<std::string> stack(of.begin(), of.end());
    while (!stack.empty()) {
        auto cur = stack.back();
        stack.pop_back();
        (void)node(cur);
        if (!out.insert(cur).second) {
            continue;
        }
        for (const auto &p : parents(cur)) {
            stack.push_back(p);
        }
    }
    return out;
}

std::string derive_base_name(const std::string &name, int copy_index) {
    if (copy_index == 0) {
        return name;
    }
    const std::string suffix = std::to_string(copy_index);
    if (name.size() > suffix.size() && name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0) {
        std::string base = name.substr(0, name.size() - suffix.size());
        if (base.size() > 1 && base.back() == '_') {
            base.pop_back();
        }
        return base;
    }
    return name;
}

PartitionedDag build_triangle() {
    std::vector<DagNode> nodes{{"A", NodeKind::Visible, "A", 0}, {"B", NodeKind::Visible, "B", 0},
                               {"C", NodeKind::Visible, "C", 0}, {"L", NodeKind::Latent, "L", 0},
                               {"M", NodeKind::Latent, "M", 0},  {"N", NodeKind::Latent, "N", 0}};
    std::set<Edge> edges{{"L", "A"}, {"M", "A"}, {"M", "B"}, {"N", "B"}, {"L", "C"}, {"N", "C"}};
    return {nodes, edges};
}

PartitionedDag build_cut_inflation(const std::string &x, const std::string &y) {
    const NodeSet vis{"A", "B", "C"};
    if (x == y || vis.count(x) == 0 || vis.count(y) == 0) {
        throw Error(ErrorCode::DomainError, "cut must name two distinct nodes among A, B, C");
    }
    const auto tri = build_triangle();
    std::string shared;
    for (const auto &l : tri.latent()) {
        auto ch = tri.children(l);
        if (ch.count(x) != 0 && ch.count(y) != 0) {
            shared = l;
        }
    }
    std::vector<DagNode> nodes;
    std::set<Edge> edges;
    for (const auto &v : vis) {
        nodes.push_back({v + "1", NodeKind::Visible, v, 1});
    }
    for (const auto &l : tri.latent()) {
        nodes.push_back({l + "1", NodeKind::Latent, l, 1});
    }
    nodes.push_back({shared + "2", NodeKind::Latent, shared, 2});
    for (const auto &[p, c] : tri.edges()) {
        const int copy = (p == shared && c == x) ? 2 : 1;
        edges.insert({p + std::to_string(copy), c + "1"});
    }
    return {nodes, edges};
}

namespace {

// Ancestral subgraph of `set` in gp, relabelled to base names, compared with the
// ancestral subgraph of the image in g. One copy per base makes this a bijection.
bool equivalent_up_to_copies(const PartitionedDag &gp, const PartitionedDag &g, const NodeSet &set) {
    const auto anc = gp.ancestral_closure(set);
    std::map<std::string, std::string> to_base;
    NodeSet bases;
    for (const auto &n : anc) {
        const auto &node = gp.node(n);
        if (!g.has_node(node.base_name)) {
            throw Error(ErrorCode::UnknownBase, "base node '" + node.base_name + "' of '" + n + "' is not in G");
        }
        if (!bases.insert(node.base_name).second) {
            return false;
        }
        if (g.node(node.base_name).kind != node.kind) {
            return false;
        }
        to_base[n] = node.base_name;
    }
    NodeSet image;
    for (const auto &n : set) {
        image.insert(gp.node(n).base_name);
    }
    if (g.ancestral_closure(image) != bases) {
        return false;
    }
    std::set<Edge> mapped;
    for (const auto &[p, c] : gp.edges()) {
        if (anc.count(p) != 0 && anc.count(c) != 0) {
            mapped.insert({to_base[p], to_base[c]});
        }
    }
    std::set<Edge> original;
    for (const auto &[p, c] : g.edges()) {
        if (bases.count(p) != 0 && bases.count(c) != 0) {
            original.insert({p, c});
        }
    }
    return mapped == original;
}

void require_inflation(const PartitionedDag &gp, const PartitionedDag &g) {
    if (!is_inflation(gp, g)) {
        throw Error(ErrorCode::NotAnInflation, "first DAG is not an inflation of the second");
    }
}

} // namespace

bool is_inflation(const PartitionedDag &gp, const PartitionedDag &g) {
    for (const auto &[name, n] : gp.nodes()) {
        if (!g.has_node(n.base_name)) {
            throw Error(ErrorCode::UnknownBase, "base node '" + n.base_name + "' of '" + name + "' is not in G");
        }
    }
    for (const auto &[name, n] : gp.nodes()) {
        if (!equivalent_up_to_copies(gp, g, {name})) {
            return false;
        }
    }
    return true;
}

bool is_injectable(const PartitionedDag &gp, const PartitionedDag &g, const NodeSet &visible_subset) {
    for (const auto &n : visible_subset) {
        if (gp.node(n).kind != NodeKind::Visible) {
            return false;
        }
    }
    return !visible_subset.empty() && equivalent_up_to_copies(gp, g, visible_subset);
}

InjectableSetReport injectable_sets(const PartitionedDag &gp, const PartitionedDag &g) {
    require_inflation(gp, g);
    const auto vis_set = gp.visible();
    const std::vector<std::string> vis(vis_set.begin(), vis_set.end());
    if (vis.size() > 20) {
        throw Error(ErrorCode::DomainError, "too many visible nodes for exhaustive enumeration");
    }
    std::vector<NodeSet> found;
    for (std::size_t mask = 1; mask < (std::size_t{1} << vis.size()); ++mask) {
        NodeSet s;
        for (std::size_t i = 0; i < vis.size(); ++i) {
            if (mask & (std::size_t{1} << i)) {
                s.insert(vis[i]);
            }
        }
        if (is_injectable(gp, g, s)) {
            found.push_back(s);
        }
    }
    std::sort(found.begin(), found.end(), [](const NodeSet &a, const NodeSet &b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    InjectableSetReport rep;
    for (const auto &s : found) {
        NodeSet img;
        for (const auto &n : s) {
            img.insert(gp.node(n).base_name);
        }
        rep.sets.push_back(s);
        rep.images.push_back(img);
    }
    return rep;
}

bool is_nonfanout(const PartitionedDag &gp, const PartitionedDag &g) {
    require_inflation(gp, g);
    for (const auto &l : gp.latent()) {
        NodeSet bases;
        for (const auto &c : gp.children(l)) {
            if (!bases.insert(gp.node(c).base_name).second) {
                return false;
            }
        }
    }
    return true;
}

std::set<NodePair> marginal_independent_pairs(const PartitionedDag &g) {
    for (const auto &[p, c] : g.edges()) {
        if (g.node(p).kind != NodeKind::Latent || g.node(c).kind != NodeKind::Visible) {
            throw Error(ErrorCode::NotANetwork, "edge " + p + " -> " + c + " is not latent-to-visible");
        }
    }
    const auto vis = g.visible();
    std::set<NodePair> out;
    for (auto i = vis.begin(); i != vis.end(); ++i) {
        const auto ai = g.ancestral_closure({*i});
        for (auto j = std::next(i); j != vis.end(); ++j) {
            const auto aj = g.ancestral_closure({*j});
            bool common = false;
            for (const auto &n : ai) {
                if (aj.count(n) != 0 && g.node(n).kind == NodeKind::Latent) {
                    common = true;
                }
            }
            if (!common) {
                out.insert({*i, *j});
            }
        }
    }
    return out;
}

bool CutDerivation::valid() const { return inflation && nonfanout && independence_ok && pairs_injectable; }

CutDerivation derive_cut(const std::string &x, const std::string &y) {
    const auto tri = build_triangle();
    const auto gp = build_cut_inflation(x, y);
    std::string z;
    for (const auto &v : tri.visible()) {
        if (v != x && v != y) {
            z = v;
        }
    }
    CutDerivation d;
    d.inflation = is_inflation(gp, tri);
    if (!d.inflation) {
        return d;
    }
    d.nonfanout = is_nonfanout(gp, tri);
    d.independent = marginal_independent_pairs(gp);
    const NodePair want = x < y ? NodePair{x + "1", y + "1"} : NodePair{y + "1", x + "1"};
    d.independence_ok = d.independent == std::set<NodePair>{want};
    d.pairs_injectable = is_injectable(gp, tri, {x + "1", z + "1"}) && is_injectable(gp, tri, {y + "1", z + "1"}) &&
                         !is_injectable(gp, tri, {x + "1", y + "1"});
    return d;
}

PartitionedDag parse_dag(const std::string &text) {
    std::vector<DagNode> nodes;
    std::set<std::string> names;
    std::set<Edge> edges;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string &msg) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) {
            tok.push_back(t);
        }
        if (tok.empty()) {
            continue;
        }
        if (tok[0] == "node") {
            if (tok.size() < 3) {
                fail("expected `node <name> visible|latent [copy=<k>]`");
            }
            DagNode n{tok[1], NodeKind::Visible, "", 0};
            if (tok[2] == "visible") {
                n.kind = NodeKind::Visible;
            } else if (tok[2] == "latent") {
                n.kind = NodeKind::Latent;
            } else {
                fail("node kind must be visible or latent, got '" + tok[2] + "'");
            }
            for (std::size_t i = 3; i < tok.size(); ++i) {
                if (tok[i].rfind("copy=", 0) == 0) {
                    try {
                        std::size_t used = 0;
                        n.copy_index = std::stoi(tok[i].substr(5), &used);
                        if (used != tok[i].size() - 5) {
                            fail("bad copy index '" + tok[i] + "'");
                        }
                    } catch (const std::logic_error &) {
                        fail("bad copy index '" + tok[i] + "'");
                    }
                } else if (tok[i].rfind("base=", 0) == 0 && tok[i].size() > 5) {
                    n.base_name = tok[i].substr(5);
                } else {
                    fail("unknown node attribute '" + tok[i] + "'");
                }
            }
            if (!names.insert(n.name).second) {
                throw Error(ErrorCode::DuplicateLabel, "line " + std::to_string(lineno) + ": node '" + n.name +
                                                           "' declared twice");
            }
            nodes.push_back(n);
        } else if (tok[0] == "edge") {
            if (tok.size() != 3) {
                fail("expected `edge <parent> <child>`");
            }
            if (!edges.insert({tok[1], tok[2]}).second) {
                throw Error(ErrorCode::DuplicateLabel, "line " + std::to_string(lineno) + ": edge " + tok[1] +
                                                           " -> " + tok[2] + " declared twice");
            }
        } else {
            fail("unknown directive '" + tok[0] + "'");
        }
    }
    for (const auto &[p, c] : edges) {
        if (names.count(p) == 0 || names.count(c) == 0) {
            throw Error(ErrorCode::ParseError, "edge " + p + " -> " + c + " names an undeclared node");
        }
    }
    return {nodes, edges};
}

PartitionedDag load_dag(const std::string &path) {
    std::ifstream f(path);
    if (!f) {
        throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
    }
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_dag(ss.str());
}

std::string format_dag(const PartitionedDag &g) {
    std::ostringstream os;
    for (const auto &[name, n] : g.nodes()) {
        os << "node " << name << ' ' << (n.kind == NodeKind::Visible ? "visible" : "latent");
        if (n.copy_index != 0) {
            os << " copy=" << n.copy_index;
        }
        if (n.base_name != derive_base_name(name, n.copy_index)) {
            os << " base=" << n.base_name;
        }
        os << '\n';
    }
    for (const auto &[p, c] : g.edges()) {
        os << "edge " << p << ' ' << c << '\n';
    }
    return os.str();
}

} // namespace qinflate
