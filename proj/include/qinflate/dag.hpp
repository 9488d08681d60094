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
 * @file dag.hpp
 * Partitioned DAGs, inflations and injectable sets.
 */
#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace qinflate {

enum class NodeKind { Visible, Latent };

struct DagNode {
    std::string name;
    NodeKind kind;
    std::string base_name;
    int copy_index;
    bool operator==(const DagNode &) const = default;
};

using Edge = std::pair<std::string, std::string>;
using NodeSet = std::set<std::string>;
using NodePair = std::pair<std::string, std::string>;

class PartitionedDag {
  public:
    PartitionedDag() = default;
    /// Throws DuplicateLabel, UnknownLabel, CyclicGraph or InvalidParameter.
    PartitionedDag(std::vector<DagNode> nodes, std::set<Edge> edges);

    [[nodiscard]] const std::map<std::string, DagNode> &nodes() const { return nodes_; }
    [[nodiscard]] const std::set<Edge> &edges() const { return edges_; }
    [[nodiscard]] const DagNode &node(const std::string &name) const;
    [[nodiscard]] bool has_node(const std::string &name) const { return nodes_.count(name) != 0; }
    [[nodiscard]] NodeSet visible() const;
    [[nodiscard]] NodeSet latent() const;
    [[nodiscard]] NodeSet parents(const std::string &name) const;
    [[nodiscard]] NodeSet children(const std::string &name) const;
    /// Ancestors including the nodes themselves.
    [[nodiscard]] NodeSet ancestral_closure(const NodeSet &of) const;

  private:
    std::map<std::string, DagNode> nodes_;
    std::set<Edge> edges_;
};

/// Base name implied by `name` and a copy index: "A1" with copy 1 gives "A".
std::string derive_base_name(const std::string &name, int copy_index);

/// A:{L,M}, B:{M,N}, C:{L,N}.
PartitionedDag build_triangle();
/// The latent shared by x and y is duplicated; x gets copy 2 of it. Throws DomainError.
PartitionedDag build_cut_inflation(const std::string &x, const std::string &y);

/// Throws UnknownBase when a node of gp has no base node in g.
bool is_inflation(const PartitionedDag &gp, const PartitionedDag &g);

struct InjectableSetReport {
    std::vector<NodeSet> sets;
    std::vector<NodeSet> images;
};

/// Every injectable set, ordered by size then lexicographically. Throws NotAnInflation.
InjectableSetReport injectable_sets(const PartitionedDag &gp, const PartitionedDag &g);
bool is_injectable(const PartitionedDag &gp, const PartitionedDag &g, const NodeSet &visible_subset);
/// Throws NotAnInflation.
bool is_nonfanout(const PartitionedDag &gp, const PartitionedDag &g);
/// Throws NotANetwork unless every edge runs latent to visible.
std::set<NodePair> marginal_independent_pairs(const PartitionedDag &g);

/// Checks that the xy-cut inflation justifies the cut witness: a nonfanout inflation of
/// the triangle where only (x1, y1) is independent and {x1, z1}, {y1, z1} are injectable.
struct CutDerivation {
    bool inflation = false;
    bool nonfanout = false;
    std::set<NodePair> independent;
    bool independence_ok = false;
    bool pairs_injectable = false;
    [[nodiscard]] bool valid() const;
};
CutDerivation derive_cut(const std::string &x, const std::string &y);

/// Text format: `node <name> visible|latent [copy=<k>] [base=<b>]`, `edge <parent> <child>`,
/// '#' comments. Throws ParseError, DuplicateLabel, CyclicGraph.
PartitionedDag parse_dag(const std::string &text);
PartitionedDag load_dag(const std::string &path);
std::string format_dag(const PartitionedDag &g);

} // namespace qinflate
