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
#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "qinflate/dag.hpp"

using namespace qinflate;

namespace {

// Ancestors by repeated parent expansion to a fixed point.
NodeSet fixed_point_ancestors(const PartitionedDag &g, NodeSet s) {
    for (bool grew = true; grew;) {
        grew = false;
        for (const auto &[p, c] : g.edges()) {
            if (s.count(c) && !s.count(p)) {
                s.insert(p);
                grew = true;
            }
        }
    }
    return s;
}

} // namespace

TEST(Dag, TriangleShape) {
    auto t = build_triangle();
    EXPECT_EQ(t.visible(), (NodeSet{"A", "B", "C"}));
    EXPECT_EQ(t.latent(), (NodeSet{"L", "M", "N"}));
    EXPECT_EQ(t.parents("A"), (NodeSet{"L", "M"}));
    EXPECT_EQ(t.parents("B"), (NodeSet{"M", "N"}));
    EXPECT_EQ(t.parents("C"), (NodeSet{"L", "N"}));
    for (const auto &l : t.latent()) {
        EXPECT_TRUE(t.parents(l).empty());
    }
}

TEST(Dag, ValidationErrors) {
    const DagNode a{"A", NodeKind::Visible, "A", 0}, b{"B", NodeKind::Visible, "B", 0};
    const DagNode l{"L", NodeKind::Latent, "L", 0};
    EXPECT_QERROR(PartitionedDag({a, a}, {}), DuplicateLabel);
    EXPECT_QERROR(PartitionedDag({a}, {{"A", "Z"}}), UnknownLabel);
    EXPECT_QERROR(PartitionedDag({a, b}, {{"A", "B"}, {"B", "A"}}), CyclicGraph);
    EXPECT_QERROR(PartitionedDag({a}, {{"A", "A"}}), CyclicGraph);
    EXPECT_QERROR(PartitionedDag({a, l}, {{"A", "L"}}), InvalidParameter);
    const DagNode a1{"A1", NodeKind::Visible, "A", 1};
    EXPECT_QERROR(PartitionedDag({a, a1}, {}), InvalidParameter);
}

TEST(Dag, AncestralClosureMatchesFixedPoint) {
    auto g = build_cut_inflation("A", "B");
    const auto vis = g.visible();
    const std::vector<std::string> v(vis.begin(), vis.end());
    for (std::size_t mask = 1; mask < 8; ++mask) {
        NodeSet s;
        for (std::size_t i = 0; i < 3; ++i) {
            if (mask & (1U << i)) {
                s.insert(v[i]);
            }
        }
        EXPECT_EQ(g.ancestral_closure(s), fixed_point_ancestors(g, s));
    }
}

TEST(Dag, BaseNames) {
    EXPECT_EQ(derive_base_name("A1", 1), "A");
    EXPECT_EQ(derive_base_name("M2", 2), "M");
    EXPECT_EQ(derive_base_name("A", 0), "A");
}

TEST(Inflation, CutInflationsOfTriangle) {
    const auto tri = build_triangle();
    for (const auto &[x, y] : std::vector<std::pair<std::string, std::string>>{{"A", "B"}, {"A", "C"}, {"B", "C"}}) {
        auto g = build_cut_inflation(x, y);
        EXPECT_TRUE(is_inflation(g, tri));
        EXPECT_TRUE(is_nonfanout(g, tri));
        EXPECT_TRUE(derive_cut(x, y).valid());
        auto ind = marginal_independent_pairs(g);
        EXPECT_EQ(ind, (std::set<NodePair>{{x + "1", y + "1"}}));
    }
    EXPECT_QERROR(build_cut_inflation("A", "A"), DomainError);
    // The triangle is trivially an inflation of itself.
    EXPECT_TRUE(is_inflation(tri, tri));
    EXPECT_TRUE(is_nonfanout(tri, tri));
}

TEST(Inflation, AbCutInjectables) {
    const auto tri = build_triangle();
    auto r = injectable_sets(build_cut_inflation("A", "B"), tri);
    const std::vector<NodeSet> want{{"A1"}, {"B1"}, {"C1"}, {"A1", "C1"}, {"B1", "C1"}};
    EXPECT_EQ(r.sets, want);
    ASSERT_EQ(r.images.size(), want.size());
    EXPECT_EQ(r.images[3], (NodeSet{"A", "C"}));
    EXPECT_FALSE(is_injectable(build_cut_inflation("A", "B"), tri, {"A1", "B1"}));
    EXPECT_FALSE(is_injectable(build_cut_inflation("A", "B"), tri, {"A1", "B1", "C1"}));
}

TEST(Inflation, FanoutDetected) {
    // One latent feeding two copies of A.
    std::vector<DagNode> nodes{{"A1", NodeKind::Visible, "A", 1}, {"A2", NodeKind::Visible, "A", 2},
                               {"L1", NodeKind::Latent, "L", 1}, {"M1", NodeKind::Latent, "M", 1},
                               {"M2", NodeKind::Latent, "M", 2}};
    PartitionedDag g(nodes, {{"L1", "A1"}, {"L1", "A2"}, {"M1", "A1"}, {"M2", "A2"}});
    PartitionedDag base({{"A", NodeKind::Visible, "A", 0}, {"L", NodeKind::Latent, "L", 0},
                         {"M", NodeKind::Latent, "M", 0}},
                        {{"L", "A"}, {"M", "A"}});
    EXPECT_TRUE(is_inflation(g, base));
    EXPECT_FALSE(is_nonfanout(g, base));
}

TEST(Inflation, NotAnInflationAndUnknownBase) {
    const auto tri = build_triangle();
    // A1 misses its M parent.
    std::vector<DagNode> nodes{{"A1", NodeKind::Visible, "A", 1}, {"L1", NodeKind::Latent, "L", 1}};
    PartitionedDag partial(nodes, {{"L1", "A1"}});
    EXPECT_FALSE(is_inflation(partial, tri));
    EXPECT_QERROR(injectable_sets(partial, tri), NotAnInflation);
    PartitionedDag stray({{"Q1", NodeKind::Visible, "Q", 1}}, {});
    EXPECT_QERROR(is_inflation(stray, tri), UnknownBase);
    PartitionedDag chain({{"A", NodeKind::Visible, "A", 0}, {"B", NodeKind::Visible, "B", 0}}, {{"A", "B"}});
    EXPECT_QERROR(marginal_independent_pairs(chain), NotANetwork);
}

TEST(TextFormat, ParseFormatRoundTrip) {
    for (const auto &g : {build_triangle(), build_cut_inflation("B", "C")}) {
        const auto text = format_dag(g);
        auto back = parse_dag(text);
        EXPECT_EQ(back.nodes(), g.nodes());
        EXPECT_EQ(back.edges(), g.edges());
    }
    auto g = parse_dag("# comment\nnode X7 visible copy=7 base=A\nnode L1 latent copy=1\n\nedge L1 X7\n");
    EXPECT_EQ(g.node("X7").base_name, "A");
    EXPECT_EQ(g.node("X7").copy_index, 7);
}

TEST(TextFormat, Errors) {
    EXPECT_QERROR(parse_dag("node A sideways\n"), ParseError);
    EXPECT_QERROR(parse_dag("frob A\n"), ParseError);
    EXPECT_QERROR(parse_dag("node A visible copy=x\n"), ParseError);
    EXPECT_QERROR(parse_dag("node A visible\nnode A visible\n"), DuplicateLabel);
    EXPECT_QERROR(parse_dag("node A visible\nnode B visible\nedge A B\nedge B A\n"), CyclicGraph);
    EXPECT_QERROR(load_dag("/nonexistent/file.dag"), IoError);
}
