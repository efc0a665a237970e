#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "homtrees/bignat.hpp"
#include "homtrees/graph.hpp"

namespace homtrees {

// Canonical form for free trees: root at the centroid (for a bicentroid,
// the lexicographically smaller of the two rootings) and encode each subtree
// as "(" + sorted child encodings + ")". Equal codes iff isomorphic.
std::string canonical_code(const Tree& t);

struct CanonicalTree {
    std::string code;
    int k = 0;
    int leaf_count = 0;
    Tree tree; // representative
};

// All isomorphism classes of k-edge trees, sorted by code. 1 <= k <= 12.
std::vector<CanonicalTree> enumerate_free_trees(int k);

std::vector<CanonicalTree> filter_by_leaves(const std::vector<CanonicalTree>& trees,
                                            int leaves);

// Minimum adjacency bitmask over all vertex relabelings. n <= 8.
std::uint64_t canonical_adjacency_mask(const Graph& g);
Graph graph_from_mask(int n, std::uint64_t mask);

// All connected graphs up to isomorphism with 1..max_n vertices (max_n <= 7),
// grown by vertex augmentation and deduplicated by canonical mask.
// Deterministic: ascending n, then ascending canonical mask.
std::vector<Graph> all_connected_graphs(int max_n);

// `count` graphs on n vertices with i.i.d. edges of probability edge_prob.
// Deterministic for a fixed seed.
std::vector<Graph> random_graph_suite(int count, int n, double edge_prob,
                                      std::uint64_t seed);

struct SuiteSpec {
    enum class Kind { all_connected, random } kind = Kind::all_connected;
    int max_n = 0;          // all_connected
    int count = 0, n = 0;   // random
    double edge_prob = 0.0; // random
};
// "all:N" or "random:COUNT,N,P".
SuiteSpec parse_suite_spec(std::string_view text);
std::vector<Graph> image_suite(const SuiteSpec& spec, std::uint64_t seed = 0);

// Empirical restriction of the hom-count order to a finite image suite.
// witness[i][j] = index of the first image refuting tree_i >= tree_j,
// or -1 when tree_i dominates tree_j on the whole suite. A finite suite can
// refute a relation but never prove it.
struct OrderRelation {
    std::vector<CanonicalTree> trees;
    std::vector<Graph> suite;
    std::vector<std::vector<BigNat>> counts; // [tree][image]
    std::vector<std::vector<int>> witness;   // [i][j]

    bool consistent(int i, int j) const { return witness[i][j] < 0; }
};
OrderRelation empirical_order(std::vector<CanonicalTree> trees,
                              std::vector<Graph> suite, int jobs = 1);

// max over k-edge trees with L leaves is non-decreasing in L, per image.
struct ClassMaxViolation {
    int leaves = 0, image = 0;
    BigNat lower_max, upper_max;
};
struct ClassMaxReport {
    int k = 0;
    std::vector<ClassMaxViolation> violations;
    bool ok() const { return violations.empty(); }
};
ClassMaxReport class_max_check(int k, const std::vector<Graph>& suite,
                               int jobs = 1);

// Transitive reduction of the never-refuted relation; trees with identical
// count vectors collapse into one node.
struct HasseDiagram {
    std::vector<std::vector<int>> nodes;  // member tree indices, ascending
    std::vector<std::pair<int, int>> arcs; // dominated node -> dominating node
};
HasseDiagram hasse(const OrderRelation& rel);

std::string dot_export(const HasseDiagram& d, const OrderRelation& rel);
std::string relation_export(const OrderRelation& rel);

} // namespace homtrees
