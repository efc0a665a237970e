#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace homtrees {

// Input validation and structural errors (parsing, non-tree inputs,
// missing edges, disconnected graphs).
class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Finite simple undirected graph on dense vertex ids 0..n-1.
// Immutable after construction; safe to share across threads.
class Graph {
public:
    Graph() = default;

    // Validates endpoints, rejects loops and duplicate edges.
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Normalized u < v, sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    // Ascending neighbor lists.
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    bool has_edge(int u, int v) const;
    bool is_connected() const; // vacuously true for n <= 1

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

// Edge-list file format: first non-comment line "n m", then m lines "u v".
// Lines whose first non-blank character is '#' are ignored, as are blank
// lines. Errors carry the 1-based line number.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

// Validated tree: connected with exactly n-1 edges. Default-constructed
// trees are empty placeholders; every populated Tree comes from from_graph.
class Tree {
public:
    Tree() = default;
    static Tree from_graph(Graph g); // throws GraphError with a witness

    const Graph& graph() const { return g_; }
    int vertex_count() const { return g_.vertex_count(); }
    int edge_count() const { return g_.vertex_count() - 1; } // k
    const std::vector<int>& leaf_set() const { return leaves_; }
    int leaf_count() const { return static_cast<int>(leaves_.size()); }
    bool is_star() const { return is_star_; }

private:
    Graph g_;
    std::vector<int> leaves_; // degree-1 vertices, ascending
    bool is_star_ = false;
};

inline Tree as_tree(const Graph& g) { return Tree::from_graph(g); }

// Skeleton = the tree with all leaves removed, relabeled to dense ids.
struct SkeletonInfo {
    Tree skeleton;
    std::vector<int> to_original;     // skeleton id -> original id, ascending
    std::vector<int> attachment;      // skeleton id -> leaves of T hanging there
    std::vector<int> skeleton_leaves; // leaves of sk(T) as ORIGINAL ids, ascending;
                                      // for a star this is the center alone

    int attachment_at(int original_vertex) const;
};

// Requires at least 3 vertices.
SkeletonInfo skeleton_info(const Tree& t);

// Deterministic spanning tree: BFS from vertex 0, neighbors ascending.
Tree spanning_tree(const Graph& g);

Graph remove_edge(const Graph& g, int u, int v);

// Small builders used throughout. path_graph/star_graph take the EDGE count.
Graph path_graph(int k);
Graph star_graph(int k);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph edgeless_graph(int n);

} // namespace homtrees
