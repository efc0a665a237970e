#include "homtrees/graph.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace homtrees {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 0) throw GraphError("vertex count must be nonnegative");
    std::set<std::pair<int, int>> seen;
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u == v)
            throw GraphError("loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw GraphError("endpoint out of range: {" + std::to_string(u) +
                             "," + std::to_string(v) + "} with n=" +
                             std::to_string(n));
        auto e = std::minmax(u, v);
        if (!seen.insert(e).second)
            throw GraphError("duplicate edge {" + std::to_string(e.first) +
                             "," + std::to_string(e.second) + "}");
    }
    edges_.assign(seen.begin(), seen.end());
    adj_.assign(static_cast<std::size_t>(n), {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj_[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++visited;
                stack.push_back(w);
            }
        }
    }
    return visited == n_;
}

namespace {

bool blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '#';
    }
    return true;
}

bool parse_two_ints(const std::string& line, long& a, long& b) {
    std::istringstream in(line);
    if (!(in >> a >> b)) return false;
    std::string rest;
    if (in >> rest) return false;
    return true;
}

} // namespace

Graph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;

    long n = -1, m = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        if (!parse_two_ints(line, n, m) || n < 0 || m < 0)
            throw GraphError("malformed header at line " +
                             std::to_string(lineno) + ": expected \"n m\"");
        break;
    }
    if (n < 0)
        throw GraphError("malformed header: empty input");

    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    while (static_cast<long>(edges.size()) < m && std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        long u, v;
        if (!parse_two_ints(line, u, v))
            throw GraphError("malformed edge at line " + std::to_string(lineno));
        if (u == v)
            throw GraphError("loop at line " + std::to_string(lineno));
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw GraphError("endpoint out of range at line " +
                             std::to_string(lineno));
        auto e = std::minmax(u, v);
        if (!seen.insert({static_cast<int>(e.first),
                          static_cast<int>(e.second)}).second)
            throw GraphError("duplicate edge at line " + std::to_string(lineno));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (static_cast<long>(edges.size()) < m)
        throw GraphError("unexpected end of input: expected " +
                         std::to_string(m) + " edges, got " +
                         std::to_string(edges.size()));
    while (std::getline(in, line)) {
        ++lineno;
        if (!blank_or_comment(line))
            throw GraphError("unexpected trailing line " + std::to_string(lineno));
    }
    return Graph(static_cast<int>(n), edges);
}

std::string serialize_graph(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + ' ' +
                      std::to_string(g.edge_count()) + '\n';
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + ' ' + std::to_string(v) + '\n';
    return out;
}

Tree Tree::from_graph(Graph g) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    if (n == 0) throw GraphError("not a tree: no vertices");

    // BFS from 0: detects disconnection and yields a cycle witness.
    std::vector<int> parent(static_cast<std::size_t>(n), -2);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    parent[0] = -1;
    order.push_back(0);
    for (std::size_t head = 0; head < order.size(); ++head) {
        int v = order[head];
        for (int w : g.neighbors(v)) {
            if (parent[w] == -2) {
                parent[w] = v;
                order.push_back(w);
            }
        }
    }
    if (static_cast<int>(order.size()) < n) {
        int unreachable = 0;
        while (parent[unreachable] != -2) ++unreachable;
        throw GraphError("not a tree: vertex " + std::to_string(unreachable) +
                         " unreachable from 0 (" + std::to_string(n) +
                         " vertices, " + std::to_string(m) + " edges)");
    }
    if (m != n - 1) {
        for (auto [u, v] : g.edges()) {
            if (parent[u] != v && parent[v] != u)
                throw GraphError("not a tree: " + std::to_string(n) +
                                 " vertices with " + std::to_string(m) +
                                 " edges (edge {" + std::to_string(u) + "," +
                                 std::to_string(v) + "} closes a cycle)");
        }
        throw GraphError("not a tree: " + std::to_string(n) +
                         " vertices with " + std::to_string(m) + " edges");
    }

    Tree t;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 1) t.leaves_.push_back(v);
    t.is_star_ = n <= 2;
    for (int v = 0; v < n && !t.is_star_; ++v)
        if (g.degree(v) == n - 1) t.is_star_ = true;
    t.g_ = std::move(g);
    return t;
}

int SkeletonInfo::attachment_at(int original_vertex) const {
    for (std::size_t i = 0; i < to_original.size(); ++i)
        if (to_original[i] == original_vertex) return attachment[i];
    throw GraphError("vertex " + std::to_string(original_vertex) +
                     " is not a skeleton vertex");
}

SkeletonInfo skeleton_info(const Tree& t) {
    const Graph& g = t.graph();
    const int n = g.vertex_count();
    if (n < 3)
        throw GraphError("skeleton requires at least 3 vertices, got " +
                         std::to_string(n));

    std::vector<char> is_leaf(static_cast<std::size_t>(n), 0);
    for (int v : t.leaf_set()) is_leaf[v] = 1;

    std::vector<int> keep;
    for (int v = 0; v < n; ++v)
        if (!is_leaf[v]) keep.push_back(v);

    std::vector<int> new_id(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) new_id[keep[i]] = static_cast<int>(i);

    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (new_id[u] >= 0 && new_id[v] >= 0)
            edges.emplace_back(new_id[u], new_id[v]);

    SkeletonInfo info{Tree::from_graph(Graph(static_cast<int>(keep.size()), edges)),
                      keep,
                      std::vector<int>(keep.size(), 0),
                      {}};
    for (int leaf : t.leaf_set()) {
        int anchor = g.neighbors(leaf)[0];
        ++info.attachment[new_id[anchor]];
    }
    if (keep.size() == 1) {
        info.skeleton_leaves.push_back(keep[0]); // star: the center alone
    } else {
        for (std::size_t i = 0; i < keep.size(); ++i)
            if (info.skeleton.graph().degree(static_cast<int>(i)) == 1)
                info.skeleton_leaves.push_back(keep[i]);
    }
    return info;
}

Tree spanning_tree(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw GraphError("spanning_tree: empty graph");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    std::vector<std::pair<int, int>> edges;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int w : g.neighbors(v)) { // ascending
            if (!seen[w]) {
                seen[w] = 1;
                edges.emplace_back(v, w);
                queue.push_back(w);
            }
        }
    }
    if (static_cast<int>(queue.size()) < n) {
        int unreachable = 0;
        while (seen[unreachable]) ++unreachable;
        throw GraphError("spanning_tree: vertex " + std::to_string(unreachable) +
                         " unreachable from 0");
    }
    return Tree::from_graph(Graph(n, edges));
}

Graph remove_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v))
        throw GraphError("edge {" + std::to_string(u) + "," +
                         std::to_string(v) + "} not present");
    auto e = std::minmax(u, v);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges().size() - 1);
    for (auto edge : g.edges())
        if (edge != std::make_pair(e.first, e.second)) edges.push_back(edge);
    return Graph(g.vertex_count(), edges);
}

Graph path_graph(int k) {
    if (k < 0) throw GraphError("path_graph: negative edge count");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) edges.emplace_back(i, i + 1);
    return Graph(k + 1, edges);
}

Graph star_graph(int k) {
    if (k < 0) throw GraphError("star_graph: negative edge count");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= k; ++i) edges.emplace_back(0, i);
    return Graph(k + 1, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw GraphError("cycle_graph: need at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

Graph complete_graph(int n) {
    if (n < 0) throw GraphError("complete_graph: negative vertex count");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, edges);
}

Graph edgeless_graph(int n) { return Graph(n, {}); }

} // namespace homtrees
