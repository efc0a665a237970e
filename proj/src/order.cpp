#include "homtrees/order.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "homtrees/hom.hpp"

namespace homtrees {

namespace {

std::string rooted_code(const Graph& g, int v, int parent) {
    std::vector<std::string> child_codes;
    for (int w : g.neighbors(v))
        if (w != parent) child_codes.push_back(rooted_code(g, w, v));
    std::sort(child_codes.begin(), child_codes.end());
    std::string out = "(";
    for (const auto& c : child_codes) out += c;
    out += ")";
    return out;
}

// One or two adjacent vertices minimizing the largest component left by
// their removal.
std::vector<int> centroids(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 1) return {0};
    std::vector<int> size(n, 1), parent(n, -2), order;
    order.reserve(n);
    parent[0] = -1;
    order.push_back(0);
    for (std::size_t head = 0; head < order.size(); ++head)
        for (int w : g.neighbors(order[head]))
            if (parent[w] == -2) {
                parent[w] = order[head];
                order.push_back(w);
            }
    for (std::size_t i = order.size(); i-- > 1;) size[parent[order[i]]] += size[order[i]];
    int best = n;
    std::vector<int> out;
    for (int v = 0; v < n; ++v) {
        int heaviest = n - size[v];
        for (int w : g.neighbors(v))
            if (w != parent[v]) heaviest = std::max(heaviest, size[w]);
        if (heaviest < best) {
            best = heaviest;
            out.assign(1, v);
        } else if (heaviest == best) {
            out.push_back(v);
        }
    }
    return out;
}

} // namespace

std::string canonical_code(const Tree& t) {
    const Graph& g = t.graph();
    std::string best;
    for (int c : centroids(g)) {
        std::string code = rooted_code(g, c, -1);
        if (best.empty() || code < best) best = std::move(code);
    }
    return best;
}

namespace {

// Decode a Beyer-Hedetniemi level sequence (levels starting at 1) into a tree:
// the parent of node i is the nearest previous node one level up.
Tree tree_from_levels(const std::vector<int>& levels) {
    const int n = static_cast<int>(levels.size());
    std::vector<std::pair<int, int>> edges;
    std::vector<int> last_at_level(n + 2, -1);
    for (int i = 0; i < n; ++i) {
        if (levels[i] > 1) edges.emplace_back(last_at_level[levels[i] - 1], i);
        last_at_level[levels[i]] = i;
    }
    return Tree::from_graph(Graph(n, edges));
}

} // namespace

std::vector<CanonicalTree> enumerate_free_trees(int k) {
    if (k < 1 || k > 12)
        throw std::invalid_argument("enumerate_free_trees: k must be in 1..12");
    const int n = k + 1;
    std::map<std::string, CanonicalTree> seen;

    // Beyer-Hedetniemi successor walk over canonical rooted level sequences.
    std::vector<int> levels(n);
    std::iota(levels.begin(), levels.end(), 1);
    while (true) {
        Tree t = tree_from_levels(levels);
        std::string code = canonical_code(t);
        if (!seen.count(code)) {
            CanonicalTree entry{code, k, t.leaf_count(), std::move(t)};
            seen.emplace(std::move(code), std::move(entry));
        }
        int p = -1;
        for (int i = 0; i < n; ++i)
            if (levels[i] > 2) p = i;
        if (p < 0) break;
        int q = -1;
        for (int i = 0; i < p; ++i)
            if (levels[i] == levels[p] - 1) q = i;
        for (int i = p; i < n; ++i) levels[i] = levels[i - (p - q)];
    }

    std::vector<CanonicalTree> out;
    out.reserve(seen.size());
    for (auto& [code, entry] : seen) out.push_back(std::move(entry));
    return out;
}

std::vector<CanonicalTree> filter_by_leaves(const std::vector<CanonicalTree>& trees,
                                            int leaves) {
    std::vector<CanonicalTree> out;
    for (const auto& t : trees)
        if (t.leaf_count == leaves) out.push_back(t);
    return out;
}

namespace {

inline int pair_bit(int i, int j, int n) {
    // index of unordered pair (i<j) in lexicographic order
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::uint64_t mask_of(const Graph& g) {
    std::uint64_t mask = 0;
    const int n = g.vertex_count();
    for (auto [u, v] : g.edges()) mask |= 1ull << pair_bit(u, v, n);
    return mask;
}

std::uint64_t permuted_mask(std::uint64_t mask, const std::vector<int>& perm,
                            int n) {
    std::uint64_t out = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (mask & (1ull << pair_bit(i, j, n))) {
                int a = perm[i], b = perm[j];
                if (a > b) std::swap(a, b);
                out |= 1ull << pair_bit(a, b, n);
            }
    return out;
}

} // namespace

std::uint64_t canonical_adjacency_mask(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 8)
        throw std::invalid_argument("canonical_adjacency_mask: n must be <= 8");
    const std::uint64_t mask = mask_of(g);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = mask;
    while (std::next_permutation(perm.begin(), perm.end()))
        best = std::min(best, permuted_mask(mask, perm, n));
    return best;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (mask & (1ull << pair_bit(i, j, n))) edges.emplace_back(i, j);
    return Graph(n, edges);
}

std::vector<Graph> all_connected_graphs(int max_n) {
    if (max_n < 1 || max_n > 7)
        throw std::invalid_argument("all_connected_graphs: max_n must be in 1..7");
    std::vector<Graph> out;
    std::vector<Graph> prev{Graph(1, {})};
    out.push_back(prev[0]);
    for (int n = 2; n <= max_n; ++n) {
        // Every connected graph on n vertices is some connected (n-1)-graph
        // plus a new vertex wired to a nonempty subset (delete a non-cut
        // vertex to see this), so augmenting every parent covers everything.
        std::set<std::uint64_t> level;
        for (const Graph& parent : prev) {
            auto base_edges = parent.edges();
            for (int subset = 1; subset < (1 << (n - 1)); ++subset) {
                auto edges = base_edges;
                for (int v = 0; v < n - 1; ++v)
                    if (subset & (1 << v)) edges.emplace_back(v, n - 1);
                level.insert(canonical_adjacency_mask(Graph(n, edges)));
            }
        }
        std::vector<Graph> cur;
        cur.reserve(level.size());
        for (std::uint64_t mask : level) {
            cur.push_back(graph_from_mask(n, mask));
            out.push_back(cur.back());
        }
        prev = std::move(cur);
    }
    return out;
}

namespace {

// Portable deterministic uniform double in [0,1).
double unit_double(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

} // namespace

std::vector<Graph> random_graph_suite(int count, int n, double edge_prob,
                                      std::uint64_t seed) {
    if (count < 1 || n < 1)
        throw std::invalid_argument("random_graph_suite: count and n must be >= 1");
    if (!(edge_prob >= 0.0 && edge_prob <= 1.0))
        throw std::invalid_argument("random_graph_suite: edge_prob must be in [0,1]");
    SplitMix64 rng{seed};
    std::vector<Graph> out;
    out.reserve(count);
    for (int c = 0; c < count; ++c) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (unit_double(rng.next()) < edge_prob) edges.emplace_back(i, j);
        out.emplace_back(n, edges);
    }
    return out;
}

SuiteSpec parse_suite_spec(std::string_view text) {
    SuiteSpec spec;
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("suite spec must be all:N or random:COUNT,N,P");
    std::string kind{text.substr(0, colon)};
    std::string rest{text.substr(colon + 1)};
    if (kind == "all") {
        spec.kind = SuiteSpec::Kind::all_connected;
        std::istringstream in(rest);
        char junk;
        if (!(in >> spec.max_n) || (in >> junk))
            throw std::invalid_argument("bad all:N suite spec");
    } else if (kind == "random") {
        spec.kind = SuiteSpec::Kind::random;
        std::istringstream in(rest);
        char c1, c2, junk;
        if (!(in >> spec.count >> c1 >> spec.n >> c2 >> spec.edge_prob) ||
            c1 != ',' || c2 != ',' || (in >> junk))
            throw std::invalid_argument("bad random:COUNT,N,P suite spec");
    } else {
        throw std::invalid_argument("unknown suite kind: " + kind);
    }
    return spec;
}

std::vector<Graph> image_suite(const SuiteSpec& spec, std::uint64_t seed) {
    if (spec.kind == SuiteSpec::Kind::all_connected)
        return all_connected_graphs(spec.max_n);
    return random_graph_suite(spec.count, spec.n, spec.edge_prob, seed);
}

namespace {

void parallel_for(int items, int jobs, const std::function<void(int)>& body) {
    jobs = std::max(1, std::min(jobs, items));
    if (jobs == 1) {
        for (int i = 0; i < items; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int w = 0; w < jobs; ++w)
        pool.emplace_back([&, w] {
            for (int i = w; i < items; i += jobs) body(i);
        });
    for (auto& th : pool) th.join();
}

std::vector<std::vector<BigNat>> count_matrix(const std::vector<CanonicalTree>& trees,
                                              const std::vector<Graph>& suite,
                                              int jobs) {
    std::vector<std::vector<BigNat>> counts(trees.size(),
                                            std::vector<BigNat>(suite.size()));
    parallel_for(static_cast<int>(trees.size()), jobs, [&](int i) {
        for (std::size_t j = 0; j < suite.size(); ++j)
            counts[i][j] = hom_tree(trees[i].tree, suite[j]);
    });
    return counts;
}

} // namespace

OrderRelation empirical_order(std::vector<CanonicalTree> trees,
                              std::vector<Graph> suite, int jobs) {
    for (const auto& t : trees)
        if (t.k != trees.front().k)
            throw std::invalid_argument("empirical_order: mixed edge counts");
    OrderRelation rel;
    rel.counts = count_matrix(trees, suite, jobs);
    rel.trees = std::move(trees);
    rel.suite = std::move(suite);
    const int m = static_cast<int>(rel.trees.size());
    rel.witness.assign(m, std::vector<int>(m, -1));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (std::size_t hidx = 0; hidx < rel.suite.size(); ++hidx)
                if (rel.counts[i][hidx] < rel.counts[j][hidx]) {
                    rel.witness[i][j] = static_cast<int>(hidx);
                    break;
                }
    return rel;
}

ClassMaxReport class_max_check(int k, const std::vector<Graph>& suite, int jobs) {
    ClassMaxReport rep;
    rep.k = k;
    auto trees = enumerate_free_trees(k);
    auto counts = count_matrix(trees, suite, jobs);
    std::map<int, std::vector<int>> by_leaves;
    for (std::size_t i = 0; i < trees.size(); ++i)
        by_leaves[trees[i].leaf_count].push_back(static_cast<int>(i));
    for (std::size_t hidx = 0; hidx < suite.size(); ++hidx) {
        for (int leaves = 2; leaves < k; ++leaves) {
            auto lo = by_leaves.find(leaves);
            auto hi = by_leaves.find(leaves + 1);
            if (lo == by_leaves.end() || hi == by_leaves.end()) continue;
            auto class_max = [&](const std::vector<int>& members) {
                BigNat best;
                for (int i : members)
                    if (counts[i][hidx] > best) best = counts[i][hidx];
                return best;
            };
            BigNat lower = class_max(lo->second);
            BigNat upper = class_max(hi->second);
            if (lower > upper)
                rep.violations.push_back({leaves, static_cast<int>(hidx),
                                          lower, upper});
        }
    }
    return rep;
}

HasseDiagram hasse(const OrderRelation& rel) {
    const int m = static_cast<int>(rel.trees.size());
    HasseDiagram d;
    // Mutually consistent pairs have identical count vectors; collapse them.
    std::vector<int> node_of(m, -1);
    for (int i = 0; i < m; ++i) {
        if (node_of[i] >= 0) continue;
        node_of[i] = static_cast<int>(d.nodes.size());
        d.nodes.push_back({i});
        for (int j = i + 1; j < m; ++j)
            if (node_of[j] < 0 && rel.consistent(i, j) && rel.consistent(j, i)) {
                node_of[j] = node_of[i];
                d.nodes.back().push_back(j);
            }
    }
    const int nn = static_cast<int>(d.nodes.size());
    // less[a][b]: node b strictly dominates node a on the whole suite.
    std::vector<std::vector<char>> less(nn, std::vector<char>(nn, 0));
    for (int a = 0; a < nn; ++a)
        for (int b = 0; b < nn; ++b) {
            if (a == b) continue;
            const int i = d.nodes[a][0], j = d.nodes[b][0];
            less[a][b] = rel.consistent(j, i) ? 1 : 0;
        }
    for (int a = 0; a < nn; ++a)
        for (int b = 0; b < nn; ++b) {
            if (!less[a][b]) continue;
            bool covered = true;
            for (int c = 0; c < nn; ++c)
                if (less[a][c] && less[c][b]) {
                    covered = false;
                    break;
                }
            if (covered) d.arcs.emplace_back(a, b);
        }
    std::sort(d.arcs.begin(), d.arcs.end());
    return d;
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

} // namespace

std::string dot_export(const HasseDiagram& d, const OrderRelation& rel) {
    std::string out = "digraph hasse {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < d.nodes.size(); ++i) {
        std::string label;
        for (int member : d.nodes[i]) {
            if (!label.empty()) label += "\\n";
            label += dot_escape(rel.trees[member].code) +
                     " leaves=" + std::to_string(rel.trees[member].leaf_count);
        }
        out += "  n" + std::to_string(i) + " [label=\"" + label + "\"];\n";
    }
    for (auto [from, to] : d.arcs)
        out += "  n" + std::to_string(from) + " -> n" + std::to_string(to) + ";\n";
    out += "}\n";
    return out;
}

std::string relation_export(const OrderRelation& rel) {
    std::string out = "homtrees-order v1\n";
    const int m = static_cast<int>(rel.trees.size());
    out += "k " + std::to_string(m > 0 ? rel.trees[0].k : 0) + '\n';
    out += "trees " + std::to_string(m) + '\n';
    out += "images " + std::to_string(rel.suite.size()) + '\n';
    // a finite suite refutes relations but never proves them
    out += "semantics suite-relative\n";
    out += "labels\n";
    for (int i = 0; i < m; ++i)
        out += std::to_string(i) + ' ' + rel.trees[i].code + " leaves=" +
               std::to_string(rel.trees[i].leaf_count) + '\n';
    out += "matrix\n";
    for (int i = 0; i < m; ++i) {
        out += std::to_string(i) + " :";
        for (int j = 0; j < m; ++j) {
            out += ' ';
            out += rel.consistent(i, j) ? ">=" : "witness:" +
                                                     std::to_string(rel.witness[i][j]);
        }
        out += '\n';
    }
    return out;
}

} // namespace homtrees
