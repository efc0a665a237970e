#include "homtrees/hom.hpp"

#include <algorithm>

#include "homtrees/hoffman.hpp"

namespace homtrees {

std::uint64_t bruteforce_cost(const Graph& g, const Graph& h) {
    const std::uint64_t base = static_cast<std::uint64_t>(h.vertex_count());
    std::uint64_t cost = 1;
    for (int i = 0; i < g.vertex_count(); ++i) {
        if (base == 0) return g.vertex_count() == 0 ? 1 : 0;
        if (cost > UINT64_MAX / base) return UINT64_MAX;
        cost *= base;
    }
    return cost;
}

namespace {

// Backtracking enumerator: assign vertices 0..n-1 in order, checking edges
// into the already-assigned prefix.
struct BruteForce {
    const Graph& h;
    std::vector<std::vector<int>> back_nbrs;
    std::vector<std::vector<char>> hadj;
    std::vector<int> image;
    std::uint64_t count = 0;

    BruteForce(const Graph& g, const Graph& h_) : h(h_) {
        const int n = g.vertex_count();
        back_nbrs.assign(n, {});
        for (auto [u, v] : g.edges()) back_nbrs[std::max(u, v)].push_back(std::min(u, v));
        const int hn = h.vertex_count();
        hadj.assign(hn, std::vector<char>(hn, 0));
        for (auto [u, v] : h.edges()) hadj[u][v] = hadj[v][u] = 1;
        image.assign(n, -1);
    }

    void run(int v) {
        if (v == static_cast<int>(image.size())) {
            ++count;
            return;
        }
        for (int x = 0; x < h.vertex_count(); ++x) {
            bool ok = true;
            for (int p : back_nbrs[v]) {
                if (!hadj[image[p]][x]) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                image[v] = x;
                run(v + 1);
            }
        }
    }
};

// Parent array + reverse-BFS processing order for the tree DP.
struct TreeOrder {
    std::vector<int> parent;
    std::vector<int> order; // BFS from the root
};

TreeOrder rooted_order(const Graph& g, int root) {
    const int n = g.vertex_count();
    TreeOrder t;
    t.parent.assign(n, -2);
    t.order.reserve(n);
    t.parent[root] = -1;
    t.order.push_back(root);
    for (std::size_t head = 0; head < t.order.size(); ++head) {
        int v = t.order[head];
        for (int w : g.neighbors(v))
            if (t.parent[w] == -2) {
                t.parent[w] = v;
                t.order.push_back(w);
            }
    }
    return t;
}

// Bottom-up messages m_v(x) = prod over children c of sum over y ~ x of m_c(y).
// `pin` constrains one vertex to a single image (-1 = unconstrained).
std::vector<std::vector<BigNat>> tree_messages(const Tree& t, const Graph& h,
                                               int root, int pin = -1,
                                               int pin_image = -1) {
    const Graph& g = t.graph();
    const int n = g.vertex_count();
    const int hn = h.vertex_count();
    TreeOrder ord = rooted_order(g, root);
    std::vector<std::vector<BigNat>> msg(n);
    for (std::size_t idx = ord.order.size(); idx-- > 0;) {
        const int v = ord.order[idx];
        auto& mv = msg[v];
        mv.assign(hn, BigNat{1});
        for (int c : g.neighbors(v)) {
            if (c == ord.parent[v]) continue;
            for (int x = 0; x < hn; ++x) {
                BigNat s;
                for (int y : h.neighbors(x)) s += msg[c][y];
                mv[x] *= s;
            }
        }
        if (v == pin)
            for (int x = 0; x < hn; ++x)
                if (x != pin_image) mv[x] = BigNat{};
    }
    return msg;
}

} // namespace

BigNat hom_bruteforce(const Graph& g, const Graph& h, std::uint64_t guard) {
    const std::uint64_t cost = bruteforce_cost(g, h);
    if (cost > guard || cost == UINT64_MAX)
        throw GuardExceeded("brute force would enumerate " +
                            (cost == UINT64_MAX ? std::string("> 2^64")
                                                : std::to_string(cost)) +
                            " maps (guard " + std::to_string(guard) + ")");
    BruteForce bf(g, h);
    bf.run(0);
    return BigNat{bf.count};
}

BigNat hom_tree(const Tree& t, const Graph& h) {
    auto msg = tree_messages(t, h, 0);
    BigNat total;
    for (const auto& m : msg[0]) total += m;
    return total;
}

PinnedTable pinned_single(const Tree& t, int b, const Graph& h) {
    if (b < 0 || b >= t.vertex_count())
        throw std::invalid_argument("pinned_single: pin out of range");
    auto msg = tree_messages(t, h, b);
    PinnedTable out;
    out.pin = b;
    out.counts = std::move(msg[b]);
    for (const auto& c : out.counts) out.total += c;
    return out;
}

PairPinnedTable pinned_pair(const Tree& t, int b1, int b2, const Graph& h) {
    const int n = t.vertex_count();
    if (b1 < 0 || b1 >= n || b2 < 0 || b2 >= n || b1 == b2)
        throw std::invalid_argument("pinned_pair: invalid pins");
    const int hn = h.vertex_count();
    PairPinnedTable out;
    out.pin1 = b1;
    out.pin2 = b2;
    out.counts.assign(hn, std::vector<BigNat>(hn));
    for (int w = 0; w < hn; ++w) {
        auto msg = tree_messages(t, h, b1, b2, w);
        for (int u = 0; u < hn; ++u) {
            out.total += msg[b1][u];
            out.counts[u][w] = std::move(msg[b1][u]);
        }
    }
    return out;
}

PairDistribution pair_distribution(const Tree& t, int b1, int b2, const Graph& h) {
    PairDistribution dist;
    dist.table = pinned_pair(t, b1, b2, h);
    dist.total = dist.table.total;
    if (dist.total.is_zero())
        throw std::domain_error("pair_distribution: hom(T,H) = 0, "
                                "distribution undefined");
    const int hn = h.vertex_count();
    dist.marginal1.assign(hn, BigNat{});
    dist.marginal2.assign(hn, BigNat{});
    for (int u = 0; u < hn; ++u) {
        for (int v = 0; v < hn; ++v) {
            const BigNat& c = dist.table.counts[u][v];
            if (c.is_zero()) continue;
            dist.marginal1[u] += c;
            dist.marginal2[v] += c;
            dist.support.emplace_back(u, v);
        }
    }
    return dist;
}

BigNat star_count(int k, const Graph& h) {
    if (k < 1) throw std::invalid_argument("star_count: k must be >= 1");
    BigNat total;
    for (int v = 0; v < h.vertex_count(); ++v)
        total += BigNat{static_cast<std::uint64_t>(h.degree(v))}.pow(
            static_cast<unsigned>(k));
    return total;
}

double weighted_hom_tree(const Tree& t, const SymmetricMatrix& a) {
    const Graph& g = t.graph();
    const int n = g.vertex_count();
    const int hn = a.n;
    TreeOrder ord = rooted_order(g, 0);
    std::vector<std::vector<double>> msg(n);
    for (std::size_t idx = ord.order.size(); idx-- > 0;) {
        const int v = ord.order[idx];
        auto& mv = msg[v];
        mv.assign(hn, 1.0);
        for (int c : g.neighbors(v)) {
            if (c == ord.parent[v]) continue;
            for (int x = 0; x < hn; ++x) {
                double s = 0.0;
                for (int y = 0; y < hn; ++y) s += a.at(x, y) * msg[c][y];
                mv[x] *= s;
            }
        }
    }
    double total = 0.0;
    for (double m : msg[0]) total += m;
    return total;
}

} // namespace homtrees
