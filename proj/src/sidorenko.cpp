#include "homtrees/sidorenko.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace homtrees {

PairStrategy parse_strategy(std::string_view name) {
    if (name == "first-pair") return PairStrategy::first_pair;
    if (name == "best-pair") return PairStrategy::best_pair;
    throw std::invalid_argument("unknown strategy: " + std::string(name));
}

std::string_view strategy_name(PairStrategy s) {
    return s == PairStrategy::first_pair ? "first-pair" : "best-pair";
}

Broom make_broom(int k, int d1, int d2) {
    if (d1 < 1 || d2 < 1 || d1 + d2 != k - 1)
        throw std::invalid_argument("broom requires d1,d2 >= 1 and d1+d2 = k-1");
    std::vector<std::pair<int, int>> edges{{0, 1}};
    int next = 2;
    for (int i = 0; i < d1; ++i) edges.emplace_back(0, next++);
    for (int i = 0; i < d2; ++i) edges.emplace_back(1, next++);
    return Broom{k, d1, d2, Tree::from_graph(Graph(k + 1, edges))};
}

namespace {

struct Pruned {
    Tree base;             // T(b1,b2)
    std::vector<int> kept; // t-vertex -> base-vertex, -1 = pruned leaf
    int nb1 = 0, nb2 = 0;  // b1, b2 in base labels
    int d1 = 0, d2 = 0;
};

// Remove all leaves of t adjacent to b1 or b2. b1, b2 must be skeleton leaves.
Pruned prune_leaf_neighbors(const Tree& t, int b1, int b2) {
    if (b1 == b2) throw std::invalid_argument("prune: b1 == b2");
    SkeletonInfo sk = skeleton_info(t);
    const auto& sl = sk.skeleton_leaves;
    if (std::find(sl.begin(), sl.end(), b1) == sl.end() ||
        std::find(sl.begin(), sl.end(), b2) == sl.end())
        throw std::invalid_argument("prune: b1/b2 must be skeleton leaves");

    const Graph& g = t.graph();
    const int n = g.vertex_count();
    Pruned p;
    p.kept.assign(n, 0);
    for (int leaf : t.leaf_set()) {
        int anchor = g.neighbors(leaf)[0];
        if (anchor == b1) {
            p.kept[leaf] = -1;
            ++p.d1;
        } else if (anchor == b2) {
            p.kept[leaf] = -1;
            ++p.d2;
        }
    }
    int next = 0;
    for (int v = 0; v < n; ++v) p.kept[v] = (p.kept[v] == -1) ? -1 : next++;
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (p.kept[u] >= 0 && p.kept[v] >= 0)
            edges.emplace_back(p.kept[u], p.kept[v]);
    p.base = Tree::from_graph(Graph(next, edges));
    p.nb1 = p.kept[b1];
    p.nb2 = p.kept[b2];
    return p;
}

Tree attach_leaves(const Tree& base, int at, int count) {
    const int n = base.vertex_count();
    auto edges = base.graph().edges();
    for (int i = 0; i < count; ++i) edges.emplace_back(at, n + i);
    return Tree::from_graph(Graph(n + count, edges));
}

// sum_u counts[u] * deg(u)^e
BigNat moment_numerator(const std::vector<BigNat>& counts, const Graph& h,
                        unsigned e) {
    BigNat total;
    for (int u = 0; u < h.vertex_count(); ++u) {
        if (counts[u].is_zero()) continue;
        total += counts[u] *
                 BigNat{static_cast<std::uint64_t>(h.degree(u))}.pow(e);
    }
    return total;
}

TransformStep build_step(const Tree& t, const Graph& h, int b1, int b2,
                         const BigNat& hom_before) {
    Pruned p = prune_leaf_neighbors(t, b1, b2);
    PairPinnedTable table = pinned_pair(p.base, p.nb1, p.nb2, h);

    TransformStep step;
    step.before = t;
    step.b1 = b1;
    step.b2 = b2;
    step.d1 = p.d1;
    step.d2 = p.d2;
    step.kept = p.kept;
    step.base_hom = table.total;
    step.hom_before = hom_before;

    const int hn = h.vertex_count();
    std::vector<BigNat> m1(hn), m2(hn);
    for (int u = 0; u < hn; ++u)
        for (int v = 0; v < hn; ++v) {
            const BigNat& c = table.counts[u][v];
            if (c.is_zero()) continue;
            m1[u] += c;
            m2[v] += c;
            step.decomp_rhs +=
                c * BigNat{static_cast<std::uint64_t>(h.degree(u))}.pow(
                        static_cast<unsigned>(p.d1)) *
                BigNat{static_cast<std::uint64_t>(h.degree(v))}.pow(
                    static_cast<unsigned>(p.d2));
        }
    step.decomposition_ok = (step.decomp_rhs == hom_before);

    const unsigned total_leaves = static_cast<unsigned>(p.d1 + p.d2);
    int attach_at = p.nb1;
    if (!step.base_hom.is_zero()) {
        step.moments_defined = true;
        BigNat n1 = moment_numerator(m1, h, total_leaves);
        BigNat n2 = moment_numerator(m2, h, total_leaves);
        if (n2 > n1) {
            step.swapped = true;
            std::swap(step.b1, step.b2);
            std::swap(step.d1, step.d2);
            std::swap(n1, n2);
            attach_at = p.nb2;
        }
        const double base_d = step.base_hom.to_double();
        const double m1_d = n1.to_double() / base_d;
        const double m2_d = n2.to_double() / base_d;
        const double dd = static_cast<double>(total_leaves);
        step.holder = base_d * std::pow(m1_d, step.d1 / dd) *
                      std::pow(m2_d, step.d2 / dd);
        step.forkoff = n1;
        step.amgm = n1.to_double();
    }

    step.after = attach_leaves(p.base, attach_at, static_cast<int>(total_leaves));
    step.hom_after = hom_tree(step.after, h);
    return step;
}

} // namespace

TransformStep transform_step(const Tree& t, const Graph& h,
                             PairStrategy strategy) {
    if (t.is_star())
        throw std::invalid_argument("transform_step: input is already a star");
    SkeletonInfo sk = skeleton_info(t);
    const auto& sl = sk.skeleton_leaves;
    const BigNat hom_before = hom_tree(t, h);
    if (strategy == PairStrategy::first_pair)
        return build_step(t, h, sl[0], sl[1], hom_before);

    bool have = false;
    TransformStep best;
    for (std::size_t i = 0; i < sl.size(); ++i) {
        for (std::size_t j = i + 1; j < sl.size(); ++j) {
            TransformStep cand = build_step(t, h, sl[i], sl[j], hom_before);
            if (!have || cand.hom_after > best.hom_after) {
                best = std::move(cand);
                have = true;
            }
        }
    }
    return best;
}

DecompositionReport verify_decomposition(const Tree& t, int b1, int b2,
                                         const Graph& h) {
    Pruned p = prune_leaf_neighbors(t, b1, b2);
    PairPinnedTable table = pinned_pair(p.base, p.nb1, p.nb2, h);
    DecompositionReport r;
    r.b1 = b1;
    r.b2 = b2;
    r.d1 = p.d1;
    r.d2 = p.d2;
    r.lhs = hom_tree(t, h);
    for (int u = 0; u < h.vertex_count(); ++u)
        for (int v = 0; v < h.vertex_count(); ++v) {
            const BigNat& c = table.counts[u][v];
            if (c.is_zero()) continue;
            r.rhs += c *
                     BigNat{static_cast<std::uint64_t>(h.degree(u))}.pow(
                         static_cast<unsigned>(p.d1)) *
                     BigNat{static_cast<std::uint64_t>(h.degree(v))}.pow(
                         static_cast<unsigned>(p.d2));
        }
    r.ok = (r.lhs == r.rhs);
    return r;
}

namespace {

// Shared by holder_bound/amgm_bound: moments of the pruned-tree distribution.
struct Moments {
    BigNat base;   // hom(T(b1,b2),H), > 0
    BigNat n1, n2; // moment numerators at b1 / b2
    int d1 = 0, d2 = 0;
};

Moments compute_moments(const Tree& t, int b1, int b2, const Graph& h) {
    Pruned p = prune_leaf_neighbors(t, b1, b2);
    PairDistribution dist = pair_distribution(p.base, p.nb1, p.nb2, h);
    Moments m;
    m.base = dist.total;
    m.d1 = p.d1;
    m.d2 = p.d2;
    const unsigned e = static_cast<unsigned>(p.d1 + p.d2);
    m.n1 = moment_numerator(dist.marginal1, h, e);
    m.n2 = moment_numerator(dist.marginal2, h, e);
    return m;
}

} // namespace

double holder_bound(const Tree& t, int b1, int b2, const Graph& h) {
    Moments m = compute_moments(t, b1, b2, h);
    const double base = m.base.to_double();
    const double dd = static_cast<double>(m.d1 + m.d2);
    return base * std::pow(m.n1.to_double() / base, m.d1 / dd) *
           std::pow(m.n2.to_double() / base, m.d2 / dd);
}

double amgm_bound(const Tree& t, int b1, int b2, const Graph& h) {
    Moments m = compute_moments(t, b1, b2, h);
    return std::max(m.n1, m.n2).to_double();
}

TransformCertificate transform_chain(const Tree& t, const Graph& h,
                                     PairStrategy strategy) {
    TransformCertificate cert;
    cert.image = h;
    cert.start = t;
    cert.strategy = strategy;
    cert.hom_start = hom_tree(t, h);
    Tree cur = t;
    while (!cur.is_star()) {
        TransformStep step = transform_step(cur, h, strategy);
        cur = step.after;
        cert.steps.push_back(std::move(step));
    }
    cert.end = cur;
    const int k = t.edge_count();
    cert.star = k >= 1 ? star_count(k, h)
                       : BigNat{static_cast<std::uint64_t>(h.vertex_count())};
    return cert;
}

ReduceResult reduce_to_tree(const Graph& g, const Graph& h,
                            std::uint64_t guard) {
    ReduceResult r{spanning_tree(g), hom_bruteforce(g, h, guard), BigNat{}};
    r.hom_spanning = hom_tree(r.tree, h);
    return r;
}

TheoremReport verify_theorem(const Graph& g, const Graph& h,
                             PairStrategy strategy, std::uint64_t guard) {
    TheoremReport rep;
    rep.k = g.vertex_count() - 1;
    rep.reduction = reduce_to_tree(g, h, guard);
    rep.hom_source = rep.reduction.hom_source;
    rep.star = rep.k >= 1 ? star_count(rep.k, h)
                          : BigNat{static_cast<std::uint64_t>(h.vertex_count())};
    rep.chain = transform_chain(rep.reduction.tree, h, strategy);
    rep.holds = !(rep.hom_source > rep.star);
    rep.equality = (rep.hom_source == rep.star);
    return rep;
}

PhiProfile phi_profile(const Tree& t, int b1, int b2, const Graph& h,
                       int grid_points) {
    if (grid_points < 3)
        throw std::invalid_argument("phi_profile: need at least 3 grid points");
    SkeletonInfo sk = skeleton_info(t);
    if (sk.skeleton.vertex_count() != 2)
        throw std::invalid_argument("phi_profile: skeleton must be K2");
    Pruned p = prune_leaf_neighbors(t, b1, b2);
    PairDistribution dist = pair_distribution(p.base, p.nb1, p.nb2, h);

    PhiProfile prof;
    prof.d1 = p.d1;
    prof.d2 = p.d2;
    const double dd = static_cast<double>(p.d1 + p.d2);
    const double total = dist.total.to_double();

    // Per-support-point probability and exponent value g = (d1+d2) log deg.
    struct Term {
        double pr, gu, gv;
    };
    std::vector<Term> terms;
    terms.reserve(dist.support.size());
    for (auto [u, v] : dist.support)
        terms.push_back({dist.table.counts[u][v].to_double() / total,
                         dd * std::log(static_cast<double>(h.degree(u))),
                         dd * std::log(static_cast<double>(h.degree(v)))});

    prof.grid.resize(grid_points);
    prof.values.resize(grid_points);
    for (int i = 0; i < grid_points; ++i) {
        const double pp = static_cast<double>(i) / (grid_points - 1);
        prof.grid[i] = pp;
        double s = 0.0;
        for (const Term& tm : terms)
            s += tm.pr * std::exp(pp * tm.gu + (1.0 - pp) * tm.gv);
        prof.values[i] = s;
    }

    prof.min_value = prof.max_value = prof.values[0];
    prof.min_p = prof.max_p = prof.grid[0];
    for (int i = 1; i < grid_points; ++i) {
        if (prof.values[i] < prof.min_value) {
            prof.min_value = prof.values[i];
            prof.min_p = prof.grid[i];
        }
        if (prof.values[i] > prof.max_value) {
            prof.max_value = prof.values[i];
            prof.max_p = prof.grid[i];
        }
    }
    prof.symmetry_defect = 0.0;
    for (int i = 0; i < grid_points; ++i)
        prof.symmetry_defect =
            std::max(prof.symmetry_defect,
                     std::fabs(prof.values[i] - prof.values[grid_points - 1 - i]));
    prof.min_second_difference =
        prof.values[0] - 2.0 * prof.values[1] + prof.values[2];
    for (int i = 2; i + 1 < grid_points; ++i)
        prof.min_second_difference =
            std::min(prof.min_second_difference,
                     prof.values[i - 1] - 2.0 * prof.values[i] + prof.values[i + 1]);
    // attained up to float noise (constant profiles wobble by an ulp)
    prof.max_at_endpoint =
        prof.max_value <= std::max(prof.values.front(), prof.values.back()) *
                              (1.0 + 1e-12);
    return prof;
}

BroomChainReport broom_chain_check(int k, const Graph& h) {
    if (k < 3) throw std::invalid_argument("broom_chain_check: k must be >= 3");
    BroomChainReport rep;
    rep.k = k;
    for (int d1 = (k - 1 + 1) / 2; d1 <= k - 2; ++d1) {
        const int d2 = k - 1 - d1;
        Broom b = make_broom(k, d1, d2);
        rep.entries.push_back({d1, d2, hom_tree(b.tree, h)});
    }
    rep.star = star_count(k, h);
    rep.top_broom = rep.entries.back().count;
    rep.monotone = true;
    for (std::size_t i = 1; i < rep.entries.size(); ++i)
        if (rep.entries[i].count < rep.entries[i - 1].count) rep.monotone = false;
    rep.top_below_star = !(rep.top_broom > rep.star);
    return rep;
}

} // namespace homtrees
