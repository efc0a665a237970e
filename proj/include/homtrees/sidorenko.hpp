#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "homtrees/bignat.hpp"
#include "homtrees/graph.hpp"
#include "homtrees/hom.hpp"

namespace homtrees {

// How the two skeleton leaves (b1, b2) are designated when the skeleton has
// more than two. Either choice is sound; first_pair is the deterministic
// default, best_pair maximizes the resulting count.
enum class PairStrategy { first_pair, best_pair };

PairStrategy parse_strategy(std::string_view name); // "first-pair" | "best-pair"
std::string_view strategy_name(PairStrategy s);

// Double star: edge b1-b2 with d1 leaves at b1 (vertex 0) and d2 at b2
// (vertex 1). The k-edge trees with k-1 leaves are exactly these.
struct Broom {
    int k = 0, d1 = 0, d2 = 0;
    Tree tree;
};
Broom make_broom(int k, int d1, int d2);

// One leaf-migration move: prune the leaves at two skeleton leaves of the
// tree, pick the direction with the larger degree moment, and reattach all
// pruned leaves there. The leaf count grows by one and the homomorphism
// count into `h` never drops.
struct TransformStep {
    Tree before, after;
    int b1 = 0, b2 = 0;  // designated skeleton leaves (before-labels), post-direction-rule
    int d1 = 0, d2 = 0;  // leaves pruned at b1 / b2
    bool swapped = false;
    bool moments_defined = false; // false iff hom(pruned,H) = 0
    std::vector<int> kept;        // before-vertex -> pruned-tree vertex, -1 = pruned
    BigNat base_hom;              // hom(T(b1,b2), H)
    BigNat hom_before, hom_after;
    BigNat forkoff;    // sum_u pinned(b1)[u] deg(u)^(d1+d2); equals hom_after
    BigNat decomp_rhs; // sum_{u,v} pinned(b1,b2)[u,v] deg(u)^d1 deg(v)^d2
    double holder = 0.0; // hom(pruned) * M1^(d1/(d1+d2)) * M2^(d2/(d1+d2))
    double amgm = 0.0;   // hom(pruned) * max(M1, M2); equals forkoff
    bool decomposition_ok = false;
};

TransformStep transform_step(const Tree& t, const Graph& h,
                             PairStrategy strategy = PairStrategy::first_pair);

// Exact integer identity: hom(T,H) = sum_{u,v} pinned[u,v] deg(u)^d1 deg(v)^d2.
struct DecompositionReport {
    int b1 = 0, b2 = 0, d1 = 0, d2 = 0;
    BigNat lhs, rhs;
    bool ok = false;
};
DecompositionReport verify_decomposition(const Tree& t, int b1, int b2,
                                         const Graph& h);

// Both bounds require hom(T(b1,b2),H) > 0 and sandwich the exact counts:
// hom(T,H) <= holder_bound <= amgm_bound = hom(T',H).
double holder_bound(const Tree& t, int b1, int b2, const Graph& h);
double amgm_bound(const Tree& t, int b1, int b2, const Graph& h);

// Full migration chain down to the star, with every count and bound recorded.
struct TransformCertificate {
    Graph image;
    Tree start, end;
    PairStrategy strategy = PairStrategy::first_pair;
    std::vector<TransformStep> steps;
    BigNat hom_start;
    BigNat star; // star_count(k, image)
};
TransformCertificate transform_chain(const Tree& t, const Graph& h,
                                     PairStrategy strategy = PairStrategy::first_pair);

// Drop the source graph to a spanning tree; counts can only grow.
struct ReduceResult {
    Tree tree;
    BigNat hom_source;   // brute force on the source graph
    BigNat hom_spanning; // tree DP on the spanning tree
};
ReduceResult reduce_to_tree(const Graph& g, const Graph& h,
                            std::uint64_t guard = kDefaultGuard);

// hom(G,H) <= hom(S_k,H) for a connected G on k+1 vertices, with the
// reduction and the migration chain attached as evidence.
struct TheoremReport {
    int k = 0;
    BigNat hom_source, star;
    bool holds = false, equality = false;
    ReduceResult reduction;
    TransformCertificate chain;
};
TheoremReport verify_theorem(const Graph& g, const Graph& h,
                             PairStrategy strategy = PairStrategy::first_pair,
                             std::uint64_t guard = kDefaultGuard);

// phi(p) = E[exp(p g(U) + (1-p) g(V))], g(v) = (d1+d2) log deg(v), (U,V)
// distributed per the pair distribution of the pruned K2 skeleton. Symmetric
// and convex with the minimum at p = 1/2.
struct PhiProfile {
    int d1 = 0, d2 = 0;
    std::vector<double> grid, values;
    double symmetry_defect = 0.0; // max |phi(p) - phi(1-p)|
    double min_value = 0.0, min_p = 0.0;
    double max_value = 0.0, max_p = 0.0;
    double min_second_difference = 0.0;
    bool max_at_endpoint = false;
};
PhiProfile phi_profile(const Tree& t, int b1, int b2, const Graph& h,
                       int grid_points = 101);

// hom(B(d1,d2),H) for all brooms with k edges, balanced split first;
// non-decreasing in d1-d2 and capped by the star.
struct BroomChainEntry {
    int d1 = 0, d2 = 0;
    BigNat count;
};
struct BroomChainReport {
    int k = 0;
    std::vector<BroomChainEntry> entries; // ascending d1-d2
    BigNat top_broom;                     // B(k-2,1)
    BigNat star;
    bool monotone = false;
    bool top_below_star = false;
};
BroomChainReport broom_chain_check(int k, const Graph& h);

} // namespace homtrees
