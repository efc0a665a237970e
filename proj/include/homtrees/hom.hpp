#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "homtrees/bignat.hpp"
#include "homtrees/graph.hpp"

namespace homtrees {

struct SymmetricMatrix; // hoffman.hpp

class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Default cap on |V(H)|^|V(G)| candidate maps for brute force.
inline constexpr std::uint64_t kDefaultGuard = 100'000'000ull;

// |V(H)|^|V(G)| saturated at UINT64_MAX.
std::uint64_t bruteforce_cost(const Graph& g, const Graph& h);

// Exact count by enumerating all vertex maps with backtracking. The
// independent oracle for every other counting path in this library.
BigNat hom_bruteforce(const Graph& g, const Graph& h,
                      std::uint64_t guard = kDefaultGuard);

// Linear-time message-passing count, rooted at vertex 0.
BigNat hom_tree(const Tree& t, const Graph& h);

// counts[u] = #{f : f(pin) = u}; total = hom(T,H).
struct PinnedTable {
    int pin = 0;
    std::vector<BigNat> counts;
    BigNat total;
};
PinnedTable pinned_single(const Tree& t, int b, const Graph& h);

// counts[u][v] = #{f : f(pin1) = u, f(pin2) = v}; total = hom(T,H).
struct PairPinnedTable {
    int pin1 = 0, pin2 = 0;
    std::vector<std::vector<BigNat>> counts;
    BigNat total;
};
PairPinnedTable pinned_pair(const Tree& t, int b1, int b2, const Graph& h);

// Law of (f(b1), f(b2)) under a uniform random homomorphism. All values are
// exact rationals over the common denominator `total`.
struct PairDistribution {
    PairPinnedTable table;
    BigNat total; // > 0
    std::vector<BigNat> marginal1, marginal2; // numerators of p1, p2
    std::vector<std::pair<int, int>> support; // positive-mass pairs, lexicographic

    Rational p(int u, int v) const { return {table.counts[u][v], total}; }
    Rational p1(int u) const { return {marginal1[u], total}; }
    Rational p2(int v) const { return {marginal2[v], total}; }
};

// Throws std::domain_error when hom(T,H) = 0 (distribution undefined).
PairDistribution pair_distribution(const Tree& t, int b1, int b2, const Graph& h);

// Sum of deg(v)^k = hom(S_k, H). Requires k >= 1.
BigNat star_count(int k, const Graph& h);

// Same message-passing with matrix weights; reduces to hom_tree on a 0/1
// adjacency matrix.
double weighted_hom_tree(const Tree& t, const SymmetricMatrix& a);

} // namespace homtrees
