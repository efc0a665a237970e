#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "homtrees/graph.hpp"

namespace homtrees {

class MatrixError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Nonnegative symmetric matrix. Construct via make/parse, which validate
// nonnegativity, check symmetry to 1e-12 and then symmetrize exactly.
struct SymmetricMatrix {
    int n = 0;
    std::vector<double> entries; // row-major

    double at(int i, int j) const { return entries[static_cast<std::size_t>(i) * n + j]; }

    static SymmetricMatrix make(int n, std::vector<double> entries);
    static SymmetricMatrix adjacency(const Graph& g);
};

// Matrix file: first non-comment line "n", then n rows of n decimals,
// whitespace-separated; lines starting with '#' ignored.
SymmetricMatrix parse_matrix(std::string_view text);
std::string serialize_matrix(const SymmetricMatrix& a);

// 1^T A^k 1 via repeated matrix-vector products; A^k is never materialized.
double walk_sum(const SymmetricMatrix& a, int k);

// sum_i (row sum_i)^k.
double row_power_sum(const SymmetricMatrix& a, int k);

struct HoffmanReport {
    int k = 0;
    double walk = 0.0, row_power = 0.0;
    double weighted_path = 0.0, weighted_star = 0.0;
    bool inequality_ok = false;
    bool path_crosscheck_ok = false;
    bool star_crosscheck_ok = false;

    bool pass() const {
        return inequality_ok && path_crosscheck_ok && star_crosscheck_ok;
    }
};

// walk_sum <= row_power_sum within rel_tol, cross-checked against the
// weighted homomorphism counts of the k-edge path and star.
HoffmanReport hoffman_check(const SymmetricMatrix& a, int k,
                            double rel_tol = 1e-9);

} // namespace homtrees
