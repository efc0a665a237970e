#include "homtrees/hoffman.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "homtrees/hom.hpp"

namespace homtrees {

namespace {
constexpr double kSymmetryTol = 1e-12;

bool close_rel(double a, double b, double rel_tol) {
    const double scale = std::max({std::fabs(a), std::fabs(b), 1e-300});
    return std::fabs(a - b) <= rel_tol * scale;
}
} // namespace

SymmetricMatrix SymmetricMatrix::make(int n, std::vector<double> entries) {
    if (n < 1) throw MatrixError("matrix dimension must be >= 1");
    if (entries.size() != static_cast<std::size_t>(n) * n)
        throw MatrixError("expected " + std::to_string(n * n) + " entries, got " +
                          std::to_string(entries.size()));
    for (double e : entries) {
        if (!(e >= 0.0))
            throw MatrixError("negative or non-finite entry " + std::to_string(e));
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double a = entries[static_cast<std::size_t>(i) * n + j];
            const double b = entries[static_cast<std::size_t>(j) * n + i];
            if (std::fabs(a - b) > kSymmetryTol)
                throw MatrixError("asymmetric entries at (" + std::to_string(i) +
                                  "," + std::to_string(j) + "): " +
                                  std::to_string(a) + " vs " + std::to_string(b));
            const double mean = 0.5 * (a + b);
            entries[static_cast<std::size_t>(i) * n + j] = mean;
            entries[static_cast<std::size_t>(j) * n + i] = mean;
        }
    }
    SymmetricMatrix m;
    m.n = n;
    m.entries = std::move(entries);
    return m;
}

SymmetricMatrix SymmetricMatrix::adjacency(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<double> entries(static_cast<std::size_t>(n) * n, 0.0);
    for (auto [u, v] : g.edges()) {
        entries[static_cast<std::size_t>(u) * n + v] = 1.0;
        entries[static_cast<std::size_t>(v) * n + u] = 1.0;
    }
    return make(n, std::move(entries));
}

SymmetricMatrix parse_matrix(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<double> values;
    long n = -1;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        bool comment = true;
        for (char c : line) {
            if (std::isspace(static_cast<unsigned char>(c))) continue;
            comment = (c == '#');
            break;
        }
        if (comment) continue;
        std::istringstream row(line);
        if (n < 0) {
            std::string rest;
            if (!(row >> n) || n < 1 || (row >> rest))
                throw MatrixError("malformed dimension at line " +
                                  std::to_string(lineno));
            continue;
        }
        double v;
        while (row >> v) values.push_back(v);
        if (!row.eof())
            throw MatrixError("malformed matrix entry at line " +
                              std::to_string(lineno));
    }
    if (n < 1) throw MatrixError("missing matrix dimension");
    if (values.size() != static_cast<std::size_t>(n) * n)
        throw MatrixError("expected " + std::to_string(n * n) +
                          " entries, got " + std::to_string(values.size()));
    return SymmetricMatrix::make(static_cast<int>(n), std::move(values));
}

std::string serialize_matrix(const SymmetricMatrix& a) {
    std::string out = std::to_string(a.n) + '\n';
    char buf[40];
    for (int i = 0; i < a.n; ++i) {
        for (int j = 0; j < a.n; ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", a.at(i, j));
            out += buf;
            out += (j + 1 == a.n) ? '\n' : ' ';
        }
    }
    return out;
}

double walk_sum(const SymmetricMatrix& a, int k) {
    if (k < 1) throw std::invalid_argument("walk_sum: k must be >= 1");
    std::vector<double> x(a.n, 1.0), y(a.n, 0.0);
    for (int step = 0; step < k; ++step) {
        for (int i = 0; i < a.n; ++i) {
            double s = 0.0;
            for (int j = 0; j < a.n; ++j) s += a.at(i, j) * x[j];
            y[i] = s;
        }
        x.swap(y);
    }
    double total = 0.0;
    for (double v : x) total += v;
    return total;
}

double row_power_sum(const SymmetricMatrix& a, int k) {
    if (k < 1) throw std::invalid_argument("row_power_sum: k must be >= 1");
    double total = 0.0;
    for (int i = 0; i < a.n; ++i) {
        double row = 0.0;
        for (int j = 0; j < a.n; ++j) row += a.at(i, j);
        total += std::pow(row, k);
    }
    return total;
}

HoffmanReport hoffman_check(const SymmetricMatrix& a, int k, double rel_tol) {
    HoffmanReport r;
    r.k = k;
    r.walk = walk_sum(a, k);
    r.row_power = row_power_sum(a, k);
    r.weighted_path = weighted_hom_tree(as_tree(path_graph(k)), a);
    r.weighted_star = weighted_hom_tree(as_tree(star_graph(k)), a);
    r.inequality_ok = r.walk <= r.row_power * (1.0 + rel_tol) ||
                      close_rel(r.walk, r.row_power, rel_tol);
    r.path_crosscheck_ok = close_rel(r.walk, r.weighted_path, rel_tol);
    r.star_crosscheck_ok = close_rel(r.row_power, r.weighted_star, rel_tol);
    return r;
}

} // namespace homtrees
