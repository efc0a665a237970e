#include <doctest.h>

#include <cmath>

#include "homtrees/hoffman.hpp"
#include "homtrees/hom.hpp"
#include "oracles.hpp"

using namespace homtrees;

TEST_CASE("matrix parsing") {
    SymmetricMatrix a = parse_matrix("# weights\n2\n1 1\n1 2\n");
    CHECK(a.n == 2);
    CHECK(a.at(0, 0) == 1.0);
    CHECK(a.at(1, 1) == 2.0);

    // entries may span lines arbitrarily
    SymmetricMatrix b = parse_matrix("2\n0.5 0.25 0.25\n0.125");
    CHECK(b.at(0, 1) == 0.25);

    CHECK_THROWS_AS(parse_matrix("2\n1 1\n1"), MatrixError);
    CHECK_THROWS_AS(parse_matrix("2\n1 -1\n-1 2\n"), MatrixError);
    CHECK_THROWS_AS(parse_matrix("2\n1 1\n2 2\n"), MatrixError); // asymmetric
    CHECK_THROWS_AS(parse_matrix(""), MatrixError);
    CHECK_THROWS_AS(parse_matrix("0\n"), MatrixError);
    CHECK_THROWS_AS(parse_matrix("2\n1 x\n1 2\n"), MatrixError);
}

TEST_CASE("matrix symmetrization within tolerance") {
    std::vector<double> entries{1.0, 0.5, 0.5 + 1e-13, 2.0};
    SymmetricMatrix a = SymmetricMatrix::make(2, entries);
    CHECK(a.at(0, 1) == a.at(1, 0));
    CHECK(serialize_matrix(a) ==
          serialize_matrix(parse_matrix(serialize_matrix(a))));
}

TEST_CASE("walk sum spot values") {
    SymmetricMatrix a = SymmetricMatrix::make(2, {1, 1, 1, 2});
    CHECK(walk_sum(a, 1) == doctest::Approx(5.0));
    CHECK(walk_sum(a, 3) == doctest::Approx(34.0));
    CHECK(row_power_sum(a, 3) == doctest::Approx(35.0));

    SymmetricMatrix eye = SymmetricMatrix::make(3, {1, 0, 0, 0, 1, 0, 0, 0, 1});
    for (int k = 1; k <= 5; ++k) {
        CHECK(walk_sum(eye, k) == doctest::Approx(3.0));
        CHECK(row_power_sum(eye, k) == doctest::Approx(3.0));
    }
    CHECK_THROWS_AS(walk_sum(a, 0), std::invalid_argument);
}

TEST_CASE("k=2 walk sum equals row power sum exactly") {
    oracles::SplitMix64 rng{88ull};
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(6));
        std::vector<double> entries(static_cast<std::size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                const double v = rng.unit();
                entries[static_cast<std::size_t>(i) * n + j] = v;
                entries[static_cast<std::size_t>(j) * n + i] = v;
            }
        SymmetricMatrix a = SymmetricMatrix::make(n, std::move(entries));
        CHECK(walk_sum(a, 2) ==
              doctest::Approx(row_power_sum(a, 2)).epsilon(1e-12));
    }
}

TEST_CASE("adjacency specialization reproduces integer counts") {
    for (const Graph& h :
         {path_graph(2), cycle_graph(4), complete_graph(4), star_graph(3)}) {
        SymmetricMatrix a = SymmetricMatrix::adjacency(h);
        for (int k = 1; k <= 5; ++k) {
            CHECK(std::fabs(row_power_sum(a, k) - star_count(k, h).to_double()) <=
                  1e-6);
            CHECK(std::fabs(walk_sum(a, k) -
                            hom_tree(as_tree(path_graph(k)), h).to_double()) <=
                  1e-6);
        }
    }
}

TEST_CASE("hoffman check on the 2x2 example") {
    SymmetricMatrix a = SymmetricMatrix::make(2, {1, 1, 1, 2});
    HoffmanReport rep = hoffman_check(a, 3);
    CHECK(rep.walk == doctest::Approx(34.0));
    CHECK(rep.row_power == doctest::Approx(35.0));
    CHECK(rep.pass());

    SymmetricMatrix adj = SymmetricMatrix::adjacency(path_graph(2));
    HoffmanReport unweighted = hoffman_check(adj, 3);
    CHECK(unweighted.walk == doctest::Approx(8.0));
    CHECK(unweighted.row_power == doctest::Approx(10.0));
    CHECK(unweighted.pass());
}

TEST_CASE("hoffman inequality on random matrices") {
    oracles::SplitMix64 rng{91ull};
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(8));
        std::vector<double> entries(static_cast<std::size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                const double v = rng.unit();
                entries[static_cast<std::size_t>(i) * n + j] = v;
                entries[static_cast<std::size_t>(j) * n + i] = v;
            }
        SymmetricMatrix a = SymmetricMatrix::make(n, std::move(entries));
        for (int k = 1; k <= 6; ++k) CHECK(hoffman_check(a, k).pass());
    }
}
