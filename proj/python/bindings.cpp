#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "homtrees/certificate.hpp"
#include "homtrees/hoffman.hpp"
#include "homtrees/hom.hpp"
#include "homtrees/order.hpp"
#include "homtrees/sidorenko.hpp"

namespace py = pybind11;
using namespace homtrees;

namespace {

// Exact counts cross the boundary as python ints, via their decimal form.
py::object big(const BigNat& value) {
    return py::module_::import("builtins").attr("int")(value.to_string());
}

py::dict step_dict(const TransformStep& s) {
    py::dict d;
    d["b1"] = s.b1;
    d["b2"] = s.b2;
    d["d1"] = s.d1;
    d["d2"] = s.d2;
    d["swapped"] = s.swapped;
    d["hom_before"] = big(s.hom_before);
    d["hom_after"] = big(s.hom_after);
    d["base_hom"] = big(s.base_hom);
    d["forkoff"] = big(s.forkoff);
    d["holder"] = s.holder;
    d["amgm"] = s.amgm;
    d["decomposition_ok"] = s.decomposition_ok;
    d["after_edges"] = s.after.graph().edges();
    return d;
}

py::dict chain_dict(const TransformCertificate& cert) {
    py::dict d;
    d["hom_start"] = big(cert.hom_start);
    d["star"] = big(cert.star);
    py::list steps;
    for (const auto& s : cert.steps) steps.append(step_dict(s));
    d["steps"] = steps;
    d["certificate"] = serialize_certificate(cert);
    return d;
}

SymmetricMatrix matrix_from_rows(const std::vector<std::vector<double>>& rows) {
    const int n = static_cast<int>(rows.size());
    std::vector<double> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n)
            throw MatrixError("matrix rows must all have length n");
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return SymmetricMatrix::make(n, std::move(entries));
}

} // namespace

PYBIND11_MODULE(_homtrees, m) {
    m.doc() = "Exact graph homomorphism counting and star extremality checks";

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, const std::vector<std::pair<int, int>>&>(),
             py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("edges", &Graph::edges)
        .def("degree", &Graph::degree)
        .def("neighbors", &Graph::neighbors)
        .def("has_edge", &Graph::has_edge)
        .def("is_connected", &Graph::is_connected)
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) + ", m=" +
                   std::to_string(g.edge_count()) + ")";
        });

    py::class_<Tree>(m, "Tree")
        .def_property_readonly("graph", &Tree::graph)
        .def_property_readonly("k", &Tree::edge_count)
        .def_property_readonly("leaves", &Tree::leaf_set)
        .def_property_readonly("is_star", &Tree::is_star)
        .def("__repr__", [](const Tree& t) {
            return "Tree(k=" + std::to_string(t.edge_count()) + ", leaves=" +
                   std::to_string(t.leaf_count()) + ")";
        });

    m.def("parse_graph", [](const std::string& text) { return parse_graph(text); });
    m.def("serialize_graph", &serialize_graph);
    m.def("as_tree", &as_tree);
    m.def("path_graph", &path_graph, py::arg("k"));
    m.def("star_graph", &star_graph, py::arg("k"));
    m.def("cycle_graph", &cycle_graph, py::arg("n"));
    m.def("complete_graph", &complete_graph, py::arg("n"));
    m.def("spanning_tree", &spanning_tree);
    m.def("remove_edge", &remove_edge);
    m.def("canonical_code", &canonical_code);

    m.def(
        "hom_bruteforce",
        [](const Graph& g, const Graph& h, std::uint64_t guard) {
            return big(hom_bruteforce(g, h, guard));
        },
        py::arg("g"), py::arg("h"), py::arg("guard") = kDefaultGuard);
    m.def("hom_tree", [](const Tree& t, const Graph& h) {
        return big(hom_tree(t, h));
    });
    m.def("star_count", [](int k, const Graph& h) { return big(star_count(k, h)); });
    m.def(
        "hom_count",
        [](const Graph& g, const Graph& h, std::uint64_t guard) {
            if (g.is_connected() && g.edge_count() == g.vertex_count() - 1)
                return big(hom_tree(as_tree(g), h));
            return big(hom_bruteforce(g, h, guard));
        },
        py::arg("g"), py::arg("h"), py::arg("guard") = kDefaultGuard,
        "Tree DP when the source is a tree, brute force otherwise");

    m.def(
        "transform_chain",
        [](const Tree& t, const Graph& h, const std::string& strategy) {
            return chain_dict(transform_chain(t, h, parse_strategy(strategy)));
        },
        py::arg("t"), py::arg("h"), py::arg("strategy") = "first-pair");
    m.def(
        "verify_theorem",
        [](const Graph& g, const Graph& h, const std::string& strategy,
           std::uint64_t guard) {
            TheoremReport rep = verify_theorem(g, h, parse_strategy(strategy), guard);
            py::dict d;
            d["k"] = rep.k;
            d["hom"] = big(rep.hom_source);
            d["star"] = big(rep.star);
            d["holds"] = rep.holds;
            d["equality"] = rep.equality;
            d["spanning_tree_hom"] = big(rep.reduction.hom_spanning);
            d["chain"] = chain_dict(rep.chain);
            return d;
        },
        py::arg("g"), py::arg("h"), py::arg("strategy") = "first-pair",
        py::arg("guard") = kDefaultGuard);
    m.def("check_certificate", [](const std::string& text) {
        CertificateCheck check = check_certificate(parse_certificate(text));
        py::dict d;
        d["ok"] = check.ok;
        d["failures"] = check.failures;
        return d;
    });

    m.def("enumerate_free_trees", [](int k) {
        py::list out;
        for (const auto& t : enumerate_free_trees(k)) {
            py::dict d;
            d["code"] = t.code;
            d["leaves"] = t.leaf_count;
            d["edges"] = t.tree.graph().edges();
            out.append(d);
        }
        return out;
    });
    m.def(
        "empirical_order",
        [](int k, const std::string& suite, std::uint64_t seed, int jobs) {
            OrderRelation rel =
                empirical_order(enumerate_free_trees(k), image_suite(parse_suite_spec(suite), seed), jobs);
            py::dict d;
            py::list codes, counts, witness;
            for (const auto& t : rel.trees) codes.append(t.code);
            for (const auto& row : rel.counts) {
                py::list r;
                for (const auto& c : row) r.append(big(c));
                counts.append(r);
            }
            for (const auto& row : rel.witness) witness.append(row);
            d["codes"] = codes;
            d["counts"] = counts;
            d["witness"] = witness;
            d["dot"] = dot_export(hasse(rel), rel);
            d["relation"] = relation_export(rel);
            return d;
        },
        py::arg("k"), py::arg("suite"), py::arg("seed") = 0, py::arg("jobs") = 1);

    m.def(
        "broom_chain",
        [](int k, const Graph& h) {
            BroomChainReport rep = broom_chain_check(k, h);
            py::dict d;
            py::list entries;
            for (const auto& e : rep.entries) {
                py::dict entry;
                entry["d1"] = e.d1;
                entry["d2"] = e.d2;
                entry["hom"] = big(e.count);
                entries.append(entry);
            }
            d["entries"] = entries;
            d["star"] = big(rep.star);
            d["monotone"] = rep.monotone;
            d["top_below_star"] = rep.top_below_star;
            return d;
        },
        py::arg("k"), py::arg("h"));
    m.def(
        "phi_profile",
        [](const Tree& t, int b1, int b2, const Graph& h, int grid) {
            PhiProfile prof = phi_profile(t, b1, b2, h, grid);
            py::dict d;
            d["d1"] = prof.d1;
            d["d2"] = prof.d2;
            d["grid"] = prof.grid;
            d["values"] = prof.values;
            d["symmetry_defect"] = prof.symmetry_defect;
            d["min_p"] = prof.min_p;
            d["min_value"] = prof.min_value;
            d["min_second_difference"] = prof.min_second_difference;
            d["max_at_endpoint"] = prof.max_at_endpoint;
            return d;
        },
        py::arg("t"), py::arg("b1"), py::arg("b2"), py::arg("h"),
        py::arg("grid") = 101);

    m.def("walk_sum", [](const std::vector<std::vector<double>>& rows, int k) {
        return walk_sum(matrix_from_rows(rows), k);
    });
    m.def("row_power_sum",
          [](const std::vector<std::vector<double>>& rows, int k) {
              return row_power_sum(matrix_from_rows(rows), k);
          });
    m.def(
        "hoffman_check",
        [](const std::vector<std::vector<double>>& rows, int k, double rel_tol) {
            HoffmanReport rep = hoffman_check(matrix_from_rows(rows), k, rel_tol);
            py::dict d;
            d["walk"] = rep.walk;
            d["row_power"] = rep.row_power;
            d["weighted_path"] = rep.weighted_path;
            d["weighted_star"] = rep.weighted_star;
            d["pass"] = rep.pass();
            return d;
        },
        py::arg("matrix"), py::arg("k"), py::arg("rel_tol") = 1e-9);

    py::register_exception<GraphError>(m, "GraphError");
    py::register_exception<MatrixError>(m, "MatrixError");
    py::register_exception<GuardExceeded>(m, "GuardExceeded");
}
