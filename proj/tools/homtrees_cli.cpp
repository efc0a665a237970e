// Command-line front end: exact homomorphism counts, star-extremality
// verification with leaf-migration certificates, tree-order exploration and
// the weighted (Hoffman) matrix inequality.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "homtrees/certificate.hpp"
#include "homtrees/hoffman.hpp"
#include "homtrees/hom.hpp"
#include "homtrees/order.hpp"
#include "homtrees/sidorenko.hpp"

namespace {

using namespace homtrees;

constexpr const char* kSchemaPrefix = "homtrees/v1";

enum ExitCode { kOk = 0, kViolation = 1, kUsage = 2 };

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw GraphError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw GraphError("cannot write file: " + path);
    out << content;
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::uint64_t guard_from_env() {
    if (const char* s = std::getenv("HOMTREES_GUARD")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end != s && *end == '\0' && v > 0) return v;
        throw GraphError("HOMTREES_GUARD must be a positive integer");
    }
    return kDefaultGuard;
}

double tol_from_env() {
    if (const char* s = std::getenv("HOMTREES_TOL")) {
        char* end = nullptr;
        double v = std::strtod(s, &end);
        if (end != s && *end == '\0' && v > 0) return v;
        throw GraphError("HOMTREES_TOL must be a positive real");
    }
    return 1e-9;
}

struct Options {
    std::string format = "human";
    bool structured() const { return format == "structured"; }
};

int cmd_count(const std::string& source_path, const std::string& image_path,
              const Options& opt) {
    Graph g = parse_graph(read_file(source_path));
    Graph h = parse_graph(read_file(image_path));
    std::string method;
    BigNat value;
    if (g.is_connected() && g.edge_count() == g.vertex_count() - 1 &&
        g.vertex_count() >= 1) {
        value = hom_tree(as_tree(g), h);
        method = "tree-dp";
    } else {
        value = hom_bruteforce(g, h, guard_from_env());
        method = "bruteforce";
    }
    if (opt.structured()) {
        std::cout << kSchemaPrefix << " count\n"
                  << "method " << method << '\n'
                  << "value " << value.to_string() << '\n';
    } else {
        std::cout << value.to_string() << '\n';
    }
    return kOk;
}

void print_chain_summary(const TransformCertificate& cert, bool structured) {
    if (structured) {
        std::cout << "steps " << cert.steps.size() << '\n'
                  << "hom-start " << cert.hom_start.to_string() << '\n';
        for (std::size_t i = 0; i < cert.steps.size(); ++i) {
            const TransformStep& s = cert.steps[i];
            std::cout << "step " << i << " b1 " << s.b1 << " b2 " << s.b2
                      << " d1 " << s.d1 << " d2 " << s.d2 << " swapped "
                      << (s.swapped ? 1 : 0) << " hom-before "
                      << s.hom_before.to_string() << " hom-after "
                      << s.hom_after.to_string() << " holder "
                      << fmt_double(s.holder) << " amgm " << fmt_double(s.amgm)
                      << " decomposition "
                      << (s.decomposition_ok ? "ok" : "VIOLATED") << '\n';
        }
        std::cout << "star " << cert.star.to_string() << '\n';
    } else {
        std::cout << "chain: " << cert.steps.size() << " step(s), counts "
                  << cert.hom_start.to_string();
        for (const TransformStep& s : cert.steps)
            std::cout << " -> " << s.hom_after.to_string();
        std::cout << "\nstar count: " << cert.star.to_string() << '\n';
        for (std::size_t i = 0; i < cert.steps.size(); ++i) {
            const TransformStep& s = cert.steps[i];
            std::cout << "  step " << i << ": b1=" << s.b1 << " b2=" << s.b2
                      << " d1=" << s.d1 << " d2=" << s.d2
                      << (s.swapped ? " (swapped)" : "") << " hom "
                      << s.hom_before.to_string() << " <= "
                      << s.hom_after.to_string() << ", holder "
                      << fmt_double(s.holder) << ", amgm " << fmt_double(s.amgm)
                      << ", decomposition "
                      << (s.decomposition_ok ? "ok" : "VIOLATED") << '\n';
        }
    }
}

int cmd_verify(const std::string& source_path, const std::string& image_path,
               const std::string& certify_path, const std::string& strategy,
               const Options& opt) {
    Graph g = parse_graph(read_file(source_path));
    Graph h = parse_graph(read_file(image_path));
    if (!g.is_connected()) throw GraphError("source graph is disconnected");
    TheoremReport rep =
        verify_theorem(g, h, parse_strategy(strategy), guard_from_env());
    CertificateCheck chain_check = check_certificate(rep.chain, tol_from_env());
    if (!certify_path.empty())
        write_file(certify_path, serialize_certificate(rep.chain));

    if (opt.structured()) {
        std::cout << kSchemaPrefix << " verify\n"
                  << "k " << rep.k << '\n'
                  << "hom " << rep.hom_source.to_string() << '\n'
                  << "star " << rep.star.to_string() << '\n'
                  << "spanning-tree-hom " << rep.reduction.hom_spanning.to_string()
                  << '\n';
        print_chain_summary(rep.chain, true);
        std::cout << "result " << (rep.holds ? "pass" : "violation") << '\n'
                  << "equality " << (rep.equality ? 1 : 0) << '\n'
                  << "chain-valid " << (chain_check.ok ? 1 : 0) << '\n';
    } else {
        std::cout << "k = " << rep.k << '\n'
                  << "hom(G,H) = " << rep.hom_source.to_string() << '\n'
                  << "hom(S_k,H) = " << rep.star.to_string() << '\n'
                  << "spanning tree hom = "
                  << rep.reduction.hom_spanning.to_string() << '\n';
        print_chain_summary(rep.chain, false);
        std::cout << (rep.holds ? "PASS" : "VIOLATION") << ": "
                  << rep.hom_source.to_string()
                  << (rep.holds ? (rep.equality ? " = " : " <= ") : " > ")
                  << rep.star.to_string() << '\n';
    }
    for (const std::string& msg : chain_check.failures)
        std::cerr << "certificate failure: " << msg << '\n';
    return (rep.holds && chain_check.ok) ? kOk : kViolation;
}

int cmd_transform(const std::string& tree_path, const std::string& image_path,
                  const std::string& strategy, const std::string& certify_path,
                  const Options& opt) {
    Tree t = as_tree(parse_graph(read_file(tree_path)));
    Graph h = parse_graph(read_file(image_path));
    TransformCertificate cert = transform_chain(t, h, parse_strategy(strategy));
    CertificateCheck check = check_certificate(cert, tol_from_env());
    if (!certify_path.empty())
        write_file(certify_path, serialize_certificate(cert));

    if (opt.structured()) {
        std::cout << kSchemaPrefix << " transform\n"
                  << "k " << t.edge_count() << '\n'
                  << "start-leaves " << t.leaf_count() << '\n';
        print_chain_summary(cert, true);
        std::cout << "chain-valid " << (check.ok ? 1 : 0) << '\n';
    } else {
        std::cout << "tree: k=" << t.edge_count() << " leaves=" << t.leaf_count()
                  << '\n';
        print_chain_summary(cert, false);
        std::cout << (check.ok ? "certificate OK" : "certificate VIOLATION")
                  << '\n';
    }
    for (const std::string& msg : check.failures)
        std::cerr << "certificate failure: " << msg << '\n';
    return check.ok ? kOk : kViolation;
}

int cmd_trees(int k, int leaves, const Options& opt) {
    auto trees = enumerate_free_trees(k);
    if (leaves > 0) trees = filter_by_leaves(trees, leaves);
    if (opt.structured()) {
        std::cout << kSchemaPrefix << " trees\n"
                  << "k " << k << '\n'
                  << "count " << trees.size() << '\n';
        for (const auto& t : trees)
            std::cout << t.code << " leaves=" << t.leaf_count << '\n';
    } else {
        for (const auto& t : trees)
            std::cout << t.code << " leaves=" << t.leaf_count << '\n';
    }
    return kOk;
}

int cmd_order(int k, const std::string& suite_text, std::uint64_t seed,
              bool seed_given, const std::string& dot_path, int jobs,
              const Options& opt) {
    SuiteSpec spec = parse_suite_spec(suite_text);
    if (spec.kind == SuiteSpec::Kind::random && !seed_given)
        throw GraphError("--seed is mandatory for random suites");
    auto suite = image_suite(spec, seed);
    auto trees = enumerate_free_trees(k);
    OrderRelation rel = empirical_order(trees, suite, jobs);

    // The star's row is guaranteed by the theorem; any witness against it is
    // a real violation.
    int star_index = -1;
    for (std::size_t i = 0; i < rel.trees.size(); ++i)
        if (rel.trees[i].tree.is_star()) star_index = static_cast<int>(i);
    bool star_ok = true;
    for (std::size_t j = 0; j < rel.trees.size(); ++j)
        if (!rel.consistent(star_index, static_cast<int>(j))) star_ok = false;

    if (!dot_path.empty())
        write_file(dot_path, dot_export(hasse(rel), rel));

    if (opt.structured()) {
        std::cout << kSchemaPrefix << " order\n" << relation_export(rel);
        std::cout << "star-row " << (star_ok ? "consistent" : "VIOLATED") << '\n';
    } else {
        int refuted = 0;
        const int m = static_cast<int>(rel.trees.size());
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (!rel.consistent(i, j)) ++refuted;
        std::cout << "trees: " << m << ", images: " << rel.suite.size() << '\n'
                  << "refuted ordered pairs: " << refuted << " of " << m * m
                  << '\n'
                  << "star row: " << (star_ok ? "consistent" : "VIOLATED")
                  << '\n';
        if (!dot_path.empty()) std::cout << "hasse diagram: " << dot_path << '\n';
    }
    if (!star_ok) {
        for (std::size_t j = 0; j < rel.trees.size(); ++j)
            if (!rel.consistent(star_index, static_cast<int>(j)))
                std::cerr << "witness: image " << rel.witness[star_index][j]
                          << " refutes S_k >= " << rel.trees[j].code << '\n';
        return kViolation;
    }
    return kOk;
}

int cmd_brooms(int k, const std::string& image_path, int grid,
               const Options& opt) {
    Graph h = parse_graph(read_file(image_path));
    BroomChainReport rep = broom_chain_check(k, h);
    bool ok = rep.monotone && rep.top_below_star;

    if (opt.structured()) {
        std::cout << kSchemaPrefix << " brooms\n"
                  << "k " << k << '\n';
        for (const auto& e : rep.entries)
            std::cout << "broom " << e.d1 << ' ' << e.d2 << ' '
                      << e.count.to_string() << '\n';
        std::cout << "star " << rep.star.to_string() << '\n'
                  << "monotone " << (rep.monotone ? 1 : 0) << '\n'
                  << "top-below-star " << (rep.top_below_star ? 1 : 0) << '\n';
    } else {
        for (const auto& e : rep.entries)
            std::cout << "B(" << e.d1 << ',' << e.d2
                      << ") hom = " << e.count.to_string() << '\n';
        std::cout << "S_" << k << " hom = " << rep.star.to_string() << '\n'
                  << "ordered by d1-d2: " << (rep.monotone ? "PASS" : "FAIL")
                  << '\n'
                  << "B(" << k - 2 << ",1) <= star: "
                  << (rep.top_below_star ? "PASS" : "FAIL") << '\n';
    }

    // phi profile per broom where the pruned count is positive.
    for (const auto& e : rep.entries) {
        Broom b = make_broom(k, e.d1, e.d2);
        if (hom_tree(as_tree(path_graph(1)), h).is_zero()) break;
        PhiProfile prof = phi_profile(b.tree, 0, 1, h, grid);
        if (opt.structured()) {
            std::cout << "phi " << e.d1 << ' ' << e.d2 << " min "
                      << fmt_double(prof.min_value) << " at "
                      << fmt_double(prof.min_p) << " defect "
                      << fmt_double(prof.symmetry_defect) << " min2nd "
                      << fmt_double(prof.min_second_difference) << " endpoint-max "
                      << (prof.max_at_endpoint ? 1 : 0) << '\n';
        } else {
            std::cout << "phi B(" << e.d1 << ',' << e.d2
                      << "): min=" << fmt_double(prof.min_value) << " at p="
                      << fmt_double(prof.min_p)
                      << ", symmetry defect=" << fmt_double(prof.symmetry_defect)
                      << ", min 2nd diff="
                      << fmt_double(prof.min_second_difference) << '\n';
        }
    }
    return ok ? kOk : kViolation;
}

int cmd_hoffman(const std::string& matrix_path, int k, const Options& opt) {
    SymmetricMatrix a = parse_matrix(read_file(matrix_path));
    HoffmanReport rep = hoffman_check(a, k, tol_from_env());
    if (opt.structured()) {
        std::cout << kSchemaPrefix << " hoffman\n"
                  << "k " << k << '\n'
                  << "walk-sum " << fmt_double(rep.walk) << '\n'
                  << "row-power-sum " << fmt_double(rep.row_power) << '\n'
                  << "weighted-path " << fmt_double(rep.weighted_path) << '\n'
                  << "weighted-star " << fmt_double(rep.weighted_star) << '\n'
                  << "inequality " << (rep.inequality_ok ? "pass" : "VIOLATED")
                  << '\n'
                  << "path-crosscheck "
                  << (rep.path_crosscheck_ok ? "pass" : "VIOLATED") << '\n'
                  << "star-crosscheck "
                  << (rep.star_crosscheck_ok ? "pass" : "VIOLATED") << '\n';
    } else {
        std::cout << "walk_sum(A," << k << ") = " << fmt_double(rep.walk) << '\n'
                  << "row_power_sum(A," << k << ") = " << fmt_double(rep.row_power)
                  << '\n'
                  << fmt_double(rep.walk) << " <= " << fmt_double(rep.row_power)
                  << ' ' << (rep.inequality_ok ? "PASS" : "FAIL") << '\n'
                  << "cross-check path:  "
                  << (rep.path_crosscheck_ok ? "PASS" : "FAIL") << '\n'
                  << "cross-check star:  "
                  << (rep.star_crosscheck_ok ? "PASS" : "FAIL") << '\n';
    }
    return rep.pass() ? kOk : kViolation;
}

int cmd_check(const std::string& cert_path, const Options& opt) {
    TransformCertificate cert = parse_certificate(read_file(cert_path));
    CertificateCheck check = check_certificate(cert, tol_from_env());
    if (opt.structured()) {
        std::cout << kSchemaPrefix << " check\n"
                  << "steps " << cert.steps.size() << '\n'
                  << "result " << (check.ok ? "pass" : "violation") << '\n';
    } else {
        std::cout << (check.ok ? "certificate OK" : "certificate VIOLATION")
                  << " (" << cert.steps.size() << " step(s))\n";
    }
    for (const std::string& msg : check.failures) std::cout << "  " << msg << '\n';
    return check.ok ? kOk : kViolation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact graph homomorphism counts and star extremality checks"};
    app.require_subcommand(1);

    Options opt;

    std::string source_path, image_path, tree_path, matrix_path, cert_path;
    std::string certify_path, dot_path, suite_text;
    std::string strategy = "first-pair";
    int k = 0, leaves = 0, grid = 101, jobs = 1;
    std::uint64_t seed = 0;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "Output format")
            ->check(CLI::IsMember({"human", "structured"}));
    };

    CLI::App* count = app.add_subcommand("count", "Count homomorphisms");
    count->add_option("--source", source_path, "Source graph file")->required();
    count->add_option("--image", image_path, "Image graph file")->required();
    add_format(count);

    CLI::App* verify = app.add_subcommand(
        "verify", "Check hom(G,H) <= hom(S_k,H) with a migration certificate");
    verify->add_option("--source", source_path)->required();
    verify->add_option("--image", image_path)->required();
    verify->add_option("--certify", certify_path, "Write the certificate here");
    verify->add_option("--strategy", strategy)
        ->check(CLI::IsMember({"first-pair", "best-pair"}));
    add_format(verify);

    CLI::App* transform = app.add_subcommand(
        "transform", "Run the leaf-migration chain from a tree to the star");
    transform->add_option("--tree", tree_path)->required();
    transform->add_option("--image", image_path)->required();
    transform->add_option("--strategy", strategy)
        ->check(CLI::IsMember({"first-pair", "best-pair"}));
    transform->add_option("--certify", certify_path);
    add_format(transform);

    CLI::App* trees = app.add_subcommand("trees", "Enumerate free trees");
    trees->add_option("--k", k, "Edge count")->required();
    trees->add_option("--leaves", leaves, "Filter by leaf count")
        ->check(CLI::PositiveNumber);
    add_format(trees);

    CLI::App* order = app.add_subcommand(
        "order", "Empirical hom-count order over an image suite");
    order->add_option("--k", k)->required();
    order->add_option("--suite", suite_text, "all:N or random:COUNT,N,P")
        ->required();
    CLI::Option* seed_opt = order->add_option("--seed", seed);
    order->add_option("--dot", dot_path, "Write the Hasse diagram here");
    order->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    add_format(order);

    CLI::App* brooms =
        app.add_subcommand("brooms", "Broom chain and phi profile");
    brooms->add_option("--k", k)->required();
    brooms->add_option("--image", image_path)->required();
    brooms->add_option("--grid", grid)->check(CLI::Range(3, 100000));
    add_format(brooms);

    CLI::App* hoffman =
        app.add_subcommand("hoffman", "Walk sum vs row power sum");
    hoffman->add_option("--matrix", matrix_path)->required();
    hoffman->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    add_format(hoffman);

    CLI::App* check = app.add_subcommand("check", "Re-validate a certificate");
    check->add_option("--certificate", cert_path)->required();
    add_format(check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*count) return cmd_count(source_path, image_path, opt);
        if (*verify)
            return cmd_verify(source_path, image_path, certify_path, strategy, opt);
        if (*transform)
            return cmd_transform(tree_path, image_path, strategy, certify_path, opt);
        if (*trees) return cmd_trees(k, leaves, opt);
        if (*order)
            return cmd_order(k, suite_text, seed, seed_opt->count() > 0, dot_path,
                             jobs, opt);
        if (*brooms) return cmd_brooms(k, image_path, grid, opt);
        if (*hoffman) return cmd_hoffman(matrix_path, k, opt);
        if (*check) return cmd_check(cert_path, opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
