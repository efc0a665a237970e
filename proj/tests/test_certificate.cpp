#include <doctest.h>

#include <string>

#include "homtrees/certificate.hpp"
#include "oracles.hpp"

using namespace homtrees;

namespace {

std::string replace_once(std::string text, const std::string& from,
                         const std::string& to) {
    auto pos = text.find(from);
    REQUIRE(pos != std::string::npos);
    return text.replace(pos, from.size(), to);
}

} // namespace

TEST_CASE("certificate serialization round trip") {
    TransformCertificate cert =
        transform_chain(as_tree(path_graph(4)), path_graph(2));
    std::string text = serialize_certificate(cert);
    CHECK(text.rfind(kCertificateSchema, 0) == 0);

    TransformCertificate back = parse_certificate(text);
    CHECK(back.start.graph().edges() == cert.start.graph().edges());
    CHECK(back.image.edges() == cert.image.edges());
    CHECK(back.hom_start == cert.hom_start);
    CHECK(back.star == cert.star);
    REQUIRE(back.steps.size() == cert.steps.size());
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        CHECK(back.steps[i].b1 == cert.steps[i].b1);
        CHECK(back.steps[i].b2 == cert.steps[i].b2);
        CHECK(back.steps[i].d1 == cert.steps[i].d1);
        CHECK(back.steps[i].d2 == cert.steps[i].d2);
        CHECK(back.steps[i].kept == cert.steps[i].kept);
        CHECK(back.steps[i].hom_after == cert.steps[i].hom_after);
        CHECK(back.steps[i].forkoff == cert.steps[i].forkoff);
        CHECK(back.steps[i].holder == cert.steps[i].holder);
        CHECK(back.steps[i].after.graph().edges() ==
              cert.steps[i].after.graph().edges());
    }
    // serialization is stable
    CHECK(serialize_certificate(back) == text);
}

TEST_CASE("honest certificates validate") {
    auto suite = all_connected_graphs(4);
    for (int k = 2; k <= 6; ++k)
        for (const auto& entry : enumerate_free_trees(k))
            for (const Graph& h : suite) {
                TransformCertificate cert = transform_chain(entry.tree, h);
                CertificateCheck check = check_certificate(cert);
                INFO("k=", k, " code=", entry.code);
                for (const auto& msg : check.failures) INFO(msg);
                CHECK(check.ok);
                // round trip through text and re-check
                CertificateCheck again =
                    check_certificate(parse_certificate(serialize_certificate(cert)));
                CHECK(again.ok);
            }
}

TEST_CASE("zero-count chains validate") {
    TransformCertificate cert =
        transform_chain(as_tree(path_graph(5)), edgeless_graph(3));
    CHECK(check_certificate(cert).ok);
}

TEST_CASE("best-pair certificates validate") {
    for (const auto& entry : enumerate_free_trees(6)) {
        if (entry.tree.is_star()) continue;
        TransformCertificate cert = transform_chain(
            entry.tree, path_graph(2), PairStrategy::best_pair);
        CHECK(check_certificate(cert).ok);
    }
}

TEST_CASE("mutated counts are rejected") {
    TransformCertificate honest =
        transform_chain(as_tree(path_graph(4)), path_graph(2));
    std::string text = serialize_certificate(honest);

    // plant a monotonicity violation: final count 18 -> 1
    CertificateCheck broken =
        check_certificate(parse_certificate(replace_once(text, "hom-after 18",
                                                         "hom-after 1")));
    CHECK_FALSE(broken.ok);
    CHECK(!broken.failures.empty());

    // plant a wrong star count
    CertificateCheck bad_star = check_certificate(
        parse_certificate(replace_once(text, "star 18", "star 19")));
    CHECK_FALSE(bad_star.ok);

    // plant a wrong bound
    CertificateCheck bad_holder = check_certificate(
        parse_certificate(replace_once(text, "holder 18", "holder 11")));
    CHECK_FALSE(bad_holder.ok);

    // plant a wrong pruning record
    CertificateCheck bad_kept = check_certificate(
        parse_certificate(replace_once(text, "kept 1:0 2:1 3:2", "kept 1:0 3:1 2:2")));
    CHECK_FALSE(bad_kept.ok);

    // plant a pin that is a leaf, not a skeleton leaf
    CertificateCheck bad_pin = check_certificate(
        parse_certificate(replace_once(text, "b1 1\n", "b1 0\n")));
    CHECK_FALSE(bad_pin.ok);
}

TEST_CASE("malformed certificates fail to parse") {
    CHECK_THROWS_AS(parse_certificate("nonsense\n"), GraphError);
    CHECK_THROWS_AS(parse_certificate("homtrees-cert v1\nstrategy nope\n"),
                    std::invalid_argument);
    TransformCertificate honest =
        transform_chain(as_tree(path_graph(3)), path_graph(2));
    std::string text = serialize_certificate(honest);
    CHECK_THROWS_AS(parse_certificate(text.substr(0, text.size() / 2)),
                    GraphError);
}
