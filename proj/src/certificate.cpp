#include "homtrees/certificate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace homtrees {

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void append_tree(std::string& out, const char* tag, const Tree& t) {
    out += std::string(tag) + ' ' + std::to_string(t.vertex_count()) + '\n';
    for (auto [u, v] : t.graph().edges())
        out += "e " + std::to_string(u) + ' ' + std::to_string(v) + '\n';
}

} // namespace

std::string serialize_certificate(const TransformCertificate& cert) {
    std::string out{kCertificateSchema};
    out += '\n';
    out += "strategy " + std::string(strategy_name(cert.strategy)) + '\n';
    out += "k " + std::to_string(cert.start.edge_count()) + '\n';
    out += "image " + std::to_string(cert.image.vertex_count()) + ' ' +
           std::to_string(cert.image.edge_count()) + '\n';
    for (auto [u, v] : cert.image.edges())
        out += "e " + std::to_string(u) + ' ' + std::to_string(v) + '\n';
    append_tree(out, "start", cert.start);
    out += "hom-start " + cert.hom_start.to_string() + '\n';
    out += "star " + cert.star.to_string() + '\n';
    out += "steps " + std::to_string(cert.steps.size()) + '\n';
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        const TransformStep& s = cert.steps[i];
        out += "step " + std::to_string(i) + '\n';
        out += "b1 " + std::to_string(s.b1) + '\n';
        out += "b2 " + std::to_string(s.b2) + '\n';
        out += "d1 " + std::to_string(s.d1) + '\n';
        out += "d2 " + std::to_string(s.d2) + '\n';
        out += "swapped " + std::to_string(s.swapped ? 1 : 0) + '\n';
        out += "moments " + std::to_string(s.moments_defined ? 1 : 0) + '\n';
        out += "kept";
        for (std::size_t v = 0; v < s.kept.size(); ++v)
            if (s.kept[v] >= 0)
                out += ' ' + std::to_string(v) + ':' + std::to_string(s.kept[v]);
        out += '\n';
        append_tree(out, "after", s.after);
        out += "base-hom " + s.base_hom.to_string() + '\n';
        out += "hom-before " + s.hom_before.to_string() + '\n';
        out += "hom-after " + s.hom_after.to_string() + '\n';
        out += "forkoff " + s.forkoff.to_string() + '\n';
        out += "decomp-rhs " + s.decomp_rhs.to_string() + '\n';
        out += "holder " + fmt_double(s.holder) + '\n';
        out += "amgm " + fmt_double(s.amgm) + '\n';
    }
    out += "end\n";
    return out;
}

namespace {

struct LineReader {
    std::istringstream in;
    int lineno = 0;

    explicit LineReader(std::string_view text) : in(std::string(text)) {}

    std::string next() {
        std::string line;
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) return line;
        }
        throw GraphError("certificate: unexpected end of input");
    }

    // "key rest..." with the exact key required.
    std::string expect(const std::string& key) {
        std::string line = next();
        if (line == key) return {};
        if (line.rfind(key + ' ', 0) != 0)
            throw GraphError("certificate: expected \"" + key + "\" at line " +
                             std::to_string(lineno) + ", got \"" + line + "\"");
        return line.substr(key.size() + 1);
    }

    long expect_int(const std::string& key) {
        std::istringstream v(expect(key));
        long x;
        std::string junk;
        if (!(v >> x) || (v >> junk))
            throw GraphError("certificate: bad integer for " + key);
        return x;
    }

    BigNat expect_count(const std::string& key) {
        return BigNat::from_decimal(expect(key));
    }

    double expect_double(const std::string& key) {
        std::string text = expect(key);
        char* endp = nullptr;
        double v = std::strtod(text.c_str(), &endp);
        if (endp == text.c_str() || *endp != '\0')
            throw GraphError("certificate: bad double for " + key);
        return v;
    }

    Tree expect_tree(const std::string& tag) {
        long n = expect_int(tag);
        std::vector<std::pair<int, int>> edges;
        for (long i = 0; i + 1 < n; ++i) {
            std::istringstream e(expect("e"));
            int u, v;
            if (!(e >> u >> v)) throw GraphError("certificate: bad edge line");
            edges.emplace_back(u, v);
        }
        return Tree::from_graph(Graph(static_cast<int>(n), edges));
    }
};

} // namespace

TransformCertificate parse_certificate(std::string_view text) {
    LineReader r(text);
    if (r.next() != kCertificateSchema)
        throw GraphError("certificate: unknown schema tag");
    TransformCertificate cert;
    cert.strategy = parse_strategy(r.expect("strategy"));
    const long k = r.expect_int("k");

    {
        std::istringstream head(r.expect("image"));
        long n, m;
        if (!(head >> n >> m)) throw GraphError("certificate: bad image header");
        std::vector<std::pair<int, int>> edges;
        for (long i = 0; i < m; ++i) {
            std::istringstream e(r.expect("e"));
            int u, v;
            if (!(e >> u >> v)) throw GraphError("certificate: bad edge line");
            edges.emplace_back(u, v);
        }
        cert.image = Graph(static_cast<int>(n), edges);
    }

    cert.start = r.expect_tree("start");
    if (cert.start.edge_count() != k)
        throw GraphError("certificate: start tree has " +
                         std::to_string(cert.start.edge_count()) +
                         " edges, header says " + std::to_string(k));
    cert.hom_start = r.expect_count("hom-start");
    cert.star = r.expect_count("star");
    const long steps = r.expect_int("steps");

    Tree cur = cert.start;
    for (long i = 0; i < steps; ++i) {
        if (r.expect_int("step") != i)
            throw GraphError("certificate: step index mismatch");
        TransformStep s;
        s.before = cur;
        s.b1 = static_cast<int>(r.expect_int("b1"));
        s.b2 = static_cast<int>(r.expect_int("b2"));
        s.d1 = static_cast<int>(r.expect_int("d1"));
        s.d2 = static_cast<int>(r.expect_int("d2"));
        s.swapped = r.expect_int("swapped") != 0;
        s.moments_defined = r.expect_int("moments") != 0;
        {
            std::istringstream pairs(r.expect("kept"));
            s.kept.assign(cur.vertex_count(), -1);
            std::string item;
            while (pairs >> item) {
                auto colon = item.find(':');
                if (colon == std::string::npos)
                    throw GraphError("certificate: bad kept pair " + item);
                int from = std::stoi(item.substr(0, colon));
                int to = std::stoi(item.substr(colon + 1));
                if (from < 0 || from >= cur.vertex_count())
                    throw GraphError("certificate: kept vertex out of range");
                s.kept[from] = to;
            }
        }
        s.after = r.expect_tree("after");
        s.base_hom = r.expect_count("base-hom");
        s.hom_before = r.expect_count("hom-before");
        s.hom_after = r.expect_count("hom-after");
        s.forkoff = r.expect_count("forkoff");
        s.decomp_rhs = r.expect_count("decomp-rhs");
        s.holder = r.expect_double("holder");
        s.amgm = r.expect_double("amgm");
        s.decomposition_ok = (s.decomp_rhs == s.hom_before);
        cur = s.after;
        cert.steps.push_back(std::move(s));
    }
    r.expect("end");
    cert.end = cur;
    return cert;
}

namespace {

bool same_edges(const Tree& a, const Tree& b) {
    return a.vertex_count() == b.vertex_count() &&
           a.graph().edges() == b.graph().edges();
}

bool close_rel(double a, double b, double tol) {
    const double scale = std::max({std::fabs(a), std::fabs(b), 1e-300});
    return std::fabs(a - b) <= tol * scale;
}

} // namespace

CertificateCheck check_certificate(const TransformCertificate& cert,
                                   double rel_tol) {
    CertificateCheck res;
    auto fail = [&](const std::string& msg) {
        res.ok = false;
        res.failures.push_back(msg);
    };

    const Graph& h = cert.image;
    const int k = cert.start.edge_count();

    if (hom_tree(cert.start, h) != cert.hom_start)
        fail("hom-start does not match a recount of the start tree");
    const BigNat star = k >= 1
                            ? star_count(k, h)
                            : BigNat{static_cast<std::uint64_t>(h.vertex_count())};
    if (star != cert.star) fail("star does not match star_count(k, image)");

    Tree cur = cert.start;
    BigNat cur_hom = cert.hom_start;
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        const TransformStep& s = cert.steps[i];
        const std::string where = "step " + std::to_string(i) + ": ";

        if (!same_edges(s.before, cur)) {
            fail(where + "before tree does not continue the chain");
            break;
        }
        if (s.hom_before != cur_hom) {
            fail(where + "hom-before breaks chain continuity");
        }
        if (s.after.edge_count() != cur.edge_count())
            fail(where + "edge count not preserved");
        if (s.after.leaf_count() != cur.leaf_count() + 1)
            fail(where + "leaf count did not grow by exactly one");

        bool structural_ok = true;
        try {
            SkeletonInfo sk = skeleton_info(cur);
            const auto& sl = sk.skeleton_leaves;
            if (std::find(sl.begin(), sl.end(), s.b1) == sl.end() ||
                std::find(sl.begin(), sl.end(), s.b2) == sl.end() ||
                s.b1 == s.b2) {
                fail(where + "b1/b2 are not distinct skeleton leaves");
                structural_ok = false;
            }
            if (structural_ok && (sk.attachment_at(s.b1) != s.d1 ||
                                  sk.attachment_at(s.b2) != s.d2)) {
                fail(where + "d1/d2 do not match the pruned leaf counts");
                structural_ok = false;
            }
        } catch (const std::exception& e) {
            fail(where + "structural recheck failed: " + e.what());
            structural_ok = false;
        }

        if (structural_ok) try {
            // Rebuild the pruned tree from the recorded kept map and verify
            // every recorded quantity against a recount.
            std::vector<int> expect_kept(cur.vertex_count(), 0);
            for (int leaf : cur.leaf_set()) {
                int anchor = cur.graph().neighbors(leaf)[0];
                if (anchor == s.b1 || anchor == s.b2) expect_kept[leaf] = -1;
            }
            int next = 0;
            for (int v = 0; v < cur.vertex_count(); ++v)
                expect_kept[v] = (expect_kept[v] == -1) ? -1 : next++;
            if (expect_kept != s.kept) {
                fail(where + "kept map does not match the pruning");
            } else {
                std::vector<std::pair<int, int>> base_edges;
                for (auto [u, v] : cur.graph().edges())
                    if (s.kept[u] >= 0 && s.kept[v] >= 0)
                        base_edges.emplace_back(s.kept[u], s.kept[v]);
                Tree base = Tree::from_graph(Graph(next, base_edges));
                const int nb1 = s.kept[s.b1], nb2 = s.kept[s.b2];

                auto expect_after_edges = base.graph().edges();
                for (int leaf = 0; leaf < s.d1 + s.d2; ++leaf)
                    expect_after_edges.emplace_back(nb1, next + leaf);
                Tree expect_after = Tree::from_graph(
                    Graph(next + s.d1 + s.d2, expect_after_edges));
                if (!same_edges(expect_after, s.after))
                    fail(where + "after tree is not prune-and-reattach at b1");

                PairPinnedTable table = pinned_pair(base, nb1, nb2, h);
                if (table.total != s.base_hom)
                    fail(where + "base-hom does not match a recount");

                BigNat decomp, n1, n2;
                const unsigned e = static_cast<unsigned>(s.d1 + s.d2);
                for (int u = 0; u < h.vertex_count(); ++u)
                    for (int v = 0; v < h.vertex_count(); ++v) {
                        const BigNat& c = table.counts[u][v];
                        if (c.is_zero()) continue;
                        const BigNat du{static_cast<std::uint64_t>(h.degree(u))};
                        const BigNat dv{static_cast<std::uint64_t>(h.degree(v))};
                        decomp += c * du.pow(static_cast<unsigned>(s.d1)) *
                                  dv.pow(static_cast<unsigned>(s.d2));
                        n1 += c * du.pow(e);
                        n2 += c * dv.pow(e);
                    }
                if (decomp != s.decomp_rhs)
                    fail(where + "decomp-rhs does not match a recount");
                if (decomp != s.hom_before)
                    fail(where + "decomposition identity violated");
                if (s.moments_defined) {
                    if (n1 < n2) fail(where + "direction rule violated: M1 < M2");
                    if (n1 != s.forkoff)
                        fail(where + "forkoff does not match a recount");
                    const double base_d = table.total.to_double();
                    const double dd = static_cast<double>(e);
                    const double holder =
                        base_d *
                        std::pow(n1.to_double() / base_d, s.d1 / dd) *
                        std::pow(n2.to_double() / base_d, s.d2 / dd);
                    if (!close_rel(holder, s.holder, rel_tol))
                        fail(where + "holder bound does not match a recount");
                    if (!close_rel(n1.to_double(), s.amgm, rel_tol))
                        fail(where + "amgm bound does not match a recount");
                    if (s.hom_before.to_double() > s.holder * (1.0 + rel_tol))
                        fail(where + "sandwich violated: hom_before > holder");
                    if (s.holder > s.amgm * (1.0 + rel_tol))
                        fail(where + "sandwich violated: holder > amgm");
                } else {
                    if (!s.base_hom.is_zero())
                        fail(where + "moments marked undefined but base count > 0");
                }
            }
        } catch (const std::exception& e) {
            fail(where + "recount failed: " + e.what());
        }

        if (hom_tree(s.after, h) != s.hom_after)
            fail(where + "hom-after does not match a recount");
        if (s.forkoff != s.hom_after)
            fail(where + "migration identity violated: forkoff != hom_after");
        if (s.hom_before > s.hom_after)
            fail(where + "monotonicity violated: hom_before > hom_after");

        cur = s.after;
        cur_hom = s.hom_after;
    }

    if (!cur.is_star()) fail("final tree is not a star");
    if (!same_edges(cur, cert.end)) fail("end tree does not match the chain");
    if (cur_hom != cert.star) fail("final count does not equal the star count");
    return res;
}

} // namespace homtrees
