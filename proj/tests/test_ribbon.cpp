#include <doctest.h>

#include <random>

#include "heegraph/errors.hpp"
#include "heegraph/lens.hpp"
#include "heegraph/ribbon_graph.hpp"
#include "heegraph/verify.hpp"
#include "oracles.hpp"

using namespace heegraph;

namespace {

RibbonGraph loop(bool twisted = false) { return RibbonGraph::build(1, {{0, 1}}, {{0, 1, twisted}}); }

// Three parallel edges between two vertices.  With rotations (0,2,4) and
// (1,5,3) it is the plane theta graph; (0,2,4)/(1,3,5) embeds it in the torus.
RibbonGraph theta(bool planar) {
    return RibbonGraph::build(2, {{0, 2, 4}, planar ? std::vector<HalfEdge>{1, 5, 3} : std::vector<HalfEdge>{1, 3, 5}},
                              {{0, 1, false}, {2, 3, false}, {4, 5, false}});
}

SubgraphMetrics expect(std::int64_t e, std::int64_t v, std::int64_t k, std::int64_t f, std::int64_t t) {
    SubgraphMetrics m;
    m.e = e;
    m.v = v;
    m.k = k;
    m.r = v - k;
    m.n = e - m.r;
    m.f = f;
    m.t = t;
    m.euler_genus = 2 * k - v + e - f;
    return m;
}

}  // namespace

TEST_SUITE("ribbon") {
    TEST_CASE("loop graph is valid") {
        const auto g = loop();
        CHECK(g.vertex_count() == 1);
        CHECK(g.edge_count() == 1);
        CHECK(g.degree(0) == 2);
        CHECK(g.is_loop(0));
    }

    TEST_CASE("validation names the offending half-edge") {
        CHECK_THROWS_WITH_AS(RibbonGraph::build(1, {{0, 1}}, {{0, 1, false}, {0, 1, false}}),
                             doctest::Contains("half-edge 0"), InvalidGraph);
        CHECK_THROWS_AS(RibbonGraph::build(1, {{0, 0}}, {{0, 1, false}}), InvalidGraph);
        CHECK_THROWS_WITH_AS(RibbonGraph::build(1, {{0, 7}}, {{0, 1, false}}), doctest::Contains("7"), InvalidGraph);
        CHECK_THROWS_WITH_AS(RibbonGraph::build(2, {{0}, {}}, {{0, 1, false}}), doctest::Contains("half-edge 1"),
                             InvalidGraph);
        CHECK_THROWS_AS(RibbonGraph::build(1, {{0, 1}, {}}, {{0, 1, false}}), InvalidGraph);
    }

    TEST_CASE("empty graph and isolated vertices") {
        const auto g = RibbonGraph::build(3, {{}, {}, {}}, {});
        CHECK(metrics(g) == expect(0, 3, 3, 3, 0));
        const auto none = RibbonGraph::build(0, {}, {});
        CHECK(metrics(none) == expect(0, 0, 0, 0, 0));
    }

    TEST_CASE("loop metrics") {
        const auto g = loop();
        CHECK(subgraph_metrics(g, full_subset(g)) == expect(1, 1, 1, 2, 0));
        CHECK(subgraph_metrics(g, empty_subset(g)) == expect(0, 1, 1, 1, 0));
        const auto m = metrics(loop(true));
        CHECK(m.f == 1);
        CHECK(m.t == 1);
        CHECK(m.euler_genus == 1);
    }

    TEST_CASE("theta embeddings") {
        CHECK(metrics(theta(true)) == expect(3, 2, 1, 3, 0));
        const auto torus = metrics(theta(false));
        CHECK(torus.f == 1);
        CHECK(torus.euler_genus == 2);
    }

    TEST_CASE("subset ids out of range") {
        const auto g = loop();
        const std::vector<std::size_t> bad{3};
        CHECK_THROWS_AS(subset_of(g, bad), std::out_of_range);
        CHECK_THROWS(subgraph_metrics(g, EdgeSubset(4, true)));
    }

    TEST_CASE("partial Petrial") {
        const auto g = loop();
        CHECK(partial_petrial(g, empty_subset(g)) == g);
        const auto tw = partial_petrial(g, full_subset(g));
        CHECK(tw == loop(true));
        CHECK(partial_petrial(tw, full_subset(g)) == g);
    }

    TEST_CASE("medial graph examples") {
        const auto m1 = medial_graph(loop());
        CHECK(m1.vertex_count() == 1);
        CHECK(m1.edge_count() == 2);
        CHECK(metrics(m1).f == 3);
        CHECK(metrics(m1).euler_genus == 0);

        const auto m2 = medial_graph(theta(true));
        CHECK(m2.vertex_count() == 3);
        CHECK(m2.edge_count() == 6);
        CHECK(metrics(m2).f == 5);
        CHECK(metrics(m2).euler_genus == 0);

        const auto m3 = medial_graph(lens_heegaard_graph(LensParams::make(7, 3)));
        CHECK(m3.vertex_count() == 14);
        CHECK(m3.edge_count() == 28);
        CHECK(metrics(m3).euler_genus == 2);

        CHECK_THROWS_AS(medial_graph(RibbonGraph::build(1, {{}}, {})), InvalidGraph);
        CHECK_THROWS_AS(medial_graph(RibbonGraph::build(2, {{0, 1}, {}}, {{0, 1, false}})), InvalidGraph);
    }

    TEST_CASE("face counts agree with the dart-walk oracle") {
        std::mt19937_64 rng(314159);
        for (int i = 0; i < 300; ++i) {
            const auto g = random_ribbon_graph(rng, 7, 9);
            const auto s = random_subset(rng, g);
            CHECK(subgraph_metrics(g, s).f ==
                  oracle::face_count(g, std::vector<bool>(s.begin(), s.end()), std::vector<bool>(g.edge_count())));
            CHECK(metrics(g).f == oracle::face_count(g));
        }
    }

    TEST_CASE("tracer matches the general metrics") {
        std::mt19937_64 rng(11);
        for (int i = 0; i < 100; ++i) {
            const auto g = random_ribbon_graph(rng, 6, 12);
            SubsetTracer tracer(g);
            for (int k = 0; k < 8; ++k) {
                const auto s = random_subset(rng, g);
                std::uint64_t mask = 0;
                for (std::size_t j = 0; j < s.size(); ++j) mask |= static_cast<std::uint64_t>(s[j]) << j;
                CHECK(tracer.metrics(mask) == subgraph_metrics(g, s));
                CHECK(tracer.petrial_face_count(mask) == metrics(partial_petrial(g, s)).f);
            }
        }
    }

    TEST_CASE("property batteries over random rotation systems") {
        std::mt19937_64 rng(2718);
        for (int i = 0; i < 200; ++i) {
            const auto g = random_ribbon_graph(rng, 6, 10);
            CHECK_NOTHROW(check_metric_identities(g, full_subset(g)));
            CHECK_NOTHROW(check_metric_identities(g, random_subset(rng, g)));
            CHECK_NOTHROW(check_monotone_components(g));
            CHECK_NOTHROW(check_petrial_properties(g, random_subset(rng, g)));
            if (g.edge_count() > 0 && is_connected(g)) CHECK_NOTHROW(check_medial_properties(g));
        }
    }

    TEST_CASE("untwisted connected graphs have even Euler genus") {
        std::mt19937_64 rng(8);
        for (int i = 0; i < 100; ++i) {
            const auto g = random_connected_ribbon_graph(rng, 6, 10, false);
            const auto m = metrics(g);
            CHECK(m.t == 0);
            CHECK(m.euler_genus % 2 == 0);
            CHECK(m.v - m.e + m.f == 2 - m.euler_genus);
        }
    }
}
