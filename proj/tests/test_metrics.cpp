#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "netlang/generators.hpp"
#include "netlang/metrics.hpp"
#include "netlang/rng.hpp"
#include "oracles.hpp"

using namespace netlang;

namespace {

Graph star(NodeId n) {
    Graph g(n);
    for (NodeId v = 1; v < n; ++v) g.add_edge(0, v);
    return g;
}

Graph path(NodeId n) {
    Graph g(n);
    for (NodeId v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

}  // namespace

TEST_CASE("clustering basics") {
    Graph tri = gen_complete(3);
    for (NodeId u = 0; u < 3; ++u) CHECK(clustering_node(tri, u) == doctest::Approx(1.0));

    Graph st = star(5);
    CHECK(clustering_node(st, 0) == doctest::Approx(0.0));
    CHECK(clustering_node(st, 1) == doctest::Approx(0.0));  // degree < 2 convention
}

TEST_CASE("path length basics") {
    CHECK(char_path_length(gen_complete(7)).length == doctest::Approx(1.0));
    CHECK(char_path_length(path(3)).length == doctest::Approx(4.0 / 3.0));
    CHECK(char_path_length(gen_regular_ring(6, 2)).length == doctest::Approx(1.8));
    CHECK(oracle::char_path_length(gen_regular_ring(6, 2)) == doctest::Approx(1.8));
}

TEST_CASE("path length on disconnected input: LCC by default, error in strict mode") {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(3, 4);
    auto res = char_path_length(g);
    CHECK(res.lcc_fraction == doctest::Approx(0.6));
    CHECK(res.length == doctest::Approx(4.0 / 3.0));

    PathLengthOptions strict;
    strict.strict = true;
    CHECK_THROWS_WITH_AS(char_path_length(g, strict), "graph has 2 components",
                         std::runtime_error);
}

TEST_CASE("sampled path length stays close to exact") {
    Graph g = gen_random_er(800, 8, 42);
    PathLengthOptions exact;
    const double truth = char_path_length(g, exact).length;
    PathLengthOptions sampled;
    sampled.exact_threshold = 100;
    sampled.sample_sources = 200;
    sampled.seed = 7;
    auto est = char_path_length(g, sampled);
    CHECK(est.estimated);
    CHECK(est.length == doctest::Approx(truth).epsilon(0.05));
}

TEST_CASE("random baselines") {
    auto [c1, l1] = random_baselines(478773, 74);
    CHECK(std::abs(c1 - 1.55e-4) / 1.55e-4 < 0.02);
    CHECK(std::abs(l1 - 3.03) / 3.03 < 0.02);

    auto [c2, l2] = random_baselines(30244, 60);
    CHECK(std::abs(c2 - 0.002) / 0.002 < 0.05);
    (void)l2;

    const double e = std::exp(1.0);
    auto [c3, l3] = random_baselines(e * e, e);
    CHECK(std::abs(l3 - 2.0) < 1e-12);
    CHECK(std::abs(c3 - 1.0 / e) < 1e-12);

    CHECK_THROWS_AS(random_baselines(100, 1.0), std::invalid_argument);
}

TEST_CASE("betweenness on canonical graphs") {
    auto bs = betweenness(star(5));
    CHECK(bs[0] == doctest::Approx(6.0));  // C(4,2) leaf pairs
    for (NodeId v = 1; v < 5; ++v) CHECK(bs[v] == doctest::Approx(0.0));

    auto bp = betweenness(path(4));
    CHECK(bp[0] == doctest::Approx(0.0));
    CHECK(bp[1] == doctest::Approx(2.0));
    CHECK(bp[2] == doctest::Approx(2.0));

    for (double b : betweenness(gen_complete(6))) CHECK(b == doctest::Approx(0.0));

    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    CHECK_THROWS_WITH_AS(betweenness(g, true), "graph has 2 components", std::runtime_error);
}

TEST_CASE("metrics agree with brute-force oracles on random small graphs") {
    Rng rng(20250809);
    for (int trial = 0; trial < 40; ++trial) {
        const NodeId n = 2 + static_cast<NodeId>(rng.index(7));
        Graph g = oracle::random_connected_graph(n, 0.3 + 0.6 * rng.unit(), rng);

        CHECK(clustering_avg(g) == doctest::Approx(oracle::clustering_avg(g)).epsilon(1e-9));
        CHECK(char_path_length(g).length ==
              doctest::Approx(oracle::char_path_length(g)).epsilon(1e-9));
        const auto mine = betweenness(g);
        const auto ref = oracle::betweenness(g);
        double sum_mine = 0.0, sum_pairs = 0.0;
        for (NodeId u = 0; u < n; ++u) {
            CHECK(mine[u] == doctest::Approx(ref[u]).epsilon(1e-9));
            sum_mine += mine[u];
        }
        // sum over nodes equals sum over pairs of (path length - 1)
        const auto d = oracle::floyd_warshall(g);
        for (NodeId s = 0; s < n; ++s)
            for (NodeId t = s + 1; t < n; ++t) sum_pairs += d[s][t] - 1;
        CHECK(sum_mine == doctest::Approx(sum_pairs).epsilon(1e-9));
    }
}

TEST_CASE("C and L are invariant under node relabeling") {
    Rng rng(5150);
    Graph g = oracle::random_connected_graph(8, 0.4, rng);
    const double c0 = clustering_avg(g);
    const double l0 = char_path_length(g).length;

    std::vector<NodeId> perm(8);
    for (NodeId i = 0; i < 8; ++i) perm[i] = i;
    for (int t = 0; t < 5; ++t) {
        for (std::size_t i = 0; i + 1 < perm.size(); ++i) {
            const std::size_t j = i + rng.index(perm.size() - i);
            std::swap(perm[i], perm[j]);
        }
        Graph h(8);
        for (const auto& [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
        CHECK(clustering_avg(h) == doctest::Approx(c0).epsilon(1e-12));
        CHECK(char_path_length(h).length == doctest::Approx(l0).epsilon(1e-12));
    }
}

TEST_CASE("assortativity") {
    // star: Pearson over endpoint pairs is exactly -1
    auto a = assortativity(star(6));
    REQUIRE(a.has_value());
    CHECK(*a == doctest::Approx(-1.0).epsilon(1e-12));

    // regular ring: all degrees equal, undefined
    CHECK_FALSE(assortativity(gen_regular_ring(20, 4)).has_value());

    // single edge: below the 2-edge precondition
    Graph g(2);
    g.add_edge(0, 1);
    CHECK_FALSE(assortativity(g).has_value());

    // preferential-attachment graphs lean disassortative at desk scale
    double mean = 0.0;
    for (int s = 0; s < 20; ++s) {
        auto v = assortativity(gen_scale_free(400, 5, 3, 600 + s));
        REQUIRE(v.has_value());
        mean += *v;
    }
    CHECK(mean / 20 < 0.0);
}

TEST_CASE("degree histogram") {
    auto hist = degree_histogram(star(5));
    CHECK(hist[4] == doctest::Approx(1.0));
    CHECK(hist[1] == doctest::Approx(4.0));

    Graph g(3);  // isolated nodes count at degree 0
    auto h0 = degree_histogram(g);
    CHECK(h0[0] == doctest::Approx(3.0));
}

TEST_CASE("power-law fit recovers a synthetic exponent") {
    DegreeHistogram hist;
    for (int k = 1; k <= 1000; ++k) hist[k] = 1e12 * std::pow(k, -3.0);
    auto fit = fit_power_law(hist, 1);
    CHECK(fit.exponent == doctest::Approx(3.0).epsilon(0.05 / 3.0));
    CHECK(fit.r_squared > 0.999);

    DegreeHistogram tiny{{1, 5.0}, {2, 2.0}};
    CHECK_THROWS_AS(fit_power_law(tiny, 1), std::runtime_error);
}

TEST_CASE("two-regime fit recovers a synthetic breakpoint") {
    DegreeHistogram hist;
    const double a = 1e9;
    const double b = a * std::pow(100.0, -1.5) / std::pow(100.0, -2.7);
    for (int k = 1; k <= 1000; ++k)
        hist[k] = k < 100 ? a * std::pow(k, -1.5) : b * std::pow(k, -2.7);
    auto fit = fit_two_regime(hist);
    CHECK(fit.two_regime);
    CHECK(fit.breakpoint >= 70);
    CHECK(fit.breakpoint <= 140);
    CHECK(fit.exponent_low == doctest::Approx(1.5).epsilon(0.1));
    CHECK(fit.exponent_high == doctest::Approx(2.7).epsilon(0.1));
}

TEST_CASE("analyze bundles the report") {
    auto r = analyze(gen_complete(10));
    CHECK(r.n == 10);
    CHECK(r.m_edges == 45);
    CHECK(r.clustering_avg == doctest::Approx(1.0));
    CHECK(r.char_path_length == doctest::Approx(1.0));
    CHECK(r.density == doctest::Approx(1.0));
    CHECK(r.component_count == 1);

    auto ring = analyze(gen_regular_ring(400, 20));
    CHECK(ring.clustering_avg == doctest::Approx(54.0 / 76.0).epsilon(1e-12));
    CHECK(ring.degree_histogram.at(20) == doctest::Approx(400.0));
    CHECK(ring.c_random == doctest::Approx(0.05));
    CHECK(ring.l_random == doctest::Approx(std::log(400.0) / std::log(20.0)));

    const std::string row = report_csv_row(ring);
    CHECK(row.find("400,4000,20,") == 0);
}

TEST_CASE("csv row has the fixed column count") {
    auto r = analyze(gen_small_world(200, 10, 0.05, 3));
    const std::string header = report_csv_header();
    const std::string row = report_csv_row(r);
    const auto commas = [](const std::string& s) {
        return std::count(s.begin(), s.end(), ',');
    };
    CHECK(commas(header) == 11);
    CHECK(commas(row) == 11);
}
