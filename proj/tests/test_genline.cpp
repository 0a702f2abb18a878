#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hoffman/canon.hpp"
#include "hoffman/coloring.hpp"
#include "hoffman/genline.hpp"
#include "hoffman/spectra.hpp"

#include <random>

using namespace hoffman;

namespace {

Graph random_connected(std::mt19937_64& rng, int n, double p) {
    while (true) {
        Graph g(n);
        std::uniform_real_distribution<double> coin(0, 1);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng) < p) g.add_edge(u, v);
        if (is_connected(g)) return g;
    }
}

} // namespace

TEST_CASE("generalized line graph construction") {
    GLGSpec zero{cycle(4), {0, 0, 0, 0}};
    CHECK(isomorphic(build_glg(zero).graph, cycle(4)));

    GLGSpec k2{complete(2), {1, 0}};
    CHECK(isomorphic(build_glg(k2).graph, path_graph(3)));

    GLGSpec k4{complete(4), {0, 0, 0, 0}};
    CHECK(isomorphic(build_glg(k4).graph, cocktail_party(3)));
}

TEST_CASE("chromatic number closed form") {
    CHECK(glg_chi_formula({complete(2), {1, 0}}) == 2);
    CHECK(glg_chi_formula({cycle(4), {0, 0, 0, 0}}) == 2);
    CHECK(glg_chi_formula({complete(4), {0, 0, 0, 0}}) == 3);

    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        Graph h = random_connected(rng, n, 0.5);
        std::vector<int> caps(n);
        for (int& a : caps) a = static_cast<int>(rng() % 3);
        GLGSpec spec{h, caps};
        CHECK(glg_chi_formula(spec) == chromatic_number(build_glg(spec).graph));
    }
}

TEST_CASE("balanced specs") {
    CHECK(isomorphic(balanced_glg(cycle(4), 2), cocktail_party(2)));
    CHECK(isomorphic(balanced_glg(complete(2), 1), complete(1)));
    // a 1-factorable regular graph balanced at its valency is its line graph
    Graph k33 = complete_multipartite({3, 3});
    CHECK(isomorphic(balanced_glg(k33, 3), line_graph(k33)));
    CHECK_THROWS(balanced_spec(complete(4), 2)); // below a degree
}

TEST_CASE("balance certificate") {
    CHECK(verify_balanced_certificate(balanced_spec(complete(4), 3)));
    CHECK(!verify_balanced_certificate({complete(2), {1, 0}}));
    CHECK(verify_balanced_certificate({complete_multipartite({3, 3}), {0, 0, 0, 0, 0, 0}}));
}

TEST_CASE("balance certificate tracks colorability at eigenvalue -2") {
    std::mt19937_64 rng(77);
    int done = 0;
    while (done < 25) {
        int n = 2 + static_cast<int>(rng() % 4);
        Graph h = random_connected(rng, n, 0.6);
        std::vector<int> caps(n);
        for (int& a : caps) a = static_cast<int>(rng() % 3);
        GLGSpec spec{h, caps};
        BuiltGLG built = build_glg(spec);
        if (built.graph.n() == 0 || built.graph.edge_count() == 0 || !is_connected(built.graph)) continue;
        ++done;
        bool cert = verify_balanced_certificate(spec);
        HoffmanReport rep = hoffman_report(built.graph);
        bool hc_minus2 = rep.colorable && multiplicity_at(built.graph, mpq_class(-2)) > 0 &&
                         lambda_min_geq(built.graph, mpq_class(-2));
        CHECK(cert == hc_minus2);
    }
}

TEST_CASE("rank argument: unbalanced vertex counts force the eigenvalue -2") {
    std::mt19937_64 rng(99);
    int done = 0;
    while (done < 25) {
        int n = 2 + static_cast<int>(rng() % 4);
        Graph h = random_connected(rng, n, 0.6);
        std::vector<int> caps(n);
        long cap_sum = 0;
        for (int& a : caps) {
            a = static_cast<int>(rng() % 3);
            cap_sum += a;
        }
        GLGSpec spec{h, caps};
        BuiltGLG built = build_glg(spec);
        if (!is_connected(built.graph) || built.graph.n() == 0) continue;
        ++done;
        long m = h.edge_count();
        if (m - h.n() + cap_sum != 0) CHECK(multiplicity_at(built.graph, mpq_class(-2)) >= 1);
    }
}

TEST_CASE("recognition finds representations of line graphs") {
    std::mt19937_64 rng(13);
    int done = 0;
    while (done < 100) {
        int n = 2 + static_cast<int>(rng() % 7);
        Graph h = random_connected(rng, n, 0.5);
        if (h.edge_count() == 0) continue;
        ++done;
        Graph lg = line_graph(h);
        auto rep = recognize_glg(lg);
        REQUIRE(rep.has_value());
        // Gram check: A + 2I exactly
        for (int u = 0; u < lg.n(); ++u)
            for (int v = 0; v < lg.n(); ++v) {
                auto [a1, a2] = (*rep)[u];
                auto [b1, b2] = (*rep)[v];
                int dot = 0;
                for (int x : {a1, a2})
                    for (int y : {b1, b2})
                        if (std::abs(x) == std::abs(y)) dot += (x > 0) == (y > 0) ? 1 : -1;
                int want = u == v ? 2 : (lg.adj(u, v) ? 1 : 0);
                CHECK(dot == want);
            }
    }
}

TEST_CASE("recognition rejects the exceptional examples") {
    CHECK(!recognize_glg(smith_f(7)).has_value());
    CHECK(!recognize_glg(schlafli()).has_value());
    CHECK(recognize_glg(sun3()).has_value()); // line graph of the net
    CHECK(recognize_glg(cocktail_party(4)).has_value());
}

TEST_CASE("exceptional predicate") {
    CHECK(is_exceptional(smith_f(7)));
    CHECK(!is_exceptional(sun3()));
    CHECK(is_exceptional(schlafli()));
    CHECK(!is_exceptional(disjoint_union(complete(3), complete(3))));
    CHECK(is_exceptional(petersen()));
}
