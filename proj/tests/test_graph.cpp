#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hoffman/graph.hpp"

using namespace hoffman;

TEST_CASE("graph6 basic records") {
    CHECK(graph6_encode(empty_graph(1)) == "@");
    CHECK(graph6_decode("@").n() == 1);
    // K2: header 'A' = 63+2, one edge bit at the top of the next byte
    CHECK(graph6_encode(complete(2)) == "A_");
    CHECK(graph6_decode("A_").adj(0, 1));
}

TEST_CASE("graph6 round trip") {
    Graph s = schlafli();
    Graph back = graph6_decode(graph6_encode(s));
    CHECK(back.n() == s.n());
    for (int u = 0; u < s.n(); ++u)
        for (int v = 0; v < s.n(); ++v) CHECK(back.adj(u, v) == s.adj(u, v));
}

TEST_CASE("graph6 errors carry the byte offset") {
    CHECK_THROWS_AS(graph6_decode("B"), Graph6Error);     // truncated
    CHECK_THROWS_AS(graph6_decode("A_x"), Graph6Error);   // trailing garbage
    CHECK_THROWS_AS(graph6_decode(std::string(1, char(20))), Graph6Error); // out of range
    try {
        graph6_decode("A_x");
        CHECK(false);
    } catch (const Graph6Error& e) {
        CHECK(e.offset == 2);
    }
}

TEST_CASE("induced subgraphs") {
    Graph k5 = complete(5);
    Graph h = induce(k5, bit(0) | bit(2) | bit(4));
    CHECK(h.n() == 3);
    CHECK(h.edge_count() == 3);
    Graph s = schlafli();
    Graph whole = induce(s, s.vertices());
    CHECK(whole.edge_count() == s.edge_count());
}

TEST_CASE("seidel switching") {
    Graph p = petersen();
    CHECK(seidel_switch(p, 0) == p);
    Mask x = bit(0) | bit(3) | bit(7);
    CHECK(seidel_switch(seidel_switch(p, x), x) == p);
    // switching complements exactly |x| * (n - |x|) pairs
    Graph sw = seidel_switch(p, x);
    int changed = 0;
    for (int u = 0; u < p.n(); ++u)
        for (int v = u + 1; v < p.n(); ++v)
            if (sw.adj(u, v) != p.adj(u, v)) ++changed;
    int flips = 0;
    for (int u = 0; u < p.n(); ++u)
        for (int v = u + 1; v < p.n(); ++v)
            if (((x >> u) & 1) != ((x >> v) & 1) ) ++flips;
    CHECK(changed <= flips);
    CHECK(3 * (10 - 3) == flips);
}

TEST_CASE("switching the triangular graph at a vertex neighborhood isolates it") {
    Graph lk8 = triangular_lk8();
    Graph sw = seidel_switch(lk8, lk8.row(0));
    CHECK(sw.deg(0) == 0);
    Graph rest = induce(sw, sw.vertices() & ~Mask{1});
    CHECK(rest.n() == 27);
    CHECK(is_regular(rest));
    CHECK(rest.deg(0) == 16);
}

TEST_CASE("named graphs") {
    Graph cp3 = cocktail_party(3);
    CHECK(cp3.n() == 6);
    CHECK(is_regular(cp3));
    CHECK(cp3.deg(0) == 4);

    Graph f7 = smith_f(7);
    CHECK(f7.n() == 7);
    CHECK(f7.deg(0) == 3);

    Graph s = schlafli();
    CHECK(s.n() == 27);
    CHECK(is_regular(s));
    CHECK(s.deg(0) == 16);

    CHECK(smith_w(5).n() == 5);
    CHECK(smith_w(7).n() == 7);
    CHECK(dynkin_d(4).n() == 4);
    CHECK(dynkin_e(8).n() == 8);
    CHECK_THROWS(dynkin_d(3));

    Graph sun = sun3();
    CHECK(sun.n() == 6);
    CHECK(sun.edge_count() == 9);
}

TEST_CASE("line graph size") {
    Graph p = petersen();
    Graph lp = line_graph(p);
    CHECK(lp.n() == p.edge_count());
    long expect = 0;
    for (int v = 0; v < p.n(); ++v) expect += p.deg(v) * (p.deg(v) - 1) / 2;
    CHECK(lp.edge_count() == expect);
}

TEST_CASE("cone adds one universal vertex") {
    Graph c = cone(cycle(5));
    CHECK(c.n() == 6);
    CHECK(c.deg(5) == 5);
    CHECK(has_universal_vertex(c));
    CHECK(!has_universal_vertex(cycle(5)));
}

TEST_CASE("structure predicates") {
    CHECK(is_bipartite(cycle(6)));
    CHECK(!is_bipartite(cycle(5)));
    CHECK(is_regular_complete_multipartite(cocktail_party(4)));
    CHECK(is_regular_complete_multipartite(complete(5)));
    CHECK(!is_regular_complete_multipartite(complete_multipartite({2, 3})));
    CHECK(is_connected(petersen()));
    CHECK(!is_connected(disjoint_union(complete(3), complete(3))));
}
