#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hoffman/canon.hpp"
#include "hoffman/cliques.hpp"
#include "hoffman/coloring.hpp"
#include "hoffman/spectra.hpp"

#include <random>

using namespace hoffman;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    Graph g(n);
    std::uniform_real_distribution<double> coin(0, 1);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) g.add_edge(u, v);
    return g;
}

} // namespace

TEST_CASE("chromatic numbers") {
    CHECK(chromatic_number(cycle(5)) == 3);
    CHECK(chromatic_number(petersen()) == 3);
    CHECK(chromatic_number(schlafli()) == 9);
    CHECK(chromatic_number(empty_graph(0)) == 0);
    CHECK(chromatic_number(empty_graph(4)) == 1);
    CHECK(chromatic_number(complete(7)) == 7);
}

TEST_CASE("chromatic number matches the subset oracle") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(rng() % 10);
        Graph g = random_graph(rng, n, 0.5);
        CHECK(chromatic_number(g) == chromatic_number_brute(g));
    }
}

TEST_CASE("hoffman reports") {
    HoffmanReport sun = hoffman_report(sun3());
    CHECK(sun.chi == 3);
    CHECK(sun.h_integer == 3);
    CHECK(sun.colorable);
    REQUIRE(sun.witness.has_value());
    for (Mask c : *sun.witness) CHECK(popcount(c) == 2);

    HoffmanReport pet = hoffman_report(petersen());
    CHECK(pet.chi == 3);
    CHECK(!pet.h_integer.has_value()); // h = 2.5
    CHECK(!pet.colorable);

    // the line graph of K_{2,6} is not Hoffman colorable
    HoffmanReport lk26 = hoffman_report(line_graph(complete_multipartite({2, 6})));
    CHECK(!lk26.colorable);

    CHECK_THROWS(hoffman_report(empty_graph(3)));
}

TEST_CASE("trivially colorable graphs") {
    CHECK(is_trivially_colorable(cycle(6)));
    CHECK(is_trivially_colorable(cocktail_party(3)));
    CHECK(!is_trivially_colorable(sun3()));
}

TEST_CASE("hoffman cocliques") {
    Graph s = schlafli();
    for (Mask c : cocliques_of_size(s, 3)) CHECK(is_hoffman_coclique(s, c));

    // a maximum coclique of the Petersen graph attains the bound and is
    // 2-regular; verified against brute force over all 4-subsets
    Graph p = petersen();
    auto maxc = cocliques_of_size(p, 4);
    CHECK(maxc.size() == 5);
    for (Mask c : maxc) {
        CHECK(is_hoffman_coclique(p, c));
        for (int v = 0; v < p.n(); ++v)
            if (!(c & bit(v))) CHECK(popcount(p.row(v) & c) == 2);
    }

    // each part of CP(3) is a Hoffman coclique: h = 3, n/h = 2
    Graph cp = cocktail_party(3);
    auto rb = ratio_bound_int(cp);
    REQUIRE(rb.has_value());
    CHECK(rb->size == 2);
    CHECK(is_hoffman_coclique(cp, bit(0) | bit(1)));
    CHECK(!is_hoffman_coclique(cp, bit(0) | bit(2)));
}

TEST_CASE("coloring enumeration") {
    auto c4 = enumerate_hoffman_colorings(cycle(4));
    CHECK(c4.size() == 1);
    CHECK(c4[0].size() == 2);

    auto sun = enumerate_hoffman_colorings(sun3());
    CHECK(!sun.empty());
    for (const auto& col : sun)
        for (Mask c : col) CHECK(popcount(c) == 2);

    CHECK(class_size_set(schlafli()) == std::set<int>{3});
}

TEST_CASE("chromatic components") {
    Graph c6 = cycle(6);
    auto cols = enumerate_hoffman_colorings(c6);
    REQUIRE(cols.size() == 1);
    Graph whole = chromatic_component(c6, cols[0], {0, 1});
    CHECK(isomorphic(whole, c6));

    // two size-3 classes of the Schlafli graph span a 6-cycle
    Graph s = schlafli();
    auto scols = enumerate_hoffman_colorings(s);
    REQUIRE(!scols.empty());
    Graph comp = chromatic_component(s, scols[0], {0, 1});
    CHECK(isomorphic(comp, c6));
}

TEST_CASE("no optimal coloring mixes class sizes 2 and 3 in the pipeline family") {
    // spot check on the smallest non-trivially colorable graph
    for (const auto& col : enumerate_hoffman_colorings(sun3())) {
        std::set<int> sizes;
        for (Mask c : col) sizes.insert(popcount(c));
        CHECK(!(sizes.count(2) && sizes.count(3)));
    }
}
