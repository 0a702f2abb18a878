#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hoffman/canon.hpp"
#include "hoffman/cliques.hpp"
#include "hoffman/genline.hpp"
#include "hoffman/roots.hpp"
#include "hoffman/spectra.hpp"

#include <random>
#include <set>

using namespace hoffman;

TEST_CASE("root table shape") {
    const RootTable& t = e8();
    CHECK(t.size() == 240);
    for (int i = 0; i < 240; ++i) {
        int norm = t.inner(i, i);
        CHECK(norm == 8);
    }
    std::set<int> values;
    for (int i = 0; i < 240; ++i)
        for (int j = 0; j < 240; ++j)
            if (i != j) values.insert(t.inner(i, j));
    CHECK(values == std::set<int>{-8, -4, 0, 4});
}

TEST_CASE("subsystems by orthogonality") {
    RootSet e7 = subsystem_orthogonal({"e"});
    CHECK(e7.size() == 126);
    for (int r : e7) {
        char type = e8()[r].name[0];
        CHECK((type == 'c' || type == 'd'));
    }
    CHECK(subsystem_orthogonal({"d1234"}).size() == 126);
    CHECK(subsystem_orthogonal({"e", "d1234"}).size() == 60);
    CHECK_THROWS(subsystem_orthogonal({"e", "a12"})); // product 4, not orthogonal
}

TEST_CASE("inner products by name") {
    CHECK(inner("a12", "a13") == 4);
    CHECK(inner("a12", "a34") == 0);
    CHECK(inner("a12", "b12") == -4);
    CHECK(inner("a12", "b34") == 4);
    CHECK(inner("e", "c12") == 0);
    CHECK(inner("e", "a12") == 4);
    CHECK(inner("e", "e'") == -8);
}

TEST_CASE("decode and verify representations") {
    Graph k2 = decode_representation({"a12", "b34"});
    CHECK(k2.n() == 2);
    CHECK(k2.adj(0, 1));

    CHECK_THROWS(decode_representation({"a12", "b12"})); // product -4

    // a 4-cycle representation and its verification
    Graph c4 = cycle(4);
    Representation rep = {e8().by_name("a12"), e8().by_name("a23"), e8().by_name("a34"), e8().by_name("a14")};
    CHECK(verify_representation(c4, rep));
    Representation bad = rep;
    bad[1] = e8().by_name("b12");
    CHECK(!verify_representation(c4, bad));
}

TEST_CASE("decoded representations have smallest eigenvalue at least -2") {
    std::mt19937_64 rng(5);
    RootSet e7 = subsystem_orthogonal({"e"});
    for (int trial = 0; trial < 20; ++trial) {
        // random greedy compatible set
        RootSet chosen;
        std::vector<int> shuffled(e7);
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        for (int r : shuffled) {
            bool ok = true;
            for (int c : chosen) {
                int p = e8().inner(r, c);
                if (p != 0 && p != 4) ok = false;
            }
            if (ok) chosen.push_back(r);
            if (chosen.size() == 10) break;
        }
        Graph g = decode_representation_ids(chosen);
        CHECK(lambda_min_geq(g, mpq_class(-2)));
    }
}

TEST_CASE("representation search") {
    RootSet e7_perp_e = subsystem_orthogonal({"e"});
    auto k7 = find_representation(complete(7), e7_perp_e);
    REQUIRE(k7.has_value());
    CHECK(verify_representation(complete(7), *k7));

    CHECK(!find_representation(complete(8), e7_perp_e).has_value());
    CHECK(!find_representation(complete(9), e8_roots()).has_value());

    auto pet = find_representation(petersen(), e8_roots());
    REQUIRE(pet.has_value());
    CHECK(verify_representation(petersen(), *pet));
}

TEST_CASE("membership in the switching class of eight-vertex line graphs") {
    CHECK(in_s8(schlafli()));
    CHECK(in_s8(sun3()));
    CHECK(in_s8(triangular_lk8()));
    CHECK(in_s8(chang(2)));
    CHECK(!in_s8(complete_multipartite({1, 5})));
    // every regular exceptional graph lies in the class
    CHECK(in_s8(petersen()));
}

TEST_CASE("coclique bound inside the switching class") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> coin(0, 1);
    for (int trial = 0; trial < 200; ++trial) {
        Graph h(8);
        for (int u = 0; u < 8; ++u)
            for (int v = u + 1; v < 8; ++v)
                if (coin(rng) < 0.5) h.add_edge(u, v);
        Graph lh = line_graph(h);
        if (lh.n() == 0 || lh.n() > 28) continue;
        Mask f = 0;
        for (int v = 0; v < lh.n(); ++v)
            if (coin(rng) < 0.5) f |= bit(v);
        Graph g = seidel_switch(lh, f);
        // every coclique has size <= 4 and size-4 cocliques are 2-regular
        CHECK(cocliques_of_size(g, 5).empty());
        for (Mask c : cocliques_of_size(g, 4))
            for (int v = 0; v < g.n(); ++v)
                if (!(c & bit(v))) CHECK(popcount(g.row(v) & c) == 2);
    }
}

TEST_CASE("induced containment test") {
    CHECK(contains_induced(cycle(5), petersen()));
    CHECK(contains_induced(complete(6), schlafli()));
    CHECK(!contains_induced(complete(7), schlafli()));
    CHECK(!contains_induced(cycle(4), petersen()));
    CHECK(contains_induced(petersen(), petersen()));
}
