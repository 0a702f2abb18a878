#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hoffman/spectra.hpp"

#include <random>

using namespace hoffman;

namespace {

IntPoly poly(std::initializer_list<long> coeffs) {
    std::vector<mpz_class> c;
    for (long x : coeffs) c.emplace_back(x);
    return IntPoly(std::move(c));
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    Graph g(n);
    std::uniform_real_distribution<double> coin(0, 1);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) g.add_edge(u, v);
    return g;
}

} // namespace

TEST_CASE("characteristic polynomials of small graphs") {
    CHECK(char_poly(complete(2)) == poly({-1, 0, 1}));
    CHECK(char_poly(cycle(4)) == poly({0, 0, -4, 0, 1}));
    CHECK(char_poly(path_graph(5)) == poly({0, 3, 0, -4, 0, 1}));
}

TEST_CASE("characteristic polynomial matches the elimination oracle") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 12);
        Graph g = random_graph(rng, n, 0.5);
        IntPoly p = char_poly(g);
        for (long x : {-3L, -2L, -1L, 0L, 1L, 2L, 3L})
            CHECK(p.eval(mpz_class(x)) == det_xi_minus_a(g, mpz_class(x)));
    }
}

TEST_CASE("coefficient identities") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + static_cast<int>(rng() % 10);
        Graph g = random_graph(rng, n, 0.5);
        IntPoly p = char_poly(g);
        CHECK(p.coeffs().size() == static_cast<std::size_t>(n + 1));
        CHECK(p.leading() == 1);
        CHECK(p[n - 1] == 0);                           // trace
        CHECK(p[n - 2] == -mpz_class(g.edge_count())); // edge count
    }
}

TEST_CASE("sturm root counting") {
    SturmChain c1(poly({-1, 0, 1})); // t^2 - 1
    CHECK(c1.count(mpq_class(0), mpq_class(2)) == 1);
    CHECK(c1.count(mpq_class(-2), mpq_class(2)) == 2);
    CHECK(c1.count(mpq_class(1), mpq_class(2)) == 0);  // half-open: 1 excluded at lo
    CHECK(c1.count(mpq_class(0), mpq_class(1)) == 1);  // included at hi

    SturmChain c2(poly({-3, 0, 1})); // t^2 - 3
    CHECK(c2.count(mpq_class(17, 10), mpq_class(18, 10)) == 1);

    SturmChain cs(char_poly(schlafli()));
    CHECK(cs.count(mpq_class(-25, 10), mpq_class(-15, 10)) == 1);
}

TEST_CASE("multiplicities by rank") {
    CHECK(multiplicity_at(cycle(4), mpq_class(0)) == 2);
    CHECK(multiplicity_at(schlafli(), mpq_class(-2)) == 20);
    CHECK(multiplicity_at(schlafli(), mpq_class(4)) == 6);
    CHECK(multiplicity_at(schlafli(), mpq_class(16)) == 1);
    CHECK(multiplicity_at(petersen(), mpq_class(-2)) == 4);
}

TEST_CASE("smallest eigenvalue bounds") {
    CHECK(lambda_min_geq(petersen(), mpq_class(-2)));
    CHECK(!lambda_min_geq(complete_multipartite({1, 5}), mpq_class(-2)));
    CHECK(lambda_min_geq(complete(5), mpq_class(-1)));
}

TEST_CASE("extreme eigenvalue enclosures") {
    // the smallest connected non-trivially tight example has largest
    // eigenvalue 1 + sqrt(5)
    mpq_class width(1, 1);
    width /= mpz_class(1) << 34;
    RationalInterval iv = extreme_eigenvalue_interval(sun3(), Extreme::Max, width);
    double target = 1 + std::sqrt(5.0);
    CHECK(iv.hi - iv.lo <= width);
    CHECK(std::abs(iv.mid_double() - target) < 1e-9);

    auto ev = eigenvalues_double(petersen());
    RationalInterval mn = extreme_eigenvalue_interval(petersen(), Extreme::Min, default_isolation_width());
    CHECK(std::abs(mn.mid_double() - ev.front()) < 1e-6);
}

TEST_CASE("integer radius certification") {
    CHECK(integer_radius_certify(schlafli(), 16));
    CHECK(integer_radius_certify(cycle(5), 2));
    CHECK(!integer_radius_certify(petersen(), 2));
    CHECK(integer_radius_certify(petersen(), 3));
    CHECK(integer_lambda_min(petersen()) == -2);
    CHECK(!integer_lambda_min(cycle(5)).has_value());
}

TEST_CASE("perron vectors") {
    auto x = perron_vector_rational(complete(3));
    for (const auto& xi : x) CHECK(xi == 1);

    auto f7 = perron_vector_rational(smith_f(7));
    // center 3, middle vertices 2, leaves 1 (up to the arm symmetry)
    CHECK(f7[0] == 3);
    CHECK(f7[1] == 2);
    CHECK(f7[2] == 1);
    CHECK(f7[5] == 2);
    CHECK(f7[6] == 1);

    auto c5 = perron_vector_rational(cycle(5));
    for (const auto& xi : c5) CHECK(xi == 1);

    CHECK_THROWS(perron_vector_rational(path_graph(5))); // irrational largest eigenvalue
    CHECK_THROWS(perron_vector_rational(disjoint_union(complete(3), complete(3))));
}

TEST_CASE("negated radius detection") {
    CHECK(negated_radius_is_eigenvalue(cycle(6)));      // bipartite
    CHECK(negated_radius_is_eigenvalue(path_graph(5))); // minimal polynomial even
    CHECK(!negated_radius_is_eigenvalue(cycle(5)));
}

TEST_CASE("scaled radius relation") {
    CHECK(scaled_radius_relation(sun3(), 3));
    CHECK(!scaled_radius_relation(petersen(), 3));
    CHECK(scaled_radius_relation(cycle(6), 2));
    CHECK(scaled_radius_relation(complete_multipartite({4, 7}), 2));
}

TEST_CASE("fingerprint multiplicities sum to the order") {
    for (const Graph& g : {petersen(), schlafli(), sun3(), cocktail_party(3)}) {
        SpectrumFingerprint fp = spectrum_fingerprint(g);
        int total = 0;
        for (const auto& e : fp.entries) total += e.multiplicity;
        CHECK(total == g.n());
    }
}

TEST_CASE("float eigenvalues agree with certified enclosures") {
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(rng, 4 + static_cast<int>(rng() % 8), 0.5);
        if (g.edge_count() == 0) continue;
        auto ev = eigenvalues_double(g);
        auto lo = extreme_eigenvalue_interval(g, Extreme::Min, default_isolation_width());
        auto hi = extreme_eigenvalue_interval(g, Extreme::Max, default_isolation_width());
        CHECK(std::abs(lo.mid_double() - ev.front()) < 1e-6);
        CHECK(std::abs(hi.mid_double() - ev.back()) < 1e-6);
    }
}
