// Acceptance suite: runs the full pipeline once and checks every published
// count and property at its stated tolerance, one PASS/FAIL line each.
#include "hoffman/canon.hpp"
#include "hoffman/certificates.hpp"
#include "hoffman/cliques.hpp"
#include "hoffman/coloring.hpp"
#include "hoffman/genline.hpp"
#include "hoffman/pipeline.hpp"
#include "hoffman/roots.hpp"
#include "hoffman/spectra.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>

using namespace hoffman;

namespace {

int failures = 0;
using Clock = std::chrono::steady_clock;

void report(int criterion, bool pass, const std::string& detail) {
    std::cout << "criterion " << criterion << ": " << (pass ? "PASS" : "FAIL") << " - " << detail << std::endl;
    if (!pass) ++failures;
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    Graph g(n);
    std::uniform_real_distribution<double> coin(0, 1);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) g.add_edge(u, v);
    return g;
}

Graph random_regular(std::mt19937_64& rng, int n, int k) {
    // pairing model with restarts
    while (true) {
        std::vector<int> stubs;
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < k; ++i) stubs.push_back(v);
        std::shuffle(stubs.begin(), stubs.end(), rng);
        Graph g(n);
        bool ok = true;
        for (std::size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v || g.adj(u, v)) ok = false;
            else g.add_edge(u, v);
        }
        if (ok) return g;
    }
}

std::string order_multiset(const std::vector<Graph>& gs) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < gs.size(); ++i) os << (i ? "," : "") << gs[i].n();
    os << "}";
    return os.str();
}

} // namespace

int main() {
    auto wall0 = Clock::now();
    std::optional<std::string> hosts_file;
    if (std::filesystem::exists("data/hosts_bc.g6")) hosts_file = "data/hosts_bc.g6";
    else if (std::filesystem::exists("../data/hosts_bc.g6")) hosts_file = "../data/hosts_bc.g6";

    // ---- shared pipeline run ----
    RegularRouteResult reg = classify_regular();
    Lattice lat = build_ratio3_lattice();
    TypeAResult ta = typea_graphs(lat);
    E7MaximalResult e7 = e7_maximal();
    std::set<std::string> other_keys;
    for (const auto& g : reg.ratio3) other_keys.insert(canonical_key_cached(g));
    for (const auto& g : reg.ratio4) other_keys.insert(canonical_key_cached(g));
    for (const auto& g : reg.cones) other_keys.insert(canonical_key_cached(g));
    for (const auto& k : ta.keys) other_keys.insert(k);
    TypeBCResult tbc = classify_typebc(hosts_file, &e7, &other_keys);
    Classification cls = assemble_classification(reg, ta, tbc);

    // ---- criterion 1: regular and cone routes ----
    {
        bool pass = reg.ratio3.size() == 21 && reg.ratio3_exceptional.size() == 17 &&
                    reg.ratio4.size() == 87 && reg.ratio4_exceptional.size() == 70 &&
                    reg.cones.size() == 87 && reg.cone_maximal.size() == 13;
        std::set<std::string> max3;
        for (const auto& g : reg.ratio3_maximal) max3.insert(canonical_key_cached(g));
        std::set<std::string> expect3{canonical_key_cached(schlafli()),
                                      canonical_key_cached(line_graph(complete(6)))};
        const ClassificationRecord* m20 = cls.by_maximal_id("M20");
        if (m20) expect3.insert(m20->key);
        pass = pass && max3 == expect3;
        auto counts = cls.bucket_counts();
        pass = pass && counts["{3}"] == std::make_pair(17, 2) && counts["{4}"] == std::make_pair(70, 0) &&
               counts["{1,4}"] == std::make_pair(87, 13);
        std::ostringstream os;
        os << "ratio-3 " << reg.ratio3.size() << " (" << reg.ratio3_exceptional.size()
           << " exceptional, maximal {Schlafli, M20, L(K6)}: " << (max3 == expect3 ? "yes" : "NO")
           << "), ratio-4 " << reg.ratio4.size() << " (" << reg.ratio4_exceptional.size()
           << " exceptional), cones " << reg.cones.size() << " with " << reg.cone_maximal.size() << " maximal";
        report(1, pass, os.str());
    }

    // ---- criterion 2: the hierarchy diagram ----
    {
        auto nope = lat.names_without_full_path();
        bool pass = lat.node_graphs.size() == 30 && lat.full_lines_above_c6() == 35;
        for (const char* want : {"165", "168", "169", "175", "L(K26)"})
            pass = pass && std::find(nope.begin(), nope.end(), want) != nope.end();
        // the only other node without a full path is the 3-coclique-free 2K3
        pass = pass && nope.size() == 6 && std::find(nope.begin(), nope.end(), "2K3") != nope.end();
        std::ostringstream os;
        os << lat.node_graphs.size() << " nodes, " << lat.full_lines_above_c6()
           << " full lines above C6, no-full-path set {";
        for (std::size_t i = 0; i < nope.size(); ++i) os << (i ? "," : "") << nope[i];
        os << "}";
        report(2, pass, os.str());
    }

    // ---- criterion 3: switched cones over the hierarchy ----
    {
        bool pass = ta.graphs.size() == 35;
        for (const auto& g : ta.graphs) pass = pass && class_size_set(g) == std::set<int>{3, 4};
        std::set<std::string> got_max(ta.maximal_keys.begin(), ta.maximal_keys.end());
        std::set<std::string> expect_max;
        bool rows_ok = true;
        for (const char* id : {"M5", "M22", "M23", "M25"}) {
            const ClassificationRecord* r = cls.by_maximal_id(id);
            if (!r) {
                rows_ok = false;
                continue;
            }
            expect_max.insert(r->key);
            const MaximalRow& row = catalog_row(id);
            rows_ok = rows_ok && r->graph.degree_sequence() == row.degrees &&
                      char_poly(r->graph) == expected_char_poly(row);
            // surd display entries matched numerically from certified enclosures
            SpectrumFingerprint fp = spectrum_fingerprint(r->graph);
            for (const auto& want : row.spectrum) {
                bool found = false;
                for (const auto& e : fp.entries)
                    if (e.multiplicity == want.mult && std::abs(e.interval.mid_double() - want.value()) < 1e-6)
                        found = true;
                rows_ok = rows_ok && found;
            }
        }
        pass = pass && rows_ok && got_max == expect_max;
        std::ostringstream os;
        os << ta.graphs.size() << " graphs, class sizes {3,4}, maximal {M5,M22,M23,M25} spectra "
           << (rows_ok ? "exact" : "MISMATCH");
        report(3, pass, os.str());
    }

    // ---- criterion 4: maximal graphs of the 126-root subsystem ----
    {
        bool pass = e7.graphs.size() == 39 && e7.schlafli_like.size() == 1 && e7.cones.size() == 27 &&
                    e7.others.size() == 11;
        int outside = 0;
        for (const auto& g : e7.others)
            if (!in_s8(g)) ++outside;
        pass = pass && outside == 11;
        int contained = 0;
        for (std::size_t i = 0; i < e7.graphs.size(); ++i)
            for (std::size_t j = 0; j < e7.graphs.size(); ++j) {
                if (i == j) continue;
                if (e7.graphs[i].n() <= e7.graphs[j].n() && contains_induced(e7.graphs[i], e7.graphs[j]))
                    ++contained;
            }
        pass = pass && contained == 0;
        // closure sanity for the seed restriction: every result has two
        // non-adjacent vertices
        for (const auto& g : e7.graphs) {
            bool has_nonadj = false;
            for (int u = 0; u < g.n() && !has_nonadj; ++u)
                for (int v = u + 1; v < g.n(); ++v)
                    if (!g.adj(u, v)) has_nonadj = true;
            pass = pass && has_nonadj;
        }
        std::ostringstream os;
        os << e7.graphs.size() << " graphs (1 Schlafli, " << e7.cones.size() << " cones, " << e7.others.size()
           << " others, " << outside << " outside the switching class), " << contained
           << " induced containments";
        report(4, pass, os.str());
    }

    // ---- criterion 5: stored certificates ----
    {
        int passc = 0, total = 0;
        std::string first_fail;
        for (const auto& cert : load_certificates()) {
            ++total;
            CertReport rep = verify_certificate(cert);
            if (rep.pass)
                ++passc;
            else if (first_fail.empty())
                first_fail = rep.id + ": " + (rep.failures.empty() ? "?" : rep.failures[0]);
        }
        std::ostringstream os;
        os << passc << "/" << total << " certificates verified";
        if (!first_fail.empty()) os << " (first failure " << first_fail << ")";
        report(5, passc == total && total == 110, os.str());
    }

    // ---- criterion 6: the remaining graphs and the final assembly ----
    {
        int maximal = 0;
        for (const auto& r : cls.records)
            if (r.maximal) ++maximal;
        std::map<std::string, int> tbc_buckets;
        for (const auto& g : tbc.graphs) {
            auto s = class_size_set(g);
            tbc_buckets[bucket_name({s.begin(), s.end()})]++;
        }
        bool pass = tbc.graphs.size() == 36 && tbc_buckets["{2,5}"] == 17 && tbc_buckets["{2,5,8}"] == 6 &&
                    tbc_buckets["{3,5}"] == 3 && tbc_buckets["{3,6}"] == 10 && cls.records.size() == 245 &&
                    maximal == 29;
        // Table 3 is re-verified inside the assembly; spot check the totals
        auto counts = cls.bucket_counts();
        int total = 0, totalmax = 0;
        for (const auto& [b, tm] : counts) {
            total += tm.first;
            totalmax += tm.second;
        }
        pass = pass && total == 245 && totalmax == 29;
        std::ostringstream os;
        os << tbc.graphs.size() << " graphs bucketed 17/6/3/10, classification " << cls.records.size()
           << " with " << maximal << " maximal";
        if (tbc.hosts_complete)
            os << " (external hosts supplied: " << tbc.hosts.size() << " hosts)";
        else
            os << " (no external hosts; instantiated from certificates, completeness caveat reported)";
        report(6, pass, os.str());
    }

    // ---- criterion 7: few vertices per color ----
    {
        SmallOrderResult so = small_order_graphs(cls);
        std::vector<int> orders;
        for (const auto& g : so.graphs) orders.push_back(g.n());
        bool pass = orders == std::vector<int>{6, 11, 11, 13, 13, 15, 17, 20, 20, 22};
        const ClassificationRecord* m10 = cls.by_maximal_id("M10");
        const ClassificationRecord* m21 = cls.by_maximal_id("M21");
        pass = pass && m10 && m21;
        if (m10 && m21) {
            const auto& kids10 = cls.children.at(m10->key);
            const auto& kids21 = cls.children.at(m21->key);
            // the order-20 small graph that is not M10 itself is a component
            // of M21 but not of M10
            int order20_checked = 0;
            for (const auto& g : so.graphs) {
                if (g.n() != 20) continue;
                std::string key = canonical_key_cached(g);
                if (key == m10->key) continue;
                ++order20_checked;
                pass = pass && kids21.count(key) && !kids10.count(key);
            }
            pass = pass && order20_checked == 1;
            // odd-order graphs are components of M21; all but the largest are
            // also components of M10 (it needs six size-two classes, M10 has
            // only five)
            for (const auto& g : so.graphs) {
                if (g.n() % 2 == 0 || g.n() > 17) continue;
                std::string key = canonical_key_cached(g);
                pass = pass && kids21.count(key);
                pass = pass && (g.n() == 17 ? !kids10.count(key) : kids10.count(key) != 0);
            }
        }
        // every optimal coloring: no singleton class, at least two classes of
        // size two
        for (const auto& g : so.graphs) {
            for (const auto& col : enumerate_hoffman_colorings(g)) {
                int twos = 0;
                for (Mask c : col) {
                    pass = pass && popcount(c) >= 2;
                    if (popcount(c) == 2) ++twos;
                }
                pass = pass && twos >= 2;
            }
        }
        report(7, pass, "orders " + order_multiset(so.graphs) +
                            ", order-20 component of M21 outside M10 confirmed");
    }

    // ---- criterion 8: property suites ----
    {
        bool pass = true;
        std::ostringstream os;
        std::mt19937_64 rng(20260810);

        // ratio bound attained iff the coclique is (-lambda_min)-regular
        {
            int tested = 0;
            bool ok = true;
            while (tested < 500) {
                int n = 4 + static_cast<int>(rng() % 11); // 4..14
                int k = 2 + static_cast<int>(rng() % std::max(1, n - 3));
                if (n * k % 2 || k >= n) continue;
                Graph g = random_regular(rng, n, k);
                if (g.edge_count() == 0) continue;
                ++tested;
                auto rb = ratio_bound_int(g);
                double frac_bound = 0;
                if (!rb) {
                    RationalInterval mn = extreme_eigenvalue_interval(g, Extreme::Min, mpq_class(1, 1 << 20));
                    frac_bound = -n * mn.mid_double() / (k - mn.mid_double());
                }
                // oracle: all subsets
                for (std::uint32_t s = 1; s < (1u << n); ++s) {
                    Mask m = s;
                    if (!is_coclique(g, m)) continue;
                    if (rb) {
                        bool nu_regular = true;
                        for (int v = 0; v < n && nu_regular; ++v)
                            if (!(m & bit(v)) && popcount(g.row(v) & m) != rb->nu) nu_regular = false;
                        bool attains = popcount(m) == rb->size;
                        if (popcount(m) > rb->size) ok = false; // bound violated
                        if (attains != nu_regular) ok = false;  // equality iff nu-regular
                        if (is_hoffman_coclique(g, m) != attains) ok = false;
                    } else {
                        // irrational or fractional bound: strictly below it
                        if (popcount(m) > frac_bound + 1e-6) ok = false;
                        if (is_hoffman_coclique(g, m)) ok = false;
                    }
                }
            }
            pass = pass && ok;
            os << "ratio-bound/" << (ok ? "ok" : "FAIL");
        }

        // decomposition identities on every record
        {
            bool ok = true;
            for (const auto& r : cls.records) {
                auto colorings = enumerate_hoffman_colorings(r.graph);
                const Coloring& col = colorings.front();
                auto perron = perron_vector_rational(r.graph);
                long lmax = *integer_lambda_max(r.graph);
                if (lmax != 2L * (r.chi - 1)) ok = false;
                for (std::size_t i = 0; i < col.size() && ok; ++i)
                    for (std::size_t j = i + 1; j < col.size() && ok; ++j) {
                        Mask u = col[i] | col[j];
                        std::vector<int> old;
                        Graph d = induce(r.graph, u, &old);
                        if (!is_bipartite(d)) ok = false;
                        for (Mask compmask : components(d)) {
                            std::vector<int> comp_old;
                            Graph k = induce(d, compmask, &comp_old);
                            if (!integer_radius_certify(k, 2)) ok = false;
                            // restriction of the Perron vector is an eigenvector
                            for (int a = 0; a < k.n() && ok; ++a) {
                                mpq_class acc = 0;
                                for (Mask mm = k.row(a); mm; mm &= mm - 1)
                                    acc += perron[old[comp_old[lowest_bit(mm)]]];
                                if (acc != 2 * perron[old[comp_old[a]]]) ok = false;
                            }
                        }
                    }
                if (!ok) break;
            }
            pass = pass && ok;
            os << " decomposition/" << (ok ? "ok" : "FAIL");
        }

        // switching involution and canonical invariance
        {
            bool ok = true;
            for (int trial = 0; trial < 1000; ++trial) {
                int n = 2 + static_cast<int>(rng() % 11);
                Graph g = random_graph(rng, n, 0.5);
                Mask x = static_cast<Mask>(rng()) & all_mask(n);
                if (!(seidel_switch(seidel_switch(g, x), x) == g)) ok = false;
                std::vector<int> perm(n);
                for (int i = 0; i < n; ++i) perm[i] = i;
                std::shuffle(perm.begin(), perm.end(), rng);
                if (canonical_key(g) != canonical_key(relabel(g, perm))) ok = false;
            }
            pass = pass && ok;
            os << " switching-canonical/" << (ok ? "ok" : "FAIL");
        }

        // characteristic polynomial against the elimination oracle
        {
            bool ok = true;
            for (int trial = 0; trial < 200; ++trial) {
                int n = 1 + static_cast<int>(rng() % 12);
                Graph g = random_graph(rng, n, 0.5);
                IntPoly p = char_poly(g);
                for (long x : {-2L, 0L, 1L, 3L})
                    if (p.eval(mpz_class(x)) != det_xi_minus_a(g, mpz_class(x))) ok = false;
            }
            pass = pass && ok;
            os << " charpoly/" << (ok ? "ok" : "FAIL");
        }

        // all root inner products
        {
            bool ok = true;
            const RootTable& t = e8();
            for (int i = 0; i < 240; ++i)
                for (int j = 0; j < 240; ++j) {
                    int p = t.inner(i, j);
                    if (i == j && p != 8) ok = false;
                    if (i != j && p != -8 && p != -4 && p != 0 && p != 4) ok = false;
                }
            pass = pass && ok;
            os << " roots/" << (ok ? "ok" : "FAIL");
        }

        // coclique bound in the switching class
        {
            bool ok = true;
            std::uniform_real_distribution<double> coin(0, 1);
            for (int trial = 0; trial < 200; ++trial) {
                Graph h(8);
                for (int u = 0; u < 8; ++u)
                    for (int v = u + 1; v < 8; ++v)
                        if (coin(rng) < 0.5) h.add_edge(u, v);
                Graph lh = line_graph(h);
                if (lh.n() == 0) continue;
                Mask f = static_cast<Mask>(rng()) & all_mask(lh.n());
                Graph g = seidel_switch(lh, f);
                if (!cocliques_of_size(g, 5).empty()) ok = false;
                for (Mask c : cocliques_of_size(g, 4))
                    for (int v = 0; v < g.n(); ++v)
                        if (!(c & bit(v)) && popcount(g.row(v) & c) != 2) ok = false;
            }
            pass = pass && ok;
            os << " cocliquebound/" << (ok ? "ok" : "FAIL");
        }

        // both coloring shapes of M21, the eight-class one unique
        {
            const ClassificationRecord* m21 = cls.by_maximal_id("M21");
            bool ok = m21 != nullptr;
            if (ok) {
                auto colorings = enumerate_hoffman_colorings(m21->graph);
                int with8 = 0, with55 = 0;
                for (const auto& col : colorings) {
                    std::vector<int> shape;
                    for (Mask c : col) shape.push_back(popcount(c));
                    std::sort(shape.rbegin(), shape.rend());
                    if (shape == std::vector<int>{8, 2, 2, 2, 2, 2, 2, 2}) ++with8;
                    else if (shape == std::vector<int>{5, 5, 2, 2, 2, 2, 2, 2}) ++with55;
                    else ok = false;
                }
                ok = ok && with8 == 1 && with55 > 0;
            }
            pass = pass && ok;
            os << " m21-shapes/" << (ok ? "ok" : "FAIL");
        }

        report(8, pass, os.str());
    }

    double wall = std::chrono::duration<double>(Clock::now() - wall0).count();
    std::cout << (failures ? "ACCEPTANCE FAILED" : "ACCEPTANCE PASSED") << " (" << failures
              << " failing criteria, " << wall << "s)" << std::endl;
    return failures ? 1 : 0;
}
