#include "hoffman/coloring.hpp"

#include "hoffman/cliques.hpp"
#include "hoffman/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace hoffman {

namespace {

Mask greedy_clique(const Graph& g) {
    // start from a max-degree vertex, extend by highest degree inside the
    // common neighborhood
    Mask best = 0;
    for (int s = 0; s < g.n(); ++s) {
        Mask clique = bit(s);
        Mask cand = g.row(s);
        while (cand) {
            int pick = -1, bd = -1;
            for (Mask m = cand; m; m &= m - 1) {
                int v = lowest_bit(m);
                int d = popcount(g.row(v) & cand);
                if (d > bd) {
                    bd = d;
                    pick = v;
                }
            }
            clique |= bit(pick);
            cand &= g.row(pick);
        }
        if (popcount(clique) > popcount(best)) best = clique;
    }
    return best;
}

// exact lower bound from the spectral bound, rounded up, computed from
// certified enclosures
int hoffman_lower_bound(const Graph& g) {
    if (g.n() == 0 || g.edge_count() == 0) return 0;
    RationalInterval mx = extreme_eigenvalue_interval(g, Extreme::Max, mpq_class(1, 1024));
    RationalInterval mn = extreme_eigenvalue_interval(g, Extreme::Min, mpq_class(1, 1024));
    if (mn.hi >= 0) return 0;
    // h = 1 + lambda_max/(-lambda_min) >= 1 + mx.lo/(-mn.lo)
    mpq_class lb = 1 + mx.lo / (-mn.lo);
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), lb.get_num().get_mpz_t(), lb.get_den().get_mpz_t());
    return static_cast<int>(c.get_si());
}

struct ColorSearch {
    const Graph& g;
    int k;
    std::vector<int> color;    // -1 unassigned
    std::vector<Mask> classes; // used colors
    std::vector<int> order_buf;

    ColorSearch(const Graph& g_, int k_) : g(g_), k(k_), color(g_.n(), -1) {}

    bool run() { return place(0); }

    bool place(int assigned) {
        if (assigned == g.n()) return true;
        // DSATUR: most saturated, then highest degree
        int pick = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < g.n(); ++v) {
            if (color[v] >= 0) continue;
            Mask seen = 0;
            for (Mask m = g.row(v); m; m &= m - 1) {
                int u = lowest_bit(m);
                if (color[u] >= 0) seen |= bit(color[u]);
            }
            int sat = popcount(seen);
            if (sat > best_sat || (sat == best_sat && g.deg(v) > best_deg)) {
                best_sat = sat;
                best_deg = g.deg(v);
                pick = v;
            }
        }
        Mask forbidden = 0;
        for (Mask m = g.row(pick); m; m &= m - 1) {
            int u = lowest_bit(m);
            if (color[u] >= 0) forbidden |= bit(color[u]);
        }
        int used = static_cast<int>(classes.size());
        for (int c = 0; c < std::min(used + 1, k); ++c) {
            if (forbidden & bit(c)) continue;
            color[pick] = c;
            if (c == used) classes.push_back(0);
            classes[c] |= bit(pick);
            if (place(assigned + 1)) return true;
            classes[c] &= ~bit(pick);
            if (c == used) classes.pop_back();
            color[pick] = -1;
        }
        return false;
    }
};

} // namespace

int chromatic_number_with_witness(const Graph& g, Coloring* witness) {
    if (g.n() == 0) {
        if (witness) witness->clear();
        return 0;
    }
    if (g.edge_count() == 0) {
        if (witness) *witness = {g.vertices()};
        return 1;
    }
    int lb = std::max(popcount(greedy_clique(g)), hoffman_lower_bound(g));
    lb = std::max(lb, 2);
    for (int k = lb;; ++k) {
        ColorSearch search(g, k);
        if (search.run()) {
            if (witness) *witness = search.classes;
            return k;
        }
    }
}

int chromatic_number(const Graph& g) { return chromatic_number_with_witness(g, nullptr); }

int chromatic_number_brute(const Graph& g) {
    int n = g.n();
    if (n == 0) return 0;
    if (n > 20) throw std::invalid_argument("brute-force chromatic number limited to 20 vertices");
    std::uint32_t full = (n == 32 ? ~0u : (1u << n) - 1);
    std::vector<int> dp(full + 1, 1 << 28);
    dp[0] = 0;
    // precompute maximal independent sets inside each mask greedily: classic
    // subset DP over independent subsets
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        int v = __builtin_ctz(mask);
        // iterate independent subsets of mask that contain v
        std::uint32_t candidates = mask & ~(1u << v) & ~static_cast<std::uint32_t>(g.row(v));
        // enumerate subsets of candidates that are independent
        std::function<void(std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t chosen, std::uint32_t rest) {
            dp[mask] = std::min(dp[mask], dp[mask & ~chosen] + 1);
            while (rest) {
                int u = __builtin_ctz(rest);
                rest &= rest - 1;
                rec(chosen | (1u << u), rest & ~static_cast<std::uint32_t>(g.row(u)));
            }
        };
        rec(1u << v, candidates);
    }
    return dp[full];
}

HoffmanReport hoffman_report(const Graph& g) {
    if (g.n() == 0 || g.edge_count() == 0)
        throw std::invalid_argument("Hoffman bound undefined for graphs without edges");
    HoffmanReport rep;
    Coloring witness;
    rep.chi = chromatic_number_with_witness(g, &witness);
    rep.lambda_max = extreme_eigenvalue_interval(g, Extreme::Max, default_isolation_width());
    rep.lambda_min = extreme_eigenvalue_interval(g, Extreme::Min, default_isolation_width());
    double est = 1 - rep.lambda_max.mid_double() / rep.lambda_min.mid_double();
    long m0 = std::lround(est);
    for (long m : {m0, m0 - 1, m0 + 1}) {
        if (m < 2) continue;
        if (scaled_radius_relation(g, m)) {
            rep.h_integer = m;
            break;
        }
    }
    rep.colorable = rep.h_integer && *rep.h_integer == rep.chi;
    if (rep.colorable) rep.witness = std::move(witness);
    return rep;
}

bool is_trivially_colorable(const Graph& g) {
    if (is_bipartite(g)) return true;
    return is_regular_complete_multipartite(g);
}

bool is_nontrivially_hoffman_colorable(const Graph& g) {
    if (g.n() == 0 || g.edge_count() == 0) return false;
    if (is_trivially_colorable(g)) return false;
    return hoffman_report(g).colorable;
}

std::optional<RatioBound> ratio_bound_int(const Graph& g) {
    if (g.n() == 0 || !is_regular(g) || g.edge_count() == 0) return std::nullopt;
    auto lmin = integer_lambda_min(g);
    if (!lmin) return std::nullopt;
    long nu = -*lmin;
    long k = g.deg(0);
    long num = static_cast<long>(g.n()) * nu;
    long den = k + nu;
    if (num % den != 0) return std::nullopt;
    return RatioBound{nu, num / den};
}

bool is_hoffman_coclique(const Graph& g, Mask c) {
    auto rb = ratio_bound_int(g);
    if (!rb) return false; // irrational or non-integral bound cannot be attained
    if (popcount(c) != rb->size) return false;
    if (!is_coclique(g, c)) return false;
    for (int v = 0; v < g.n(); ++v) {
        if (c & bit(v)) continue;
        if (popcount(g.row(v) & c) != rb->nu) return false;
    }
    return true;
}

std::vector<Mask> hoffman_cocliques(const Graph& g) {
    std::vector<Mask> out;
    auto rb = ratio_bound_int(g);
    if (!rb) return out;
    // every coclique attaining the bound is automatically nu-regular
    for (Mask c : cocliques_of_size(g, static_cast<int>(rb->size))) out.push_back(c);
    return out;
}

void exact_covers(Mask cover, const std::vector<Mask>& pool, int k,
                  const std::function<void(const std::vector<int>&)>& report) {
    std::vector<std::vector<int>> containing(64);
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (Mask m = pool[i]; m; m &= m - 1) containing[lowest_bit(m)].push_back(static_cast<int>(i));
    int maxsize = 0;
    for (Mask p : pool) maxsize = std::max(maxsize, popcount(p));
    std::vector<int> chosen;
    std::function<void(Mask, int)> rec = [&](Mask rest, int left) {
        if (!rest) {
            if (left == 0) report(chosen);
            return;
        }
        if (left == 0) return;
        if (popcount(rest) > left * maxsize) return;
        int v = lowest_bit(rest);
        for (int idx : containing[v]) {
            if (pool[idx] & ~rest) continue;
            chosen.push_back(idx);
            rec(rest & ~pool[idx], left - 1);
            chosen.pop_back();
        }
    };
    rec(cover, k);
}

std::vector<Coloring> enumerate_hoffman_colorings(const Graph& g) {
    HoffmanReport rep = hoffman_report(g);
    if (!rep.colorable) throw std::invalid_argument("graph is not Hoffman colorable");
    std::vector<Mask> pool;
    if (is_regular(g)) {
        pool = hoffman_cocliques(g);
    } else {
        if (!is_connected(g)) throw std::invalid_argument("irregular enumeration requires a connected graph");
        pool = maximal_cocliques(g);
    }
    std::vector<Coloring> out;
    exact_covers(g.vertices(), pool, rep.chi, [&](const std::vector<int>& idx) {
        Coloring col;
        for (int i : idx) col.push_back(pool[i]);
        std::sort(col.begin(), col.end());
        out.push_back(std::move(col));
    });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::set<int> class_size_set(const std::vector<Coloring>& colorings) {
    std::set<int> sizes;
    for (const auto& col : colorings)
        for (Mask c : col) sizes.insert(popcount(c));
    return sizes;
}

std::set<int> class_size_set(const Graph& g) { return class_size_set(enumerate_hoffman_colorings(g)); }

Graph chromatic_component(const Graph& g, const Coloring& coloring, const std::vector<int>& picks) {
    if (picks.size() < 2) throw std::invalid_argument("chromatic component needs at least two classes");
    Mask s = 0;
    for (int i : picks) s |= coloring[i];
    return induce(g, s);
}

} // namespace hoffman
