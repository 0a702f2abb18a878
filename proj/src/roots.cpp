#include "hoffman/roots.hpp"

#include "hoffman/canon.hpp"
#include "hoffman/spectra.hpp"

#include <algorithm>
#include <stdexcept>

namespace hoffman {

RootTable::RootTable() {
    auto push = [&](std::string name, std::array<int, 8> v) { roots_.push_back({std::move(name), v}); };
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) {
            std::array<int, 8> v{};
            v[i] = 2;
            v[j] = 2;
            push("a" + std::to_string(i + 1) + std::to_string(j + 1), v);
            std::array<int, 8> nv{};
            nv[i] = -2;
            nv[j] = -2;
            push("a'" + std::to_string(i + 1) + std::to_string(j + 1), nv);
        }
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) {
            std::array<int, 8> v;
            v.fill(1);
            v[i] = -1;
            v[j] = -1;
            push("b" + std::to_string(i + 1) + std::to_string(j + 1), v);
            std::array<int, 8> nv;
            for (int k = 0; k < 8; ++k) nv[k] = -v[k];
            push("b'" + std::to_string(i + 1) + std::to_string(j + 1), nv);
        }
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            if (i == j) continue;
            std::array<int, 8> v{};
            v[i] = 2;
            v[j] = -2;
            push("c" + std::to_string(i + 1) + std::to_string(j + 1), v);
        }
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            for (int k = j + 1; k < 8; ++k)
                for (int l = k + 1; l < 8; ++l) {
                    std::array<int, 8> v;
                    v.fill(1);
                    v[i] = v[j] = v[k] = v[l] = -1;
                    push("d" + std::to_string(i + 1) + std::to_string(j + 1) + std::to_string(k + 1) +
                             std::to_string(l + 1),
                         v);
                }
    {
        std::array<int, 8> v;
        v.fill(1);
        push("e", v);
        std::array<int, 8> nv;
        nv.fill(-1);
        push("e'", nv);
    }
    if (roots_.size() != 240) throw std::logic_error("root table size");
    inner_.resize(240 * 240);
    for (int i = 0; i < 240; ++i)
        for (int j = 0; j < 240; ++j) {
            int s = 0;
            for (int k = 0; k < 8; ++k) s += roots_[i].coords[k] * roots_[j].coords[k];
            inner_[static_cast<std::size_t>(i) * 240 + j] = static_cast<signed char>(s);
        }
}

int RootTable::by_name(const std::string& name) const {
    for (int i = 0; i < 240; ++i)
        if (roots_[i].name == name) return i;
    throw std::invalid_argument("unknown root name: " + name);
}

const RootTable& e8() {
    static RootTable table;
    return table;
}

RootSet e8_roots() {
    RootSet out(240);
    for (int i = 0; i < 240; ++i) out[i] = i;
    return out;
}

RootSet subsystem_orthogonal(const std::vector<std::string>& seed_names) {
    const RootTable& t = e8();
    std::vector<int> seeds;
    for (const auto& n : seed_names) seeds.push_back(t.by_name(n));
    for (std::size_t i = 0; i < seeds.size(); ++i)
        for (std::size_t j = i + 1; j < seeds.size(); ++j)
            if (t.inner(seeds[i], seeds[j]) != 0) throw std::invalid_argument("seed roots are not orthogonal");
    RootSet out;
    for (int v = 0; v < 240; ++v) {
        bool ok = true;
        for (int s : seeds)
            if (t.inner(v, s) != 0) ok = false;
        if (ok) out.push_back(v);
    }
    return out;
}

int inner(int u, int v) { return e8().inner(u, v); }
int inner(const std::string& u, const std::string& v) { return e8().inner(e8().by_name(u), e8().by_name(v)); }

Graph decode_representation_ids(const RootSet& ids) {
    const RootTable& t = e8();
    int n = static_cast<int>(ids.size());
    if (n > 64) throw std::invalid_argument("representation too large");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (ids[i] == ids[j]) throw std::invalid_argument("repeated root " + t[ids[i]].name);
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int p = t.inner(ids[i], ids[j]);
            if (p == 4)
                g.add_edge(i, j);
            else if (p != 0)
                throw std::invalid_argument("invalid certificate: <" + t[ids[i]].name + "," + t[ids[j]].name +
                                            "> = " + std::to_string(p));
        }
    return g;
}

Graph decode_representation(const std::vector<std::string>& names) {
    RootSet ids;
    for (const auto& n : names) ids.push_back(e8().by_name(n));
    return decode_representation_ids(ids);
}

bool verify_representation(const Graph& g, const Representation& rep) {
    if (static_cast<int>(rep.size()) != g.n()) return false;
    const RootTable& t = e8();
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j) {
            if (rep[i] == rep[j]) return false;
            int p = t.inner(rep[i], rep[j]);
            if (p != (g.adj(i, j) ? 4 : 0)) return false;
        }
    return true;
}

namespace {

struct RepSearch {
    const Graph& g;
    const RootTable& t = e8();
    std::vector<int> order;
    std::vector<int> assign; // by order position, root id or -1
    // candidate sets per order position, as bitsets over the universe
    std::vector<int> universe;
    int words;

    RepSearch(const Graph& g_, const RootSet& roots) : g(g_), universe(roots) {
        words = (static_cast<int>(universe.size()) + 63) / 64;
    }

    bool run(const std::vector<std::pair<int, int>>& pins, Representation* out) {
        int n = g.n();
        order.clear();
        std::vector<bool> pinned(n, false);
        std::vector<int> pin_root(n, -1);
        for (auto [v, r] : pins) {
            pinned[v] = true;
            pin_root[v] = r;
        }
        // order: pinned first, then BFS by descending degree
        for (auto [v, r] : pins) order.push_back(v);
        std::vector<bool> placed(n, false);
        for (int v : order) placed[v] = true;
        while (static_cast<int>(order.size()) < n) {
            int pick = -1;
            long best = -1;
            for (int v = 0; v < n; ++v) {
                if (placed[v]) continue;
                long score = 0;
                for (int u : order) score += g.adj(u, v) ? 2 : 1;
                score = score * 128 + g.deg(v);
                if (score > best) {
                    best = score;
                    pick = v;
                }
            }
            order.push_back(pick);
            placed[pick] = true;
        }
        std::vector<std::vector<std::uint64_t>> cand(n, std::vector<std::uint64_t>(words, 0));
        for (int pos = 0; pos < n; ++pos) {
            int v = order[pos];
            if (pinned[v]) {
                int idx = -1;
                for (std::size_t k = 0; k < universe.size(); ++k)
                    if (universe[k] == pin_root[v]) idx = static_cast<int>(k);
                if (idx < 0) return false;
                cand[pos][idx >> 6] = std::uint64_t{1} << (idx & 63);
            } else {
                for (std::size_t k = 0; k < universe.size(); ++k) cand[pos][k >> 6] |= std::uint64_t{1} << (k & 63);
            }
        }
        assign.assign(n, -1);
        if (!place(0, cand)) return false;
        if (out) {
            out->assign(n, -1);
            for (int pos = 0; pos < n; ++pos) (*out)[order[pos]] = assign[pos];
        }
        return true;
    }

    bool place(int pos, std::vector<std::vector<std::uint64_t>>& cand) {
        int n = g.n();
        if (pos == n) return true;
        std::vector<std::uint64_t> mine = cand[pos];
        for (int w = 0; w < words; ++w)
            for (std::uint64_t m = mine[w]; m; m &= m - 1) {
                int idx = (w << 6) + lowest_bit(m);
                int root = universe[idx];
                assign[pos] = root;
                // forward filter later candidates
                std::vector<std::vector<std::uint64_t>> next(cand.begin() + pos + 1, cand.end());
                bool dead = false;
                for (int q = 0; q + pos + 1 < n && !dead; ++q) {
                    int u = order[q + pos + 1];
                    int want = g.adj(order[pos], u) ? 4 : 0;
                    std::uint64_t any = 0;
                    for (int ww = 0; ww < words; ++ww) {
                        std::uint64_t keep = 0;
                        for (std::uint64_t mm = next[q][ww]; mm; mm &= mm - 1) {
                            int kidx = (ww << 6) + lowest_bit(mm);
                            if (t.inner(root, universe[kidx]) == want) keep |= std::uint64_t{1} << (kidx & 63);
                        }
                        next[q][ww] = keep;
                        any |= keep;
                    }
                    if (!any) dead = true;
                }
                if (!dead) {
                    std::vector<std::vector<std::uint64_t>> merged(cand.begin(), cand.begin() + pos + 1);
                    for (auto& x : next) merged.push_back(std::move(x));
                    if (place(pos + 1, merged)) return true;
                }
                assign[pos] = -1;
            }
        return false;
    }
};

} // namespace

std::optional<Representation> find_representation(const Graph& g, const RootSet& roots) {
    if (g.n() == 0) return Representation{};
    // Gram matrix 2(A+2I) of a representation has rank <= 8
    {
        int n = g.n();
        std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m[i][j] = g.adj(i, j) ? 1 : (i == j ? 2 : 0);
        if (rank_bareiss(std::move(m)) > 8) return std::nullopt;
    }
    RepSearch search(g, roots);
    Representation rep;
    // the root systems used here are Weyl-transitive, so the first vertex can
    // be pinned to any fixed root
    int first = 0;
    for (int v = 1; v < g.n(); ++v)
        if (g.deg(v) > g.deg(first)) first = v;
    Representation out;
    if (search.run({{first, roots.empty() ? -1 : roots[0]}}, &out)) return out;
    return std::nullopt;
}

bool in_s8(const Graph& g) {
    Graph coned = cone(g);
    if (!lambda_min_geq(coned, mpq_class(-2))) return false;
    {
        int n = coned.n();
        std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m[i][j] = coned.adj(i, j) ? 1 : (i == j ? 2 : 0);
        if (rank_bareiss(std::move(m)) > 8) return false;
    }
    const RootTable& t = e8();
    // universe: the all-ones root plus everything at inner product 4 from it
    int e_id = t.by_name("e");
    RootSet universe{e_id};
    for (int r = 0; r < 240; ++r)
        if (t.inner(e_id, r) == 4) universe.push_back(r);
    RepSearch search(coned, universe);
    return search.run({{g.n(), e_id}}, nullptr);
}

MaximalRepResult maximal_representable_graphs(const RootSet& roots, const std::string& seed1,
                                              const std::string& seed2) {
    const RootTable& t = e8();
    int s1 = t.by_name(seed1), s2 = t.by_name(seed2);
    if (t.inner(s1, s2) != 0) throw std::invalid_argument("seed roots must be orthogonal");
    std::vector<int> compat;
    for (int r : roots) {
        if (r == s1 || r == s2) continue;
        int p1 = t.inner(r, s1), p2 = t.inner(r, s2);
        if ((p1 == 0 || p1 == 4) && (p2 == 0 || p2 == 4)) compat.push_back(r);
    }
    int n = static_cast<int>(compat.size());
    BitGraph cg(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int p = t.inner(compat[i], compat[j]);
            if (p == 0 || p == 4) cg.set_edge(i, j);
        }
    LibraryDeduper dedup;
    std::vector<Representation> reps;
    maximal_cliques(cg, [&](const std::vector<int>& clique) {
        RootSet ids{s1, s2};
        for (int i : clique) ids.push_back(compat[i]);
        Graph g = decode_representation_ids(ids);
        auto [idx, fresh] = dedup.insert(g);
        if (fresh) reps.push_back(ids);
    });
    MaximalRepResult out;
    out.graphs = dedup.graphs();
    out.reps = std::move(reps);
    return out;
}

namespace {

bool embed(const Graph& a, const Graph& b, std::vector<int>& map_ab, Mask used, int placed,
           const std::vector<int>& order) {
    if (placed == a.n()) return true;
    int v = order[placed];
    for (int w = 0; w < b.n(); ++w) {
        if (used & bit(w)) continue;
        if (b.deg(w) < a.deg(v)) continue;
        bool ok = true;
        for (int q = 0; q < placed && ok; ++q)
            if (a.adj(v, order[q]) != b.adj(w, map_ab[order[q]])) ok = false;
        if (!ok) continue;
        map_ab[v] = w;
        if (embed(a, b, map_ab, used | bit(w), placed + 1, order)) return true;
        map_ab[v] = -1;
    }
    return false;
}

} // namespace

bool contains_induced(const Graph& small, const Graph& big) {
    if (small.n() > big.n()) return false;
    auto ds = small.degree_sequence();
    auto db = big.degree_sequence();
    for (std::size_t i = 0; i < ds.size(); ++i)
        if (ds[i] > db[i]) return false;
    // order: BFS from max-degree vertex, high degree first
    std::vector<int> order;
    std::vector<bool> placed(small.n(), false);
    while (static_cast<int>(order.size()) < small.n()) {
        int pick = -1;
        long best = -1;
        for (int v = 0; v < small.n(); ++v) {
            if (placed[v]) continue;
            long score = 0;
            for (int u : order) score += small.adj(u, v) ? 1 : 0;
            score = score * 128 + small.deg(v);
            if (score > best) {
                best = score;
                pick = v;
            }
        }
        order.push_back(pick);
        placed[pick] = true;
    }
    std::vector<int> map_ab(small.n(), -1);
    return embed(small, big, map_ab, 0, 0, order);
}

} // namespace hoffman
