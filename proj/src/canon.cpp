#include "hoffman/canon.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <map>
#include <mutex>

namespace hoffman {

namespace {

// Split every non-singleton cell by neighbor counts into the splitter cells
// until the partition is equitable. Cells keep their relative order and new
// fragments are ordered by ascending count, so the outcome is invariant under
// relabeling.
void refine(const Graph& g, std::vector<Mask>& cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t si = 0; si < cells.size(); ++si) {
            Mask splitter = cells[si];
            for (std::size_t ci = 0; ci < cells.size(); ++ci) {
                Mask cell = cells[ci];
                if (popcount(cell) <= 1) continue;
                std::array<Mask, 65> by_count{};
                int maxc = 0;
                for (Mask m = cell; m; m &= m - 1) {
                    int v = lowest_bit(m);
                    int c = popcount(g.row(v) & splitter);
                    by_count[c] |= bit(v);
                    maxc = std::max(maxc, c);
                }
                int groups = 0;
                for (int c = 0; c <= maxc; ++c)
                    if (by_count[c]) ++groups;
                if (groups <= 1) continue;
                std::vector<Mask> frag;
                frag.reserve(groups);
                for (int c = 0; c <= maxc; ++c)
                    if (by_count[c]) frag.push_back(by_count[c]);
                cells[ci] = frag[0];
                cells.insert(cells.begin() + ci + 1, frag.begin() + 1, frag.end());
                changed = true;
                if (si > ci) si += frag.size() - 1;
            }
        }
    }
}

struct CanonSearch {
    const Graph& g;
    std::string best;          // adjacency bit stream (packed), lexicographically least
    bool have_best = false;
    std::vector<int> best_order;

    explicit CanonSearch(const Graph& g_) : g(g_) {}

    // order holds the vertices of the leading singleton cells
    void recurse(std::vector<Mask> cells, std::vector<int> order, std::string partial, int done_bits) {
        refine(g, cells);
        std::size_t k = order.size();
        while (k < cells.size() && popcount(cells[k]) == 1) ++k;
        // extend the packed prefix with the columns of the new singletons
        std::vector<int> new_order(order);
        for (std::size_t i = order.size(); i < k; ++i) new_order.push_back(lowest_bit(cells[i]));
        for (std::size_t j = order.size(); j < k; ++j)
            for (std::size_t i = 0; i < j; ++i) {
                int b = g.adj(new_order[i], new_order[j]) ? 1 : 0;
                if (done_bits % 8 == 0) partial.push_back(0);
                partial.back() = static_cast<char>(partial.back() | (b << (7 - done_bits % 8)));
                ++done_bits;
            }
        if (have_best) {
            // lexicographic prune against the current best prefix
            std::size_t nb = partial.size();
            int cmp = std::memcmp(partial.data(), best.data(), std::min(nb, best.size()));
            if (cmp > 0) return;
        }
        if (k == cells.size()) {
            if (!have_best || partial < best) {
                best = partial;
                best_order = new_order;
                have_best = true;
            }
            return;
        }
        Mask target = cells[k];
        for (Mask m = target; m; m &= m - 1) {
            int v = lowest_bit(m);
            std::vector<Mask> next(cells.begin(), cells.begin() + k);
            next.push_back(bit(v));
            next.push_back(target & ~bit(v));
            next.insert(next.end(), cells.begin() + k + 1, cells.end());
            recurse(std::move(next), new_order, partial, done_bits);
        }
    }
};

struct GraphHash {
    std::size_t operator()(const std::string& s) const { return std::hash<std::string>()(s); }
};

std::string raw_bytes(const Graph& g) {
    std::string s;
    s.push_back(static_cast<char>(g.n()));
    for (int v = 0; v < g.n(); ++v) {
        Mask r = g.row(v);
        s.append(reinterpret_cast<const char*>(&r), sizeof r);
    }
    return s;
}

std::mutex cache_mutex;
std::unordered_map<std::string, std::string, GraphHash> key_cache;

} // namespace

std::string canonical_key(const Graph& g, const std::vector<int>* colors, std::vector<int>* witness) {
    int n = g.n();
    std::string header;
    header.push_back(static_cast<char>(n));
    std::vector<Mask> cells;
    if (colors) {
        std::map<int, Mask> by_color;
        for (int v = 0; v < n; ++v) by_color[(*colors)[v]] |= bit(v);
        for (auto& [c, m] : by_color) {
            cells.push_back(m);
            header.push_back(static_cast<char>(c));
            header.push_back(static_cast<char>(popcount(m)));
        }
    } else if (n > 0) {
        cells.push_back(all_mask(n));
    }
    if (n == 0) return header;
    CanonSearch search(g);
    search.recurse(cells, {}, "", 0);
    if (witness) {
        witness->assign(n, 0);
        for (int pos = 0; pos < n; ++pos) (*witness)[search.best_order[pos]] = pos;
    }
    return header + search.best;
}

std::string canonical_key_cached(const Graph& g) {
    std::string raw = raw_bytes(g);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = key_cache.find(raw);
        if (it != key_cache.end()) return it->second;
    }
    std::string key = canonical_key(g);
    std::lock_guard<std::mutex> lock(cache_mutex);
    key_cache.emplace(std::move(raw), key);
    return key;
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
    return canonical_key_cached(a) == canonical_key_cached(b);
}

bool marked_set_equivalent(const Graph& g, Mask c1, Mask c2) {
    if (popcount(c1) != popcount(c2)) return false;
    if (c1 == c2) return true;
    std::vector<int> col1(g.n(), 0), col2(g.n(), 0);
    for (int v = 0; v < g.n(); ++v) {
        if (c1 & bit(v)) col1[v] = 1;
        if (c2 & bit(v)) col2[v] = 1;
    }
    return canonical_key(g, &col1) == canonical_key(g, &col2);
}

std::string invariant_string(const Graph& g) {
    int n = g.n();
    std::vector<std::pair<int, int>> stats(n);
    for (int v = 0; v < n; ++v) {
        int tri = 0;
        for (Mask m = g.row(v); m; m &= m - 1) tri += popcount(g.row(v) & g.row(lowest_bit(m)));
        stats[v] = {g.deg(v), tri / 2};
    }
    std::sort(stats.begin(), stats.end());
    std::string s;
    s.push_back(static_cast<char>(n));
    for (auto [d, t] : stats) {
        s.push_back(static_cast<char>(d));
        s.push_back(static_cast<char>(t & 0xff));
        s.push_back(static_cast<char>(t >> 8));
    }
    return s;
}

namespace {

// stable 1-WL colors, normalized so they compare across graphs
std::vector<int> wl_colors(const Graph& g) {
    int n = g.n();
    std::vector<int> col(n, 0);
    for (int v = 0; v < n; ++v) col[v] = g.deg(v);
    for (int round = 0; round < n; ++round) {
        std::vector<std::pair<std::vector<int>, int>> sigs(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s;
            s.push_back(col[v]);
            std::vector<int> nb;
            for (Mask m = g.row(v); m; m &= m - 1) nb.push_back(col[lowest_bit(m)]);
            std::sort(nb.begin(), nb.end());
            s.insert(s.end(), nb.begin(), nb.end());
            sigs[v] = {std::move(s), v};
        }
        std::map<std::vector<int>, int> ids;
        for (auto& [s, v] : sigs) ids.emplace(s, 0);
        int next = 0;
        for (auto& [s, id] : ids) id = next++;
        std::vector<int> ncol(n);
        for (auto& [s, v] : sigs) ncol[v] = ids[s];
        if (ncol == col) break;
        col = ncol;
    }
    return col;
}

bool extend_map(const Graph& a, const Graph& b, const std::vector<int>& ca, const std::vector<int>& cb,
                std::vector<int>& map_ab, Mask used_b, int placed) {
    int n = a.n();
    if (placed == n) return true;
    // most-constrained vertex: unmapped in a, adjacent to mapped if possible
    int pick = -1, best_score = -1;
    for (int v = 0; v < n; ++v) {
        if (map_ab[v] >= 0) continue;
        int score = 0;
        for (Mask m = a.row(v); m; m &= m - 1)
            if (map_ab[lowest_bit(m)] >= 0) ++score;
        if (score > best_score) {
            best_score = score;
            pick = v;
        }
    }
    for (int w = 0; w < n; ++w) {
        if (used_b & bit(w)) continue;
        if (cb[w] != ca[pick]) continue;
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            if (map_ab[u] >= 0 && a.adj(pick, u) != b.adj(w, map_ab[u])) ok = false;
        if (!ok) continue;
        map_ab[pick] = w;
        if (extend_map(a, b, ca, cb, map_ab, used_b | bit(w), placed + 1)) return true;
        map_ab[pick] = -1;
    }
    return false;
}

} // namespace

bool isomorphic_backtrack(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
    if (a.degree_sequence() != b.degree_sequence()) return false;
    std::vector<int> ca = wl_colors(a), cb = wl_colors(b);
    std::vector<int> ha = ca, hb = cb;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return false;
    std::vector<int> map_ab(a.n(), -1);
    return extend_map(a, b, ca, cb, map_ab, 0, 0);
}

bool CanonicalDeduper::insert(const Graph& g) {
    std::string key = canonical_key_cached(g);
    auto [it, fresh] = index_.emplace(std::move(key), graphs_.size());
    if (fresh) {
        graphs_.push_back(g);
        keys_.push_back(it->first);
    }
    return fresh;
}

std::pair<std::size_t, bool> LibraryDeduper::insert(const Graph& g) {
    std::string inv = invariant_string(g);
    auto& bucket = buckets_[inv];
    for (std::size_t idx : bucket)
        if (isomorphic_backtrack(g, graphs_[idx])) return {idx, false};
    bucket.push_back(graphs_.size());
    graphs_.push_back(g);
    return {graphs_.size() - 1, true};
}

} // namespace hoffman
