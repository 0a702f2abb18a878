#include "hoffman/graph.hpp"

#include <algorithm>
#include <fstream>

namespace hoffman {

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = deg(v);
    std::sort(d.rbegin(), d.rend());
    return d;
}

Mask component_of(const Graph& g, int start, Mask within) {
    Mask comp = bit(start) & within;
    Mask frontier = comp;
    while (frontier) {
        Mask next = 0;
        for (Mask m = frontier; m; m &= m - 1) next |= g.row(lowest_bit(m));
        next &= within & ~comp;
        comp |= next;
        frontier = next;
    }
    return comp;
}

std::vector<Mask> components(const Graph& g, Mask within) {
    std::vector<Mask> out;
    Mask left = within;
    while (left) {
        Mask c = component_of(g, lowest_bit(left), within);
        out.push_back(c);
        left &= ~c;
    }
    return out;
}

std::vector<Mask> components(const Graph& g) { return components(g, g.vertices()); }

bool is_connected(const Graph& g) {
    if (g.n() == 0) return false;
    return component_of(g, 0, g.vertices()) == g.vertices();
}

bool is_regular(const Graph& g) {
    for (int v = 1; v < g.n(); ++v)
        if (g.deg(v) != g.deg(0)) return false;
    return true;
}

bool is_coclique(const Graph& g, Mask s) {
    for (Mask m = s; m; m &= m - 1)
        if (g.row(lowest_bit(m)) & s) return false;
    return true;
}

bool is_bipartite(const Graph& g, Mask* side) {
    Mask color0 = 0, seen = 0;
    for (int s = 0; s < g.n(); ++s) {
        if (seen & bit(s)) continue;
        Mask frontier = bit(s);
        seen |= frontier;
        color0 |= frontier;
        bool parity = false;
        while (frontier) {
            Mask next = 0;
            for (Mask m = frontier; m; m &= m - 1) next |= g.row(lowest_bit(m));
            next &= ~seen;
            seen |= next;
            if (parity) color0 |= next;
            parity = !parity;
            frontier = next;
        }
    }
    for (int v = 0; v < g.n(); ++v) {
        Mask same = (color0 & bit(v)) ? color0 : (g.vertices() & ~color0);
        if (g.row(v) & same) return false;
    }
    if (side) *side = color0;
    return true;
}

bool has_universal_vertex(const Graph& g) {
    for (int v = 0; v < g.n(); ++v)
        if (g.deg(v) == g.n() - 1) return true;
    return false;
}

bool is_regular_complete_multipartite(const Graph& g) {
    if (g.n() == 0) return false;
    Graph co = complement_graph(g);
    auto comps = components(co);
    int size = popcount(comps[0]);
    for (Mask c : comps) {
        if (popcount(c) != size) return false;
        // each complement component must be complete
        for (Mask m = c; m; m &= m - 1)
            if ((co.row(lowest_bit(m)) & c) != (c & ~bit(lowest_bit(m)))) return false;
    }
    return true;
}

Graph induce(const Graph& g, Mask s, std::vector<int>* old_labels) {
    std::vector<int> verts;
    for (Mask m = s; m; m &= m - 1) verts.push_back(lowest_bit(m));
    Graph h(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.adj(verts[i], verts[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    if (old_labels) *old_labels = std::move(verts);
    return h;
}

Graph seidel_switch(const Graph& g, Mask x) {
    Graph h(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            bool crossing = ((x >> u) & 1) != ((x >> v) & 1);
            if (g.adj(u, v) != crossing) h.add_edge(u, v);
        }
    return h;
}

Graph complement_graph(const Graph& g) {
    Graph h(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.adj(u, v)) h.add_edge(u, v);
    return h;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph h(a.n() + b.n());
    for (auto [u, v] : a.edges()) h.add_edge(u, v);
    for (auto [u, v] : b.edges()) h.add_edge(a.n() + u, a.n() + v);
    return h;
}

Graph cone(const Graph& g) {
    Graph h(g.n() + 1);
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
    for (int v = 0; v < g.n(); ++v) h.add_edge(v, g.n());
    return h;
}

Graph line_graph(const Graph& g) {
    auto es = g.edges();
    Graph h(static_cast<int>(es.size()));
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            auto [a, b] = es[i];
            auto [c, d] = es[j];
            if (a == c || a == d || b == c || b == d) h.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    return h;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    Graph h(g.n());
    for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
    return h;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_multipartite(const std::vector<int>& parts) {
    int n = 0;
    for (int p : parts) n += p;
    Graph g(n);
    std::vector<int> part_of;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int k = 0; k < parts[i]; ++k) part_of.push_back(static_cast<int>(i));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v]) g.add_edge(u, v);
    return g;
}

Graph cocktail_party(int m) { return complete_multipartite(std::vector<int>(m, 2)); }

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs >= 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph dynkin_d(int n) {
    if (n < 4) throw std::invalid_argument("D_n needs n >= 4");
    Graph g = path_graph(n - 2); // 0..n-3
    g = disjoint_union(g, empty_graph(2));
    Graph h(n);
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
    h.add_edge(0, n - 2);
    h.add_edge(0, n - 1);
    return h;
}

Graph dynkin_e(int n) {
    if (n < 6 || n > 8) throw std::invalid_argument("E_n needs n in {6,7,8}");
    // path on n-1 vertices with one extra leaf attached at position 2 from one end
    Graph g(n);
    for (int v = 0; v + 1 < n - 1; ++v) g.add_edge(v, v + 1);
    g.add_edge(2, n - 1);
    return g;
}

Graph smith_w(int n) {
    if (n == 5) return complete_multipartite({1, 4});
    if (n < 6) throw std::invalid_argument("W_n needs n >= 5");
    Graph g(n);
    int plen = n - 4; // central path 0..plen-1
    for (int v = 0; v + 1 < plen; ++v) g.add_edge(v, v + 1);
    g.add_edge(0, plen);
    g.add_edge(0, plen + 1);
    g.add_edge(plen - 1, plen + 2);
    g.add_edge(plen - 1, plen + 3);
    return g;
}

Graph smith_f(int n) {
    switch (n) {
    case 7: {
        // center 0, three arms 1-2, 3-4, 5-6
        Graph g(7);
        g.add_edge(0, 1); g.add_edge(1, 2);
        g.add_edge(0, 3); g.add_edge(3, 4);
        g.add_edge(0, 5); g.add_edge(5, 6);
        return g;
    }
    case 8: {
        // center 0 with a leaf 1 and two arms of length 3
        Graph g(8);
        g.add_edge(0, 1);
        g.add_edge(0, 2); g.add_edge(2, 3); g.add_edge(3, 4);
        g.add_edge(0, 5); g.add_edge(5, 6); g.add_edge(6, 7);
        return g;
    }
    case 9: {
        // center 0 with a leaf 1, an arm of length 5 and an arm of length 2
        Graph g(9);
        g.add_edge(0, 1);
        g.add_edge(0, 2); g.add_edge(2, 3); g.add_edge(3, 4); g.add_edge(4, 5); g.add_edge(5, 6);
        g.add_edge(0, 7); g.add_edge(7, 8);
        return g;
    }
    default:
        throw std::invalid_argument("F_n needs n in {7,8,9}");
    }
}

Graph petersen() {
    Graph g(10);
    for (int v = 0; v < 5; ++v) {
        g.add_edge(v, (v + 1) % 5);
        g.add_edge(v, v + 5);
        g.add_edge(v + 5, (v + 2) % 5 + 5);
    }
    return g;
}

Graph net_graph() {
    Graph g(6);
    g.add_edge(0, 1); g.add_edge(1, 2); g.add_edge(0, 2);
    g.add_edge(0, 3); g.add_edge(1, 4); g.add_edge(2, 5);
    return g;
}

Graph sun3() { return complement_graph(net_graph()); }

namespace {

int pair_index(int i, int j) {
    // pairs {i,j}, 0 <= i < j < 8, in lexicographic order
    if (i > j) std::swap(i, j);
    int idx = 0;
    for (int a = 0; a < i; ++a) idx += 7 - a;
    return idx + (j - i - 1);
}

Mask edge_set_mask(const std::vector<std::pair<int, int>>& es) {
    Mask m = 0;
    for (auto [i, j] : es) m |= bit(pair_index(i - 1, j - 1));
    return m;
}

} // namespace

Graph triangular_lk8() { return line_graph(complete(8)); }

Graph chang(int which) {
    // switching sets on K_8 edges, vertices named 1..8
    std::vector<std::pair<int, int>> es;
    switch (which) {
    case 1: es = {{1,2},{3,4},{5,6},{7,8}}; break;                                  // 4*K2
    case 2: es = {{1,2},{2,3},{3,4},{4,5},{5,6},{6,7},{7,8},{8,1}}; break;          // C8
    case 3: es = {{1,2},{2,3},{3,4},{4,5},{5,1},{6,7},{7,8},{8,6}}; break;          // C5+C3
    default: throw std::invalid_argument("chang index must be 1, 2 or 3");
    }
    return seidel_switch(triangular_lk8(), edge_set_mask(es));
}

Graph schlafli() {
    // switch L(K8) with respect to the neighbors of vertex {1,2}; that vertex
    // becomes isolated and the rest is the Schlafli graph
    Graph lk8 = triangular_lk8();
    int v = pair_index(0, 1);
    Graph sw = seidel_switch(lk8, lk8.row(v));
    return induce(sw, sw.vertices() & ~bit(v));
}

// ---- graph6 ---------------------------------------------------------------

std::string graph6_encode(const Graph& g) {
    std::string out;
    int n = g.n();
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adj(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

Graph graph6_decode(const std::string& line) {
    std::size_t pos = 0;
    auto need = [&](std::size_t k) {
        if (line.size() < pos + k) throw Graph6Error("truncated graph6 record", line.size());
    };
    auto val = [&](std::size_t at) {
        unsigned char c = static_cast<unsigned char>(line[at]);
        if (c < 63 || c > 126) throw Graph6Error("byte out of graph6 range", at);
        return static_cast<int>(c - 63);
    };
    need(1);
    long n;
    if (static_cast<unsigned char>(line[0]) == 126) {
        need(4);
        n = (static_cast<long>(val(1)) << 12) | (val(2) << 6) | val(3);
        pos = 4;
    } else {
        n = val(0);
        pos = 1;
    }
    if (n > 64) throw Graph6Error("vertex count beyond 64 unsupported", 0);
    Graph g(static_cast<int>(n));
    long bits_needed = n * (n - 1) / 2;
    long bits_read = 0;
    std::size_t body = pos;
    if (line.size() < body + (bits_needed + 5) / 6)
        throw Graph6Error("truncated graph6 record", line.size());
    int i = 0, j = 1;
    while (bits_read < bits_needed) {
        int v = val(body + bits_read / 6);
        int b = (v >> (5 - bits_read % 6)) & 1;
        if (b) g.add_edge(i, j);
        ++bits_read;
        if (++i == j) {
            i = 0;
            ++j;
        }
    }
    std::size_t expect = body + (bits_needed + 5) / 6;
    // padding bits in the last byte must be zero
    if (bits_needed % 6) {
        int v = val(expect - 1);
        if (v & ((1 << (6 - bits_needed % 6)) - 1)) throw Graph6Error("nonzero padding bits", expect - 1);
    }
    if (line.size() != expect) throw Graph6Error("trailing garbage after record", expect);
    return g;
}

std::vector<Graph> graph6_read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        out.push_back(graph6_decode(line));
    }
    return out;
}

void graph6_write_file(const std::string& path, const std::vector<Graph>& gs) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    for (const Graph& g : gs) out << graph6_encode(g) << '\n';
}

} // namespace hoffman
