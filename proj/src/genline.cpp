#include "hoffman/genline.hpp"

#include "hoffman/coloring.hpp"
#include "hoffman/spectra.hpp"

#include <algorithm>
#include <stdexcept>

namespace hoffman {

BuiltGLG build_glg(const GLGSpec& spec) {
    const Graph& h = spec.root;
    if (static_cast<int>(spec.capacities.size()) != h.n())
        throw std::invalid_argument("capacity list must match the root vertex count");
    auto es = h.edges();
    int m = static_cast<int>(es.size());
    int total = m;
    for (int a : spec.capacities) total += 2 * a;
    if (total > 64) throw std::invalid_argument("generalized line graph exceeds 64 vertices");
    BuiltGLG out;
    out.graph = Graph(total);
    out.edge_vertices = es;
    // line graph part
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto [a, b] = es[i];
            auto [c, d] = es[j];
            if (a == c || a == d || b == c || b == d) out.graph.add_edge(i, j);
        }
    int next = m;
    for (int v = 0; v < h.n(); ++v) {
        int base = next;
        for (int p = 0; p < spec.capacities[v]; ++p)
            for (int s = 0; s < 2; ++s) {
                out.cp_vertices.push_back({v, p, s});
                ++next;
            }
        int blob = next - base;
        // cocktail party edges: all pairs except the two halves of one pair
        for (int i = 0; i < blob; ++i)
            for (int j = i + 1; j < blob; ++j)
                if (!(i / 2 == j / 2)) out.graph.add_edge(base + i, base + j);
        // join to the edges at v
        for (int e = 0; e < m; ++e)
            if (es[e].first == v || es[e].second == v)
                for (int i = 0; i < blob; ++i) out.graph.add_edge(e, base + i);
    }
    return out;
}

int glg_chi_formula(const GLGSpec& spec) {
    int chi_line = chromatic_number(line_graph(spec.root));
    int best = chi_line;
    for (int v = 0; v < spec.root.n(); ++v)
        best = std::max(best, spec.capacities[v] + spec.root.deg(v));
    return best;
}

GLGSpec balanced_spec(const Graph& h, int c) {
    int chi_line = chromatic_number(line_graph(h));
    if (c < chi_line)
        throw std::invalid_argument("balance parameter below the chromatic number of the line graph");
    std::vector<int> caps(h.n());
    for (int v = 0; v < h.n(); ++v) {
        if (c < h.deg(v))
            throw std::invalid_argument("balance parameter below the degree of vertex " + std::to_string(v));
        caps[v] = c - h.deg(v);
    }
    return {h, std::move(caps)};
}

Graph balanced_glg(const Graph& h, int c) { return build_glg(balanced_spec(h, c)).graph; }

bool verify_balanced_certificate(const GLGSpec& spec) {
    BuiltGLG built = build_glg(spec);
    const Graph& g = built.graph;
    if (g.n() == 0 || !is_connected(g)) throw std::invalid_argument("certificate needs a connected non-empty graph");
    bool balanced = true;
    int c0 = spec.root.n() ? spec.root.deg(0) + spec.capacities[0] : 0;
    for (int v = 0; v < spec.root.n(); ++v)
        if (spec.root.deg(v) + spec.capacities[v] != c0) balanced = false;
    // eigenvector check: x = 2 on edge vertices, 1 on cocktail party vertices
    int chi = chromatic_number(g);
    long t = 2L * (chi - 1);
    int m = static_cast<int>(built.edge_vertices.size());
    auto xval = [&](int v) { return v < m ? 2L : 1L; };
    bool eigen = true;
    for (int v = 0; v < g.n() && eigen; ++v) {
        long acc = 0;
        for (Mask mm = g.row(v); mm; mm &= mm - 1) acc += xval(lowest_bit(mm));
        if (acc != t * xval(v)) eigen = false;
    }
    if (eigen != balanced) throw std::runtime_error("balance certificate disagrees with the degree data");
    return balanced;
}

namespace {

struct DSearch {
    const Graph& g;
    std::vector<int> order;           // component vertices in search order
    std::vector<DVector> assign;      // by position in order
    int coord_budget;
    int coords_used = 0;

    explicit DSearch(const Graph& g_) : g(g_) {}

    static int dot(const DVector& a, const DVector& b) {
        int s = 0;
        if (std::abs(a.first) == std::abs(b.first)) s += (a.first > 0) == (b.first > 0) ? 1 : -1;
        if (std::abs(a.first) == std::abs(b.second)) s += (a.first > 0) == (b.second > 0) ? 1 : -1;
        if (std::abs(a.second) == std::abs(b.first)) s += (a.second > 0) == (b.first > 0) ? 1 : -1;
        if (std::abs(a.second) == std::abs(b.second)) s += (a.second > 0) == (b.second > 0) ? 1 : -1;
        return s;
    }

    bool compatible(std::size_t pos, const DVector& cand) const {
        int v = order[pos];
        for (std::size_t i = 0; i < pos; ++i) {
            int want = g.adj(v, order[i]) ? 1 : 0;
            if (dot(cand, assign[i]) != want) return false;
        }
        return true;
    }

    bool place(std::size_t pos) {
        if (pos == order.size()) return true;
        int saved = coords_used;
        // both coordinates among the used ones
        for (int i = 1; i <= coords_used; ++i)
            for (int j = i + 1; j <= coords_used; ++j)
                for (int si : {1, -1})
                    for (int sj : {1, -1}) {
                        DVector cand{si * i, sj * j};
                        if (!compatible(pos, cand)) continue;
                        assign[pos] = cand;
                        if (place(pos + 1)) return true;
                    }
        // one used coordinate and one fresh (fresh sign fixed positive)
        if (coords_used < coord_budget) {
            int fresh = coords_used + 1;
            for (int i = 1; i <= coords_used; ++i)
                for (int si : {1, -1}) {
                    DVector cand{si * i, fresh};
                    if (!compatible(pos, cand)) continue;
                    assign[pos] = cand;
                    coords_used = fresh;
                    if (place(pos + 1)) return true;
                    coords_used = saved;
                }
        }
        // two fresh coordinates: only allowed when no earlier vertex is a
        // neighbor (search order makes this the component root only)
        if (coords_used + 2 <= coord_budget) {
            int v = order[pos];
            bool has_assigned_neighbor = false;
            for (std::size_t i = 0; i < pos && !has_assigned_neighbor; ++i)
                if (g.adj(v, order[i])) has_assigned_neighbor = true;
            if (!has_assigned_neighbor) {
                DVector cand{coords_used + 1, coords_used + 2};
                if (compatible(pos, cand)) {
                    assign[pos] = cand;
                    coords_used += 2;
                    if (place(pos + 1)) return true;
                    coords_used = saved;
                }
            }
        }
        return false;
    }
};

} // namespace

std::optional<DRepresentation> recognize_glg(const Graph& g) {
    if (g.n() == 0) return DRepresentation{};
    if (!lambda_min_geq(g, mpq_class(-2))) return std::nullopt;
    DRepresentation rep(g.n());
    int coord_base = 0;
    for (Mask comp : components(g)) {
        std::vector<int> verts;
        for (Mask m = comp; m; m &= m - 1) verts.push_back(lowest_bit(m));
        DSearch search(g);
        // BFS order from a max-degree vertex inside the component
        int start = verts[0];
        for (int v : verts)
            if (g.deg(v) > g.deg(start)) start = v;
        Mask seen = bit(start);
        search.order.push_back(start);
        for (std::size_t head = 0; head < search.order.size(); ++head) {
            std::vector<int> nb;
            for (Mask m = g.row(search.order[head]) & comp & ~seen; m; m &= m - 1) nb.push_back(lowest_bit(m));
            std::sort(nb.begin(), nb.end(), [&](int a, int b) { return g.deg(a) > g.deg(b); });
            for (int v : nb) {
                seen |= bit(v);
                search.order.push_back(v);
            }
        }
        search.assign.resize(search.order.size());
        search.coord_budget = static_cast<int>(verts.size()) + 1;
        if (!search.place(0)) return std::nullopt;
        for (std::size_t i = 0; i < search.order.size(); ++i) {
            auto [a, b] = search.assign[i];
            int sa = a > 0 ? 1 : -1, sb = b > 0 ? 1 : -1;
            rep[search.order[i]] = {sa * (std::abs(a) + coord_base), sb * (std::abs(b) + coord_base)};
        }
        coord_base += search.coord_budget;
    }
    return rep;
}

bool is_exceptional(const Graph& g) {
    if (!is_connected(g)) return false;
    if (!lambda_min_geq(g, mpq_class(-2))) return false;
    return !recognize_glg(g).has_value();
}

} // namespace hoffman
