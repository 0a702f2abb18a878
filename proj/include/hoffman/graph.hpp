#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hoffman {

using Mask = std::uint64_t;

inline int popcount(Mask m) { return __builtin_popcountll(m); }
inline int lowest_bit(Mask m) { return __builtin_ctzll(m); }
inline Mask bit(int i) { return Mask{1} << i; }
inline Mask all_mask(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

// Simple undirected graph on at most 64 labeled vertices. Adjacency is kept
// as one bit row per vertex; values are immutable once built, so graphs can
// be shared freely across threads.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), rows_(n, 0) {
        if (n < 0 || n > 64) throw std::invalid_argument("vertex count out of range");
    }

    int n() const { return n_; }
    Mask row(int v) const { return rows_[v]; }
    bool adj(int u, int v) const { return (rows_[u] >> v) & 1; }
    int deg(int v) const { return popcount(rows_[v]); }
    Mask vertices() const { return all_mask(n_); }

    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("loops not allowed");
        rows_[u] |= bit(v);
        rows_[v] |= bit(u);
    }

    long edge_count() const {
        long twice = 0;
        for (int v = 0; v < n_; ++v) twice += deg(v);
        return twice / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (Mask m = rows_[u] & ~(all_mask(u + 1)); m; m &= m - 1)
                out.emplace_back(u, lowest_bit(m));
        return out;
    }

    std::vector<int> degree_sequence() const; // sorted descending

    bool operator==(const Graph& o) const { return n_ == o.n_ && rows_ == o.rows_; }

private:
    int n_ = 0;
    std::vector<Mask> rows_;
};

// ---- structural queries -------------------------------------------------

Mask component_of(const Graph& g, int start, Mask within);
std::vector<Mask> components(const Graph& g, Mask within);
std::vector<Mask> components(const Graph& g);
bool is_connected(const Graph& g);
bool is_regular(const Graph& g);
bool is_coclique(const Graph& g, Mask s);
// 2-coloring attempt; returns one side of a bipartition or ~0 if non-bipartite.
bool is_bipartite(const Graph& g, Mask* side = nullptr);
bool has_universal_vertex(const Graph& g);
// complement of g is a disjoint union of equal complete graphs
bool is_regular_complete_multipartite(const Graph& g);

// ---- elementary operations ----------------------------------------------

// Induced subgraph on the set s; vertices are relabeled densely in increasing
// original order. old_labels, when given, receives the original label of each
// new vertex.
Graph induce(const Graph& g, Mask s, std::vector<int>* old_labels = nullptr);
Graph seidel_switch(const Graph& g, Mask x);
Graph complement_graph(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph cone(const Graph& g); // new universal vertex gets the last label
Graph line_graph(const Graph& g);
Graph relabel(const Graph& g, const std::vector<int>& perm); // new[perm[v]] = v

// ---- named constructors ---------------------------------------------------

Graph empty_graph(int n);
Graph complete(int n);
Graph complete_multipartite(const std::vector<int>& parts);
Graph cocktail_party(int m);             // CP(m) = K_{2,...,2}
Graph path_graph(int n);                 // A_n
Graph cycle(int n);                      // C_n, n >= 3
Graph dynkin_d(int n);                   // D_n, n >= 4
Graph dynkin_e(int n);                   // E_6, E_7, E_8
Graph smith_w(int n);                    // W_5 = K_{1,4}; W_n for n >= 6
Graph smith_f(int n);                    // the three Smith graphs F_7, F_8, F_9
Graph petersen();
Graph net_graph();                       // triangle with a pendant at each corner
Graph sun3();                            // complement of the net; the smallest
                                         // connected non-trivially Hoffman
                                         // colorable graph, = L(net)
Graph triangular_lk8();                  // L(K_8) on the 28 pairs from {1..8}
Graph chang(int which);                  // which in {1,2,3}
Graph schlafli();                        // 27 vertices, 16-regular

// ---- graph6 ---------------------------------------------------------------

struct Graph6Error : std::runtime_error {
    std::size_t offset;
    Graph6Error(const std::string& what, std::size_t off)
        : std::runtime_error(what + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& line);
std::vector<Graph> graph6_read_file(const std::string& path);
void graph6_write_file(const std::string& path, const std::vector<Graph>& gs);

} // namespace hoffman
