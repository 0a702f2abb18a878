#pragma once

#include "hoffman/graph.hpp"

#include <functional>
#include <vector>

namespace hoffman {

// Adjacency over more than 64 vertices, used for intersection graphs of
// cocliques and for root compatibility graphs.
class BitGraph {
public:
    explicit BitGraph(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {}
    int n() const { return n_; }
    int words() const { return words_; }
    const std::uint64_t* row(int v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }
    bool get(int i, int j) const { return (row(i)[j >> 6] >> (j & 63)) & 1; }
    void set_edge(int i, int j) {
        bits_[static_cast<std::size_t>(i) * words_ + (j >> 6)] |= std::uint64_t{1} << (j & 63);
        bits_[static_cast<std::size_t>(j) * words_ + (i >> 6)] |= std::uint64_t{1} << (i & 63);
    }

private:
    int n_, words_;
    std::vector<std::uint64_t> bits_;
};

// Bron-Kerbosch with pivoting; reports each maximal clique once.
void maximal_cliques(const BitGraph& g, const std::function<void(const std::vector<int>&)>& report);

// Every clique of size >= min_size (not only maximal ones), reported once.
void all_cliques(const BitGraph& g, int min_size, const std::function<void(const std::vector<int>&)>& report);

// Maximal cliques of a graph on <= 64 vertices given by bit rows.
std::vector<Mask> maximal_cliques_mask(const std::vector<Mask>& rows, int n);

// Maximal cocliques of g.
std::vector<Mask> maximal_cocliques(const Graph& g);

// All cocliques of exactly the given size.
std::vector<Mask> cocliques_of_size(const Graph& g, int size);

} // namespace hoffman
