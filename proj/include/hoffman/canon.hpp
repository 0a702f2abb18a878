#pragma once

#include "hoffman/graph.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace hoffman {

// Total-order key with key(G) == key(H) iff G and H are isomorphic.
// Computed by iterative color refinement with backtracking over the first
// non-singleton cell, taking the lexicographically least adjacency string.
// An optional vertex coloring restricts the isomorphisms considered.
std::string canonical_key(const Graph& g, const std::vector<int>* colors = nullptr,
                          std::vector<int>* witness = nullptr);

// Cached wrapper for plain (uncolored) keys; safe to call from several threads.
std::string canonical_key_cached(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

// true iff some automorphism of g maps c1 onto c2
bool marked_set_equivalent(const Graph& g, Mask c1, Mask c2);

// Cheap isomorphism-invariant fingerprint (degree/triangle statistics); equal
// for isomorphic graphs, used to bucket candidates before exact comparison.
std::string invariant_string(const Graph& g);

// Exact isomorphism test by backtracking over refinement-compatible vertices.
// Used for bulk deduplication where canonical keys would be too expensive.
bool isomorphic_backtrack(const Graph& a, const Graph& b);

// Deduplicates a stream of graphs up to isomorphism via canonical keys.
class CanonicalDeduper {
public:
    // returns true when g is new; stores it
    bool insert(const Graph& g);
    bool contains_key(const std::string& key) const { return index_.count(key) != 0; }
    const std::vector<Graph>& graphs() const { return graphs_; }
    const std::vector<std::string>& keys() const { return keys_; }

private:
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<Graph> graphs_;
    std::vector<std::string> keys_;
};

// Deduplicates large candidate streams: invariant buckets plus backtracking
// isomorphism against the few library members per bucket.
class LibraryDeduper {
public:
    // returns index of the isomorphism class, and whether it was new
    std::pair<std::size_t, bool> insert(const Graph& g);
    const std::vector<Graph>& graphs() const { return graphs_; }
    std::size_t size() const { return graphs_.size(); }

private:
    std::unordered_map<std::string, std::vector<std::size_t>> buckets_;
    std::vector<Graph> graphs_;
};

} // namespace hoffman
