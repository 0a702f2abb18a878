#pragma once

#include "hoffman/graph.hpp"
#include "hoffman/poly.hpp"

#include <optional>
#include <set>
#include <vector>

namespace hoffman {

using Coloring = std::vector<Mask>; // pairwise disjoint cocliques covering V

int chromatic_number(const Graph& g);
int chromatic_number_with_witness(const Graph& g, Coloring* witness);
// brute-force oracle for small graphs (subset dynamic program)
int chromatic_number_brute(const Graph& g);

struct HoffmanReport {
    int chi = 0;
    RationalInterval lambda_max, lambda_min;
    std::optional<long> h_integer;
    bool colorable = false;
    std::optional<Coloring> witness;
};

// requires at least one edge; the bound is undefined otherwise
HoffmanReport hoffman_report(const Graph& g);

// g Hoffman colorable: bipartite or regular complete multipartite
bool is_trivially_colorable(const Graph& g);

bool is_nontrivially_hoffman_colorable(const Graph& g);

// ratio-bound data of a regular graph: nu = -lambda_min (integer) and the
// coclique size bound n*nu/(k+nu), when both are integral
struct RatioBound {
    long nu;
    long size;
};
std::optional<RatioBound> ratio_bound_int(const Graph& g);

// g regular non-empty, c a coclique: |c| attains the ratio bound and every
// outside vertex has exactly -lambda_min neighbors in c
bool is_hoffman_coclique(const Graph& g, Mask c);

// all cocliques attaining the ratio bound (empty when the bound is not an
// attainable integer)
std::vector<Mask> hoffman_cocliques(const Graph& g);

// All optimal colorings attaining the Hoffman bound, as sets of classes.
// Regular graphs go through exact covers by Hoffman cocliques; irregular
// connected graphs through exact covers by maximal cocliques.
std::vector<Coloring> enumerate_hoffman_colorings(const Graph& g);

std::set<int> class_size_set(const Graph& g);
std::set<int> class_size_set(const std::vector<Coloring>& colorings);

Graph chromatic_component(const Graph& g, const Coloring& coloring, const std::vector<int>& picks);

// partitions of cover into exactly k classes drawn from pool
void exact_covers(Mask cover, const std::vector<Mask>& pool, int k,
                  const std::function<void(const std::vector<int>&)>& report);

} // namespace hoffman
