#pragma once

#include "hoffman/catalog.hpp"
#include "hoffman/certificates.hpp"
#include "hoffman/cliques.hpp"
#include "hoffman/coloring.hpp"
#include "hoffman/graph.hpp"
#include "hoffman/roots.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hoffman {

// ---- Hoffman coclique machinery (regular hosts) ---------------------------

struct HoffmanCocliqueGraph {
    std::vector<Mask> nodes; // the Hoffman cocliques
    BitGraph meet;           // adjacent iff they intersect
};

HoffmanCocliqueGraph hoffman_coclique_graph(const Graph& g);

// distinct unions of families of pairwise disjoint Hoffman cocliques of size
// >= 2, with a flag telling whether some further coclique avoids the union
struct UnionPool {
    std::vector<Mask> nodes;
    std::vector<std::pair<Mask, bool>> unions; // (union, extendable)
};
UnionPool hoffman_union_pool(const Graph& g);

// induced subgraphs from (maximal) families of disjoint Hoffman cocliques,
// deduplicated up to isomorphism
std::vector<Graph> algorithm1(const Graph& g, bool maximal_only);

// ---- the ratio-3 deletion hierarchy ---------------------------------------

struct LatticeLine {
    int from = 0, to = 0;
    bool full = false;
};

struct Lattice {
    std::vector<Graph> node_graphs;
    std::vector<std::string> node_polys; // char poly key
    std::vector<std::string> node_names; // catalog identifiers / constructor names
    std::vector<int> node_rows;          // vertex count / 3
    std::vector<bool> partitionable;     // splits into 3-cocliques
    std::vector<LatticeLine> lines;

    int index_of_name(const std::string& name) const;
    int full_lines_above_c6() const;
    std::vector<std::string> names_without_full_path() const;
};

Lattice build_ratio3_lattice();

// cone over g switched at a color class
Graph hat_switch(const Graph& g, Mask c);

struct TypeAResult {
    std::vector<Graph> graphs;      // the 35, canonical order
    std::vector<std::string> keys;
    std::vector<Graph> maximal;     // hats of the four designated lines
    std::vector<std::string> maximal_keys;
};

TypeAResult typea_graphs(const Lattice& lattice);

// ---- maximal coclique machinery (irregular hosts) --------------------------

struct MaximalCocliqueGraph {
    std::vector<Mask> nodes; // maximal cocliques of the carrier
    BitGraph adj;            // intersecting, or a union component off the base eigenvalue
};

MaximalCocliqueGraph maximal_coclique_graph(const Graph& g);

struct Alg2Result {
    std::map<int, std::vector<Graph>> hoffman;     // by number of classes
    std::map<int, std::vector<Graph>> non_hoffman;
};

Alg2Result algorithm2(const Graph& g, bool maximal_only);

// ---- routes ----------------------------------------------------------------

struct RegularRouteResult {
    std::vector<Graph> ratio3;            // 21, non-trivially colorable
    std::vector<Graph> ratio3_exceptional;
    std::vector<Graph> ratio3_maximal;    // route-maximal, includes L(K6)
    std::vector<Graph> ratio4;            // 87
    std::vector<Graph> ratio4_exceptional;
    std::vector<Graph> ratio4_maximal;    // cross-host filtered, 13
    std::vector<Graph> cones;             // 87 exceptional cones
    std::vector<Graph> cone_maximal;      // 13
};

RegularRouteResult classify_regular();

struct TypeBCResult {
    std::vector<Graph> graphs;             // the 36
    bool hosts_complete = false;           // external type (b)/(c) hosts were available
    std::vector<Graph> hosts;              // hosts actually processed
    std::vector<Graph> figure_like_non_hoffman; // 3-class non-Hoffman unions seen on hosts
};

struct E7MaximalResult {
    std::vector<Graph> graphs; // 39
    std::vector<Representation> reps;
    std::vector<Graph> schlafli_like, cones, others; // 1 + 27 + 11
};

E7MaximalResult e7_maximal();

// other_route_keys: canonical keys of the regular/cone/hat route outputs,
// used to skip the switching-class test for graphs those routes already hold
TypeBCResult classify_typebc(const std::optional<std::string>& hosts_file,
                             const E7MaximalResult* e7 = nullptr,
                             const std::set<std::string>* other_route_keys = nullptr);

// ---- assembly ---------------------------------------------------------------

struct ClassificationRecord {
    Graph graph;
    std::string key;
    int chi = 0;
    std::vector<int> bucket;                    // class size set
    std::vector<std::vector<int>> class_shapes; // distinct class-size multisets
    std::string route;                          // regular | cone | hat | coclique
    bool maximal = false;
    std::string maximal_id;  // M1..M29 when maximal
    std::string cert_id;     // matching stored certificate, when one exists
};

struct Classification {
    std::vector<ClassificationRecord> records;
    bool typebc_complete = false;
    std::map<std::string, std::set<std::string>> children; // key -> chromatic component keys

    const ClassificationRecord* by_key(const std::string& key) const;
    const ClassificationRecord* by_maximal_id(const std::string& id) const;
    std::map<std::string, std::pair<int, int>> bucket_counts() const; // bucket -> (total, maximal)
};

Classification assemble_classification(const RegularRouteResult& reg, const TypeAResult& ta,
                                       const TypeBCResult& tbc);

// convenience: run everything
Classification classify_all(const std::optional<std::string>& hosts_file);

// ---- small-order theorem and the multiset construction ---------------------

struct SmallOrderResult {
    std::vector<Graph> graphs; // ten graphs, ascending order
};

SmallOrderResult small_order_graphs(const Classification& cls);

struct MultisetGraph {
    Graph graph;
    bool hoffman = false;
};

// one size-five class plus a size-two class per entry of s (entries in 1..3)
MultisetGraph graph_from_multiset(std::vector<int> s);

// ---- host handling ----------------------------------------------------------

struct HostValidation {
    bool ok = false;
    char type = '?'; // 'b' or 'c'
    std::string reason;
};
HostValidation validate_host(const Graph& g);

// the eleven maximal E7-representable graphs that are neither cones nor
// switching-equivalent to an eight-vertex line graph
std::vector<Graph> e7_hosts(const E7MaximalResult& e7);

// optional long-running derivation of the external hosts from the full root
// system; seeds two fixed orthogonal roots
std::vector<Graph> derive_bc_hosts_from_e8(bool verbose);

// ---- output -----------------------------------------------------------------

void write_tables(const Classification& cls, const std::string& out_dir);

} // namespace hoffman
