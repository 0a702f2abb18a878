#pragma once

#include "hoffman/cliques.hpp"
#include "hoffman/graph.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace hoffman {

// One of the 240 norm-8 integer vectors of the E8 root lattice, under the
// conventional naming: a_ij = 2e_i + 2e_j, b_ij = 1 - 2e_i - 2e_j,
// c_ij = 2e_i - 2e_j, d_ijkl = 1 - 2e_i - 2e_j - 2e_k - 2e_l, e = all-ones,
// with primes for negatives of types a, b, e.
struct Root {
    std::string name;
    std::array<int, 8> coords;
};

class RootTable {
public:
    RootTable();
    int size() const { return static_cast<int>(roots_.size()); } // 240
    const Root& operator[](int i) const { return roots_[i]; }
    int by_name(const std::string& name) const; // throws on unknown name
    int inner(int i, int j) const { return inner_[static_cast<std::size_t>(i) * 240 + j]; }

private:
    std::vector<Root> roots_;
    std::vector<signed char> inner_;
};

const RootTable& e8();

using RootSet = std::vector<int>; // indices into e8()

RootSet e8_roots();
// the roots orthogonal to all the named seed roots; seeds must be pairwise
// orthogonal members of E8
RootSet subsystem_orthogonal(const std::vector<std::string>& seed_names);

int inner(int u, int v);
int inner(const std::string& u, const std::string& v);

// vertex -> root index, adjacency iff inner product 4
using Representation = std::vector<int>;

// builds the graph of a name list; any pair with inner product not in {0,4}
// is an invalid certificate
Graph decode_representation(const std::vector<std::string>& names);
Graph decode_representation_ids(const RootSet& ids);
bool verify_representation(const Graph& g, const Representation& rep);

// searches a representation of g inside the given root set; the set must be
// one of the Weyl-transitive systems built here (E8, an E7, a D6), which
// allows pinning the first vertex to a fixed root
std::optional<Representation> find_representation(const Graph& g, const RootSet& roots);

// g is switching-equivalent to the line graph of a graph on eight vertices
// iff the cone over g has a representation with the apex at the all-ones root
bool in_s8(const Graph& g);

struct MaximalRepResult {
    std::vector<Graph> graphs;
    std::vector<Representation> reps; // one witness per graph
};

// maximal graphs representable in the given root system, up to isomorphism:
// maximal cocliques of the negativity relation restricted to the vectors
// compatible with two orthogonal seed roots, which every non-complete
// representable graph can be assumed to use
MaximalRepResult maximal_representable_graphs(const RootSet& roots, const std::string& seed1,
                                              const std::string& seed2);

// does big contain an induced copy of small
bool contains_induced(const Graph& small, const Graph& big);

} // namespace hoffman
