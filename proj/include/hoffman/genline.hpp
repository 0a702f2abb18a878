#pragma once

#include "hoffman/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hoffman {

// L(root; capacities): the line graph of root together with a cocktail party
// graph CP(capacities[i]) fully joined to the edges at vertex i.
struct GLGSpec {
    Graph root;
    std::vector<int> capacities;
};

struct BuiltGLG {
    Graph graph;
    // vertex provenance: the first edge_count vertices are root edges, the
    // rest cocktail party vertices grouped per root vertex, pairs adjacent
    std::vector<std::pair<int, int>> edge_vertices;       // root endpoints
    struct CPVertex {
        int root_vertex;
        int pair;
        int side;
    };
    std::vector<CPVertex> cp_vertices;
};

BuiltGLG build_glg(const GLGSpec& spec);

// chromatic number of the generalized line graph from the closed form
// max(chi(L(root)), max_i (capacities[i] + deg(i)))
int glg_chi_formula(const GLGSpec& spec);

// capacities c - deg(v_i); throws when c is below a degree or below chi(L(h))
GLGSpec balanced_spec(const Graph& h, int c);
Graph balanced_glg(const Graph& h, int c);

// The eigenvector certificate for chromatic balance: x assigns 2 to edge
// vertices and 1 to cocktail party vertices; A x = 2(chi-1) x holds exactly
// iff all c_i = deg(v_i) + a_i are equal.
bool verify_balanced_certificate(const GLGSpec& spec);

// A vertex image in a D-lattice representation: two signed unit coordinates.
// Coordinates are 1-based; the sign is carried on the value.
using DVector = std::pair<int, int>;
using DRepresentation = std::vector<DVector>;

// Finds norm-2 integer vectors with two nonzero entries (+-1) whose Gram
// matrix is A + 2I; a connected graph admits one iff it is a generalized line
// graph. Coordinates are capped at component size + 1. Returns nothing when
// lambda_min < -2 or no representation exists.
std::optional<DRepresentation> recognize_glg(const Graph& g);

// connected, smallest eigenvalue >= -2, and not a generalized line graph
bool is_exceptional(const Graph& g);

} // namespace hoffman
