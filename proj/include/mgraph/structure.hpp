#ifndef MGRAPH_STRUCTURE_HPP
#define MGRAPH_STRUCTURE_HPP

#include <set>
#include <vector>

#include "mgraph/morphisms.hpp"
#include "mgraph/multigraph.hpp"

namespace mgraph {

// Vertex partition and edge classification of a hyperelliptic graph: fixed
// vertices F, exchanged sides A/B, and the seven edge classes.
struct HyperellipticDecomposition {
    MultiGraph graph;
    Involution iota;
    std::set<int> fixed;            // F
    std::vector<int> side_a;        // a_1..a_n, a_n a deepest pair in the rooted quotient tree
    std::vector<int> side_b;        // b_i = iota(a_i)
    std::set<int> edges_a;          // E_A: A to A
    std::set<int> edges_b;          // E_B = iota(E_A)
    std::set<int> edges_f;          // E_F: F to F
    std::set<int> horizontal;       // H: a_i to b_i
    std::set<int> cross;            // C: a_i to b_j, i != j
    std::set<int> transfer_a;       // T_A: F to A
    std::set<int> transfer_b;       // T_B = iota(T_A)

    std::string to_json() const;
};

// Requires a loopless graph and a mixing involution with tree quotient.
HyperellipticDecomposition decompose(const MultiGraph& g, const Involution& iota);

// (A, E_A) is a forest (and so is its mirror image).
bool check_forest_lemma(const HyperellipticDecomposition& d);

// Every (F, E_F) component is a single vertex or a doubled path.
bool check_chain_lemma(const HyperellipticDecomposition& d);

struct ReducedGraph {
    MultiGraph graph;
    Involution involution;
    std::map<int, int> vertex_map;   // old vertex -> new vertex
};

// Contract each (F, E_F) component to a point; transfers reattach there.
ReducedGraph reduce_fixed_components(const HyperellipticDecomposition& d);

// Contract each (A, E_A) component and its mirror image.
ReducedGraph reduce_side_components(const HyperellipticDecomposition& d);

struct HorizontalElimination {
    MultiGraph graph;
    Involution involution;
    std::map<int, int> midpoint_of;      // old horizontal edge -> new fixed midpoint
};

// Replace each horizontal edge a_i - b_i by a path a_i - f - b_i.
HorizontalElimination eliminate_horizontal(const HyperellipticDecomposition& d);

}  // namespace mgraph

#endif
