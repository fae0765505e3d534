#ifndef MGRAPH_MORPHISMS_HPP
#define MGRAPH_MORPHISMS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "mgraph/multigraph.hpp"

namespace mgraph {

// Vertex map plus edge map; an edge maps either to a target edge or collapses
// onto a target vertex.
struct GraphMorphism {
    MultiGraph source;
    MultiGraph target;
    std::map<int, int> vertex_map;              // source vertex -> target vertex
    std::map<int, int> edge_to_edge;            // source edge -> target edge
    std::map<int, int> edge_to_vertex;          // source edge -> target vertex

    bool maps_edge_to_edge(int e) const { return edge_to_edge.count(e) > 0; }
    void validate() const;                      // throws mgraph::error on contract violation
};

// Order-two automorphism stored as explicit vertex and edge permutations.
struct Involution {
    MultiGraph graph;
    std::map<int, int> vertex_perm;
    std::map<int, int> edge_perm;

    int v(int x) const { return vertex_perm.at(x); }
    int e(int x) const { return edge_perm.at(x); }
    bool fixes_vertex(int x) const { return vertex_perm.at(x) == x; }
    bool fixes_edge(int x) const { return edge_perm.at(x) == x; }
    bool is_identity_on_vertices() const;
    void validate() const;                      // involution + automorphism check
};

struct QuotientResult {
    MultiGraph quotient;
    GraphMorphism projection;
    std::set<int> fixed_vertices;               // quotient vertices that are fixed-vertex orbits
};

// True iff every edge fixed by the edge permutation has its endpoints swapped
// by the vertex permutation.
bool is_mixing(const Involution& inv);

// Quotient by a mixing involution. Vertices are orbits {v, a(v)} (named by
// their smaller member); edges are orbits {e, a(e)} whose endpoints are
// inequivalent; edges between equivalent endpoints map to the orbit vertex.
QuotientResult quotient(const Involution& inv);

struct HarmonicReport {
    bool harmonic = false;
    int degree = 0;          // 0 for constant maps
    bool constant = false;
    bool nondegenerate = false;  // every source vertex carries at least one edge
                                 // onto each target edge at its image (finite
                                 // morphism; gonality witnesses require this)
};

HarmonicReport is_harmonic(const GraphMorphism& m);

struct InvolutionSearch {
    std::vector<Involution> found;
    bool truncated = false;     // search budget exhausted; "found" may be incomplete
};

// All mixing involutions of g, one canonical edge action per admissible
// vertex permutation (identity vertex permutations included when a
// fixed-point-free edge action exists). budget caps explored search nodes.
InvolutionSearch enumerate_mixing_involutions(const MultiGraph& g, std::int64_t budget = 2'000'000);

struct DetectionResult {
    bool verdict = false;
    std::optional<Involution> witness;
    bool truncated = false;
};

// Mixing involution with tree quotient.
DetectionResult detect_hyperelliptic(const MultiGraph& g, std::int64_t budget = 2'000'000);
// Mixing involution with quotient of betti exactly 1.
DetectionResult detect_bielliptic(const MultiGraph& g, std::int64_t budget = 2'000'000);

enum class LiftChoice { Vertical, Cross };

struct LiftSpec {
    std::map<int, bool> split;            // base vertex -> split? (else fixed)
    std::map<int, LiftChoice> lift;       // base edge (split-split only) -> choice
    std::map<int, int> horizontals;       // split base vertex -> number of a-b edges
};

struct GeneratedGraph {
    MultiGraph graph;
    Involution involution;
    std::map<int, std::pair<int, int>> vertex_lift;  // base vertex -> (a side, b side); fixed: (f, f)
};

// Double cover of a tree along the marking. Fixed-fixed base edges lift to
// doubled pairs and must form chains; fixed-split edges to transfer pairs;
// split-split per choice; horizontals attach a_i - b_i. The involution
// exchanges the two sheets. Throws on invalid markings or a disconnected
// result.
GeneratedGraph generate_hyperelliptic(const MultiGraph& tree, const LiftSpec& spec);

// Same lift over a base of betti exactly 1.
GeneratedGraph generate_bielliptic(const MultiGraph& base, const LiftSpec& spec);

// Convenience corpus makers used by the property suites (seeded, reproducible).
GeneratedGraph random_hyperelliptic(std::uint64_t seed, int max_base_vertices = 12);
GeneratedGraph random_bielliptic(std::uint64_t seed, int max_base_vertices = 12);

GraphMorphism identity_morphism(const MultiGraph& g);

}  // namespace mgraph

#endif
