#ifndef MGRAPH_MULTIGRAPH_HPP
#define MGRAPH_MULTIGRAPH_HPP

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mgraph {

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

struct budget_exceeded : error {
    explicit budget_exceeded(const std::string& what) : error(what) {}
};

// An undirected edge with a stable id. u == v encodes a loop. Parallel edges
// are distinct ids with equal endpoint pairs.
struct Edge {
    int id = -1;
    int u = -1;
    int v = -1;

    int other(int w) const { return w == u ? v : u; }
    bool is_loop() const { return u == v; }
    std::pair<int, int> key() const { return u <= v ? std::make_pair(u, v) : std::make_pair(v, u); }
};

// Immutable multigraph with stable vertex and edge ids. All operations that
// "modify" a graph return a new value.
class MultiGraph {
public:
    MultiGraph() = default;
    MultiGraph(std::vector<int> vertex_ids, std::vector<Edge> edge_list);

    // Vertices 0..n-1, edge ids 0..m-1 in the order given.
    static MultiGraph simple(int n, const std::vector<std::pair<int, int>>& ends);

    const std::vector<int>& vertices() const { return verts_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int vertex_count() const { return static_cast<int>(verts_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool has_vertex(int v) const { return vindex_.count(v) > 0; }
    bool has_edge(int id) const { return eindex_.count(id) > 0; }
    const Edge& edge(int id) const;

    // Incident edge ids (a loop appears once here but counts twice in degree).
    const std::vector<int>& incident(int v) const;
    int degree(int v) const;

    int max_vertex_id() const;
    int max_edge_id() const;

    // Neighbour vertex ids with multiplicity (loops excluded).
    std::vector<int> neighbors(int v) const;

    bool operator==(const MultiGraph& o) const;

private:
    std::vector<int> verts_;                 // sorted
    std::vector<Edge> edges_;                // sorted by id
    std::map<int, int> vindex_;              // vertex id -> position
    std::map<int, int> eindex_;              // edge id -> position
    std::vector<std::vector<int>> inc_;      // per vertex position, incident edge ids
};

struct GenusReport {
    int betti = 0;            // E - V + #components (the graph-theoretic genus)
    bool is_tree = false;
    int component_count = 0;
};

GenusReport betti_genus(const MultiGraph& g);

int component_count(const MultiGraph& g);
bool is_connected(const MultiGraph& g);

MultiGraph delete_loops(const MultiGraph& g);

// Cut edges. A member of a parallel pair is never a bridge.
std::set<int> find_bridges(const MultiGraph& g);

struct ContractionResult {
    MultiGraph graph;
    std::map<int, int> vertex_map;   // old vertex -> new vertex
};

// Contract all bridges; result is 2-edge-connected or a single vertex.
// Throws on disconnected input.
ContractionResult contract_bridges(const MultiGraph& g);

// Contract the given edges (must exist; loops among them are dropped).
ContractionResult contract_edges(const MultiGraph& g, const std::set<int>& to_contract);

struct SubdivisionResult {
    MultiGraph graph;
    int new_vertex;
    int new_edge_a;   // endpoint(u) -- new vertex, reuses nothing
    int new_edge_b;   // new vertex -- endpoint(v)
};

// Replace edge e = uv by u-w-v through a fresh vertex w. Errors on loops.
SubdivisionResult subdivide_edge(const MultiGraph& g, int e);

// Labeled equality: same vertex set and same multiset of endpoint pairs.
bool same_shape(const MultiGraph& a, const MultiGraph& b);

// Unlabeled isomorphism by backtracking with degree refinement. Exact; meant
// for the small graphs the test suites work with.
bool is_isomorphic(const MultiGraph& a, const MultiGraph& b);

// Simplification: drop loops, collapse parallel edges to one.
MultiGraph simplify(const MultiGraph& g);

}  // namespace mgraph

#endif
