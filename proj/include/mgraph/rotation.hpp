#ifndef MGRAPH_ROTATION_HPP
#define MGRAPH_ROTATION_HPP

#include <cstdint>
#include <vector>

#include "mgraph/multigraph.hpp"

namespace mgraph {

// A directed edge-end. Edge e contributes darts 2e (at u) and 2e+1 (at v);
// loops contribute both darts at the same vertex.
using Dart = int;

inline Dart dart_fwd(int edge_id) { return 2 * edge_id; }
inline Dart dart_rev(int edge_id) { return 2 * edge_id + 1; }
inline int dart_edge(Dart d) { return d / 2; }
inline Dart dart_twin(Dart d) { return d ^ 1; }

// Cyclic order of edge-ends around each vertex; determines an embedding into
// an orientable surface.
struct RotationSystem {
    MultiGraph graph;
    std::map<int, std::vector<Dart>> rotation;  // vertex -> cyclic dart order

    int dart_origin(Dart d) const {
        const Edge& e = graph.edge(dart_edge(d));
        return (d & 1) ? e.v : e.u;
    }
    void validate() const;
};

struct EmbeddingReport {
    int face_count = 0;
    std::vector<std::vector<Dart>> faces;  // closed dart walks
    int orientable_genus = 0;
};

// Face tracing: successor of dart d is the rotation successor of twin(d) at
// the head vertex. Genus from Euler's formula (connected graph).
EmbeddingReport trace_faces(const RotationSystem& rs);

// Exact minimum orientable genus by exhausting rotation systems.
// Throws budget_exceeded when prod (deg-1)! exceeds the budget.
// The OpenMP kernel partitions the search by the first vertex's rotation;
// the serial variant is the reference implementation kept for testing.
int minimum_genus(const MultiGraph& g, std::int64_t budget = 100'000'000);
int minimum_genus_serial(const MultiGraph& g, std::int64_t budget = 100'000'000);

// Rotation-system count (= product of (deg(v)-1)! over vertices), saturating.
std::int64_t rotation_system_count(const MultiGraph& g);

// Linear-time planarity (loops and parallel edges do not affect the answer).
bool is_planar(const MultiGraph& g);

// A planar rotation system for a planar graph (Boyer-Myrvold embedding order),
// throws if the graph is not planar. Parallel edges and loops are supported.
RotationSystem planar_rotation_system(const MultiGraph& g);

}  // namespace mgraph

#endif
