#ifndef MGRAPH_EMBEDDER_HPP
#define MGRAPH_EMBEDDER_HPP

#include <vector>

#include "mgraph/drawing.hpp"
#include "mgraph/morphisms.hpp"

namespace mgraph {

// Constructive symmetric plane embedding of a hyperelliptic graph: exact
// mirror symmetry, a face certificate for every exchanged pair, genus zero.
// Accepts any connected loopless graph with a mixing tree-quotient involution
// (2-edge-connectivity is not required).
Drawing embed_hyperelliptic(const MultiGraph& g, const Involution& iota);

// Same, with set1 (an exchanged pair or a single fixed vertex) and set2 (an
// exchanged pair) all on the boundary of one face; the certificate for that
// face is emitted first.
Drawing embed_with_two_pairs(const MultiGraph& g, const Involution& iota,
                             std::vector<int> set1, std::vector<int> set2);

// Torus-square (or plane, when the graph is small or the boundary order
// allows) embedding of a bielliptic graph: mixing involution whose quotient
// has betti exactly one. Verified genus <= 1.
Drawing embed_bielliptic(const MultiGraph& g, const Involution& alpha);

}  // namespace mgraph

#endif
