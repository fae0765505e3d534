#ifndef MGRAPH_PLANAR_DRAW_HPP
#define MGRAPH_PLANAR_DRAW_HPP

#include <optional>

#include "mgraph/drawing.hpp"
#include "mgraph/morphisms.hpp"
#include "mgraph/rotation.hpp"

namespace mgraph {

// Realizes a genus-zero rotation system as a plane drawing with the given
// traced face unbounded. Tutte layout on a stellated subdivision, snapped to
// rationals; the result is verified exactly and an error thrown if the layout
// degenerates. When `mirror` is supplied and the target face is stable under
// it, the output keeps exact mirror symmetry and sets the symmetry flag.
Drawing draw_planar_with_outer(const RotationSystem& rs, const EmbeddingReport& rep,
                               int outer_face, const std::optional<Involution>& mirror);

// Any plane drawing of a connected planar multigraph: biconnected blocks are
// drawn by the Tutte pipeline (cycles and single edges directly) and glued
// into free wedges at their cut vertices.
Drawing draw_planar_any(const MultiGraph& g);

}  // namespace mgraph

#endif
