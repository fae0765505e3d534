#ifndef MGRAPH_IO_HPP
#define MGRAPH_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "mgraph/morphisms.hpp"
#include "mgraph/multigraph.hpp"

namespace mgraph {

// Text format, one graph per file:
//   mgraph <V> <E>
//   u v            (E lines, 0-based vertex indices; loops as "u u";
//                   parallel edges as repeated lines; edge ids are line order)
// An involution may follow as two permutation lines:
//   vperm i0 i1 ... (image of vertex k at position k)
//   eperm j0 j1 ...
MultiGraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const MultiGraph& g);

struct GraphFile {
    MultiGraph graph;
    std::optional<Involution> involution;
};

GraphFile read_graph_file(std::istream& in);
void write_graph_file(std::ostream& out, const MultiGraph& g,
                      const std::optional<Involution>& inv);

std::string morphism_to_json(const GraphMorphism& m);

}  // namespace mgraph

#endif
