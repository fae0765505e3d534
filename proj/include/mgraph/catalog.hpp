#ifndef MGRAPH_CATALOG_HPP
#define MGRAPH_CATALOG_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "mgraph/bounds.hpp"
#include "mgraph/multigraph.hpp"

namespace mgraph {

struct ExpectedValue {
    std::string key;
    double value = 0;
    std::string provenance;  // "paper" or "derived"
};

struct CatalogEntry {
    std::string name;
    std::vector<int> parameters;
    MultiGraph graph;
    std::vector<ExpectedValue> expected;
    FamilyInfo family;
};

// Known names: grid(d,n), complete_bipartite(d,n), complete(n), cycle(n),
// banana(n), hypercube(n), paper-genus2-example. cycle(1) degenerates to a
// single vertex with a loop.
CatalogEntry catalog(const std::string& name, const std::vector<int>& params);

std::vector<std::string> catalog_names();

// d x d nonnegative integer matrix with labels; support must be symmetric.
struct HeckePattern {
    int dimension = 0;
    std::vector<std::vector<long long>> matrix;
    long long D = 0, p = 0, q = 0;
    void validate() const;
};

// Fixture format: "hecke <d> <D> <p> <q>" then d rows of d integers.
HeckePattern read_hecke(std::istream& in);

// Simple bipartite graph on 2d vertices: edge (i, d+j) iff entry (i,j) != 0.
MultiGraph reduced_dual_graph(const HeckePattern& h);

}  // namespace mgraph

#endif
