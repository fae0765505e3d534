#include "doctest.h"
#include "mgraph/catalog.hpp"
#include "mgraph/rotation.hpp"

#include <sstream>

using namespace mgraph;

TEST_CASE("catalog shapes") {
    CatalogEntry grid = catalog("grid", {3, 5});
    CHECK(grid.graph.vertex_count() == 15);
    CHECK(grid.graph.edge_count() == 22);

    CatalogEntry k33 = catalog("complete_bipartite", {3, 3});
    CHECK(k33.graph.vertex_count() == 6);
    CHECK(k33.graph.edge_count() == 9);
    bool has_genus = false, has_tw = false;
    for (auto& e : k33.expected) {
        if (e.key == "genus") {
            has_genus = true;
            CHECK(e.value == 1);
            CHECK(e.provenance == "paper");
        }
        if (e.key == "treewidth") {
            has_tw = true;
            CHECK(e.value == 3);
        }
    }
    CHECK(has_genus);
    CHECK(has_tw);

    CatalogEntry loop = catalog("cycle", {1});
    CHECK(loop.graph.vertex_count() == 1);
    CHECK(loop.graph.edge_count() == 1);
    CHECK(loop.graph.edges().front().is_loop());

    CHECK(catalog("hypercube", {3}).graph.edge_count() == 12);
    CHECK_THROWS_AS(catalog("moebius", {3}), error);
    CHECK_THROWS_AS(catalog("grid", {3}), error);
}

TEST_CASE("genus-2 example: quotient betti two and genus at most two") {
    CatalogEntry entry = catalog("paper-genus2-example", {});
    const MultiGraph& g = entry.graph;
    CHECK(g.vertex_count() == 14);
    CHECK(g.edge_count() == 21);
    for (int v : g.vertices()) CHECK(g.degree(v) == 3);

    InvolutionSearch s = enumerate_mixing_involutions(g);
    bool betti2 = false;
    for (const Involution& inv : s.found)
        if (betti_genus(quotient(inv).quotient).betti == 2) betti2 = true;
    CHECK(betti2);

    // transcription note: the adjacency was read off the displayed diagram;
    // the exhaustive rotation search is the regression assertion. The source
    // only promises an embedding into genus two; the search shows the true
    // minimum is one (as with K5, different lifts need not cross).
    int genus = minimum_genus(g);
    CHECK(genus <= 2);
    CHECK(genus == 1);  // frozen from the exhaustive 2^14-system search
}

TEST_CASE("hecke fixtures") {
    std::istringstream one("hecke 1 6 2 3\n3\n");
    HeckePattern h = read_hecke(one);
    MultiGraph g = reduced_dual_graph(h);
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);

    std::istringstream ident("hecke 3 15 3 5\n1 0 0\n0 2 0\n0 0 1\n");
    MultiGraph matching = reduced_dual_graph(read_hecke(ident));
    CHECK(matching.edge_count() == 3);
    for (int v : matching.vertices()) CHECK(matching.degree(v) == 1);

    std::istringstream asym("hecke 2 6 2 3\n0 1\n0 1\n");
    CHECK_THROWS_AS(read_hecke(asym), error);

    std::istringstream neg("hecke 1 6 2 3\n-1\n");
    CHECK_THROWS_AS(read_hecke(neg), error);

    // all-ones 3x3 support gives K_{3,3}: not planar
    std::istringstream ones("hecke 3 30 2 15\n1 1 1\n1 1 1\n1 1 1\n");
    MultiGraph k33 = reduced_dual_graph(read_hecke(ones));
    CHECK(!is_planar(k33));
}
