#include "doctest.h"
#include "mgraph/catalog.hpp"
#include "mgraph/structure.hpp"

#include <random>

using namespace mgraph;

namespace {

Involution banana_swap(const MultiGraph& banana) {
    Involution inv;
    inv.graph = banana;
    inv.vertex_perm = {{0, 1}, {1, 0}};
    for (const Edge& e : banana.edges()) inv.edge_perm[e.id] = e.id;
    return inv;
}

}  // namespace

TEST_CASE("decompose banana and C4") {
    MultiGraph b3 = catalog("banana", {3}).graph;
    HyperellipticDecomposition d = decompose(b3, banana_swap(b3));
    CHECK(d.fixed.empty());
    CHECK(d.side_a.size() == 1);
    CHECK(d.horizontal.size() == 3);
    CHECK(d.cross.empty());
    CHECK(d.edges_a.empty());

    MultiGraph c4 = MultiGraph::simple(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    Involution refl;
    refl.graph = c4;
    refl.vertex_perm = {{0, 0}, {1, 3}, {2, 2}, {3, 1}};
    refl.edge_perm = {{0, 3}, {3, 0}, {1, 2}, {2, 1}};
    HyperellipticDecomposition d2 = decompose(c4, refl);
    CHECK(d2.fixed == std::set<int>{0, 2});
    CHECK(d2.side_a.size() == 1);
    CHECK(d2.transfer_a.size() == 2);
    CHECK(d2.transfer_b.size() == 2);
    CHECK(d2.horizontal.empty());

    // a non-hyperelliptic witness is rejected
    MultiGraph k33 = catalog("complete_bipartite", {3, 3}).graph;
    DetectionResult bi = detect_bielliptic(k33);
    REQUIRE(bi.verdict);
    CHECK_THROWS_AS(decompose(k33, *bi.witness), error);
}

TEST_CASE("generator output classes match the chosen lifts") {
    MultiGraph p3 = MultiGraph::simple(3, {{0, 1}, {1, 2}});
    LiftSpec spec;
    spec.split = {{0, false}, {1, true}, {2, true}};
    spec.lift[1] = LiftChoice::Cross;
    spec.horizontals[2] = 1;
    GeneratedGraph gen = generate_hyperelliptic(p3, spec);
    HyperellipticDecomposition d = decompose(gen.graph, gen.involution);
    CHECK(d.fixed.size() == 1);
    CHECK(d.side_a.size() == 2);
    CHECK(d.transfer_a.size() == 1);  // the fixed-split base edge
    CHECK(d.cross.size() == 2);       // the cross lift
    CHECK(d.horizontal.size() == 1);
    CHECK(d.edges_a.empty());
    CHECK(check_forest_lemma(d));
    CHECK(check_chain_lemma(d));
}

TEST_CASE("chain lemma validator") {
    // doubled path of three fixed vertices, transfers to one pair at the end
    MultiGraph g(std::vector<int>{0, 1, 2, 3, 4},
                 {Edge{0, 0, 1}, Edge{1, 0, 1}, Edge{2, 1, 2}, Edge{3, 1, 2},
                  Edge{4, 0, 3}, Edge{5, 0, 4}});
    Involution inv;
    inv.graph = g;
    inv.vertex_perm = {{0, 0}, {1, 1}, {2, 2}, {3, 4}, {4, 3}};
    inv.edge_perm = {{0, 1}, {1, 0}, {2, 3}, {3, 2}, {4, 5}, {5, 4}};
    inv.validate();
    HyperellipticDecomposition d = decompose(g, inv);
    CHECK(check_chain_lemma(d));
    CHECK(check_forest_lemma(d));

    // a doubled triangle of fixed vertices quotients to a cycle, so it is
    // rejected before the lemma even applies
    MultiGraph tri(std::vector<int>{0, 1, 2, 3, 4},
                   {Edge{0, 0, 1}, Edge{1, 0, 1}, Edge{2, 1, 2}, Edge{3, 1, 2},
                    Edge{4, 2, 0}, Edge{5, 2, 0}, Edge{6, 0, 3}, Edge{7, 0, 4}});
    Involution tinv;
    tinv.graph = tri;
    tinv.vertex_perm = {{0, 0}, {1, 1}, {2, 2}, {3, 4}, {4, 3}};
    tinv.edge_perm = {{0, 1}, {1, 0}, {2, 3}, {3, 2}, {4, 5}, {5, 4}, {6, 7}, {7, 6}};
    tinv.validate();
    CHECK(is_mixing(tinv));
    CHECK_THROWS_AS(decompose(tri, tinv), error);

    HyperellipticDecomposition forged = d;
    forged.edges_f.insert(99);  // malformed by hand: checker sees a triple
    forged.graph = MultiGraph(std::vector<int>{0, 1, 2, 3, 4},
                              {Edge{0, 0, 1}, Edge{1, 0, 1}, Edge{99, 0, 1}, Edge{2, 1, 2},
                               Edge{3, 1, 2}, Edge{4, 0, 3}, Edge{5, 0, 4}});
    CHECK(!check_chain_lemma(forged));

    // a doubled triangle among fixed vertices is not a chain
    HyperellipticDecomposition tri_forged;
    tri_forged.graph = MultiGraph(
        std::vector<int>{0, 1, 2},
        {Edge{0, 0, 1}, Edge{1, 0, 1}, Edge{2, 1, 2}, Edge{3, 1, 2}, Edge{4, 2, 0}, Edge{5, 2, 0}});
    tri_forged.fixed = {0, 1, 2};
    tri_forged.edges_f = {0, 1, 2, 3, 4, 5};
    CHECK(!check_chain_lemma(tri_forged));
}

TEST_CASE("forest lemma violation is detected") {
    // adversarial: claim a triangle of A-side edges
    MultiGraph g = MultiGraph::simple(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    HyperellipticDecomposition d;
    d.graph = g;
    d.side_a = {0, 1, 2};
    d.side_b = {3, 4, 5};
    d.edges_a = {0, 1, 2};
    d.edges_b = {3, 4, 5};
    CHECK(!check_forest_lemma(d));
    d.edges_a = {0, 1};
    CHECK(check_forest_lemma(d));
    d.edges_a = {};
    CHECK(check_forest_lemma(d));
}

TEST_CASE("reductions") {
    // doubled chain of three fixed vertices, transfers to a pair at one end
    MultiGraph g(std::vector<int>{0, 1, 2, 3, 4},
                 {Edge{0, 0, 1}, Edge{1, 0, 1}, Edge{2, 1, 2}, Edge{3, 1, 2},
                  Edge{4, 0, 3}, Edge{5, 0, 4}});
    Involution inv;
    inv.graph = g;
    inv.vertex_perm = {{0, 0}, {1, 1}, {2, 2}, {3, 4}, {4, 3}};
    inv.edge_perm = {{0, 1}, {1, 0}, {2, 3}, {3, 2}, {4, 5}, {5, 4}};
    HyperellipticDecomposition d = decompose(g, inv);
    ReducedGraph r = reduce_fixed_components(d);
    CHECK(r.graph.vertex_count() == 3);   // one fixed point and the pair
    CHECK(r.graph.edge_count() == 2);     // the two transfers survive
    CHECK(is_mixing(r.involution));
    CHECK(betti_genus(quotient(r.involution).quotient).is_tree);

    // identity case
    MultiGraph c4 = MultiGraph::simple(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    Involution refl;
    refl.graph = c4;
    refl.vertex_perm = {{0, 0}, {1, 3}, {2, 2}, {3, 1}};
    refl.edge_perm = {{0, 3}, {3, 0}, {1, 2}, {2, 1}};
    HyperellipticDecomposition d2 = decompose(c4, refl);
    ReducedGraph r2 = reduce_fixed_components(d2);
    CHECK(r2.graph == c4);
    ReducedGraph r3 = reduce_side_components(d2);
    CHECK(r3.graph == c4);
}

TEST_CASE("side reduction contracts mirrored forests") {
    // two split pairs joined by a vertical lift plus anchoring structure
    MultiGraph base = MultiGraph::simple(3, {{0, 1}, {1, 2}});
    LiftSpec spec;
    spec.split = {{0, false}, {1, true}, {2, true}};
    spec.lift[1] = LiftChoice::Vertical;  // creates an E_A / E_B pair
    GeneratedGraph gen = generate_hyperelliptic(base, spec);
    HyperellipticDecomposition d = decompose(gen.graph, gen.involution);
    CHECK(d.edges_a.size() == 1);
    CHECK(d.edges_b.size() == 1);
    ReducedGraph r = reduce_side_components(d);
    CHECK(r.graph.vertex_count() == gen.graph.vertex_count() - 2);
    CHECK(is_mixing(r.involution));
    QuotientResult q = quotient(r.involution);
    CHECK(betti_genus(q.quotient).is_tree);
}

TEST_CASE("eliminate_horizontal") {
    MultiGraph b3 = catalog("banana", {3}).graph;
    Involution inv;
    inv.graph = b3;
    inv.vertex_perm = {{0, 1}, {1, 0}};
    for (const Edge& e : b3.edges()) inv.edge_perm[e.id] = e.id;
    HyperellipticDecomposition d = decompose(b3, inv);
    HorizontalElimination he = eliminate_horizontal(d);
    CHECK(he.graph.vertex_count() == 5);   // two split vertices, three midpoints
    CHECK(he.graph.edge_count() == 6);
    HyperellipticDecomposition d2 = decompose(he.graph, he.involution);
    CHECK(d2.horizontal.empty());
    CHECK(d2.fixed.size() == 3);
    CHECK(d2.transfer_a.size() == 3);
    CHECK(d2.transfer_b.size() == 3);

    // H empty: identity
    MultiGraph c4 = MultiGraph::simple(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    Involution refl;
    refl.graph = c4;
    refl.vertex_perm = {{0, 0}, {1, 3}, {2, 2}, {3, 1}};
    refl.edge_perm = {{0, 3}, {3, 0}, {1, 2}, {2, 1}};
    HorizontalElimination he2 = eliminate_horizontal(decompose(c4, refl));
    CHECK(he2.graph == c4);

    // single horizontal plus a cross four-cycle
    MultiGraph p2 = MultiGraph::simple(2, {{0, 1}});
    LiftSpec spec;
    spec.split = {{0, true}, {1, true}};
    spec.lift[0] = LiftChoice::Cross;
    spec.horizontals[0] = 1;
    GeneratedGraph gen = generate_hyperelliptic(p2, spec);
    HyperellipticDecomposition d3 = decompose(gen.graph, gen.involution);
    CHECK(d3.horizontal.size() == 1);
    size_t ta_before = d3.transfer_a.size();
    size_t f_before = d3.fixed.size();
    HorizontalElimination he3 = eliminate_horizontal(d3);
    HyperellipticDecomposition d4 = decompose(he3.graph, he3.involution);
    CHECK(d4.horizontal.empty());
    CHECK(d4.fixed.size() == f_before + 1);
    CHECK(d4.transfer_a.size() == ta_before + 1);
}

TEST_CASE("full reduction pipeline leaves only cross and transfer edges") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 200; ++trial) {
        GeneratedGraph gen = random_hyperelliptic(rng(), 8);
        HyperellipticDecomposition d = decompose(gen.graph, gen.involution);
        ReducedGraph rf = reduce_fixed_components(d);
        HyperellipticDecomposition d2 = decompose(rf.graph, rf.involution);
        ReducedGraph rs = reduce_side_components(d2);
        HyperellipticDecomposition d3 = decompose(rs.graph, rs.involution);
        HorizontalElimination he = eliminate_horizontal(d3);
        HyperellipticDecomposition d4 = decompose(he.graph, he.involution);
        CHECK(d4.edges_f.empty());
        CHECK(d4.edges_a.empty());
        CHECK(d4.edges_b.empty());
        CHECK(d4.horizontal.empty());
        CHECK(betti_genus(quotient(he.involution).quotient).is_tree);
    }
}

TEST_CASE("decomposition serializes the seven classes") {
    MultiGraph c4 = MultiGraph::simple(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    Involution refl;
    refl.graph = c4;
    refl.vertex_perm = {{0, 0}, {1, 3}, {2, 2}, {3, 1}};
    refl.edge_perm = {{0, 3}, {3, 0}, {1, 2}, {2, 1}};
    std::string j = decompose(c4, refl).to_json();
    CHECK(j.find("\"T_A\"") != std::string::npos);
    CHECK(j.find("\"E_F\"") != std::string::npos);
}
