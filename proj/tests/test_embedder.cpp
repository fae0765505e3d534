#include "doctest.h"
#include "mgraph/bounds.hpp"
#include "mgraph/catalog.hpp"
#include "mgraph/embedder.hpp"

#include <random>

using namespace mgraph;

namespace {

void check_symmetric_plane(const Drawing& d, const Involution& iota) {
    REQUIRE(d.surface == Surface::Plane);
    REQUIRE(d.symmetry);
    VerifyReport rep = verify_drawing(d);
    CHECK(rep.embedding.orientable_genus == 0);
    for (int v : d.graph.vertices()) {
        int w = iota.vertex_perm.at(v);
        CHECK(d.points.at(w) == mirror_x(d.points.at(v)));
    }
    // a certificate for every exchanged pair
    for (int v : d.graph.vertices()) {
        int w = iota.vertex_perm.at(v);
        if (v >= w) continue;
        bool have = false;
        for (const FaceCertificate& c : d.certificates) {
            bool has_v = false, has_w = false;
            for (int x : c.vertices) {
                if (x == v) has_v = true;
                if (x == w) has_w = true;
            }
            if (has_v && has_w) have = true;
        }
        CHECK(have);
    }
}

// the drawing restricted to x <= 0 is the quotient: one vertex per orbit and
// one edge per orbit, so counting objects on the closed left half suffices
void check_quotient_readability(const Drawing& d, const Involution& iota) {
    QuotientResult q = quotient(iota);
    int left_vertices = 0;
    for (auto& [v, p] : d.points)
        if (p.x <= 0) ++left_vertices;
    CHECK(left_vertices == q.quotient.vertex_count());
    int left_edges = 0;
    for (auto& [e, path] : d.paths) {
        bool left = true;
        for (auto& piece : path.pieces)
            for (auto& p : piece)
                if (p.x > 0) left = false;
        if (left) ++left_edges;
    }
    // orbits of size two contribute exactly one fully-left edge; fixed edges
    // were subdivided internally and rebuilt, crossing the axis
    int expected = 0;
    for (const Edge& e : d.graph.edges())
        if (iota.edge_perm.at(e.id) != e.id && e.id < iota.edge_perm.at(e.id)) ++expected;
    CHECK(left_edges == expected);
}

}  // namespace

TEST_CASE("banana graph embeds symmetrically with the pair outside") {
    MultiGraph b4 = catalog("banana", {4}).graph;
    Involution inv;
    inv.graph = b4;
    inv.vertex_perm = {{0, 1}, {1, 0}};
    for (const Edge& e : b4.edges()) inv.edge_perm[e.id] = e.id;
    Drawing d = embed_hyperelliptic(b4, inv);
    check_symmetric_plane(d, inv);
    VerifyReport rep = verify_drawing(d);
    // both vertices lie on the unbounded face
    bool v0 = false, v1 = false;
    for (Dart dart : rep.embedding.faces[rep.outer_face]) {
        if (rep.rotation.dart_origin(dart) == 0) v0 = true;
        if (rep.rotation.dart_origin(dart) == 1) v1 = true;
    }
    CHECK(v0);
    CHECK(v1);
}

TEST_CASE("C4 with the reflection embeds as a symmetric square") {
    MultiGraph c4 = MultiGraph::simple(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    Involution refl;
    refl.graph = c4;
    refl.vertex_perm = {{0, 0}, {1, 3}, {2, 2}, {3, 1}};
    refl.edge_perm = {{0, 3}, {3, 0}, {1, 2}, {2, 1}};
    Drawing d = embed_hyperelliptic(c4, refl);
    check_symmetric_plane(d, refl);
    check_quotient_readability(d, refl);
}

TEST_CASE("hyperelliptic generator corpus embeds with full certificates") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 120; ++trial) {
        GeneratedGraph gen = random_hyperelliptic(rng(), 10);
        Drawing d = embed_hyperelliptic(gen.graph, gen.involution);
        check_symmetric_plane(d, gen.involution);
        check_quotient_readability(d, gen.involution);
    }
}

TEST_CASE("doubled trees (identity involution with paired edges) embed") {
    // doubled star: fixed vertices only
    MultiGraph g(std::vector<int>{0, 1, 2, 3},
                 {Edge{0, 0, 1}, Edge{1, 0, 1}, Edge{2, 0, 2}, Edge{3, 0, 2},
                  Edge{4, 0, 3}, Edge{5, 0, 3}});
    Involution inv;
    inv.graph = g;
    for (int v : g.vertices()) inv.vertex_perm[v] = v;
    inv.edge_perm = {{0, 1}, {1, 0}, {2, 3}, {3, 2}, {4, 5}, {5, 4}};
    CHECK(is_mixing(inv));
    Drawing d = embed_hyperelliptic(g, inv);
    VerifyReport rep = verify_drawing(d);
    CHECK(rep.embedding.orientable_genus == 0);
}

TEST_CASE("two-pair embedding puts both orbits on one face") {
    // C6 with the reflection exchanging two pairs
    MultiGraph c6 = MultiGraph::simple(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
    Involution refl;
    refl.graph = c6;
    refl.vertex_perm = {{0, 0}, {1, 5}, {5, 1}, {2, 4}, {4, 2}, {3, 3}};
    refl.edge_perm = {{0, 5}, {5, 0}, {1, 4}, {4, 1}, {2, 3}, {3, 2}};
    refl.validate();
    Drawing d = embed_with_two_pairs(c6, refl, {1, 5}, {2, 4});
    VerifyReport rep = verify_drawing(d);
    REQUIRE(!d.certificates.empty());
    const FaceCertificate& c = d.certificates.front();
    CHECK(c.vertices.size() == 4);
    CHECK(c.face == rep.outer_face);

    // fixed vertex plus a pair
    Drawing d2 = embed_with_two_pairs(c6, refl, {0}, {2, 4});
    REQUIRE(!d2.certificates.empty());
    CHECK(d2.certificates.front().vertices.size() == 3);

    // set1 == set2 reduces to the plain embedding
    Drawing d3 = embed_with_two_pairs(c6, refl, {1, 5}, {1, 5});
    check_symmetric_plane(d3, refl);
}

TEST_CASE("two-pair corpus") {
    std::mt19937_64 rng(71);
    int done = 0;
    for (int trial = 0; trial < 200 && done < 60; ++trial) {
        GeneratedGraph gen = random_hyperelliptic(rng(), 8);
        // collect the exchanged pairs and fixed vertices
        std::vector<std::vector<int>> orbits;
        for (int v : gen.graph.vertices()) {
            int w = gen.involution.vertex_perm.at(v);
            if (v < w) orbits.push_back({v, w});
        }
        if (orbits.size() < 2) continue;
        std::vector<int> set1 = orbits[rng() % orbits.size()];
        std::vector<int> set2 = orbits[rng() % orbits.size()];
        Drawing d = embed_with_two_pairs(gen.graph, gen.involution, set1, set2);
        VerifyReport rep = verify_drawing(d);
        const FaceCertificate& c = d.certificates.front();
        for (int v : set1) CHECK(std::count(c.vertices.begin(), c.vertices.end(), v) == 1);
        ++done;
    }
    CHECK(done > 0);
}

TEST_CASE("K33 embeds on the torus with genus exactly one") {
    MultiGraph k33 = catalog("complete_bipartite", {3, 3}).graph;
    DetectionResult bi = detect_bielliptic(k33);
    REQUIRE(bi.verdict);
    Drawing d = embed_bielliptic(k33, *bi.witness);
    VerifyReport rep = verify_drawing(d);
    CHECK(d.surface == Surface::TorusSquare);
    CHECK(rep.embedding.orientable_genus == 1);
    CHECK(minimum_genus(k33) == 1);
}

TEST_CASE("small bielliptic graphs take the planar shortcut") {
    MultiGraph c4 = MultiGraph::simple(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    DetectionResult bi = detect_bielliptic(c4);
    REQUIRE(bi.verdict);
    Drawing d = embed_bielliptic(c4, *bi.witness);
    CHECK(d.surface == Surface::Plane);
    CHECK(verify_drawing(d).embedding.orientable_genus == 0);
}

TEST_CASE("bielliptic generator corpus embeds with genus at most one") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 60; ++trial) {
        GeneratedGraph gen = random_bielliptic(rng(), 8);
        Drawing d = embed_bielliptic(gen.graph, gen.involution);
        VerifyReport rep = verify_drawing(d);
        CHECK(rep.embedding.orientable_genus <= 1);
    }
}

TEST_CASE("hyperelliptic graphs pass the series-parallel cross-check") {
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 100; ++trial) {
        GeneratedGraph gen = random_hyperelliptic(rng(), 10);
        CHECK(series_parallel_check(gen.graph));
    }
}

TEST_CASE("invalid witness is rejected") {
    MultiGraph k33 = catalog("complete_bipartite", {3, 3}).graph;
    DetectionResult bi = detect_bielliptic(k33);
    REQUIRE(bi.verdict);
    CHECK_THROWS_AS(embed_hyperelliptic(k33, *bi.witness), error);
    MultiGraph c4 = MultiGraph::simple(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    Involution refl;
    refl.graph = c4;
    refl.vertex_perm = {{0, 0}, {1, 3}, {2, 2}, {3, 1}};
    refl.edge_perm = {{0, 3}, {3, 0}, {1, 2}, {2, 1}};
    CHECK_THROWS_AS(embed_bielliptic(c4, refl), error);
}
