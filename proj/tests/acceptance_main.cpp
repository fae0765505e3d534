// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "mgraph/bounds.hpp"
#include "mgraph/catalog.hpp"
#include "mgraph/census.hpp"
#include "mgraph/drawing.hpp"
#include "mgraph/embedder.hpp"
#include "mgraph/morphisms.hpp"
#include "mgraph/rotation.hpp"

using namespace mgraph;

namespace {

int failures = 0;

template <typename F>
void criterion(int number, const std::string& label, F&& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        detail = body();
        ok = true;
    } catch (const std::exception& e) {
        detail = e.what();
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %2d [%6.2fs] %s%s%s\n", ok ? "PASS" : "FAIL", number, dt,
                label.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

struct Fail : std::runtime_error {
    explicit Fail(const std::string& w) : std::runtime_error(w) {}
};

void require(bool cond, const std::string& what) {
    if (!cond) throw Fail(what);
}

std::string fixtures_dir = "fixtures";

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--fixtures") fixtures_dir = argv[i + 1];

    criterion(1, "hyperelliptic implies planar, constructively (500 seeded outputs)", [] {
        int pairs_total = 0;
        for (int seed = 1; seed <= 500; ++seed) {
            GeneratedGraph gen = random_hyperelliptic(seed, 12);
            Drawing d = embed_hyperelliptic(gen.graph, gen.involution);
            VerifyReport rep = verify_drawing(d);  // (a) crossing checks
            require(rep.embedding.orientable_genus == 0, "genus nonzero at seed " + std::to_string(seed));
            require(d.symmetry, "symmetry flag missing");
            for (int v : d.graph.vertices()) {  // (c) exact mirror symmetry
                int w = gen.involution.vertex_perm.at(v);
                require(d.points.at(w) == mirror_x(d.points.at(v)),
                        "mirror symmetry broken at seed " + std::to_string(seed));
            }
            // (d) a certificate for every exchanged pair
            for (int v : d.graph.vertices()) {
                int w = gen.involution.vertex_perm.at(v);
                if (v >= w) continue;
                bool have = false;
                for (const FaceCertificate& c : d.certificates) {
                    bool hv = false, hw = false;
                    for (int x : c.vertices) {
                        hv |= (x == v);
                        hw |= (x == w);
                    }
                    if (hv && hw) have = true;
                }
                require(have, "missing pair certificate at seed " + std::to_string(seed));
                ++pairs_total;
            }
        }
        return "500 drawings verified, " + std::to_string(pairs_total) + " pair certificates";
    });

    criterion(2, "bielliptic implies toroidal (200 seeded outputs; K33 exactly genus 1)", [] {
        int torus = 0, plane = 0;
        for (int seed = 1; seed <= 200; ++seed) {
            GeneratedGraph gen = random_bielliptic(seed, 10);
            Drawing d = embed_bielliptic(gen.graph, gen.involution);
            VerifyReport rep = verify_drawing(d);
            require(rep.embedding.orientable_genus <= 1,
                    "genus above one at seed " + std::to_string(seed));
            (d.surface == Surface::TorusSquare ? torus : plane)++;
        }
        MultiGraph k33 = catalog("complete_bipartite", {3, 3}).graph;
        require(rotation_system_count(k33) == 64, "K33 rotation count");
        DetectionResult bi = detect_bielliptic(k33);
        require(bi.verdict, "K33 not detected bielliptic");
        Drawing d = embed_bielliptic(k33, *bi.witness);
        VerifyReport rep = verify_drawing(d);
        require(rep.embedding.orientable_genus == 1, "K33 drawing genus");
        require(minimum_genus(k33) == 1, "K33 brute-force genus");
        return std::to_string(torus) + " torus + " + std::to_string(plane) + " plane drawings";
    });

    criterion(3, "genus formula for K_{3,3}, K_{3,4}, K_{4,4} by exhaustive search", [] {
        std::ostringstream os;
        for (auto [d, n] : std::vector<std::pair<int, int>>{{3, 3}, {3, 4}, {4, 4}}) {
            int expect = ((d - 2) * (n - 2) + 3) / 4;
            int got = minimum_genus(catalog("complete_bipartite", {d, n}).graph, 2'000'000);
            require(got == expect, "K_{" + std::to_string(d) + "," + std::to_string(n) + "} genus " +
                                       std::to_string(got) + " != " + std::to_string(expect));
            os << "K" << d << n << "=" << got << " ";
        }
        return os.str();
    });

    criterion(4, "K5: a quotient of betti exactly two, and minimum genus one", [] {
        MultiGraph k5 = catalog("complete", {5}).graph;
        InvolutionSearch s = enumerate_mixing_involutions(k5);
        require(!s.truncated, "K5 search truncated");
        bool betti2 = false;
        for (const Involution& inv : s.found)
            if (betti_genus(quotient(inv).quotient).betti == 2) betti2 = true;
        require(betti2, "no betti-2 quotient found");
        require(rotation_system_count(k5) == 7776, "K5 rotation count");
        require(minimum_genus(k5) == 1, "K5 genus");
        return "betti-2 witness found; genus 1 over 7776 systems";
    });

    criterion(5, "treewidth/gonality sandwich on grids and K_{d,n}", [] {
        for (int d : {3, 4}) {
            for (int n = d; n <= 6; ++n) {
                CatalogEntry entry = catalog("grid", {d, n});
                require(treewidth_exact(entry.graph).value() == d,
                        "grid treewidth " + std::to_string(d) + "x" + std::to_string(n));
                auto ws = gonality_witnesses(entry.graph, entry.family);
                bool deg_d = false;
                for (auto& w : ws)
                    if (w.degree == d && betti_genus(w.morphism.target).is_tree) deg_d = true;
                require(deg_d, "no degree-d grid witness");
            }
        }
        for (auto [d, n] : std::vector<std::pair<int, int>>{{3, 3}, {3, 4}, {4, 4}})
            require(treewidth_exact(catalog("complete_bipartite", {d, n}).graph).value() == d,
                    "K_{d,n} treewidth");
        return "treewidth d and degree-d witnesses for d in {3,4}";
    });

    criterion(6, "grid spectra match the closed form within 1e-9", [] {
        for (int d = 2; d <= 4; ++d)
            for (int n = 2; n <= 6; ++n) {
                auto numeric = laplacian_spectrum(catalog("grid", {d, n}).graph);
                auto closed = grid_spectrum_closed_form(d, n);
                require(numeric.size() == closed.size(), "spectrum size");
                for (size_t i = 0; i < numeric.size(); ++i)
                    require(std::abs(numeric[i] - closed[i]) < 1e-9,
                            "mismatch at grid " + std::to_string(d) + "x" + std::to_string(n));
            }
        return "d in 2..4, n in 2..6";
    });

    criterion(7, "spectral bound decreases along grid(3,n), n in {4,8,16,32}", [] {
        double prev = 1e18;
        std::ostringstream os;
        for (int n : {4, 8, 16, 32}) {
            double b =
                spectral_lower_bound(catalog("grid", {3, n}).graph, default_spectral_formula());
            require(b < prev, "bound not decreasing at n=" + std::to_string(n));
            os.precision(3);
            os << b << " ";
            prev = b;
        }
        return "bounds: " + os.str();
    });

    criterion(8, "second proof cross-check: generator corpus is series-parallel", [] {
        for (int seed = 1; seed <= 500; ++seed) {
            GeneratedGraph gen = random_hyperelliptic(seed, 12);
            require(series_parallel_check(gen.graph),
                    "not series-parallel at seed " + std::to_string(seed));
        }
        return "500 graphs, treewidth at most two";
    });

    criterion(9, "census: every hyperelliptic simple graph on <= 7 vertices is planar", [] {
        CensusResult r = census_hyperelliptic_planarity(7);
        require(r.nonplanar_hyperelliptic == 0,
                std::to_string(r.nonplanar_hyperelliptic) + " counterexamples");
        require(r.uniqueness_violations == 0,
                std::to_string(r.uniqueness_violations) + " uniqueness violations");
        return std::to_string(r.connected_graphs) + " connected graphs, " +
               std::to_string(r.hyperelliptic) + " hyperelliptic, 0 counterexamples";
    });

    criterion(10, "dual-graph fixtures: planarity matches, asymmetric support rejected", [] {
        struct Expect {
            const char* file;
            bool planar;
        };
        std::vector<Expect> table = {{"single.hecke", true},
                                     {"matching3.hecke", true},
                                     {"cycle10.hecke", true},
                                     {"chain4.hecke", true},
                                     {"k33.hecke", false}};
        for (auto& t : table) {
            std::ifstream in(fixtures_dir + "/" + t.file);
            require(in.good(), std::string("missing fixture ") + t.file);
            HeckePattern h = read_hecke(in);
            MultiGraph g = reduced_dual_graph(h);
            require(is_planar(g) == t.planar, std::string("planarity mismatch for ") + t.file);
        }
        std::ifstream bad(fixtures_dir + "/asymmetric.hecke");
        require(bad.good(), "missing fixture asymmetric.hecke");
        bool rejected = false;
        try {
            read_hecke(bad);
        } catch (const error&) {
            rejected = true;
        }
        require(rejected, "asymmetric fixture accepted");
        return "5 fixtures checked, asymmetric input rejected";
    });

    if (failures) {
        std::printf("%d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
