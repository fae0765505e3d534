#ifndef MGRAPH_BOUNDS_HPP
#define MGRAPH_BOUNDS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mgraph/morphisms.hpp"
#include "mgraph/multigraph.hpp"

namespace mgraph {

struct TreewidthResult {
    int lower = 0;
    int upper = -1;
    bool exact = false;
    int value() const {
        if (!exact) throw error("treewidth not resolved exactly within budget");
        return lower;
    }
};

// Exact treewidth by memoized elimination search (parallel edges and loops
// are irrelevant and dropped). Budget caps visited elimination states; an
// exceeded budget yields certified lower/upper bounds, never a wrong value.
TreewidthResult treewidth_exact(const MultiGraph& g, std::int64_t budget = 20'000'000);

// Partial 2-tree recognition by repeated degree-<=2 reduction.
bool series_parallel_check(const MultiGraph& g);

struct GonalityWitness {
    int degree = 0;
    GraphMorphism morphism;
    std::string description;
};

enum class FamilyHint { None, Grid, CompleteBipartite, Hypercube };

struct FamilyInfo {
    FamilyHint hint = FamilyHint::None;
    int d = 0, n = 0;
};

// Verified harmonic morphisms to trees: degree-2 quotients of hyperelliptic
// witnesses, the grid column collapse, the K_{d,n} side collapse, hypercube
// quotient chains, and single-vertex collapse maps found by search.
std::vector<GonalityWitness> gonality_witnesses(const MultiGraph& g,
                                                const FamilyInfo& family = {});

// Eigenvalues of the combinatorial Laplacian, ascending (parallel edges count
// with multiplicity, loops ignored).
std::vector<double> laplacian_spectrum(const MultiGraph& g);

// Closed-form d x n grid Laplacian spectrum, ascending.
std::vector<double> grid_spectrum_closed_form(int d, int n);

// Spectral lower bound on stable gonality. The formula is a plugin: the
// default transcribes the cited spectral bound lambda_1*|V|/(lambda_1+4(D+1)).
using SpectralFormula = std::function<double(const MultiGraph&, const std::vector<double>&)>;

SpectralFormula default_spectral_formula();
double spectral_lower_bound(const MultiGraph& g, const SpectralFormula& formula);

struct BoundsReport {
    TreewidthResult treewidth;
    std::optional<GonalityWitness> best_witness;   // least-degree verified witness
    int gonality_lower = 0;
    std::string lower_source;                       // "treewidth" or "spectral"
    std::vector<double> spectrum;
    double spectral_bound = 0.0;
};

BoundsReport bounds_report(const MultiGraph& g, const FamilyInfo& family = {},
                           std::int64_t treewidth_budget = 20'000'000);

}  // namespace mgraph

#endif
