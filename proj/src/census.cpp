#include "mgraph/census.hpp"

#include <bit>

#include "mgraph/morphisms.hpp"
#include "mgraph/rotation.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mgraph {

namespace {

bool mask_connected(int n, const std::vector<std::pair<int, int>>& pairs, std::uint32_t mask) {
    std::uint32_t adj[8] = {0};
    for (size_t k = 0; k < pairs.size(); ++k) {
        if (mask & (1u << k)) {
            adj[pairs[k].first] |= 1u << pairs[k].second;
            adj[pairs[k].second] |= 1u << pairs[k].first;
        }
    }
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint32_t next = 0;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= adj[v] & ~seen;
            seen |= adj[v];
        }
        frontier = next;
    }
    return seen == (n >= 32 ? ~0u : (1u << n) - 1);
}

void census_mask(int n, const std::vector<std::pair<int, int>>& pairs, std::uint32_t mask,
                 CensusResult& r) {
    if (!mask_connected(n, pairs, mask)) return;
    std::vector<std::pair<int, int>> ends;
    for (size_t k = 0; k < pairs.size(); ++k)
        if (mask & (1u << k)) ends.push_back(pairs[k]);
    MultiGraph g = MultiGraph::simple(n, ends);
    r.connected_graphs++;

    InvolutionSearch search = enumerate_mixing_involutions(g, 500'000);
    int tree_witnesses = 0;
    for (const Involution& inv : search.found) {
        QuotientResult q = quotient(inv);
        if (betti_genus(q.quotient).is_tree) tree_witnesses++;
    }
    if (tree_witnesses > 0) {
        r.hyperelliptic++;
        if (!is_planar(g)) r.nonplanar_hyperelliptic++;
    }
    GenusReport gr = betti_genus(g);
    if (tree_witnesses > 1 && gr.betti >= 2 && find_bridges(g).empty())
        r.uniqueness_violations++;
}

CensusResult census_run(int max_n, bool parallel) {
    CensusResult total;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
        std::int64_t masks = std::int64_t{1} << pairs.size();
        if (parallel) {
            CensusResult local;
#ifdef _OPENMP
#pragma omp parallel
#endif
            {
                CensusResult mine;
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 1024)
#endif
                for (std::int64_t mask = 0; mask < masks; ++mask)
                    census_mask(n, pairs, static_cast<std::uint32_t>(mask), mine);
#ifdef _OPENMP
#pragma omp critical
#endif
                {
                    local.connected_graphs += mine.connected_graphs;
                    local.hyperelliptic += mine.hyperelliptic;
                    local.nonplanar_hyperelliptic += mine.nonplanar_hyperelliptic;
                    local.uniqueness_violations += mine.uniqueness_violations;
                }
            }
            total.connected_graphs += local.connected_graphs;
            total.hyperelliptic += local.hyperelliptic;
            total.nonplanar_hyperelliptic += local.nonplanar_hyperelliptic;
            total.uniqueness_violations += local.uniqueness_violations;
        } else {
            for (std::int64_t mask = 0; mask < masks; ++mask)
                census_mask(n, pairs, static_cast<std::uint32_t>(mask), total);
        }
    }
    return total;
}

}  // namespace

CensusResult census_hyperelliptic_planarity(int max_n) { return census_run(max_n, true); }

CensusResult census_hyperelliptic_planarity_serial(int max_n) { return census_run(max_n, false); }

}  // namespace mgraph
