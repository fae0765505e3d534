#ifndef MGRAPH_CENSUS_HPP
#define MGRAPH_CENSUS_HPP

#include <cstdint>

#include "mgraph/multigraph.hpp"

namespace mgraph {

struct CensusResult {
    std::int64_t connected_graphs = 0;
    std::int64_t hyperelliptic = 0;
    std::int64_t nonplanar_hyperelliptic = 0;     // criterion: must stay zero
    std::int64_t uniqueness_violations = 0;       // 2-edge-connected, betti >= 2, > 1 witness
};

// Sweeps every labeled connected simple graph on up to max_n vertices,
// running the real detection and planarity routines. OpenMP-parallel over
// edge masks; the serial variant is the reference.
CensusResult census_hyperelliptic_planarity(int max_n);
CensusResult census_hyperelliptic_planarity_serial(int max_n);

}  // namespace mgraph

#endif
