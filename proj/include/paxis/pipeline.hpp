#pragma once

#include <vector>

#include "paxis/axial.hpp"
#include "paxis/graph.hpp"
#include "paxis/invariants.hpp"

namespace paxis {

/// Everything computed for one n.
struct PipelineResult {
    PartitionGraph graph;
    AxialGeometry geometry;
    std::vector<InvariantProfile> profiles;  // deg, omega_loc, dim_loc
    double seconds = 0.0;

    int n() const noexcept { return graph.n(); }
    const InvariantProfile& profile(Invariant id) const;
};

PipelineResult run_pipeline(int n, unsigned threads = 1);

/// One pipeline per n in [n_min, n_max], ordered by n regardless of scheduling.
std::vector<PipelineResult> run_pipelines(int n_min, int n_max, unsigned threads = 1);

}  // namespace paxis
