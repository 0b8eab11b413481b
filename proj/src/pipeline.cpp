#include "paxis/pipeline.hpp"

#include <chrono>
#include <optional>
#include <stdexcept>

#include "paxis/parallel.hpp"

namespace paxis {

const InvariantProfile& PipelineResult::profile(Invariant id) const {
    for (const auto& p : profiles) {
        if (p.id == id) return p;
    }
    throw std::out_of_range("profile not computed");
}

PipelineResult run_pipeline(int n, unsigned threads) {
    auto start = std::chrono::steady_clock::now();
    PipelineResult result;
    result.graph = PartitionGraph::build(n);
    result.geometry = compute_geometry(result.graph);
    result.profiles = all_profiles(result.graph, result.geometry, threads);
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::vector<PipelineResult> run_pipelines(int n_min, int n_max, unsigned threads) {
    if (n_min < 1 || n_max < n_min) {
        throw std::invalid_argument("invalid range: need 1 <= n_min <= n_max");
    }
    const auto count = static_cast<std::size_t>(n_max - n_min + 1);
    std::vector<std::optional<PipelineResult>> slots(count);
    parallel_for(count, threads, [&](std::size_t i) {
        slots[i] = run_pipeline(n_min + static_cast<int>(i));
    });
    std::vector<PipelineResult> out;
    out.reserve(count);
    for (auto& slot : slots) out.push_back(std::move(*slot));
    return out;
}

}  // namespace paxis
