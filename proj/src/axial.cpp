#include "paxis/axial.hpp"

#include <algorithm>
#include <cassert>
#include <iterator>
#include <string>
#include <tuple>

namespace paxis {

AxislessError::AxislessError(int n)
    : std::domain_error("n = " + std::to_string(n) + " is axisless; axial quantities are undefined"),
      n_(n) {}

bool AxialGeometry::on_axis(VertexId v) const {
    return std::binary_search(axis.begin(), axis.end(), v);
}

bool AxialGeometry::on_spine(VertexId v) const {
    return std::binary_search(spine.begin(), spine.end(), v);
}

std::vector<VertexId> compute_axis(const PartitionGraph& g) {
    std::vector<VertexId> axis;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.conj(v) == v) axis.push_back(v);
    }
    return axis;
}

std::vector<AxialPair> interaction_graph(const PartitionGraph& g, std::span<const VertexId> axis) {
    std::vector<AxialPair> pairs;
    for (std::size_t i = 0; i < axis.size(); ++i) {
        for (std::size_t j = i + 1; j < axis.size(); ++j) {
            auto a = g.neighbors(axis[i]);
            auto b = g.neighbors(axis[j]);
            AxialPair pair{std::min(axis[i], axis[j]), std::max(axis[i], axis[j]), {}};
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(pair.mediators));
            if (pair.mediators.empty()) continue;
            // Axial vertices are never adjacent, so a common neighbour is never axial.
            assert(std::none_of(pair.mediators.begin(), pair.mediators.end(),
                                [&](VertexId m) { return g.conj(m) == m; }));
            pairs.push_back(std::move(pair));
        }
    }
    std::sort(pairs.begin(), pairs.end(), [](const AxialPair& x, const AxialPair& y) {
        return std::tie(x.alpha, x.beta) < std::tie(y.alpha, y.beta);
    });
    return pairs;
}

std::vector<VertexId> compute_spine(std::span<const VertexId> axis, std::span<const AxialPair> pairs) {
    std::vector<VertexId> spine(axis.begin(), axis.end());
    for (const auto& pair : pairs) {
        spine.insert(spine.end(), pair.mediators.begin(), pair.mediators.end());
    }
    std::sort(spine.begin(), spine.end());
    spine.erase(std::unique(spine.begin(), spine.end()), spine.end());
    return spine;
}

std::vector<std::size_t> shells_of(std::span<const Distance> dist) {
    std::vector<std::size_t> shells;
    for (Distance d : dist) {
        if (d == kUnreachable) continue;
        auto k = static_cast<std::size_t>(d);
        if (k >= shells.size()) shells.resize(k + 1, 0);
        ++shells[k];
    }
    return shells;
}

AxialGeometry compute_geometry(const PartitionGraph& g) {
    AxialGeometry geom;
    geom.n = g.n();
    geom.axis = compute_axis(g);
    geom.pairs = interaction_graph(g, geom.axis);
    geom.spine = compute_spine(geom.axis, geom.pairs);
    geom.ax_dist = bfs_distances(g, geom.axis);
    geom.sp_dist = bfs_distances(g, geom.spine);
    geom.ax_shells = shells_of(geom.ax_dist);
    geom.sp_shells = shells_of(geom.sp_dist);
    return geom;
}

namespace {

std::vector<VertexId> ball(const AxialGeometry& geom, const std::vector<Distance>& dist, int r) {
    if (!geom.axial()) throw AxislessError(geom.n);
    if (r < 0) throw std::invalid_argument("radius must be nonnegative");
    std::vector<VertexId> out;
    for (VertexId v = 0; v < dist.size(); ++v) {
        if (dist[v] <= r) out.push_back(v);
    }
    return out;
}

}  // namespace

std::vector<VertexId> central_region(const AxialGeometry& geom, int r) {
    return ball(geom, geom.ax_dist, r);
}

std::vector<VertexId> thick_spine(const AxialGeometry& geom, int r) {
    return ball(geom, geom.sp_dist, r);
}

ShellCounts shell_counts(const AxialGeometry& geom) {
    if (!geom.axial()) throw AxislessError(geom.n);
    return {geom.ax_shells, geom.sp_shells};
}

}  // namespace paxis
