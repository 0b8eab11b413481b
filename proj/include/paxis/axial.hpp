#pragma once

#include <stdexcept>
#include <vector>

#include "paxis/graph.hpp"

namespace paxis {

/// Raised when an axis-dependent quantity is requested for an axisless n.
class AxislessError : public std::domain_error {
public:
    explicit AxislessError(int n);
    int n() const noexcept { return n_; }

private:
    int n_;
};

/// Two distinct axial vertices with a common neighbour; alpha < beta.
struct AxialPair {
    VertexId alpha = 0;
    VertexId beta = 0;
    std::vector<VertexId> mediators;  // sorted, nonempty
};

/**
 * The conjugation-symmetric core of G_n.
 *
 * axis: fixed points of conjugation. pairs: edges of the axial interaction
 * graph with their mediator sets. spine: axis plus every mediator.
 * ax_dist / sp_dist: BFS distance to the axis / spine, all kUnreachable when
 * the axis is empty. ax_shells[k] / sp_shells[k]: vertices at exact distance
 * k, empty when the axis is empty.
 */
struct AxialGeometry {
    int n = 0;
    std::vector<VertexId> axis;
    std::vector<AxialPair> pairs;
    std::vector<VertexId> spine;
    std::vector<Distance> ax_dist;
    std::vector<Distance> sp_dist;
    std::vector<std::size_t> ax_shells;
    std::vector<std::size_t> sp_shells;

    bool axial() const noexcept { return !axis.empty(); }
    bool on_axis(VertexId v) const;
    bool on_spine(VertexId v) const;
};

std::vector<VertexId> compute_axis(const PartitionGraph& g);

/// Pairs in ascending (alpha, beta) order; only pairs with a nonempty mediator set.
std::vector<AxialPair> interaction_graph(const PartitionGraph& g, std::span<const VertexId> axis);

std::vector<VertexId> compute_spine(std::span<const VertexId> axis, std::span<const AxialPair> pairs);

AxialGeometry compute_geometry(const PartitionGraph& g);

/// C_n^(r): vertices at axial distance <= r. Throws AxislessError.
std::vector<VertexId> central_region(const AxialGeometry& geom, int r);

/// Sp_n^(r): vertices at distance <= r from the thin spine. Throws AxislessError.
std::vector<VertexId> thick_spine(const AxialGeometry& geom, int r);

struct ShellCounts {
    std::vector<std::size_t> ax;
    std::vector<std::size_t> sp;
};

/// Throws AxislessError.
ShellCounts shell_counts(const AxialGeometry& geom);

/// Shell histogram of a distance array, indexed 0..max finite distance.
std::vector<std::size_t> shells_of(std::span<const Distance> dist);

}  // namespace paxis
