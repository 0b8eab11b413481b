#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "paxis/partition.hpp"

namespace paxis {

/// Position of a partition in the canonical enumeration order.
using VertexId = std::uint32_t;

/// Graph distance; kUnreachable marks vertices no source can reach.
using Distance = std::int32_t;
inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

/**
 * The partition graph on all partitions of n: vertices in canonical
 * order, edges given by elementary transfers, plus the conjugation map
 * as a permutation of vertex ids. Immutable once built.
 */
class PartitionGraph {
public:
    /// Throws std::invalid_argument for n < 1.
    static PartitionGraph build(int n);

    int n() const noexcept { return n_; }
    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    const std::vector<Partition>& vertices() const noexcept { return vertices_; }
    const Partition& vertex(VertexId v) const { return vertices_.at(v); }

    /// Sorted ascending.
    std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v); }
    std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }
    bool adjacent(VertexId u, VertexId v) const;

    VertexId conj(VertexId v) const { return conj_.at(v); }
    const std::vector<VertexId>& conj_map() const noexcept { return conj_; }

    std::optional<VertexId> find(const Partition& lambda) const;

private:
    int n_ = 0;
    std::vector<Partition> vertices_;
    std::vector<std::vector<VertexId>> adjacency_;
    std::vector<VertexId> conj_;
    std::size_t edge_count_ = 0;
};

inline std::size_t degree(const PartitionGraph& g, VertexId v) { return g.degree(v); }

/**
 * Multi-source BFS. Entry v is the minimum graph distance from v to any
 * source, 0 on sources, kUnreachable if no source reaches v (in particular
 * everywhere when sources is empty).
 */
std::vector<Distance> bfs_distances(const PartitionGraph& g, std::span<const VertexId> sources);

}  // namespace paxis
