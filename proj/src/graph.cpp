#include "paxis/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace paxis {

PartitionGraph PartitionGraph::build(int n) {
    PartitionGraph g;
    g.n_ = n;
    g.vertices_ = enumerate_partitions(n);

    const std::size_t count = g.vertices_.size();
    g.adjacency_.resize(count);
    g.conj_.resize(count);
    for (std::size_t v = 0; v < count; ++v) {
        for (const auto& mu : transfer_neighbors(g.vertices_[v])) {
            g.adjacency_[v].push_back(*g.find(mu));
        }
        std::sort(g.adjacency_[v].begin(), g.adjacency_[v].end());
        g.edge_count_ += g.adjacency_[v].size();
        g.conj_[v] = *g.find(conjugate(g.vertices_[v]));
    }
    g.edge_count_ /= 2;
    return g;
}

std::optional<VertexId> PartitionGraph::find(const Partition& lambda) const {
    // vertices_ is sorted in descending order.
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), lambda, std::greater<>());
    if (it == vertices_.end() || *it != lambda) return std::nullopt;
    return static_cast<VertexId>(it - vertices_.begin());
}

bool PartitionGraph::adjacent(VertexId u, VertexId v) const {
    const auto& nbrs = adjacency_.at(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Distance> bfs_distances(const PartitionGraph& g, std::span<const VertexId> sources) {
    std::vector<Distance> dist(g.vertex_count(), kUnreachable);
    std::deque<VertexId> frontier;
    for (VertexId s : sources) {
        if (s >= g.vertex_count()) {
            throw std::out_of_range("bfs_distances: source vertex out of range");
        }
        if (dist[s] != 0) {
            dist[s] = 0;
            frontier.push_back(s);
        }
    }
    while (!frontier.empty()) {
        VertexId u = frontier.front();
        frontier.pop_front();
        for (VertexId w : g.neighbors(u)) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[u] + 1;
                frontier.push_back(w);
            }
        }
    }
    return dist;
}

}  // namespace paxis
