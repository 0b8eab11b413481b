#include "paxis/invariants.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include <boost/dynamic_bitset.hpp>

#include "paxis/parallel.hpp"

namespace paxis {

std::string_view invariant_name(Invariant id) {
    switch (id) {
        case Invariant::deg: return "deg";
        case Invariant::omega_loc: return "omega_loc";
        case Invariant::dim_loc: return "dim_loc";
    }
    return "?";
}

namespace {

using Bits = boost::dynamic_bitset<>;

// Maximum clique size of a small graph given as per-vertex bitset rows.
class MaxCliqueSearch {
public:
    explicit MaxCliqueSearch(std::vector<Bits> rows) : rows_(std::move(rows)) {}

    std::size_t run() {
        const std::size_t size = rows_.size();
        if (size == 0) return 0;
        Bits candidates(size);
        candidates.set();
        Bits excluded(size);
        expand(0, candidates, excluded);
        return best_;
    }

private:
    void expand(std::size_t depth, Bits candidates, Bits excluded) {
        best_ = std::max(best_, depth);
        if (candidates.none()) return;
        if (depth + candidates.count() <= best_) return;

        // Pivot on the vertex of P u X covering the most of P.
        Bits reach = candidates | excluded;
        std::size_t pivot = reach.find_first();
        std::size_t pivot_cover = 0;
        for (auto u = reach.find_first(); u != Bits::npos; u = reach.find_next(u)) {
            std::size_t cover = (candidates & rows_[u]).count();
            if (cover >= pivot_cover) {
                pivot_cover = cover;
                pivot = u;
            }
        }

        Bits branch = candidates - rows_[pivot];
        for (auto u = branch.find_first(); u != Bits::npos; u = branch.find_next(u)) {
            expand(depth + 1, candidates & rows_[u], excluded & rows_[u]);
            candidates.reset(u);
            excluded.set(u);
            if (depth + candidates.count() <= best_) return;
        }
    }

    std::vector<Bits> rows_;
    std::size_t best_ = 0;
};

}  // namespace

int local_clique_number(const PartitionGraph& g, VertexId v) {
    auto nbrs = g.neighbors(v);
    const std::size_t size = nbrs.size();
    std::vector<Bits> rows(size, Bits(size));
    for (std::size_t i = 0; i < size; ++i) {
        // Both lists are sorted, so a merge walk gives the local indices.
        auto outer = g.neighbors(nbrs[i]);
        std::size_t j = 0;
        for (VertexId w : outer) {
            while (j < size && nbrs[j] < w) ++j;
            if (j == size) break;
            if (nbrs[j] == w) rows[i].set(j);
        }
    }
    return 1 + static_cast<int>(MaxCliqueSearch(std::move(rows)).run());
}

int local_clique_number_oracle(const PartitionGraph& g, VertexId v) {
    auto nbrs = g.neighbors(v);
    const std::size_t size = nbrs.size();
    if (size > kOracleMaxDegree) {
        throw OracleInfeasible("oracle: degree " + std::to_string(size) + " exceeds bound " +
                               std::to_string(kOracleMaxDegree));
    }

    auto is_clique = [&](const std::vector<bool>& chosen) {
        for (std::size_t a = 0; a < size; ++a) {
            if (!chosen[a]) continue;
            for (std::size_t b = a + 1; b < size; ++b) {
                if (chosen[b] && !g.adjacent(nbrs[a], nbrs[b])) return false;
            }
        }
        return true;
    };

    // Cliques are closed under taking subsets, so the first size k with no
    // k-clique ends the search.
    std::size_t best = 0;
    for (std::size_t k = 1; k <= size; ++k) {
        std::vector<bool> chosen(size, false);
        std::fill(chosen.begin(), chosen.begin() + static_cast<std::ptrdiff_t>(k), true);
        bool found = false;
        do {
            found = is_clique(chosen);
        } while (!found && std::prev_permutation(chosen.begin(), chosen.end()));
        if (!found) break;
        best = k;
    }
    return 1 + static_cast<int>(best);
}

std::vector<int> local_clique_numbers(const PartitionGraph& g, unsigned threads) {
    std::vector<int> values(g.vertex_count(), 0);
    parallel_for(g.vertex_count(), threads, [&](std::size_t v) {
        values[v] = local_clique_number(g, static_cast<VertexId>(v));
    });
    return values;
}

InvariantProfile make_profile(Invariant id, std::vector<int> values, const AxialGeometry& geom) {
    InvariantProfile prof;
    prof.id = id;
    prof.values = std::move(values);
    if (prof.values.empty()) return prof;
    prof.max_value = *std::max_element(prof.values.begin(), prof.values.end());
    for (VertexId v = 0; v < prof.values.size(); ++v) {
        if (prof.values[v] == prof.max_value) prof.argmax.push_back(v);
    }
    if (!geom.axial()) return prof;

    prof.argmax_axis_count = static_cast<std::size_t>(
        std::count_if(prof.argmax.begin(), prof.argmax.end(), [&](VertexId v) { return geom.on_axis(v); }));

    // min{r : Argmax within the r-ball} is the largest distance over Argmax.
    auto enclosing_radius = [&](const std::vector<Distance>& dist) -> std::optional<int> {
        Distance radius = 0;
        for (VertexId v : prof.argmax) {
            if (dist[v] == kUnreachable) return std::nullopt;
            radius = std::max(radius, dist[v]);
        }
        return radius;
    };
    prof.rho_ax = enclosing_radius(geom.ax_dist);
    prof.rho_sp = enclosing_radius(geom.sp_dist);
    return prof;
}

namespace {

std::vector<int> degrees(const PartitionGraph& g) {
    std::vector<int> values(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) values[v] = static_cast<int>(g.degree(v));
    return values;
}

std::vector<int> shifted_down(std::vector<int> omega) {
    for (int& x : omega) --x;
    return omega;
}

}  // namespace

InvariantProfile profile(const PartitionGraph& g, const AxialGeometry& geom, Invariant id, unsigned threads) {
    switch (id) {
        case Invariant::deg:
            return make_profile(id, degrees(g), geom);
        case Invariant::omega_loc:
            return make_profile(id, local_clique_numbers(g, threads), geom);
        case Invariant::dim_loc:
            return make_profile(id, shifted_down(local_clique_numbers(g, threads)), geom);
    }
    throw std::invalid_argument("unknown invariant");
}

std::vector<InvariantProfile> all_profiles(const PartitionGraph& g, const AxialGeometry& geom, unsigned threads) {
    auto omega = local_clique_numbers(g, threads);
    std::vector<InvariantProfile> out;
    out.push_back(make_profile(Invariant::deg, degrees(g), geom));
    out.push_back(make_profile(Invariant::omega_loc, omega, geom));
    out.push_back(make_profile(Invariant::dim_loc, shifted_down(std::move(omega)), geom));
    return out;
}

bool argmax_symmetry_check(const InvariantProfile& prof, const PartitionGraph& g) {
    std::vector<VertexId> image;
    image.reserve(prof.argmax.size());
    for (VertexId v : prof.argmax) image.push_back(g.conj(v));
    std::sort(image.begin(), image.end());
    if (image != prof.argmax) return false;
    if (prof.argmax.size() % 2 == 1) {
        return std::any_of(prof.argmax.begin(), prof.argmax.end(), [&](VertexId v) { return g.conj(v) == v; });
    }
    return true;
}

}  // namespace paxis
