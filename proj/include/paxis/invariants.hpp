#pragma once

#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "paxis/axial.hpp"
#include "paxis/graph.hpp"

namespace paxis {

enum class Invariant { deg, omega_loc, dim_loc };

inline constexpr Invariant kAllInvariants[] = {Invariant::deg, Invariant::omega_loc, Invariant::dim_loc};

std::string_view invariant_name(Invariant id);

class OracleInfeasible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Largest neighbourhood the subset oracle accepts.
inline constexpr std::size_t kOracleMaxDegree = 25;

/**
 * omega_loc(v) = 1 + omega(G[N(v)]): the size of the largest clique
 * containing v. Bron-Kerbosch with Tomita pivoting on the neighbourhood
 * subgraph, pruned against the best clique found so far.
 */
int local_clique_number(const PartitionGraph& g, VertexId v);

/// Independent check of local_clique_number: tries every subset of N(v)
/// by increasing size. Throws OracleInfeasible when deg(v) > kOracleMaxDegree.
int local_clique_number_oracle(const PartitionGraph& g, VertexId v);

/// omega_loc for every vertex; threads <= 1 runs inline.
std::vector<int> local_clique_numbers(const PartitionGraph& g, unsigned threads = 1);

struct InvariantProfile {
    Invariant id = Invariant::deg;
    std::vector<int> values;
    int max_value = 0;
    std::vector<VertexId> argmax;  // sorted
    /// Undefined when n is axisless (or argmax is not reachable from the axis).
    std::optional<std::size_t> argmax_axis_count;
    std::optional<int> rho_ax;
    std::optional<int> rho_sp;
};

/// Builds a profile from precomputed vertex values.
InvariantProfile make_profile(Invariant id, std::vector<int> values, const AxialGeometry& geom);

/// Computes the invariant from scratch. dim_loc is derived from omega_loc.
InvariantProfile profile(const PartitionGraph& g, const AxialGeometry& geom, Invariant id,
                         unsigned threads = 1);

/// All three profiles, sharing one omega_loc pass.
std::vector<InvariantProfile> all_profiles(const PartitionGraph& g, const AxialGeometry& geom,
                                           unsigned threads = 1);

/// conj(Argmax) == Argmax, and an odd-size Argmax meets the axis.
bool argmax_symmetry_check(const InvariantProfile& prof, const PartitionGraph& g);

}  // namespace paxis
