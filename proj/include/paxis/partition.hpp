#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace paxis {

/**
 * An integer partition of n stored as its nonincreasing sequence of
 * positive parts. The constructor validates the canonical form, so two
 * Partitions compare equal iff they describe the same Ferrers diagram.
 */
class Partition {
public:
    Partition() = default;

    /// Throws std::invalid_argument unless parts is nonempty, positive and nonincreasing.
    explicit Partition(std::vector<int> parts);

    /// Parses the textual form "3,2,1".
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int n() const noexcept { return n_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }

    /// Part lambda_i with the 1-based conventions lambda_0 = +inf, lambda_i = 0 for i > length.
    int part(int i) const noexcept;

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

enum class CornerKind { removable, addable };

/// A corner cell of the Ferrers diagram, 1-based (row, col).
struct Corner {
    int row = 0;
    int col = 0;
    CornerKind kind = CornerKind::removable;
    bool diagonal = false;

    friend bool operator==(const Corner&, const Corner&) = default;
};

/**
 * All partitions of n in reverse-lexicographic order, largest first:
 * (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
 * Throws std::invalid_argument for n < 1.
 */
std::vector<Partition> enumerate_partitions(int n);

Partition conjugate(const Partition& lambda);

bool is_self_conjugate(const Partition& lambda);

/// Removable corners top to bottom, then addable corners top to bottom.
std::vector<Corner> corners(const Partition& lambda);

bool has_removable_diagonal_corner(const Partition& lambda);
bool has_addable_diagonal_corner(const Partition& lambda);

/**
 * Partitions reachable by one elementary transfer: take one unit from a
 * part and give it to a different part (or to a fresh zero part), then
 * drop zeros and re-sort. Sorted ascending, deduplicated, lambda excluded.
 */
std::vector<Partition> transfer_neighbors(const Partition& lambda);

}  // namespace paxis
