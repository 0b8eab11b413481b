#include "paxis/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace paxis {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) {
        throw std::invalid_argument("partition must have at least one part");
    }
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) {
            throw std::invalid_argument("partition parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts must be nonincreasing");
        }
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    while (true) {
        auto comma = text.find(',');
        auto token = text.substr(0, comma);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            throw std::invalid_argument("malformed partition text: '" + std::string(token) + "'");
        }
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return Partition(std::move(parts));
}

int Partition::part(int i) const noexcept {
    if (i <= 0) return std::numeric_limits<int>::max();
    if (i > length()) return 0;
    return parts_[static_cast<std::size_t>(i - 1)];
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 1) {
        throw std::invalid_argument("enumerate_partitions: n must be >= 1, got " + std::to_string(n));
    }
    std::vector<Partition> out;
    std::vector<int> current;
    // Larger leading parts are emitted first, which yields reverse-lex order.
    std::function<void(int, int)> extend = [&](int remaining, int cap) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int part = std::min(remaining, cap); part >= 1; --part) {
            current.push_back(part);
            extend(remaining - part, part);
            current.pop_back();
        }
    };
    extend(n, n);
    return out;
}

Partition conjugate(const Partition& lambda) {
    const auto& parts = lambda.parts();
    std::vector<int> columns(static_cast<std::size_t>(parts.front()), 0);
    for (int p : parts) {
        for (int j = 0; j < p; ++j) ++columns[static_cast<std::size_t>(j)];
    }
    return Partition(std::move(columns));
}

bool is_self_conjugate(const Partition& lambda) {
    return conjugate(lambda) == lambda;
}

std::vector<Corner> corners(const Partition& lambda) {
    std::vector<Corner> out;
    const int len = lambda.length();
    for (int i = 1; i <= len; ++i) {
        if (lambda.part(i) > lambda.part(i + 1)) {
            int j = lambda.part(i);
            out.push_back({i, j, CornerKind::removable, i == j});
        }
    }
    for (int i = 1; i <= len + 1; ++i) {
        if (lambda.part(i - 1) > lambda.part(i)) {
            int j = lambda.part(i) + 1;
            out.push_back({i, j, CornerKind::addable, i == j});
        }
    }
    return out;
}

bool has_removable_diagonal_corner(const Partition& lambda) {
    for (int i = 1; i <= lambda.length(); ++i) {
        if (lambda.part(i) == i && lambda.part(i + 1) < i) return true;
    }
    return false;
}

bool has_addable_diagonal_corner(const Partition& lambda) {
    for (int i = 1; i <= lambda.length() + 1; ++i) {
        if (lambda.part(i) == i - 1 && lambda.part(i - 1) >= i) return true;
    }
    return false;
}

std::vector<Partition> transfer_neighbors(const Partition& lambda) {
    std::vector<int> padded = lambda.parts();
    padded.push_back(0);
    const std::size_t donors = lambda.parts().size();

    std::vector<Partition> out;
    for (std::size_t from = 0; from < donors; ++from) {
        for (std::size_t to = 0; to < padded.size(); ++to) {
            if (to == from) continue;
            std::vector<int> next = padded;
            --next[from];
            ++next[to];
            std::erase(next, 0);
            std::sort(next.begin(), next.end(), std::greater<>());
            Partition mu(std::move(next));
            if (mu != lambda) out.push_back(std::move(mu));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace paxis
