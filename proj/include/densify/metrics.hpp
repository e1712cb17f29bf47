#ifndef DENSIFY_METRICS_HPP
#define DENSIFY_METRICS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "densify/chain.hpp"
#include "densify/rational.hpp"

namespace densify {

/// prof(i) for i = 1..n, stored at index i-1.
class Profile {
public:
    explicit Profile(std::vector<Rational> values) : values_(std::move(values)) {}

    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    /// 1-based; throws std::domain_error outside 1..n.
    [[nodiscard]] const Rational& at(std::size_t i) const;
    [[nodiscard]] const std::vector<Rational>& values() const noexcept { return values_; }

private:
    std::vector<Rational> values_;
};

/// prof(i) = d(B_j, B_{j-1}) with j the smallest index such that |B_j| >= i.
Profile profile(const Chain& chain);

/// min_i prof(i; c) / prof(i; b), exact.
///
/// Indices where both profiles are 0 are skipped, and x/0 with x > 0 counts
/// as +infinity. When no index contributes a finite ratio the result is 1.
/// Throws std::domain_error if the chains cover different vertex counts.
Rational profile_ratio(const Chain& c, const Chain& b);

struct KendallCounts {
    std::uint64_t concordant = 0;
    std::uint64_t discordant = 0;
    std::uint64_t tied_a_only = 0;
    std::uint64_t tied_b_only = 0;
    std::uint64_t tied_both = 0;
};

/// Pair counts in O(n log n) (sort on a, then merge-sort inversions on b).
KendallCounts kendall_counts(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

/// tau_b = (P - Q) / sqrt((P + Q + T_a)(P + Q + T_b)). Empty when either
/// assignment is constant (or there are fewer than two items), where the
/// statistic is undefined.
std::optional<double> kendall_tau_b(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

/// Per-vertex 1-based index of the smallest chain set containing the vertex.
std::vector<std::int64_t> chain_index_assignment(const Chain& chain);

}  // namespace densify

#endif  // DENSIFY_METRICS_HPP
