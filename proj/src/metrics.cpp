#include "densify/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace densify {

const Rational& Profile::at(std::size_t i) const {
    if (i == 0 || i > values_.size()) throw std::domain_error("profile index out of range");
    return values_[i - 1];
}

Profile profile(const Chain& chain) {
    std::vector<Rational> values;
    values.reserve(chain.vertex_count());
    const auto& sizes = chain.sizes();
    std::size_t j = 1;
    for (std::size_t i = 1; i <= chain.vertex_count(); ++i) {
        while (sizes[j] < i) ++j;
        values.push_back(chain.step_density(j));
    }
    return Profile(std::move(values));
}

Rational profile_ratio(const Chain& c, const Chain& b) {
    if (c.vertex_count() != b.vertex_count()) throw std::domain_error("profile_ratio: chains over different graphs");
    const Profile pc = profile(c);
    const Profile pb = profile(b);
    std::optional<Rational> best;
    for (std::size_t i = 1; i <= pc.size(); ++i) {
        const Rational& num = pc.at(i);
        const Rational& den = pb.at(i);
        if (den == Rational(0)) continue;  // 0/0 skipped, x/0 is +infinity
        const Rational ratio = num / den;
        if (!best || ratio < *best) best = ratio;
    }
    return best.value_or(Rational(1));
}

namespace {

// Counts pairs i < j with v[i] > v[j], sorting v in the process.
std::uint64_t count_inversions(std::vector<std::int64_t>& v) {
    std::vector<std::int64_t> buffer(v.size());
    std::uint64_t inversions = 0;
    for (std::size_t width = 1; width < v.size(); width *= 2) {
        for (std::size_t lo = 0; lo < v.size(); lo += 2 * width) {
            const std::size_t mid = std::min(lo + width, v.size());
            const std::size_t hi = std::min(lo + 2 * width, v.size());
            std::size_t i = lo;
            std::size_t j = mid;
            std::size_t k = lo;
            while (i < mid && j < hi) {
                if (v[j] < v[i]) {
                    inversions += mid - i;
                    buffer[k++] = v[j++];
                } else {
                    buffer[k++] = v[i++];
                }
            }
            while (i < mid) buffer[k++] = v[i++];
            while (j < hi) buffer[k++] = v[j++];
        }
        std::swap(v, buffer);
    }
    return inversions;
}

// Sum over runs of equal consecutive keys of C(run, 2).
template <class Key>
std::uint64_t tied_pairs(std::size_t n, Key key) {
    std::uint64_t total = 0;
    std::size_t run = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        if (i < n && key(i) == key(i - 1)) {
            ++run;
        } else {
            total += static_cast<std::uint64_t>(run) * (run - 1) / 2;
            run = 1;
        }
    }
    return total;
}

}  // namespace

KendallCounts kendall_counts(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
    if (a.size() != b.size()) throw std::domain_error("kendall: assignments differ in length");
    const std::size_t n = a.size();
    if (n < 2) return {};

    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
        return a[x] != a[y] ? a[x] < a[y] : b[x] < b[y];
    });
    const std::uint64_t tied_a = tied_pairs(n, [&](std::size_t i) { return a[idx[i]]; });
    const std::uint64_t tied_ab = tied_pairs(n, [&](std::size_t i) { return std::pair(a[idx[i]], b[idx[i]]); });

    std::vector<std::int64_t> bs(n);
    for (std::size_t i = 0; i < n; ++i) bs[i] = b[idx[i]];
    const std::uint64_t discordant = count_inversions(bs);
    const std::uint64_t tied_b = tied_pairs(n, [&](std::size_t i) { return bs[i]; });

    const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    KendallCounts c;
    c.discordant = discordant;
    c.tied_both = tied_ab;
    c.tied_a_only = tied_a - tied_ab;
    c.tied_b_only = tied_b - tied_ab;
    c.concordant = pairs - tied_a - tied_b + tied_ab - discordant;
    return c;
}

std::optional<double> kendall_tau_b(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
    const KendallCounts c = kendall_counts(a, b);
    const double base = static_cast<double>(c.concordant + c.discordant);
    const double left = base + static_cast<double>(c.tied_a_only);
    const double right = base + static_cast<double>(c.tied_b_only);
    if (left == 0.0 || right == 0.0) return std::nullopt;
    const double diff = static_cast<double>(c.concordant) - static_cast<double>(c.discordant);
    return diff / std::sqrt(left * right);
}

std::vector<std::int64_t> chain_index_assignment(const Chain& chain) {
    const auto level = chain.levels();
    return {level.begin(), level.end()};
}

}  // namespace densify
