// SPDX-License-Identifier: Apache-2.0
#include "pcrank/rankstats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

namespace pcrank {

namespace {

constexpr double kTieTol = 1e-12;

std::vector<int> inverse_ranks(const std::vector<int>& order) {
    std::vector<int> rank_of(order.size());
    for (std::size_t p = 0; p < order.size(); ++p)
        rank_of[static_cast<std::size_t>(order[p])] = static_cast<int>(p) + 1;
    return rank_of;
}

void require_comparable(const OrdinalRanking& x, const OrdinalRanking& y) {
    if (x.size() != y.size())
        throw Error(errc::length_mismatch, "rankings of size " + std::to_string(x.size()) +
                                               " and " + std::to_string(y.size()));
    if (x.tied() || y.tied())
        throw Error(errc::ties_present, "rank correlation requires tie-free rankings");
}

} // namespace

OrdinalRanking OrdinalRanking::from_order(std::vector<int> order) {
    const int n = static_cast<int>(order.size());
    std::vector<bool> seen(order.size(), false);
    for (int o : order) {
        if (o < 0 || o >= n || seen[static_cast<std::size_t>(o)])
            throw std::invalid_argument("OrdinalRanking: order is not a permutation of 0.." +
                                        std::to_string(n - 1));
        seen[static_cast<std::size_t>(o)] = true;
    }
    auto rank_of = inverse_ranks(order);
    return OrdinalRanking(std::move(order), std::move(rank_of), false);
}

OrdinalRanking ordinal_ranking(const PriorityVector& w) {
    std::vector<int> order(static_cast<std::size_t>(w.size()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (w[a] != w[b])
            return w[a] > w[b];
        return a < b;
    });
    bool tied = false;
    for (std::size_t p = 0; p + 1 < order.size(); ++p)
        if (std::abs(w[order[p]] - w[order[p + 1]]) <= kTieTol)
            tied = true;
    auto rank_of = inverse_ranks(order);
    return OrdinalRanking(std::move(order), std::move(rank_of), tied);
}

double kendall_tau(const OrdinalRanking& x, const OrdinalRanking& y) {
    require_comparable(x, y);
    const int n = x.size();
    const auto& rx = x.rank_of();
    const auto& ry = y.rank_of();
    std::int64_t concordant = 0;
    std::int64_t discordant = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const int dx = rx[static_cast<std::size_t>(i)] - rx[static_cast<std::size_t>(j)];
            const int dy = ry[static_cast<std::size_t>(i)] - ry[static_cast<std::size_t>(j)];
            if ((dx > 0) == (dy > 0))
                ++concordant;
            else
                ++discordant;
        }
    const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
    return static_cast<double>(concordant - discordant) / static_cast<double>(pairs);
}

double spearman_rho(const OrdinalRanking& x, const OrdinalRanking& y) {
    require_comparable(x, y);
    const int n = x.size();
    const auto& rx = x.rank_of();
    const auto& ry = y.rank_of();
    std::int64_t sum_sq = 0;
    for (int i = 0; i < n; ++i) {
        const std::int64_t d = rx[static_cast<std::size_t>(i)] - ry[static_cast<std::size_t>(i)];
        sum_sq += d * d;
    }
    const std::int64_t denom = static_cast<std::int64_t>(n) * (static_cast<std::int64_t>(n) * n - 1);
    // Single division of exact integers: the result is the correctly rounded
    // rational, so equal inputs give bit-equal outputs everywhere.
    return static_cast<double>(denom - 6 * sum_sq) / static_cast<double>(denom);
}

double manhattan_distance(const PriorityVector& u, const PriorityVector& v) {
    if (u.size() != v.size())
        throw Error(errc::length_mismatch, "vectors of size " + std::to_string(u.size()) + " and " +
                                               std::to_string(v.size()));
    double acc = 0.0;
    for (int i = 0; i < u.size(); ++i)
        acc += std::abs(u[i] - v[i]);
    return acc;
}

} // namespace pcrank
