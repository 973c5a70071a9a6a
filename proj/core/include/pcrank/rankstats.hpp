// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "pcrank/prioritize.hpp"

namespace pcrank {

/// Ordinal ranking of objects from best to worst.
///
/// order()[p] is the object at position p (position 0 = best); rank_of()[o]
/// is the 1-based rank of object o, so rank_of()[order()[p]] == p + 1.
class OrdinalRanking {
public:
    /// Permutation wrapper; validates that order is a bijection on 0..n-1.
    static OrdinalRanking from_order(std::vector<int> order);

    const std::vector<int>& order() const noexcept { return order_; }
    const std::vector<int>& rank_of() const noexcept { return rank_of_; }
    bool tied() const noexcept { return tied_; }
    int size() const noexcept { return static_cast<int>(order_.size()); }

private:
    OrdinalRanking(std::vector<int> order, std::vector<int> rank_of, bool tied)
        : order_(std::move(order)), rank_of_(std::move(rank_of)), tied_(tied) {}
    friend OrdinalRanking ordinal_ranking(const PriorityVector&);

    std::vector<int> order_;
    std::vector<int> rank_of_;
    bool tied_;
};

/// Sorts objects by weight descending, exact ties broken by ascending object
/// index. The tie flag is set when any adjacent sorted weights are equal
/// within 1e-12.
OrdinalRanking ordinal_ranking(const PriorityVector& w);

/// Kendall's tau: (concordant - discordant) / C(n,2), counted exactly on
/// integers before the single final division.
/// Throws Error(length_mismatch) or Error(ties_present).
double kendall_tau(const OrdinalRanking& x, const OrdinalRanking& y);

/// Spearman's rho: 1 - 6 sum d_i^2 / (n (n^2 - 1)) with d_i the rank
/// difference of object i, summed on integers.
double spearman_rho(const OrdinalRanking& x, const OrdinalRanking& y);

/// L1 distance between two priority vectors of equal length.
double manhattan_distance(const PriorityVector& u, const PriorityVector& v);

} // namespace pcrank
