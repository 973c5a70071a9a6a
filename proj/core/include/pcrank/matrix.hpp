// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pcrank/error.hpp"

namespace pcrank {

/// Symmetric bounds [lo, hi] for comparison values, with lo = 1/hi and hi >= 1.
/// The fundamental scale {1/9, ..., 9} is the instance used by default.
class ScaleBound {
public:
    explicit ScaleBound(double hi);

    static ScaleBound fundamental() { return ScaleBound(9.0); }

    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }

private:
    double lo_;
    double hi_;
};

/// Square positive reciprocal matrix of relative preferences.
///
/// Entry (i, j) states how many times object i is preferred over object j.
/// Invariants, enforced at construction and preserved by every operation:
///   - unit diagonal,
///   - a(i,j) * a(j,i) = 1 within 1e-12,
///   - all entries strictly positive and finite.
/// Instances are immutable and safe to share across threads.
class PCMatrix {
public:
    /// Validates and wraps an n x n grid of comparison values.
    /// Throws Error with code non_square, non_positive_entry,
    /// unit_diagonal_violation or reciprocity_violation.
    static PCMatrix from_entries(const std::vector<std::vector<double>>& entries);

    /// Builds the consistent matrix a(i,j) = w[i] / w[j] from positive weights.
    static PCMatrix from_weights(std::span<const double> weights);

    /// Consistent matrix from hidden weights drawn log-uniformly on
    /// [1, scale.hi()]. Deterministic for a fixed (n, seed, scale).
    static PCMatrix random_consistent(int n, std::uint64_t seed,
                                      ScaleBound scale = ScaleBound::fundamental());

    int size() const noexcept { return n_; }

    double operator()(int i, int j) const noexcept {
        return entries_[static_cast<std::size_t>(i) * n_ + j];
    }

    /// Row-major entry storage.
    const std::vector<double>& data() const noexcept { return entries_; }

    friend bool operator==(const PCMatrix&, const PCMatrix&) = default;
    friend PCMatrix disturb(const PCMatrix&, double, std::uint64_t, std::optional<ScaleBound>);

private:
    PCMatrix(int n, std::vector<double> entries)
        : n_(n), entries_(std::move(entries)) {}

    int n_;
    std::vector<double> entries_;
};

/// Multiplies or divides (with probability 1/2 each) every upper-triangle
/// entry by its own scalar drawn uniformly on [1, beta], then restores the
/// reciprocal lower triangle. With clamp set, entries are clipped into
/// [clamp.lo, clamp.hi] before the reciprocal is taken. beta = 1 returns the
/// input unchanged. Deterministic for a fixed (m, beta, seed).
PCMatrix disturb(const PCMatrix& m, double beta, std::uint64_t seed,
                 std::optional<ScaleBound> clamp = std::nullopt);

/// True iff |a(i,j) * a(j,k) / a(i,k) - 1| <= tol for every triple (i, j, k).
bool is_consistent(const PCMatrix& m, double tol);

} // namespace pcrank
