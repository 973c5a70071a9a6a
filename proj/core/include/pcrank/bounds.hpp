// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "pcrank/matrix.hpp"
#include "pcrank/prioritize.hpp"

namespace pcrank {

/// Bounds on the Manhattan distance between the eigenvalue-method and
/// geometric-mean-method priority vectors of one matrix, as a function of
/// its Koczkodaj inconsistency: with kappa = 1 - ki,
/// kappa^2 - 1 <= MD <= 1/kappa^2 - 1.
struct DistanceBounds {
    double lower; ///< kappa^2 - 1 (non-positive; MD >= 0 is the binding floor)
    double upper; ///< 1/kappa^2 - 1, the certification budget
};

/// Throws Error(invalid_ki) unless 0 <= ki < 1.
DistanceBounds md_bounds(double ki);

/// Gaps of a sorted-descending weight vector.
struct WeightGaps {
    double min_gap; ///< smallest difference between adjacent sorted weights
    double top_gap; ///< difference between the two largest weights
};

/// Throws Error(ties_present) when any adjacent sorted gap is below 1e-12.
WeightGaps weight_gaps(const PriorityVector& w);

/// True iff min_gap(w_ev) strictly exceeds the distance budget 1/kappa^2 - 1.
/// A true result certifies that the eigenvalue and geometric-mean methods
/// produce identical ordinal rankings.
bool certify_order(const PriorityVector& w_ev, double ki);

/// True iff top_gap(w_ev) strictly exceeds the budget; certifies that both
/// methods agree on the top-ranked object.
bool certify_top(const PriorityVector& w_ev, double ki);

/// Largest integer k >= 0 with k * min_gap < budget, capped at C(n,2);
/// when budget / min_gap is an exact integer the strict inequality resolves
/// it to budget / min_gap - 1. This is the most adjacent rank swaps the
/// distance budget can pay for. Throws Error(degenerate_gap) when
/// min_gap <= 0.
int max_feasible_swaps(double min_gap, double budget, int n);

/// Kendall's tau cannot fall below (C(n,2) - 2k) / C(n,2) when at most k
/// swaps are feasible. Throws Error(k_out_of_range) unless 0 <= k <= C(n,2).
double tau_lower_bound(int n, int k);

/// Spearman's rho cannot fall below 1 - 6(k^2 + k) / (n(n^2 - 1)).
double rho_lower_bound(int n, int k);

/// Supremum of min_gap over positive sum-1 weight vectors of length n:
/// 2 / (n(n-1)), approached as the smallest weight tends to 0.
double max_feasible_gap(int n);

/// Everything the certification story needs for one matrix.
struct StabilityCertificate {
    int n;
    double ki;
    double kappa;
    double md_lower;      ///< kappa^2 - 1
    double md_upper;      ///< 1/kappa^2 - 1
    double min_gap;       ///< smallest adjacent gap of the EV weights
    double top_gap;       ///< gap between the two largest EV weights
    int max_swaps;        ///< most rank swaps the budget allows
    bool order_certified; ///< min_gap > md_upper: full rank agreement proven
    bool top_certified;   ///< top_gap > md_upper: top-choice agreement proven
    double tau_lower;
    double rho_lower;
};

/// Assembles a certificate from precomputed eigenvalue-method weights and a
/// known inconsistency value. Propagates Error(ties_present) from the gaps.
StabilityCertificate make_certificate(const PriorityVector& w_ev, double ki);

/// Runs the eigenvalue method and the inconsistency index on the matrix,
/// then certifies.
StabilityCertificate full_certificate(const PCMatrix& m, EvmOptions opts = {});

/// Flat JSON object with stable keys, for CLI output and result logging.
std::string to_json(const StabilityCertificate& c);

} // namespace pcrank
