// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pcrank/matrix.hpp"
#include "pcrank/prioritize.hpp"

namespace pcrank {

/// Inconsistency measures of one matrix: Koczkodaj's index, its complement
/// kappa = 1 - ki, the principal eigenvalue and Saaty's consistency index.
struct InconsistencyReport {
    double ki;
    double kappa;
    double lambda_max;
    double ci;
    int n;
};

/// Koczkodaj's inconsistency index: the worst triad deviation
/// max 1 - min(q, 1/q) with q = a(i,j) / (a(i,k) * a(k,j)), taken over all
/// triples of distinct indices. Always in [0, 1); 0 for n = 2 (no triads).
double koczkodaj_ki(const PCMatrix& m);

/// Saaty's consistency index (lambda_max - n) / (n - 1), clamped at 0 from
/// below. Throws Error(invalid_lambda) when lambda_max < n - 1e-6.
double saaty_ci(double lambda_max, int n);

InconsistencyReport inconsistency_report(const PCMatrix& m, EvmOptions opts = {});

} // namespace pcrank
