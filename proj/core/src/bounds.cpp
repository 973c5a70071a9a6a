// SPDX-License-Identifier: Apache-2.0
#include "pcrank/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "pcrank/inconsistency.hpp"

namespace pcrank {

namespace {

constexpr double kTieTol = 1e-12;

long pair_count(int n) { return static_cast<long>(n) * (n - 1) / 2; }

} // namespace

DistanceBounds md_bounds(double ki) {
    if (!(ki >= 0.0) || !(ki < 1.0))
        throw Error(errc::invalid_ki, "ki = " + std::to_string(ki) + " outside [0, 1)");
    const double kappa = 1.0 - ki;
    return DistanceBounds{kappa * kappa - 1.0, 1.0 / (kappa * kappa) - 1.0};
}

WeightGaps weight_gaps(const PriorityVector& w) {
    std::vector<double> sorted = w.weights();
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    double min_gap = sorted[0] - sorted[1];
    for (std::size_t i = 1; i + 1 < sorted.size(); ++i)
        min_gap = std::min(min_gap, sorted[i] - sorted[i + 1]);
    if (min_gap < kTieTol)
        throw Error(errc::ties_present, "adjacent weights closer than 1e-12");
    return WeightGaps{min_gap, sorted[0] - sorted[1]};
}

bool certify_order(const PriorityVector& w_ev, double ki) {
    return weight_gaps(w_ev).min_gap > md_bounds(ki).upper;
}

bool certify_top(const PriorityVector& w_ev, double ki) {
    return weight_gaps(w_ev).top_gap > md_bounds(ki).upper;
}

int max_feasible_swaps(double min_gap, double budget, int n) {
    if (!(min_gap > 0.0))
        throw Error(errc::degenerate_gap, "min_gap = " + std::to_string(min_gap));
    if (!(budget >= 0.0))
        throw std::invalid_argument("max_feasible_swaps: budget must be >= 0");
    if (n < 2)
        throw std::invalid_argument("max_feasible_swaps: need n >= 2");
    const double cap = static_cast<double>(pair_count(n));
    // ceil(budget / min_gap) - 1 keeps k * min_gap < budget strict, including
    // the exact-integer boundary.
    const double k = std::min(std::ceil(budget / min_gap) - 1.0, cap);
    return static_cast<int>(std::max(0.0, k));
}

double tau_lower_bound(int n, int k) {
    const long pairs = pair_count(n);
    if (k < 0 || k > pairs)
        throw Error(errc::k_out_of_range,
                    "k = " + std::to_string(k) + " outside [0, " + std::to_string(pairs) + "]");
    return static_cast<double>(pairs - 2L * k) / static_cast<double>(pairs);
}

double rho_lower_bound(int n, int k) {
    const long pairs = pair_count(n);
    if (k < 0 || k > pairs)
        throw Error(errc::k_out_of_range,
                    "k = " + std::to_string(k) + " outside [0, " + std::to_string(pairs) + "]");
    const long swaps = static_cast<long>(k) * k + k;
    const long denom = static_cast<long>(n) * (static_cast<long>(n) * n - 1);
    // Single division of exact integers, so rational bounds come out as the
    // nearest double (0.70 for n=5, k=2, not 0.70 plus an ulp).
    return static_cast<double>(denom - 6L * swaps) / static_cast<double>(denom);
}

double max_feasible_gap(int n) {
    if (n < 2)
        throw std::invalid_argument("max_feasible_gap: need n >= 2");
    return 2.0 / (static_cast<double>(n) * (n - 1));
}

StabilityCertificate make_certificate(const PriorityVector& w_ev, double ki) {
    const int n = w_ev.size();
    const DistanceBounds bounds = md_bounds(ki);
    const WeightGaps gaps = weight_gaps(w_ev);
    const int swaps = max_feasible_swaps(gaps.min_gap, bounds.upper, n);
    return StabilityCertificate{
        n,
        ki,
        1.0 - ki,
        bounds.lower,
        bounds.upper,
        gaps.min_gap,
        gaps.top_gap,
        swaps,
        gaps.min_gap > bounds.upper,
        gaps.top_gap > bounds.upper,
        tau_lower_bound(n, swaps),
        rho_lower_bound(n, swaps),
    };
}

StabilityCertificate full_certificate(const PCMatrix& m, EvmOptions opts) {
    return make_certificate(evm(m, opts), koczkodaj_ki(m));
}

std::string to_json(const StabilityCertificate& c) {
    nlohmann::ordered_json j{
        {"n", c.n},
        {"ki", c.ki},
        {"kappa", c.kappa},
        {"md_lower", c.md_lower},
        {"md_upper", c.md_upper},
        {"min_gap", c.min_gap},
        {"top_gap", c.top_gap},
        {"max_swaps", c.max_swaps},
        {"order_certified", c.order_certified},
        {"top_certified", c.top_certified},
        {"tau_lower", c.tau_lower},
        {"rho_lower", c.rho_lower},
    };
    return j.dump();
}

} // namespace pcrank
