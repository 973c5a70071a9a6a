// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "pcrank/matrix.hpp"

namespace pcrank {

enum class Method { eigenvalue, geometric_mean };

/// Normalized priority weights over the compared objects, tagged with the
/// method that produced them. Weights are strictly positive and sum to 1
/// within 1e-10; eigenvalue-method vectors also carry lambda_max >= n.
class PriorityVector {
public:
    PriorityVector(std::vector<double> weights, Method method,
                   std::optional<double> lambda_max = std::nullopt);

    int size() const noexcept { return static_cast<int>(weights_.size()); }
    const std::vector<double>& weights() const noexcept { return weights_; }
    double operator[](int i) const noexcept { return weights_[static_cast<std::size_t>(i)]; }
    Method method() const noexcept { return method_; }
    std::optional<double> lambda_max() const noexcept { return lambda_max_; }

private:
    std::vector<double> weights_;
    Method method_;
    std::optional<double> lambda_max_;
};

struct EvmOptions {
    double tol = 1e-12;
    int max_iter = 10'000;
};

/// Eigenvalue method: principal right eigenvector of the matrix, found by
/// power iteration from the uniform vector, L1-normalized each step.
/// Converged when successive iterates differ by less than tol in L1 norm;
/// lambda_max is the mean of (A w)_i / w_i over components at convergence.
/// Throws Error(no_convergence) after max_iter steps without convergence.
PriorityVector evm(const PCMatrix& m, EvmOptions opts = {});

/// Geometric mean method: normalized row geometric means, computed in
/// log space.
PriorityVector gmm(const PCMatrix& m);

} // namespace pcrank
