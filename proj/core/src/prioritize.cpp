// SPDX-License-Identifier: Apache-2.0
#include "pcrank/prioritize.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pcrank {

PriorityVector::PriorityVector(std::vector<double> weights, Method method,
                               std::optional<double> lambda_max)
    : weights_(std::move(weights)), method_(method), lambda_max_(lambda_max) {
    const std::size_t n = weights_.size();
    if (n < 2)
        throw std::invalid_argument("PriorityVector: need at least 2 weights");
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(weights_[i] > 0.0) || !std::isfinite(weights_[i]))
            throw Error(errc::non_positive_weight,
                        "weight (" + std::to_string(i) + ") = " + std::to_string(weights_[i]));
        sum += weights_[i];
    }
    if (std::abs(sum - 1.0) > 1e-10)
        throw std::invalid_argument("PriorityVector: weights sum to " + std::to_string(sum) +
                                    ", expected 1");
    if (method_ == Method::eigenvalue && lambda_max_ && *lambda_max_ < n - 1e-9)
        throw Error(errc::invalid_lambda,
                    "lambda_max = " + std::to_string(*lambda_max_) + " below n = " + std::to_string(n));
}

namespace {

void multiply(const PCMatrix& m, const std::vector<double>& v, std::vector<double>& out) {
    const int n = m.size();
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int j = 0; j < n; ++j)
            acc += m(i, j) * v[static_cast<std::size_t>(j)];
        out[static_cast<std::size_t>(i)] = acc;
    }
}

} // namespace

PriorityVector evm(const PCMatrix& m, EvmOptions opts) {
    if (!(opts.tol > 0.0))
        throw std::invalid_argument("evm: tol must be > 0");
    if (opts.max_iter < 1)
        throw std::invalid_argument("evm: max_iter must be >= 1");

    const int n = m.size();
    std::vector<double> w(static_cast<std::size_t>(n), 1.0 / n);
    std::vector<double> next(static_cast<std::size_t>(n));

    bool converged = false;
    for (int iter = 0; iter < opts.max_iter; ++iter) {
        multiply(m, w, next);
        double sum = 0.0;
        for (double v : next)
            sum += v;
        double change = 0.0;
        for (std::size_t i = 0; i < next.size(); ++i) {
            next[i] /= sum;
            change += std::abs(next[i] - w[i]);
        }
        w.swap(next);
        if (change < opts.tol) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw Error(errc::no_convergence,
                    "power iteration still above tol after " + std::to_string(opts.max_iter) +
                        " iterations");

    multiply(m, w, next);
    double lambda = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i)
        lambda += next[i] / w[i];
    lambda /= n;

    return PriorityVector(std::move(w), Method::eigenvalue, lambda);
}

PriorityVector gmm(const PCMatrix& m) {
    const int n = m.size();
    std::vector<double> logmean(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int j = 0; j < n; ++j)
            acc += std::log(m(i, j));
        logmean[static_cast<std::size_t>(i)] = acc / n;
    }
    double peak = logmean[0];
    for (double v : logmean)
        peak = std::max(peak, v);
    double sum = 0.0;
    std::vector<double> w(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < w.size(); ++i) {
        w[i] = std::exp(logmean[i] - peak);
        sum += w[i];
    }
    for (double& v : w)
        v /= sum;
    return PriorityVector(std::move(w), Method::geometric_mean);
}

} // namespace pcrank
