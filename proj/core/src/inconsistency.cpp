// SPDX-License-Identifier: Apache-2.0
#include "pcrank/inconsistency.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pcrank {

double koczkodaj_ki(const PCMatrix& m) {
    const int n = m.size();
    double worst = 0.0;
    // q -> 1/q under i <-> j, so the upper wedge covers all distinct triads.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j)
                    continue;
                const double q = m(i, j) / (m(i, k) * m(k, j));
                worst = std::max(worst, 1.0 - std::min(q, 1.0 / q));
            }
    return worst;
}

double saaty_ci(double lambda_max, int n) {
    if (n < 2)
        throw std::invalid_argument("saaty_ci: need n >= 2");
    if (lambda_max < n - 1e-6)
        throw Error(errc::invalid_lambda,
                    "lambda_max = " + std::to_string(lambda_max) + " below n = " + std::to_string(n));
    return std::max(0.0, (lambda_max - n) / (n - 1));
}

InconsistencyReport inconsistency_report(const PCMatrix& m, EvmOptions opts) {
    const double ki = koczkodaj_ki(m);
    const PriorityVector w = evm(m, opts);
    const double lambda = *w.lambda_max();
    return InconsistencyReport{ki, 1.0 - ki, lambda, saaty_ci(lambda, m.size()), m.size()};
}

} // namespace pcrank
