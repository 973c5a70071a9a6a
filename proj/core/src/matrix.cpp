// SPDX-License-Identifier: Apache-2.0
#include "pcrank/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "rng.hpp"

namespace pcrank {

namespace {

constexpr double kReciprocityTol = 1e-12;

std::string cell(int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

} // namespace

const char* errc_name(errc code) noexcept {
    switch (code) {
    case errc::non_square: return "NonSquare";
    case errc::non_positive_entry: return "NonPositiveEntry";
    case errc::reciprocity_violation: return "ReciprocityViolation";
    case errc::unit_diagonal_violation: return "UnitDiagonalViolation";
    case errc::non_positive_weight: return "NonPositiveWeight";
    case errc::no_convergence: return "NoConvergence";
    case errc::invalid_lambda: return "InvalidLambda";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::ties_present: return "TiesPresent";
    case errc::invalid_ki: return "InvalidKI";
    case errc::k_out_of_range: return "KOutOfRange";
    case errc::degenerate_gap: return "DegenerateGap";
    case errc::parse_error: return "ParseError";
    }
    return "UnknownError";
}

ScaleBound::ScaleBound(double hi) : lo_(1.0 / hi), hi_(hi) {
    if (!(hi >= 1.0) || !std::isfinite(hi))
        throw std::invalid_argument("ScaleBound: hi must be finite and >= 1");
}

PCMatrix PCMatrix::from_entries(const std::vector<std::vector<double>>& entries) {
    const std::size_t n = entries.size();
    if (n < 2)
        throw Error(errc::non_square, "matrix must be at least 2x2, got " + std::to_string(n) + " rows");
    for (std::size_t i = 0; i < n; ++i) {
        if (entries[i].size() != n)
            throw Error(errc::non_square, "row " + std::to_string(i) + " has " +
                                              std::to_string(entries[i].size()) + " fields, expected " +
                                              std::to_string(n));
    }

    std::vector<double> flat(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double v = entries[i][j];
            if (!(v > 0.0) || !std::isfinite(v))
                throw Error(errc::non_positive_entry,
                            "entry " + cell(int(i), int(j)) + " = " + std::to_string(v));
            flat[i * n + j] = v;
        }

    for (std::size_t i = 0; i < n; ++i)
        if (std::abs(flat[i * n + i] - 1.0) > kReciprocityTol)
            throw Error(errc::unit_diagonal_violation,
                        "diagonal entry (" + std::to_string(i) + ") = " + std::to_string(flat[i * n + i]));

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(flat[i * n + j] * flat[j * n + i] - 1.0) > kReciprocityTol)
                throw Error(errc::reciprocity_violation,
                            "a" + cell(int(i), int(j)) + " * a" + cell(int(j), int(i)) + " != 1");

    return PCMatrix(static_cast<int>(n), std::move(flat));
}

PCMatrix PCMatrix::from_weights(std::span<const double> weights) {
    const std::size_t n = weights.size();
    if (n < 2)
        throw Error(errc::non_square, "need at least 2 weights, got " + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i)
        if (!(weights[i] > 0.0) || !std::isfinite(weights[i]))
            throw Error(errc::non_positive_weight,
                        "weight (" + std::to_string(i) + ") = " + std::to_string(weights[i]));

    std::vector<double> flat(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            flat[i * n + j] = weights[i] / weights[j];
    return PCMatrix(static_cast<int>(n), std::move(flat));
}

PCMatrix PCMatrix::random_consistent(int n, std::uint64_t seed, ScaleBound scale) {
    if (n < 2)
        throw Error(errc::non_square, "need n >= 2, got " + std::to_string(n));
    detail::Rng rng(seed);
    const double span = std::log(scale.hi());
    std::vector<double> w(static_cast<std::size_t>(n));
    for (auto& wi : w)
        wi = std::exp(rng.uniform01() * span);
    return from_weights(w);
}

PCMatrix disturb(const PCMatrix& m, double beta, std::uint64_t seed,
                 std::optional<ScaleBound> clamp) {
    if (!(beta >= 1.0) || !std::isfinite(beta))
        throw std::invalid_argument("disturb: beta must be finite and >= 1");

    const int n = m.size();
    std::vector<double> flat = m.data();
    detail::Rng rng(seed);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double alpha = rng.uniform(1.0, beta);
            const bool up = rng.coin();
            double v = up ? m(i, j) * alpha : m(i, j) / alpha;
            if (clamp)
                v = std::clamp(v, clamp->lo(), clamp->hi());
            if (v == m(i, j))
                continue; // alpha = 1 keeps both triangles bit-identical
            flat[static_cast<std::size_t>(i) * n + j] = v;
            flat[static_cast<std::size_t>(j) * n + i] = 1.0 / v;
        }
    }
    return PCMatrix(n, std::move(flat)); // invariants hold by construction
}

bool is_consistent(const PCMatrix& m, double tol) {
    if (!(tol > 0.0))
        throw std::invalid_argument("is_consistent: tol must be > 0");
    const int n = m.size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (std::abs(m(i, j) * m(j, k) / m(i, k) - 1.0) > tol)
                    return false;
    return true;
}

} // namespace pcrank
