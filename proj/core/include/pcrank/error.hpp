// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace pcrank {

/// Failure categories raised by the library. Names are stable and appear
/// verbatim in CLI diagnostics, so scripts can match on them.
enum class errc {
    non_square,
    non_positive_entry,
    reciprocity_violation,
    unit_diagonal_violation,
    non_positive_weight,
    no_convergence,
    invalid_lambda,
    length_mismatch,
    ties_present,
    invalid_ki,
    k_out_of_range,
    degenerate_gap,
    parse_error,
};

/// Stable display name of an error category, e.g. "ReciprocityViolation".
const char* errc_name(errc code) noexcept;

/// Exception carrying a machine-readable category plus a human message.
class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }
    const char* name() const noexcept { return errc_name(code_); }

private:
    errc code_;
};

} // namespace pcrank
