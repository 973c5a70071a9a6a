// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string_view>

#include "pcrank/matrix.hpp"

namespace pcrank {

/// CSV matrix format: n lines of n comma-separated fields, each field a
/// decimal literal or a fraction "p/q" with integer p, q.
/// Throws Error(parse_error) on malformed text; validation failures surface
/// as the usual construction errors.
PCMatrix parse_matrix_csv(std::string_view text);

/// JSON matrix format: {"n": int, "entries": [[...], ...]}; entries may be
/// numbers or fraction/decimal strings.
PCMatrix parse_matrix_json(std::string_view text);

/// Reads a matrix file, dispatching on the ".json" extension (CSV otherwise).
PCMatrix load_matrix(const std::filesystem::path& file);

} // namespace pcrank
