// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

namespace pcrank::detail {

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Stateless seed derivation: independent streams per (master, a, b).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = mix64(master + 0x9E3779B97F4A7C15ull);
    s = mix64(s ^ (a + 0x9E3779B97F4A7C15ull));
    s = mix64(s ^ (b + 0xD1B54A32D192ED03ull));
    return s;
}

/// mt19937_64 with explicit uniform mappings. Doubles are produced from the
/// raw bit stream, which the standard pins down exactly, so sequences are
/// reproducible across platforms and library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform on [0, 1).
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

    bool coin() { return (eng_() & 1ull) != 0; }

private:
    std::mt19937_64 eng_;
};

} // namespace pcrank::detail
