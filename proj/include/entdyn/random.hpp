#pragma once

// Seeded white-noise coupling draws.
//
// Generator: std::mt19937_64 seeded with the 64-bit seed. Each draw takes one
// 64-bit output x and maps it to u = (x >> 11) * 2^-53 in [0, 1), then to
// lo + (hi - lo) * u. The engine's output sequence is fixed by the C++
// standard and the mapping uses no library distribution, so draws are
// identical on every conforming platform.

#include <cstdint>
#include <vector>

namespace entdyn {

/// `count` couplings uniform on [|mu - f|, mu + f]. The lower bound is folded
/// to |mu - f| so no coupling is negative.
std::vector<double> sample_white_noise(double mu, double f, std::uint64_t seed, std::size_t count);

/// One SplitMix64 step: add the golden-ratio increment, then finalize.
std::uint64_t mix64(std::uint64_t x);

inline constexpr std::uint64_t kRowSeedStride = 0x9E3779B97F4A7C15ull;
inline constexpr std::uint64_t kRepeatSeedStride = 0xBF58476D1CE4E5B9ull;

/// mix64(master ^ (row * kRowSeedStride)).
std::uint64_t derive_row_seed(std::uint64_t master_seed, std::size_t row);

/// Seed of the repeat-th ensemble draw of a row; repeat 0 is the row seed itself.
std::uint64_t derive_repeat_seed(std::uint64_t row_seed, std::size_t repeat);

}  // namespace entdyn
