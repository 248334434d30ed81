#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

namespace wsnacc {

/// Name recorded in report metadata. Bump the suffix whenever the
/// seed derivation or any variate transform below changes.
inline constexpr std::string_view kRngName = "mt19937_64+seed_seq/polar-normal/v1";

/// Seeded generator with platform-independent variates.
///
/// std::uniform_real_distribution and std::normal_distribution are
/// implementation-defined, so the transforms here are written out to keep
/// results bit-identical across standard libraries. The engine itself and
/// std::seed_seq are fully specified by the standard.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

    /// Uniform on [0, 1) with 53 bits of resolution.
    double uniform();
    /// Uniform on [lo, hi].
    double uniform(double lo, double hi);
    /// Standard normal (Marsaglia polar method, second variate cached).
    double normal();

private:
    std::mt19937_64 engine_;
    std::optional<double> cached_normal_;
};

}  // namespace wsnacc

namespace wsnacc {

/// splitmix64 finalizer over (seed, index); used to give each cluster or
/// run its own seed without correlating neighbouring indices.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

}  // namespace wsnacc
