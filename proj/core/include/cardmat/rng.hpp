#pragma once

#include "cardmat/rational.hpp"

#include <cstdint>
#include <random>

namespace cardmat {

/// Seeded deterministic generator. Draws go through the raw engine output
/// only (std::mt19937_64 is specified bit-exactly; the standard distributions
/// are not), so identical seeds replay identically everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t bits() { return eng_(); }
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : bits() % n; }
    long integer(long lo, long hi) { // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
    /// Random num/den with num in [lo, hi], den in [1, max_den].
    Rational rational(long lo, long hi, long max_den) {
        long num = integer(lo, hi);
        long den = integer(1, max_den);
        return Rational(num, den);
    }

private:
    std::mt19937_64 eng_;
};

} // namespace cardmat
