#ifndef QGAIN_RNG_HPP
#define QGAIN_RNG_HPP

#include <cstdint>
#include <random>

#include "qgain/quaternion.hpp"

namespace qgain {

/// 64-bit seed; identical seed and parameters give identical output.
using Seed = std::uint64_t;

/// Stateless mixer for deriving independent sub-seeds.
inline Seed split_seed(Seed s, Seed index) {
    std::uint64_t z = s + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Seed quaternion components are drawn from a small box to keep elimination
// arithmetic fast; widen if heavier gains are ever wanted.
inline constexpr long kSeedNumRange = 5; // |numerator| <= 5
inline constexpr long kSeedDenRange = 5; // denominator in [1, 5]

/// Deterministic source of small rationals, quaternions, and unit gains.
/// Bounded draws avoid std::uniform_int_distribution so that streams are
/// identical across standard libraries.
class Rng {
public:
    explicit Rng(Seed s) : eng_(s) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    /// Uniform in [lo, hi] inclusive.
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool chance(std::uint64_t numer, std::uint64_t denom) {
        return below(denom) < numer;
    }

    Rational small_rational(long max_num = kSeedNumRange, long max_den = kSeedDenRange) {
        return Rational(range(-max_num, max_num), range(1, max_den));
    }

    /// Nonzero quaternion with small rational components.
    Quaternion seed_quaternion() {
        for (;;) {
            Quaternion q(small_rational(), small_rational(), small_rational(),
                         small_rational());
            if (!q.is_zero()) return q;
        }
    }

    /// Exact unit gain.
    Quaternion unit_quaternion() { return unit_from_seed(seed_quaternion()); }

private:
    std::mt19937_64 eng_;
};

} // namespace qgain

#endif
