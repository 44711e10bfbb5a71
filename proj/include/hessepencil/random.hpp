#ifndef HESSEPENCIL_RANDOM_HPP
#define HESSEPENCIL_RANDOM_HPP

// Seeded sampling. Bounded draws are done by rejection on the raw engine
// output because the std distributions are implementation-defined.

#include <hessepencil/field.hpp>

#include <cstdint>
#include <random>

namespace hesse {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t r;
        do r = eng_();
        while (r >= limit);
        return r % n;
    }

    /// Uniform in [lo, hi].
    long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

    /// Numerator in [-9, 9], denominator in [1, 5].
    Rational small_rational() { return Rational(between(-9, 9), between(1, 5)); }

    /// Nonzero small rational.
    Rational small_nonzero() {
        Rational q;
        do q = small_rational();
        while (q.is_zero());
        return q;
    }

    /// Sub-seed for the i-th independent trial.
    std::uint64_t split() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

}  // namespace hesse

#endif
