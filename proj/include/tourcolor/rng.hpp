#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>

namespace tourcolor {

struct Seed {
    std::uint64_t value = 0;
};

/// SplitMix64 (Steele, Lea, Flood 2014). Each call advances the state by
/// 0x9E3779B97F4A7C15 and mixes it:
///
///     z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///     z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///     return z ^ (z >> 31)
///
/// Everything generated from a Seed goes through this recurrence, so output
/// is identical on every platform and in any language that reimplements it.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(Seed seed) : state_(seed.value) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }

    result_type operator()() { return next(); }

    std::uint64_t next()
    {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Top bit of the next output.
    bool bit() { return (next() >> 63) != 0; }

    /// Uniform in [0, bound) by rejection on the top of the 64-bit range.
    std::uint64_t below(std::uint64_t bound)
    {
        if (bound == 0)
            return 0;
        const std::uint64_t limit = max() - max() % bound;
        std::uint64_t x = next();
        while (x >= limit)
            x = next();
        return x % bound;
    }

    /// Fisher-Yates from the back: for i = n-1 down to 1 swap items[i] with
    /// items[below(i + 1)].
    template <class T>
    void shuffle(std::span<T> items)
    {
        for (std::size_t i = items.size(); i > 1; --i) {
            auto j = static_cast<std::size_t>(below(i));
            using std::swap;
            swap(items[i - 1], items[j]);
        }
    }

private:
    std::uint64_t state_;
};

} // namespace tourcolor
