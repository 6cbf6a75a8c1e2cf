#pragma once

#include <cstdint>
#include <string_view>

namespace gsa {

namespace detail {

// SplitMix64 finalizer. Passes BigCrush as a counter-based generator.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

}  // namespace detail

// Counter-based pseudo-random generator: output i is a pure function of
// (key, i), so any stream position can be computed without advancing
// through the ones before it. Rows of a parallel sweep derive their own
// keys and draw independently of execution order.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t key) : key_(key) {}

    std::uint64_t next_u64() { return at(counter_++); }

    // Value in [0, 1) with 53 random bits.
    double next_double() { return to_unit(next_u64()); }

    // Random access without disturbing the stream position.
    std::uint64_t at(std::uint64_t i) const {
        return detail::mix64(key_ + (i + 1) * detail::kGolden);
    }
    double at_double(std::uint64_t i) const { return to_unit(at(i)); }

    // Uniform integer in [0, n), by rejection on the top bits.
    std::uint64_t next_below(std::uint64_t n) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t x;
        do { x = next_u64(); } while (x >= limit);
        return x % n;
    }

    std::uint64_t key() const { return key_; }

private:
    static double to_unit(std::uint64_t x) { return static_cast<double>(x >> 11) * 0x1.0p-53; }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

// Derive a child key from (key, tag); used to split one master seed into
// independent streams for centers, bases, scrambles and so on.
inline std::uint64_t derive_seed(std::uint64_t key, std::uint64_t tag) {
    return detail::mix64(key ^ detail::mix64(tag + detail::kGolden));
}

inline std::uint64_t derive_seed(std::uint64_t key, std::string_view tag) {
    std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
    for (char c : tag) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return derive_seed(key, h);
}

}  // namespace gsa
