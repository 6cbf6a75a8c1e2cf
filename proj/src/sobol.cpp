#include "gsa/sobol.hpp"

#include <bit>
#include <stdexcept>

#include "gsa/rng.hpp"

namespace gsa {

SobolSequence::SobolSequence(std::size_t dim) : dim_(dim) {
    if (dim < 1)
        throw std::invalid_argument("SobolSequence: dimension must be >= 1");
    if (dim > max_dimension())
        throw std::invalid_argument("SobolSequence: dimension exceeds direction-number table (" +
                                    std::to_string(max_dimension()) + ")");

    state_.assign(dim, 0);
    shift_.assign(dim, 0);
    directions_.assign(dim * kBits, 0);

    // First dimension: van der Corput, v_k = 2^-k.
    for (int k = 0; k < kBits; ++k)
        directions_[k] = 1ULL << (kBits - 1 - k);

    // Remaining dimensions from the Joe-Kuo recurrence:
    //   v_k = m_k / 2^k for k <= degree, then
    //   v_k = v_{k-s} ^ (v_{k-s} >> s) ^ sum of a-selected v_{k-j}.
    for (std::size_t d = 1; d < dim; ++d) {
        const auto& p = detail::sobol_polynomials[d - 1];
        const int s = p.degree;
        std::uint64_t* v = directions_.data() + d * kBits;
        for (int k = 0; k < s && k < kBits; ++k)
            v[k] = static_cast<std::uint64_t>(detail::sobol_m_values[p.m_offset + k])
                   << (kBits - 1 - k);
        for (int k = s; k < kBits; ++k) {
            v[k] = v[k - s] ^ (v[k - s] >> s);
            for (int j = 1; j < s; ++j)
                if ((p.coefficients >> (s - 1 - j)) & 1U) v[k] ^= v[k - j];
        }
    }
}

void SobolSequence::set_digital_shift(std::uint64_t scramble_seed) {
    CounterRng rng(derive_seed(scramble_seed, "sobol-digital-shift"));
    for (std::size_t d = 0; d < dim_; ++d)
        shift_[d] = rng.next_u64() >> (64 - kBits);
}

void SobolSequence::next(double* out) {
    // Advance the Gray-code state. The raw sequence starts at the
    // all-zeros point with index 0; we emit from raw index 1 on.
    ++index_;
    const int c = std::countr_zero(index_);  // bit that flips in the Gray code
    for (std::size_t d = 0; d < dim_; ++d) {
        state_[d] ^= directions_[d * kBits + c];
        out[d] = static_cast<double>(state_[d] ^ shift_[d]) * 0x1.0p-52;
    }
}

}  // namespace gsa
