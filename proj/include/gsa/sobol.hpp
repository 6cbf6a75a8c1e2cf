#pragma once

#include <cstdint>
#include <vector>

#include "gsa/matrix.hpp"

namespace gsa {

namespace detail {

struct SobolPolynomial {
    int degree;
    unsigned coefficients;  // inner bits of the primitive polynomial
    int m_offset;           // index into sobol_m_values
};

extern const int sobol_table_dims;
extern const SobolPolynomial sobol_polynomials[];
extern const unsigned sobol_m_values[];

}  // namespace detail

// Sobol' low-discrepancy sequence with Joe-Kuo direction numbers,
// generated in Gray-code order. Without scrambling the all-zeros first
// point of the raw sequence is skipped, so the first returned value in
// one dimension is 0.5, then 0.75, 0.25, ... A scramble seed applies a
// per-dimension random digital shift (XOR on the fixed-point digits),
// which preserves the dyadic stratification while giving each seed a
// different starting point.
class SobolSequence {
public:
    static constexpr int kBits = 52;

    explicit SobolSequence(std::size_t dim);

    static std::size_t max_dimension() { return static_cast<std::size_t>(detail::sobol_table_dims); }

    std::size_t dimension() const { return dim_; }

    // Next point, written into out[0..dim).
    void next(double* out);

    void set_digital_shift(std::uint64_t scramble_seed);

private:
    std::size_t dim_;
    std::uint64_t index_ = 0;                    // points generated so far (raw index)
    std::vector<std::uint64_t> state_;           // current Gray-code state per dimension
    std::vector<std::uint64_t> shift_;           // digital shift per dimension
    std::vector<std::uint64_t> directions_;      // dim * kBits direction integers
};

}  // namespace gsa
