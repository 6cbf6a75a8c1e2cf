#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace gsa {

// Dense row-major matrix of points in the unit hypercube [0,1)^d.
// The universal carrier for sampling designs; immutable by convention
// once filled, so it is safe to share across threads.
class SampleMatrix {
public:
    SampleMatrix() = default;

    SampleMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), values_(rows * cols, 0.0) {}

    SampleMatrix(std::size_t rows, std::size_t cols, std::vector<double> values)
        : rows_(rows), cols_(cols), values_(std::move(values)) {
        if (values_.size() != rows_ * cols_)
            throw std::invalid_argument("SampleMatrix: value count does not match rows*cols");
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return values_.empty(); }

    double operator()(std::size_t r, std::size_t c) const { return values_[r * cols_ + c]; }
    double& operator()(std::size_t r, std::size_t c) { return values_[r * cols_ + c]; }

    std::span<const double> row(std::size_t r) const {
        return {values_.data() + r * cols_, cols_};
    }
    std::span<double> row(std::size_t r) {
        return {values_.data() + r * cols_, cols_};
    }

    const std::vector<double>& values() const { return values_; }
    std::vector<double>& values() { return values_; }

    // All entries in [0,1)?
    bool in_unit_interval() const {
        for (double v : values_)
            if (!(v >= 0.0 && v < 1.0)) return false;
        return true;
    }

    friend bool operator==(const SampleMatrix&, const SampleMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> values_;
};

}  // namespace gsa
