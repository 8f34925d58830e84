#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "odhd/errors.hpp"

namespace odhd {

// Dense row-major matrix of doubles; the feature container used throughout.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const double> row(std::size_t r) const {
        return std::span<const double>(data_.data() + r * cols_, cols_);
    }

    void append_row(std::span<const double> values) {
        if (cols_ == 0) cols_ = values.size();
        if (values.size() != cols_)
            throw InvalidArgument("Matrix::append_row: column count mismatch");
        data_.insert(data_.end(), values.begin(), values.end());
        ++rows_;
    }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

}  // namespace odhd
