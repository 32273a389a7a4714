#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace isac {

using cplx = std::complex<double>;

/// Dense M x N complex matrix indexed (subcarrier, symbol), row-major so each
/// subcarrier row is contiguous in time.
class ComplexGrid {
public:
    ComplexGrid() = default;
    ComplexGrid(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cplx& operator()(std::size_t m, std::size_t n) { return data_[m * cols_ + n]; }
    const cplx& operator()(std::size_t m, std::size_t n) const { return data_[m * cols_ + n]; }

    std::span<cplx> row(std::size_t m) { return {data_.data() + m * cols_, cols_}; }
    std::span<const cplx> row(std::size_t m) const { return {data_.data() + m * cols_, cols_}; }

    std::span<const cplx> data() const { return data_; }
    std::span<cplx> data() { return data_; }

    bool same_shape(const ComplexGrid& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

    friend bool operator==(const ComplexGrid&, const ComplexGrid&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

}  // namespace isac
