#pragma once

#include <cstddef>
#include <memory>
#include <span>

#include "isac/complex_grid.hpp"

namespace isac {

/// Unnormalized 1-D DFT of a fixed length backed by an FFTW plan.
///   Forward:  X(k) = sum_n x(n) e^{-j2pi nk/L}
///   Inverse:  x(n) = sum_k X(k) e^{+j2pi nk/L}
/// Inputs shorter than the plan length are zero-extended at the end.
class Dft {
public:
    enum class Direction { Forward, Inverse };

    Dft(std::size_t length, Direction dir);
    ~Dft();
    Dft(Dft&&) noexcept;
    Dft& operator=(Dft&&) noexcept;
    Dft(const Dft&) = delete;
    Dft& operator=(const Dft&) = delete;

    std::size_t length() const { return length_; }

    /// Transforms `in` (zero-extended) into `out` (size == length()).
    void run(std::span<const cplx> in, std::span<cplx> out);

private:
    struct Impl;
    std::size_t length_;
    std::unique_ptr<Impl> impl_;
};

}  // namespace isac
