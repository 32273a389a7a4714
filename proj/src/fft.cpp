#include "isac/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <stdexcept>

namespace isac {

struct Dft::Impl {
    fftw_complex* buf = nullptr;
    fftw_plan plan = nullptr;

    ~Impl() {
        if (plan) fftw_destroy_plan(plan);
        if (buf) fftw_free(buf);
    }
};

Dft::Dft(std::size_t length, Direction dir) : length_(length), impl_(std::make_unique<Impl>()) {
    if (length == 0) throw std::invalid_argument("Dft: zero length");
    impl_->buf = fftw_alloc_complex(length);
    if (!impl_->buf) throw std::bad_alloc();
    const int sign = dir == Direction::Forward ? FFTW_FORWARD : FFTW_BACKWARD;
    // In-place; FFTW_ESTIMATE does not touch the buffer and yields a deterministic plan.
    impl_->plan = fftw_plan_dft_1d(static_cast<int>(length), impl_->buf, impl_->buf, sign, FFTW_ESTIMATE);
    if (!impl_->plan) throw std::runtime_error("Dft: FFTW planning failed");
}

Dft::~Dft() = default;
Dft::Dft(Dft&&) noexcept = default;
Dft& Dft::operator=(Dft&&) noexcept = default;

void Dft::run(std::span<const cplx> in, std::span<cplx> out) {
    if (in.size() > length_ || out.size() != length_) throw std::invalid_argument("Dft::run: size mismatch");
    // std::complex<double> is layout-compatible with fftw_complex.
    auto* buf = reinterpret_cast<cplx*>(impl_->buf);
    std::copy(in.begin(), in.end(), buf);
    std::fill(buf + in.size(), buf + length_, cplx{});
    fftw_execute(impl_->plan);
    std::copy(buf, buf + length_, out.begin());
}

}  // namespace isac
