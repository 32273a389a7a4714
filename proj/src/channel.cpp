#include "isac/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace isac {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// e^{j 2 pi cycles}, with the integer part of `cycles` removed first.
cplx unit_phasor(double cycles) {
    const double frac = cycles - std::floor(cycles);
    return std::polar(1.0, 2.0 * std::numbers::pi * frac);
}

}  // namespace

void Target::validate() const {
    if (!(std::abs(beta) > 0.0)) throw std::invalid_argument("target.beta must be nonzero");
    if (!(r_tot_m >= 0.0) || !std::isfinite(r_tot_m)) {
        throw std::invalid_argument("target.r_tot_m must be finite and >= 0");
    }
    if (!std::isfinite(fd_hz)) throw std::invalid_argument("target.fd_hz must be finite");
}

double ChannelConfig::noise_variance() const {
    if (!snr_db) return 0.0;
    const double ref = targets.empty() ? 1.0 : std::norm(targets.front().beta);
    return ref / std::pow(10.0, *snr_db / 10.0);
}

void ChannelConfig::validate() const {
    for (const auto& t : targets) t.validate();
    if (snr_db && !std::isfinite(*snr_db)) throw std::invalid_argument("channel.snr_db must be finite");
}

cplx counter_gaussian(std::uint64_t seed, std::uint64_t index, double variance) {
    const std::uint64_t base = splitmix64(seed) ^ (index * 0xD1B54A32D192ED03ull);
    const std::uint64_t h1 = splitmix64(base);
    const std::uint64_t h2 = splitmix64(h1 ^ 0x8CB92BA72F3D8DD7ull);
    constexpr double kScale = 1.0 / 9007199254740992.0;  // 2^-53
    const double u1 = (static_cast<double>(h1 >> 11) + 1.0) * kScale;  // (0, 1]
    const double u2 = static_cast<double>(h2 >> 11) * kScale;          // [0, 1)
    const double r = std::sqrt(-2.0 * std::log(u1) * (variance / 2.0));
    return std::polar(r, 2.0 * std::numbers::pi * u2);
}

ComplexGrid apply_channel(const ResourceGrid& grid, const ChannelConfig& ch) {
    ch.validate();
    const std::size_t M = grid.subcarriers();
    const std::size_t N = grid.symbols();
    const auto& num = grid.numerology();

    ComplexGrid y(M, N);
    std::vector<cplx> doppler(N);
    std::vector<cplx> delay(M);
    for (const auto& t : ch.targets) {
        for (std::size_t n = 0; n < N; ++n) {
            doppler[n] = unit_phasor(static_cast<double>(n) * num.total_symbol_s() * t.fd_hz);
        }
        for (std::size_t m = 0; m < M; ++m) {
            delay[m] = t.beta * unit_phasor(-static_cast<double>(m) * num.scs_hz() * t.delay_s());
        }
        for (std::size_t m = 0; m < M; ++m) {
            for (std::size_t n = 0; n < N; ++n) {
                const cplx v = grid.value(m, n);
                if (v != cplx{}) y(m, n) += delay[m] * doppler[n] * v;
            }
        }
    }

    const double var = ch.noise_variance();
    if (var > 0.0) {
        for (std::size_t m = 0; m < M; ++m) {
            for (std::size_t n = 0; n < N; ++n) {
                y(m, n) += counter_gaussian(ch.noise_seed, m * N + n, var);
            }
        }
    }
    return y;
}

}  // namespace isac
