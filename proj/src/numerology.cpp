#include "isac/numerology.hpp"

#include <cmath>
#include <stdexcept>

namespace isac {

Numerology::Numerology(double scs_hz, double fc_hz, double cp_ratio)
    : scs_hz_(scs_hz), fc_hz_(fc_hz), cp_ratio_(cp_ratio) {
    if (!(scs_hz > 0.0) || !std::isfinite(scs_hz)) {
        throw std::invalid_argument("numerology: scs_hz must be positive");
    }
    if (!(fc_hz > 0.0) || !std::isfinite(fc_hz)) {
        throw std::invalid_argument("numerology: fc_hz must be positive");
    }
    if (!(cp_ratio >= 0.0) || !std::isfinite(cp_ratio)) {
        throw std::invalid_argument("numerology: cp_ratio must be non-negative");
    }
}

double range_resolution(const Numerology& num, std::size_t m_subcarriers) {
    if (m_subcarriers == 0) {
        throw std::invalid_argument("range_resolution: zero subcarriers");
    }
    return kSpeedOfLight / (num.scs_hz() * static_cast<double>(m_subcarriers));
}

double max_range(const Numerology& num) { return range_resolution(num, 1); }

double doppler_resolution(const Numerology& num, std::size_t n_symbols) {
    if (n_symbols == 0) {
        throw std::invalid_argument("doppler_resolution: zero symbols");
    }
    // scs / (1 + cp) keeps the cp_ratio = 0 case exact.
    return num.scs_hz() / ((1.0 + num.cp_ratio()) * static_cast<double>(n_symbols));
}

double max_doppler(const Numerology& num) { return doppler_resolution(num, 1); }

}  // namespace isac
