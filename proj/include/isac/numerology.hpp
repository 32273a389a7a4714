#pragma once

#include <cstddef>

namespace isac {

/// Speed of light in vacuum (m/s).
inline constexpr double kSpeedOfLight = 299'792'458.0;

/// Subcarriers per physical resource block.
inline constexpr std::size_t kSubcarriersPerPrb = 12;
/// OFDM symbols per slot (normal CP).
inline constexpr std::size_t kSymbolsPerSlot = 14;

/// OFDM timing and carrier parameters.
///
/// Immutable once constructed; the constructor rejects non-positive spacing or
/// carrier and negative CP ratios with std::invalid_argument.
class Numerology {
public:
    /// NR normal cyclic prefix, ignoring the longer first symbol of each half-subframe.
    static constexpr double kNormalCpRatio = 144.0 / 2048.0;

    Numerology(double scs_hz, double fc_hz, double cp_ratio = kNormalCpRatio);

    double scs_hz() const { return scs_hz_; }
    double fc_hz() const { return fc_hz_; }
    double cp_ratio() const { return cp_ratio_; }

    /// Useful symbol duration T_s = 1/scs.
    double symbol_s() const { return 1.0 / scs_hz_; }
    double cp_s() const { return cp_ratio_ / scs_hz_; }
    /// Total symbol duration including CP.
    double total_symbol_s() const { return (1.0 + cp_ratio_) / scs_hz_; }

private:
    double scs_hz_;
    double fc_hz_;
    double cp_ratio_;
};

/// Range bin width of an M-subcarrier periodogram: c / (scs * M).
double range_resolution(const Numerology& num, std::size_t m_subcarriers);
/// Unambiguous bistatic range c / scs.
double max_range(const Numerology& num);
/// Doppler bin width over N symbols: 1 / (T_0 * N).
double doppler_resolution(const Numerology& num, std::size_t n_symbols);
/// Unambiguous Doppler span 1 / T_0.
double max_doppler(const Numerology& num);

}  // namespace isac
