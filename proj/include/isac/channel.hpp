#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "isac/complex_grid.hpp"
#include "isac/grid.hpp"

namespace isac {

/// LOS point target seen through a bistatic path.
struct Target {
    cplx beta{1.0, 0.0};
    double r_tot_m = 0.0;
    double fd_hz = 0.0;

    double delay_s() const { return r_tot_m / kSpeedOfLight; }
    void validate() const;
};

struct ChannelConfig {
    std::vector<Target> targets;
    /// Per-RE SNR |beta_1|^2 / (2 sigma^2). Empty means a noiseless channel.
    std::optional<double> snr_db;
    std::uint64_t noise_seed = 0;

    /// Complex noise variance 2 sigma^2 (zero when noiseless).
    double noise_variance() const;
    void validate() const;
};

/// y(m,n) = sum_k beta_k e^{j2pi n T_0 fd_k} e^{-j2pi m scs tau_k} v(m,n) + q(m,n).
///
/// Noise is derived per RE from (noise_seed, m, n) with a counter-based
/// generator, so the result does not depend on evaluation order.
ComplexGrid apply_channel(const ResourceGrid& grid, const ChannelConfig& ch);

/// Circular complex Gaussian sample with total variance `variance` for RE `index`.
cplx counter_gaussian(std::uint64_t seed, std::uint64_t index, double variance);

}  // namespace isac
