#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace isac {

struct Peak {
    std::size_t bin;
    double magnitude;
};

/// Selected peaks, strongest first, pairwise at least `guard` bins apart (circularly).
struct PeakSet {
    std::vector<Peak> peaks;
    std::size_t guard = 1;
    /// Fewer qualifying maxima than requested.
    bool incomplete = false;
};

/// Circular distance between two bins of an L-bin spectrum.
std::size_t circular_distance(std::size_t a, std::size_t b, std::size_t length);

/// Greedy top-k selection over local maxima.
///
/// A bin is a local maximum when it is strictly larger than its left neighbour
/// and not smaller than its right one (circular), so a flat-topped pair reports
/// its lower bin. Candidates are taken by descending magnitude, lower bin first
/// on ties, and skipped when closer than `guard` to an accepted peak.
PeakSet pick_peaks(std::span<const double> spectrum, std::size_t k, std::size_t guard);

}  // namespace isac
