#include "isac/peaks.hpp"

#include <algorithm>
#include <stdexcept>

namespace isac {

std::size_t circular_distance(std::size_t a, std::size_t b, std::size_t length) {
    const std::size_t d = a > b ? a - b : b - a;
    return std::min(d, length - d);
}

PeakSet pick_peaks(std::span<const double> spectrum, std::size_t k, std::size_t guard) {
    if (k == 0) throw std::invalid_argument("pick_peaks: k must be >= 1");
    if (guard == 0) throw std::invalid_argument("pick_peaks: guard must be >= 1");
    PeakSet out;
    out.guard = guard;
    const std::size_t L = spectrum.size();

    std::vector<Peak> candidates;
    if (L == 1) {
        candidates.push_back({0, spectrum[0]});
    } else {
        for (std::size_t i = 0; i < L; ++i) {
            const double left = spectrum[(i + L - 1) % L];
            const double right = spectrum[(i + 1) % L];
            if (spectrum[i] > left && spectrum[i] >= right) candidates.push_back({i, spectrum[i]});
        }
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Peak& a, const Peak& b) { return a.magnitude > b.magnitude; });

    for (const auto& c : candidates) {
        if (out.peaks.size() == k) break;
        const bool clear = std::all_of(out.peaks.begin(), out.peaks.end(), [&](const Peak& p) {
            return circular_distance(p.bin, c.bin, L) >= guard;
        });
        if (clear) out.peaks.push_back(c);
    }
    out.incomplete = out.peaks.size() < k;
    return out;
}

}  // namespace isac
