#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "isac/complex_grid.hpp"
#include "isac/numerology.hpp"
#include "isac/refsig.hpp"

namespace isac {

/// Placement of PRS (sensing) and PDSCH with embedded DMRS (communication) on
/// a num_prbs x num_slots grid. The two allocations must not overlap; they may
/// be split in frequency, in time, or both.
struct IsacLayout {
    std::size_t num_prbs = 1;
    std::size_t num_slots = 1;
    std::optional<PrsConfig> prs;
    std::optional<DmrsConfig> pdsch;
    std::uint64_t data_seed = 0;

    std::size_t num_subcarriers() const { return num_prbs * kSubcarriersPerPrb; }
    std::size_t num_symbols() const { return num_slots * kSymbolsPerSlot; }

    void validate() const;
};

/// Transmitted symbols v(m, n) together with the kind of every RE.
class ResourceGrid {
public:
    ResourceGrid(Numerology num, std::size_t subcarriers, std::size_t symbols);

    const Numerology& numerology() const { return num_; }
    std::size_t subcarriers() const { return symbols_.rows(); }
    std::size_t symbols() const { return symbols_.cols(); }

    const ComplexGrid& values() const { return symbols_; }
    cplx value(std::size_t m, std::size_t n) const { return symbols_(m, n); }
    ReKind kind(std::size_t m, std::size_t n) const { return kinds_[m * symbols_.cols() + n]; }

    /// Writes one RE. Empty REs are forced to zero; other kinds must be nonzero.
    void set(std::size_t m, std::size_t n, ReKind kind, cplx value);

    friend bool operator==(const ResourceGrid& a, const ResourceGrid& b) {
        return a.symbols_ == b.symbols_ && a.kinds_ == b.kinds_;
    }

private:
    Numerology num_;
    ComplexGrid symbols_;
    std::vector<ReKind> kinds_;
};

/// Fills PRS and DMRS from their sequences and the remaining PDSCH REs with
/// unit-power 16-QAM drawn from layout.data_seed. Throws std::invalid_argument
/// on out-of-range or overlapping allocations.
ResourceGrid build_grid(const Numerology& num, const IsacLayout& layout);

std::size_t re_density(const ResourceGrid& grid, ReKind kind);

}  // namespace isac
