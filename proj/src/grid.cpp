#include "isac/grid.hpp"

#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

namespace isac {

namespace {

void check_inside(const Allocation& a, const IsacLayout& layout, const char* who) {
    if (a.prb_offset + a.num_prbs > layout.num_prbs) {
        throw std::invalid_argument(std::string(who) + ": PRB range exceeds layout.num_prbs");
    }
    if (a.slot_offset + a.num_slots > layout.num_slots) {
        throw std::invalid_argument(std::string(who) + ": slot range exceeds layout.num_slots");
    }
}

// Writes one reference signal: REs grouped per OFDM symbol, each symbol gets its
// own sequence indexed in increasing subcarrier order.
void place_reference(ResourceGrid& grid, const std::vector<ReIndex>& res, ReKind kind, std::uint32_t seq_id) {
    std::vector<std::vector<std::size_t>> per_symbol(grid.symbols());
    for (const auto& re : res) per_symbol[re.symbol].push_back(re.subcarrier);
    for (std::size_t n = 0; n < per_symbol.size(); ++n) {
        const auto& ks = per_symbol[n];
        if (ks.empty()) continue;
        const auto seq = refsig::symbol_sequence(seq_id, n / kSymbolsPerSlot, n % kSymbolsPerSlot, ks.size());
        for (std::size_t i = 0; i < ks.size(); ++i) {
            if (grid.kind(ks[i], n) != ReKind::Empty) {
                throw std::invalid_argument("build_grid: reference signals collide on the same RE");
            }
            grid.set(ks[i], n, kind, seq[i]);
        }
    }
}

}  // namespace

void IsacLayout::validate() const {
    if (num_prbs == 0) throw std::invalid_argument("layout.num_prbs must be >= 1");
    if (num_slots == 0) throw std::invalid_argument("layout.num_slots must be >= 1");
    if (prs) {
        prs->validate();
        check_inside(prs->alloc, *this, "layout.prs");
    }
    if (pdsch) {
        pdsch->validate();
        check_inside(pdsch->alloc, *this, "layout.pdsch");
    }
    if (prs && pdsch && prs->alloc.overlaps(pdsch->alloc)) {
        throw std::invalid_argument("layout: PRS and PDSCH allocations overlap");
    }
}

ResourceGrid::ResourceGrid(Numerology num, std::size_t subcarriers, std::size_t symbols)
    : num_(num), symbols_(subcarriers, symbols), kinds_(subcarriers * symbols, ReKind::Empty) {}

void ResourceGrid::set(std::size_t m, std::size_t n, ReKind kind, cplx value) {
    if (m >= subcarriers() || n >= symbols()) throw std::out_of_range("ResourceGrid::set: index out of range");
    if (kind == ReKind::Empty) {
        value = 0.0;
    } else if (value == cplx{}) {
        throw std::invalid_argument("ResourceGrid::set: occupied RE must carry a nonzero symbol");
    }
    symbols_(m, n) = value;
    kinds_[m * symbols_.cols() + n] = kind;
}

ResourceGrid build_grid(const Numerology& num, const IsacLayout& layout) {
    layout.validate();
    ResourceGrid grid(num, layout.num_subcarriers(), layout.num_symbols());

    if (layout.prs) {
        place_reference(grid, refsig::prs_re_positions(*layout.prs), ReKind::Prs, layout.prs->seq_id);
    }
    if (layout.pdsch) {
        const auto& cfg = *layout.pdsch;
        place_reference(grid, refsig::dmrs_re_positions(cfg), ReKind::Dmrs, cfg.seq_id);

        // Gray-mapped 16-QAM per axis, unit average power.
        const double a = 1.0 / std::sqrt(10.0);
        constexpr std::array<double, 4> kLevels{1.0, 3.0, -1.0, -3.0};
        std::mt19937_64 rng(layout.data_seed);
        std::uint64_t word = 0;
        int bits_left = 0;

        const std::size_t k0 = cfg.alloc.prb_offset * kSubcarriersPerPrb;
        const std::size_t k1 = k0 + cfg.alloc.num_prbs * kSubcarriersPerPrb;
        const std::size_t n0 = cfg.alloc.slot_offset * kSymbolsPerSlot;
        const std::size_t n1 = n0 + cfg.alloc.num_slots * kSymbolsPerSlot;
        for (std::size_t n = n0; n < n1; ++n) {
            for (std::size_t k = k0; k < k1; ++k) {
                if (grid.kind(k, n) != ReKind::Empty) continue;
                if (bits_left < 4) {
                    word = rng();
                    bits_left = 64;
                }
                const auto i = static_cast<std::size_t>(word & 3u);
                const auto q = static_cast<std::size_t>((word >> 2) & 3u);
                word >>= 4;
                bits_left -= 4;
                grid.set(k, n, ReKind::Data, {a * kLevels[i], a * kLevels[q]});
            }
        }
    }
    return grid;
}

std::size_t re_density(const ResourceGrid& grid, ReKind kind) {
    std::size_t count = 0;
    for (std::size_t m = 0; m < grid.subcarriers(); ++m) {
        for (std::size_t n = 0; n < grid.symbols(); ++n) {
            if (grid.kind(m, n) == kind) ++count;
        }
    }
    return count;
}

}  // namespace isac
