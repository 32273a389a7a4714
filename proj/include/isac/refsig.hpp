#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "isac/complex_grid.hpp"

namespace isac {

enum class ReKind : std::uint8_t { Empty, Prs, Dmrs, Data };

const char* to_string(ReKind kind);

struct ReIndex {
    std::size_t subcarrier;
    std::size_t symbol;

    friend auto operator<=>(const ReIndex&, const ReIndex&) = default;
};

/// Rectangular PRB x slot allocation on the grid.
struct Allocation {
    std::size_t prb_offset = 0;
    std::size_t num_prbs = 1;
    std::size_t slot_offset = 0;
    std::size_t num_slots = 1;

    bool overlaps(const Allocation& other) const;
};

struct PrsConfig {
    int comb_size = 12;
    int num_symbols = 12;
    int start_symbol = 2;
    Allocation alloc;
    std::uint32_t seq_id = 0;

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;
};

enum class DmrsMapping { A, B };

struct DmrsConfig {
    int config_type = 2;
    DmrsMapping mapping_type = DmrsMapping::A;
    int front_load_len = 2;
    int num_additional_positions = 1;
    Allocation alloc;
    std::uint32_t seq_id = 1;

    void validate() const;
};

namespace refsig {

/// Length-31 Gold sequence c(0..length-1) with the NR 1600-sample burn-in.
std::vector<std::uint8_t> gold_sequence(std::uint32_t c_init, std::size_t length);

/// QPSK mapping r(m) = ((1-2c(2m)) + j(1-2c(2m+1)))/sqrt(2). Odd-length input throws.
std::vector<cplx> modulate_qpsk(std::span<const std::uint8_t> bits);

/// Per-symbol sequence seed derived from (seq_id, slot, symbol).
std::uint32_t c_init(std::uint32_t seq_id, std::size_t slot, std::size_t symbol_in_slot);

/// `count` QPSK symbols for one OFDM symbol of a reference signal.
std::vector<cplx> symbol_sequence(std::uint32_t seq_id, std::size_t slot, std::size_t symbol_in_slot,
                                  std::size_t count);

/// Comb offset per relative PRS symbol; cycles when num_symbols exceeds its length.
std::span<const int> prs_stagger(int comb_size);

/// DMRS subcarrier offsets m' within a PRB.
std::span<const int> dmrs_offsets(int config_type);

/// DMRS symbol indices within a slot.
std::vector<int> dmrs_symbols(const DmrsConfig& cfg);

/// PRS resource elements, sorted by (subcarrier, symbol).
std::vector<ReIndex> prs_re_positions(const PrsConfig& cfg);

/// DMRS resource elements, sorted by (subcarrier, symbol).
std::vector<ReIndex> dmrs_re_positions(const DmrsConfig& cfg);

}  // namespace refsig
}  // namespace isac
