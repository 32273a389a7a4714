#include "isac/refsig.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "isac/numerology.hpp"

namespace isac {

const char* to_string(ReKind kind) {
    switch (kind) {
        case ReKind::Empty: return "empty";
        case ReKind::Prs: return "prs";
        case ReKind::Dmrs: return "dmrs";
        case ReKind::Data: return "data";
    }
    return "?";
}

bool Allocation::overlaps(const Allocation& other) const {
    const bool prb = prb_offset < other.prb_offset + other.num_prbs &&
                     other.prb_offset < prb_offset + num_prbs;
    const bool slot = slot_offset < other.slot_offset + other.num_slots &&
                      other.slot_offset < slot_offset + num_slots;
    return prb && slot;
}

namespace {

void validate_alloc(const Allocation& a, const std::string& who) {
    if (a.num_prbs == 0) throw std::invalid_argument(who + ".num_prbs must be >= 1");
    if (a.num_slots == 0) throw std::invalid_argument(who + ".num_slots must be >= 1");
}

constexpr std::array<int, 2> kStagger2{0, 1};
constexpr std::array<int, 4> kStagger4{0, 2, 1, 3};
constexpr std::array<int, 6> kStagger6{0, 3, 1, 4, 2, 5};
constexpr std::array<int, 12> kStagger12{0, 6, 3, 9, 1, 7, 4, 10, 2, 8, 5, 11};

constexpr std::array<int, 6> kDmrsType1{0, 2, 4, 6, 8, 10};
constexpr std::array<int, 4> kDmrsType2{0, 1, 6, 7};

// First DMRS symbol for mapping type A (dmrs-TypeA-Position = pos2).
constexpr int kTypeAFirstSymbol = 2;

}  // namespace

void PrsConfig::validate() const {
    if (comb_size != 2 && comb_size != 4 && comb_size != 6 && comb_size != 12) {
        throw std::invalid_argument("prs.comb_size must be one of {2,4,6,12}");
    }
    if (num_symbols != 1 && num_symbols != 2 && num_symbols != 4 && num_symbols != 6 &&
        num_symbols != 12) {
        throw std::invalid_argument("prs.num_symbols must be one of {1,2,4,6,12}");
    }
    if (start_symbol < 0 || start_symbol > 13) {
        throw std::invalid_argument("prs.start_symbol must be in [0,13]");
    }
    if (start_symbol + num_symbols > static_cast<int>(kSymbolsPerSlot)) {
        throw std::invalid_argument("prs.start_symbol + prs.num_symbols must be <= 14");
    }
    validate_alloc(alloc, "prs");
}

void DmrsConfig::validate() const {
    if (config_type != 1 && config_type != 2) {
        throw std::invalid_argument("pdsch.dmrs_config_type must be 1 or 2");
    }
    if (mapping_type != DmrsMapping::A) {
        throw std::invalid_argument("pdsch.mapping_type: only type A is supported");
    }
    if (front_load_len != 1 && front_load_len != 2) {
        throw std::invalid_argument("pdsch.front_load_len must be 1 or 2");
    }
    if (num_additional_positions != 0 && num_additional_positions != 1) {
        throw std::invalid_argument("pdsch.num_additional_positions must be 0 or 1");
    }
    validate_alloc(alloc, "pdsch");
}

namespace refsig {

std::vector<std::uint8_t> gold_sequence(std::uint32_t c_init, std::size_t length) {
    constexpr std::size_t kNc = 1600;
    const std::size_t total = length + kNc + 31;
    std::vector<std::uint8_t> x1(total, 0);
    std::vector<std::uint8_t> x2(total, 0);
    x1[0] = 1;
    for (std::size_t i = 0; i < 31; ++i) {
        x2[i] = static_cast<std::uint8_t>((c_init >> i) & 1u);
    }
    for (std::size_t n = 0; n + 31 < total; ++n) {
        x1[n + 31] = (x1[n + 3] + x1[n]) & 1u;
        x2[n + 31] = (x2[n + 3] + x2[n + 2] + x2[n + 1] + x2[n]) & 1u;
    }
    std::vector<std::uint8_t> c(length);
    for (std::size_t n = 0; n < length; ++n) {
        c[n] = (x1[n + kNc] + x2[n + kNc]) & 1u;
    }
    return c;
}

std::vector<cplx> modulate_qpsk(std::span<const std::uint8_t> bits) {
    if (bits.size() % 2 != 0) {
        throw std::invalid_argument("modulate_qpsk: bit sequence length must be even");
    }
    const double a = 1.0 / std::sqrt(2.0);
    std::vector<cplx> out(bits.size() / 2);
    for (std::size_t m = 0; m < out.size(); ++m) {
        out[m] = {a * (1.0 - 2.0 * bits[2 * m]), a * (1.0 - 2.0 * bits[2 * m + 1])};
    }
    return out;
}

std::uint32_t c_init(std::uint32_t seq_id, std::size_t slot, std::size_t symbol_in_slot) {
    constexpr std::uint64_t kMod = 1ull << 31;
    const std::uint64_t t = (kSymbolsPerSlot * (slot % kMod) + symbol_in_slot + 1) % kMod;
    const std::uint64_t s = (2ull * seq_id + 1) % kMod;
    const std::uint64_t v = ((((1ull << 10) * t) % kMod) * s + seq_id) % kMod;
    return static_cast<std::uint32_t>(v);
}

std::vector<cplx> symbol_sequence(std::uint32_t seq_id, std::size_t slot, std::size_t symbol_in_slot,
                                  std::size_t count) {
    const auto bits = gold_sequence(c_init(seq_id, slot, symbol_in_slot), 2 * count);
    return modulate_qpsk(bits);
}

std::span<const int> prs_stagger(int comb_size) {
    switch (comb_size) {
        case 2: return kStagger2;
        case 4: return kStagger4;
        case 6: return kStagger6;
        case 12: return kStagger12;
        default: throw std::invalid_argument("prs_stagger: unsupported comb size");
    }
}

std::span<const int> dmrs_offsets(int config_type) {
    switch (config_type) {
        case 1: return kDmrsType1;
        case 2: return kDmrsType2;
        default: throw std::invalid_argument("dmrs_offsets: config type must be 1 or 2");
    }
}

std::vector<int> dmrs_symbols(const DmrsConfig& cfg) {
    cfg.validate();
    // Mapping type A, 14-symbol PDSCH duration, l0 = 2.
    std::vector<int> out{kTypeAFirstSymbol};
    if (cfg.front_load_len == 2) out.push_back(kTypeAFirstSymbol + 1);
    if (cfg.num_additional_positions == 1) {
        if (cfg.front_load_len == 2) {
            out.push_back(10);
            out.push_back(11);
        } else {
            out.push_back(11);
        }
    }
    return out;
}

std::vector<ReIndex> prs_re_positions(const PrsConfig& cfg) {
    cfg.validate();
    const auto stagger = prs_stagger(cfg.comb_size);
    const auto comb = static_cast<std::size_t>(cfg.comb_size);
    std::vector<ReIndex> out;
    out.reserve(cfg.alloc.num_prbs * kSubcarriersPerPrb / comb * cfg.num_symbols * cfg.alloc.num_slots);
    const std::size_t k0 = cfg.alloc.prb_offset * kSubcarriersPerPrb;
    const std::size_t k1 = k0 + cfg.alloc.num_prbs * kSubcarriersPerPrb;
    for (std::size_t k = k0; k < k1; ++k) {
        for (std::size_t s = cfg.alloc.slot_offset; s < cfg.alloc.slot_offset + cfg.alloc.num_slots; ++s) {
            for (int i = 0; i < cfg.num_symbols; ++i) {
                const auto offset = static_cast<std::size_t>(stagger[static_cast<std::size_t>(i) % stagger.size()]);
                if (k % comb == offset) {
                    out.push_back({k, s * kSymbolsPerSlot + static_cast<std::size_t>(cfg.start_symbol + i)});
                }
            }
        }
    }
    return out;
}

std::vector<ReIndex> dmrs_re_positions(const DmrsConfig& cfg) {
    const auto symbols = dmrs_symbols(cfg);
    const auto offsets = dmrs_offsets(cfg.config_type);
    std::vector<ReIndex> out;
    out.reserve(cfg.alloc.num_prbs * offsets.size() * symbols.size() * cfg.alloc.num_slots);
    for (std::size_t p = cfg.alloc.prb_offset; p < cfg.alloc.prb_offset + cfg.alloc.num_prbs; ++p) {
        for (int off : offsets) {
            const std::size_t k = p * kSubcarriersPerPrb + static_cast<std::size_t>(off);
            for (std::size_t s = cfg.alloc.slot_offset; s < cfg.alloc.slot_offset + cfg.alloc.num_slots; ++s) {
                for (int l : symbols) {
                    out.push_back({k, s * kSymbolsPerSlot + static_cast<std::size_t>(l)});
                }
            }
        }
    }
    return out;
}

}  // namespace refsig
}  // namespace isac
