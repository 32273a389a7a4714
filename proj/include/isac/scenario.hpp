#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include "isac/alloc.hpp"
#include "isac/channel.hpp"
#include "isac/disambig.hpp"
#include "isac/grid.hpp"
#include "isac/numerology.hpp"

#include <json.hpp>

namespace isac {

/// Config validation failure; `field()` is the dotted JSON path (or "line N" for syntax errors).
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string& what)
        : std::runtime_error(field + ": " + what), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

struct EstimationSettings {
    std::size_t m_a = 1;
    std::size_t n_a = 1;
    std::size_t k_peaks = 2;
    /// 0 selects the per-pipeline default.
    std::size_t guard_bins = 0;
    disambig::DmrsRowMode dmrs_row_mode = disambig::DmrsRowMode::PerPrb;
};

struct AllocationSettings {
    alloc::Problem problem;
    int bits_per_symbol = 4;
    double code_rate = 490.0 / 1024.0;
};

/// One experiment: every block is optional at parse time and demanded by the
/// subcommand that needs it (see require_*).
struct Scenario {
    std::string name;
    std::optional<Numerology> numerology;
    std::optional<IsacLayout> layout;
    std::optional<ChannelConfig> channel;
    EstimationSettings estimation;
    std::optional<AllocationSettings> allocation;

    const Numerology& require_numerology() const;
    const IsacLayout& require_layout() const;
    const ChannelConfig& require_channel() const;
    const AllocationSettings& require_allocation() const;
};

Scenario parse_scenario(const nlohmann::json& j);
/// Reads and parses a JSON file; syntax errors report the line number.
Scenario load_scenario(const std::filesystem::path& path);

}  // namespace isac
