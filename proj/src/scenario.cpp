#include "isac/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace isac {

namespace {

using json = nlohmann::json;

const json& field(const json& obj, const std::string& path, const char* key) {
    const std::string full = path + "." + key;
    if (!obj.is_object()) throw ConfigError(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw ConfigError(full, "missing required field");
    return *it;
}

template <typename T>
T get(const json& obj, const std::string& path, const char* key) {
    const json& v = field(obj, path, key);
    try {
        if constexpr (std::is_unsigned_v<T>) {
            if (!v.is_number_unsigned()) throw ConfigError(path + "." + key, "expected a non-negative integer");
        } else if constexpr (std::is_integral_v<T>) {
            if (!v.is_number_integer()) throw ConfigError(path + "." + key, "expected an integer");
        } else if constexpr (std::is_floating_point_v<T>) {
            if (!v.is_number()) throw ConfigError(path + "." + key, "expected a number");
        }
        return v.get<T>();
    } catch (const json::exception& e) {
        throw ConfigError(path + "." + key, e.what());
    }
}

template <typename T>
T get_or(const json& obj, const std::string& path, const char* key, T fallback) {
    if (!obj.contains(key)) return fallback;
    return get<T>(obj, path, key);
}

Allocation parse_alloc(const json& j, const std::string& path) {
    Allocation a;
    a.prb_offset = get<std::size_t>(j, path, "prb_offset");
    a.num_prbs = get<std::size_t>(j, path, "num_prbs");
    a.slot_offset = get_or<std::size_t>(j, path, "slot_offset", 0);
    a.num_slots = get<std::size_t>(j, path, "num_slots");
    return a;
}

// Runs a module validator and reattributes its error to `path`.
template <typename F>
void validated(const std::string& path, F&& fn) {
    try {
        fn();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(path, e.what());
    }
}

Numerology parse_numerology(const json& j) {
    const std::string p = "numerology";
    const double scs = get<double>(j, p, "scs_hz");
    const double fc = get<double>(j, p, "fc_hz");
    const double cp = get_or<double>(j, p, "cp_ratio", Numerology::kNormalCpRatio);
    std::optional<Numerology> num;
    validated(p, [&] { num.emplace(scs, fc, cp); });
    return *num;
}

IsacLayout parse_layout(const json& j) {
    const std::string p = "layout";
    IsacLayout l;
    l.num_prbs = get<std::size_t>(j, p, "num_prbs");
    l.num_slots = get<std::size_t>(j, p, "num_slots");
    l.data_seed = get_or<std::uint64_t>(j, p, "data_seed", 0);
    if (j.contains("prs")) {
        const auto& jp = j["prs"];
        const std::string pp = p + ".prs";
        PrsConfig c;
        c.comb_size = get<int>(jp, pp, "comb_size");
        if (c.comb_size != 2 && c.comb_size != 4 && c.comb_size != 6 && c.comb_size != 12) {
            throw ConfigError(pp + ".comb_size", "expected one of 2, 4, 6, 12");
        }
        c.num_symbols = get<int>(jp, pp, "num_symbols");
        c.start_symbol = get_or<int>(jp, pp, "start_symbol", 2);
        c.alloc = parse_alloc(jp, pp);
        c.seq_id = get_or<std::uint32_t>(jp, pp, "seq_id", 0);
        validated(pp, [&] { c.validate(); });
        l.prs = c;
    }
    if (j.contains("pdsch")) {
        const auto& jd = j["pdsch"];
        const std::string pd = p + ".pdsch";
        DmrsConfig c;
        c.config_type = get<int>(jd, pd, "dmrs_config_type");
        const auto mapping = get_or<std::string>(jd, pd, "mapping_type", "A");
        if (mapping != "A" && mapping != "B") throw ConfigError(pd + ".mapping_type", "expected \"A\" or \"B\"");
        c.mapping_type = mapping == "A" ? DmrsMapping::A : DmrsMapping::B;
        c.front_load_len = get_or<int>(jd, pd, "front_load_len", 2);
        c.num_additional_positions = get_or<int>(jd, pd, "num_additional_positions", 1);
        c.alloc = parse_alloc(jd, pd);
        c.seq_id = get_or<std::uint32_t>(jd, pd, "seq_id", 1);
        validated(pd, [&] { c.validate(); });
        l.pdsch = c;
    }
    validated(p, [&] { l.validate(); });
    return l;
}

ChannelConfig parse_channel(const json& j) {
    const std::string p = "channel";
    ChannelConfig c;
    const json& snr = field(j, p, "snr_db");
    if (!snr.is_null()) {
        if (!snr.is_number()) throw ConfigError(p + ".snr_db", "expected a number or null");
        c.snr_db = snr.get<double>();
    }
    c.noise_seed = get_or<std::uint64_t>(j, p, "noise_seed", 0);
    const json& targets = field(j, p, "targets");
    if (!targets.is_array()) throw ConfigError(p + ".targets", "expected an array");
    for (std::size_t i = 0; i < targets.size(); ++i) {
        const std::string tp = p + ".targets[" + std::to_string(i) + "]";
        Target t;
        t.beta = {get_or<double>(targets[i], tp, "beta_re", 1.0), get_or<double>(targets[i], tp, "beta_im", 0.0)};
        t.r_tot_m = get<double>(targets[i], tp, "r_tot_m");
        t.fd_hz = get<double>(targets[i], tp, "fd_hz");
        validated(tp, [&] { t.validate(); });
        c.targets.push_back(t);
    }
    validated(p, [&] { c.validate(); });
    return c;
}

EstimationSettings parse_estimation(const json& j) {
    const std::string p = "estimation";
    EstimationSettings e;
    e.m_a = get_or<std::size_t>(j, p, "m_a", 1);
    e.n_a = get_or<std::size_t>(j, p, "n_a", 1);
    e.k_peaks = get_or<std::size_t>(j, p, "k_peaks", 2);
    e.guard_bins = get_or<std::size_t>(j, p, "guard_bins", 0);
    const auto mode = get_or<std::string>(j, p, "dmrs_row_mode", "per_prb");
    if (mode == "per_prb") {
        e.dmrs_row_mode = disambig::DmrsRowMode::PerPrb;
    } else if (mode == "average") {
        e.dmrs_row_mode = disambig::DmrsRowMode::Average;
    } else {
        throw ConfigError(p + ".dmrs_row_mode", "expected \"per_prb\" or \"average\"");
    }
    if (e.m_a == 0) throw ConfigError(p + ".m_a", "must be >= 1");
    if (e.n_a == 0) throw ConfigError(p + ".n_a", "must be >= 1");
    if (e.k_peaks == 0) throw ConfigError(p + ".k_peaks", "must be >= 1");
    return e;
}

AllocationSettings parse_allocation(const json& j, const std::optional<IsacLayout>& layout) {
    const std::string p = "allocation";
    AllocationSettings a;
    auto& pr = a.problem;
    pr.m_max = get<std::size_t>(j, p, "m_max_prbs");
    pr.n_max = get<std::size_t>(j, p, "n_max_slots");
    pr.alpha0 = get<double>(j, p, "alpha0");
    pr.gamma_range = get<std::vector<double>>(j, p, "gamma_range");
    pr.gamma_doppler = get<std::vector<double>>(j, p, "gamma_doppler");
    pr.k = pr.gamma_range.size();
    a.bits_per_symbol = get_or<int>(j, p, "bits_per_symbol", 4);
    a.code_rate = get_or<double>(j, p, "code_rate", 490.0 / 1024.0);
    const DmrsConfig dmrs = layout && layout->pdsch ? *layout->pdsch : DmrsConfig{};
    validated(p, [&] {
        pr.validate();
        pr.r0_bits = alloc::throughput_per_prb_slot(dmrs, a.bits_per_symbol, a.code_rate);
    });
    return a;
}

}  // namespace

const Numerology& Scenario::require_numerology() const {
    if (!numerology) throw ConfigError("numerology", "missing required field");
    return *numerology;
}

const IsacLayout& Scenario::require_layout() const {
    if (!layout) throw ConfigError("layout", "missing required field");
    return *layout;
}

const ChannelConfig& Scenario::require_channel() const {
    if (!channel) throw ConfigError("channel", "missing required field");
    return *channel;
}

const AllocationSettings& Scenario::require_allocation() const {
    if (!allocation) throw ConfigError("allocation", "missing required field");
    return *allocation;
}

Scenario parse_scenario(const nlohmann::json& j) {
    if (!j.is_object()) throw ConfigError("<root>", "expected a JSON object");
    Scenario s;
    s.name = j.value("name", std::string{});
    if (j.contains("numerology")) s.numerology = parse_numerology(j["numerology"]);
    if (j.contains("layout")) s.layout = parse_layout(j["layout"]);
    if (j.contains("channel")) s.channel = parse_channel(j["channel"]);
    if (j.contains("estimation")) s.estimation = parse_estimation(j["estimation"]);
    if (j.contains("allocation")) s.allocation = parse_allocation(j["allocation"], s.layout);
    return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path.string(), "cannot open config file");
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        const auto upto = std::min<std::size_t>(e.byte, text.size());
        const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
        throw ConfigError("line " + std::to_string(line), e.what());
    }
    return parse_scenario(j);
}

}  // namespace isac
