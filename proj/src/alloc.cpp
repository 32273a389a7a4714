#include "isac/alloc.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "isac/numerology.hpp"

namespace isac::alloc {

namespace {

struct Composition {
    std::vector<std::size_t> parts;  // parts[0] is the communication share
    double penalty;                  // sum_k gamma_k / parts[k]
};

// Compositions of `total` into k+1 positive parts, with parts[1..k] in
// lexicographic order and parts[0] taking the remainder.
std::vector<Composition> compositions(std::size_t total, std::size_t k, const std::vector<double>& gamma) {
    std::vector<Composition> out;
    std::vector<std::size_t> parts(k + 1, 1);
    auto rec = [&](auto&& self, std::size_t idx, std::size_t remaining) -> void {
        if (idx > k) {
            parts[0] = remaining;
            double pen = 0.0;
            for (std::size_t i = 1; i <= k; ++i) pen += gamma[i - 1] / static_cast<double>(parts[i]);
            out.push_back({parts, pen});
            return;
        }
        // Leave at least one unit for each later target and for parts[0].
        const std::size_t reserve = k - idx + 1;
        for (std::size_t v = 1; v + reserve <= remaining; ++v) {
            parts[idx] = v;
            self(self, idx + 1, remaining - v);
        }
    };
    rec(rec, 1, total);
    return out;
}

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t r) {
    if (r > n) return 0;
    r = std::min(r, n - r);
    long double acc = 1.0L;
    for (std::uint64_t i = 1; i <= r; ++i) {
        acc = acc * static_cast<long double>(n - r + i) / static_cast<long double>(i);
        if (acc > static_cast<long double>(std::numeric_limits<std::uint64_t>::max() / 2)) {
            return std::numeric_limits<std::uint64_t>::max();
        }
    }
    return static_cast<std::uint64_t>(std::llround(static_cast<double>(acc)));
}

}  // namespace

void Problem::validate() const {
    if (k == 0) throw std::invalid_argument("allocation.k must be >= 1");
    if (m_max < k + 1) throw std::invalid_argument("allocation.m_max_prbs must be >= k + 1");
    if (n_max < k + 1) throw std::invalid_argument("allocation.n_max_slots must be >= k + 1");
    if (gamma_range.size() != k || gamma_doppler.size() != k) {
        throw std::invalid_argument("allocation: one range and one Doppler weight per target required");
    }
    auto bad = [](double w) { return !(w >= 0.0) || !std::isfinite(w); };
    if (bad(alpha0)) throw std::invalid_argument("allocation.alpha0 must be finite and >= 0");
    for (double g : gamma_range) {
        if (bad(g)) throw std::invalid_argument("allocation.gamma_range must be finite and >= 0");
    }
    for (double g : gamma_doppler) {
        if (bad(g)) throw std::invalid_argument("allocation.gamma_doppler must be finite and >= 0");
    }
}

double throughput_per_prb_slot(std::size_t dmrs_res_per_prb_slot, int bits_per_symbol, double code_rate) {
    constexpr std::size_t kResPerPrbSlot = kSubcarriersPerPrb * kSymbolsPerSlot;
    if (dmrs_res_per_prb_slot > kResPerPrbSlot) throw std::invalid_argument("throughput: too many DMRS REs");
    if (bits_per_symbol <= 0) throw std::invalid_argument("throughput: bits_per_symbol must be positive");
    if (!(code_rate > 0.0 && code_rate <= 1.0)) throw std::invalid_argument("throughput: code rate must be in (0, 1]");
    return static_cast<double>(kResPerPrbSlot - dmrs_res_per_prb_slot) * bits_per_symbol * code_rate;
}

double throughput_per_prb_slot(const DmrsConfig& dmrs, int bits_per_symbol, double code_rate) {
    const std::size_t per_prb = refsig::dmrs_offsets(dmrs.config_type).size() * refsig::dmrs_symbols(dmrs).size();
    return throughput_per_prb_slot(per_prb, bits_per_symbol, code_rate);
}

double objective(const Problem& p, std::span<const std::size_t> m, std::span<const std::size_t> n) {
    p.validate();
    if (m.size() != p.k + 1 || n.size() != p.k + 1) throw std::invalid_argument("objective: need k + 1 shares");
    std::size_t sm = 0;
    std::size_t sn = 0;
    for (std::size_t i = 0; i <= p.k; ++i) {
        if (m[i] < 1 || m[i] > p.m_max - 1 || n[i] < 1 || n[i] > p.n_max - 1) {
            throw std::invalid_argument("objective: every share must lie in [1, max - 1]");
        }
        sm += m[i];
        sn += n[i];
    }
    if (sm != p.m_max || sn != p.n_max) throw std::invalid_argument("objective: shares must sum to the budgets");

    double f = p.alpha0 * static_cast<double>(m[0]) * static_cast<double>(n[0]) /
               (static_cast<double>(p.m_max) * static_cast<double>(p.n_max));
    for (std::size_t i = 1; i <= p.k; ++i) {
        f -= p.gamma_range[i - 1] / static_cast<double>(m[i]) + p.gamma_doppler[i - 1] / static_cast<double>(n[i]);
    }
    return f;
}

std::uint64_t candidate_count(const Problem& p) {
    const auto a = binomial_saturating(p.m_max - 1, p.k);
    const auto b = binomial_saturating(p.n_max - 1, p.k);
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

Solution solve(const Problem& p) {
    p.validate();
    if (candidate_count(p) > kMaxCandidates) {
        throw std::invalid_argument("solve: search space exceeds 1e8 candidate points");
    }
    const auto ms = compositions(p.m_max, p.k, p.gamma_range);
    const auto ns = compositions(p.n_max, p.k, p.gamma_doppler);
    const double scale = p.alpha0 / (static_cast<double>(p.m_max) * static_cast<double>(p.n_max));

    const Composition* best_m = nullptr;
    const Composition* best_n = nullptr;
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& cm : ms) {
        for (const auto& cn : ns) {
            const double f = scale * static_cast<double>(cm.parts[0]) * static_cast<double>(cn.parts[0]) -
                             cm.penalty - cn.penalty;
            bool take = best_m == nullptr;
            const double tol = take ? 0.0 : 1e-12 * std::max(1.0, std::abs(best));
            if (!take && f > best + tol) {
                take = true;
            } else if (!take && std::abs(f - best) <= tol) {
                take = cm.parts[0] > best_m->parts[0] ||
                       (cm.parts[0] == best_m->parts[0] && cn.parts[0] > best_n->parts[0]);
            }
            if (take) {
                best = f;
                best_m = &cm;
                best_n = &cn;
            }
        }
    }
    Solution s{best_m->parts, best_n->parts, 0.0};
    s.f_value = objective(p, s.m, s.n);
    return s;
}

std::vector<SurfacePoint> objective_surface(const Problem& p) {
    p.validate();
    if (p.k != 1) throw std::invalid_argument("objective_surface: single-target problems only");
    std::vector<SurfacePoint> out;
    out.reserve((p.m_max - 1) * (p.n_max - 1));
    for (std::size_t m1 = 1; m1 < p.m_max; ++m1) {
        for (std::size_t n1 = 1; n1 < p.n_max; ++n1) {
            const std::size_t m[2] = {p.m_max - m1, m1};
            const std::size_t n[2] = {p.n_max - n1, n1};
            out.push_back({m1, n1, objective(p, m, n)});
        }
    }
    return out;
}

}  // namespace isac::alloc
