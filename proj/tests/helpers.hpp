#pragma once

#include <random>

#include "isac/estimator.hpp"
#include "isac/grid.hpp"
#include "isac/refsig.hpp"
#include "oracle.hpp"

namespace testing_helpers {

/// Every RE occupied by a pseudo-random unit-modulus symbol (kind Prs).
inline isac::ResourceGrid full_grid(const isac::Numerology& num, std::size_t M, std::size_t N, std::uint64_t seed = 5) {
    isac::ResourceGrid g(num, M, N);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ph(0.0, 6.283185307179586);
    for (std::size_t m = 0; m < M; ++m) {
        for (std::size_t n = 0; n < N; ++n) g.set(m, n, isac::ReKind::Prs, std::polar(1.0, ph(rng)));
    }
    return g;
}

inline isac::IsacLayout reference_layout(int comb, std::size_t slots = 20, std::size_t prs_prbs = 24,
                                     std::size_t pdsch_prbs = 24) {
    isac::IsacLayout l;
    l.num_prbs = prs_prbs + pdsch_prbs;
    l.num_slots = slots;
    l.data_seed = 7;
    isac::PrsConfig p;
    p.comb_size = comb;
    p.num_symbols = 12;
    p.start_symbol = 2;
    p.alloc = {0, prs_prbs, 0, slots};
    isac::DmrsConfig d;
    d.config_type = 2;
    d.alloc = {prs_prbs, pdsch_prbs, 0, slots};
    l.prs = p;
    l.pdsch = d;
    return l;
}

/// Combined spectrum for offset m' computed row by row with the direct-sum DFT.
inline std::vector<double> reference_combined(const isac::DivGrid& gp, const isac::DivGrid& gd,
                                              const isac::DmrsConfig& d, int mp, bool average) {
    const std::size_t M = gp.rows(), N = gp.cols();
    std::vector<std::vector<oracle::cplx>> dmrs_rows;
    for (std::size_t p = d.alloc.prb_offset; p < d.alloc.prb_offset + d.alloc.num_prbs; ++p) {
        auto r = gd.g.row(p * 12 + static_cast<std::size_t>(mp));
        dmrs_rows.emplace_back(r.begin(), r.end());
    }
    if (average) {
        std::vector<oracle::cplx> avg(N);
        for (const auto& r : dmrs_rows) {
            for (std::size_t n = 0; n < N; ++n) avg[n] += r[n] / double(dmrs_rows.size());
        }
        dmrs_rows = {avg};
    }
    std::vector<std::vector<oracle::cplx>> prs_rows;
    for (std::size_t m = 0; m < M; ++m) {
        if (gp.row_empty(m)) continue;
        auto r = gp.g.row(m);
        prs_rows.emplace_back(r.begin(), r.end());
    }
    return oracle::combined_spectrum(prs_rows, dmrs_rows, N, double(M) * double(dmrs_rows.size()));
}

}  // namespace testing_helpers
