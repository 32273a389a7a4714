#include "isac/disambig.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "isac/fft.hpp"

namespace isac::disambig {

namespace {

std::vector<std::size_t> dmrs_rows(const DivGrid& g_dmrs, const DmrsConfig& dmrs, int m_prime) {
    std::vector<std::size_t> rows;
    for (std::size_t p = dmrs.alloc.prb_offset; p < dmrs.alloc.prb_offset + dmrs.alloc.num_prbs; ++p) {
        const std::size_t m = p * kSubcarriersPerPrb + static_cast<std::size_t>(m_prime);
        if (m >= g_dmrs.rows()) throw std::invalid_argument("disambig: DMRS allocation exceeds the grid");
        rows.push_back(m);
    }
    return rows;
}

void check_inputs(const DivGrid& g_prs, const DivGrid& g_dmrs, int m_prime, int config_type) {
    if (!g_prs.g.same_shape(g_dmrs.g)) throw std::invalid_argument("disambig: PRS and DMRS grids differ in shape");
    const auto offsets = refsig::dmrs_offsets(config_type);
    if (std::find(offsets.begin(), offsets.end(), m_prime) == offsets.end()) {
        throw std::invalid_argument("disambig: m' is not a DMRS offset of this configuration");
    }
}

}  // namespace

std::size_t default_guard(std::size_t n_symbols, int comb_size) {
    const auto denom = 4 * static_cast<std::size_t>(std::max(comb_size, 1));
    return std::max<std::size_t>(2, (n_symbols + denom - 1) / denom);
}

std::vector<cplx> combine_rows(std::span<const cplx> prs_row, std::span<const cplx> dmrs_row) {
    std::vector<cplx> out(std::max(prs_row.size(), dmrs_row.size()));
    std::copy(prs_row.begin(), prs_row.end(), out.begin());
    for (std::size_t n = 0; n < dmrs_row.size(); ++n) out[n] += dmrs_row[n];
    return out;
}

std::vector<cplx> averaged_dmrs_row(const DivGrid& g_dmrs, const DmrsConfig& dmrs, int m_prime) {
    const auto rows = dmrs_rows(g_dmrs, dmrs, m_prime);
    std::vector<cplx> out(g_dmrs.cols());
    for (std::size_t m : rows) {
        const auto r = g_dmrs.g.row(m);
        for (std::size_t n = 0; n < out.size(); ++n) out[n] += r[n];
    }
    for (auto& x : out) x /= static_cast<double>(rows.size());
    return out;
}

std::vector<double> combined_doppler_spectrum(const DivGrid& g_prs, const DivGrid& g_dmrs, const DmrsConfig& dmrs,
                                              int m_prime, DmrsRowMode mode) {
    check_inputs(g_prs, g_dmrs, m_prime, dmrs.config_type);
    const std::size_t M = g_prs.rows();
    const std::size_t N = g_prs.cols();
    if (M == 0 || N == 0) return std::vector<double>(N, 0.0);

    // The DFT is linear, so |DFT(prs + dmrs)| = |DFT(prs) + DFT(dmrs)|.
    Dft dft(N, Dft::Direction::Forward);
    std::vector<std::vector<cplx>> dmrs_spectra;
    if (mode == DmrsRowMode::Average) {
        dmrs_spectra.emplace_back(N);
        dft.run(averaged_dmrs_row(g_dmrs, dmrs, m_prime), dmrs_spectra.back());
    } else {
        for (std::size_t m : dmrs_rows(g_dmrs, dmrs, m_prime)) {
            dmrs_spectra.emplace_back(N);
            dft.run(g_dmrs.g.row(m), dmrs_spectra.back());
        }
    }

    PairwiseAccumulator acc(N);
    std::vector<cplx> prs_spec(N);
    for (std::size_t m = 0; m < M; ++m) {
        if (g_prs.row_empty(m)) continue;
        dft.run(g_prs.g.row(m), prs_spec);
        for (const auto& d_spec : dmrs_spectra) {
            std::vector<double> mag(N);
            for (std::size_t d = 0; d < N; ++d) mag[d] = std::abs(prs_spec[d] + d_spec[d]);
            acc.add(std::move(mag));
        }
    }
    auto out = acc.sum();
    const double scale = 1.0 / (static_cast<double>(M) * static_cast<double>(dmrs_spectra.size()));
    for (auto& x : out) x *= scale;
    return out;
}

CombinedRowSet combined_spectra(const DivGrid& g_prs, const DivGrid& g_dmrs, const DmrsConfig& dmrs,
                                DmrsRowMode mode) {
    CombinedRowSet set;
    for (int off : refsig::dmrs_offsets(dmrs.config_type)) {
        set.offsets.push_back(off);
        set.spectra.push_back(combined_doppler_spectrum(g_prs, g_dmrs, dmrs, off, mode));
    }
    return set;
}

std::vector<double> product_spectrum(const CombinedRowSet& rows) {
    if (rows.spectra.empty()) throw std::invalid_argument("product_spectrum: no spectra");
    const std::size_t N = rows.spectra.front().size();
    for (const auto& s : rows.spectra) {
        if (s.size() != N) throw std::invalid_argument("product_spectrum: spectra differ in length");
    }
    if (rows.spectra.size() == 1) return rows.spectra.front();

    constexpr double kFloor = 1e-300;
    std::vector<double> out(N);
    for (std::size_t d = 0; d < N; ++d) {
        double log_sum = 0.0;
        bool zero = false;
        for (const auto& s : rows.spectra) {
            if (s[d] == 0.0) {
                zero = true;
                break;
            }
            log_sum += std::log(std::max(s[d], kFloor));
        }
        out[d] = zero ? 0.0 : std::exp(log_sum);
    }
    return out;
}

Result disambiguate_doppler(const ComplexGrid& y, const ResourceGrid& grid, const IsacLayout& layout, std::size_t k,
                            const Options& opts) {
    if (!layout.prs || !layout.pdsch) {
        throw std::invalid_argument("disambiguate_doppler: layout needs both PRS and PDSCH");
    }
    const auto g_prs = pointwise_divide(y, grid, ReKind::Prs);
    const auto g_dmrs = pointwise_divide(y, grid, ReKind::Dmrs);

    Result r;
    r.rows = combined_spectra(g_prs, g_dmrs, *layout.pdsch, opts.mode);
    r.product = product_spectrum(r.rows);
    r.prs_only = doppler_profile(g_prs);
    r.bin_width_hz = doppler_resolution(grid.numerology(), grid.symbols());

    const std::size_t guard = opts.guard ? opts.guard : default_guard(grid.symbols(), layout.prs->comb_size);
    r.peaks = pick_peaks(r.product, k, guard);
    for (const auto& p : r.peaks.peaks) r.dopplers_hz.push_back(static_cast<double>(p.bin) * r.bin_width_hz);
    return r;
}

}  // namespace isac::disambig
