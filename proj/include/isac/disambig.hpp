#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "isac/estimator.hpp"
#include "isac/grid.hpp"
#include "isac/peaks.hpp"

namespace isac::disambig {

/// How the DMRS rows of several PDSCH PRBs enter the row combination for one
/// offset m'.
enum class DmrsRowMode {
    /// Every PRS row is paired with the m' row of every PDSCH PRB; all pair
    /// spectra are averaged. Insensitive to the per-PRB delay phase ramp.
    PerPrb,
    /// The m' rows of all PDSCH PRBs are averaged into one row before pairing.
    /// Only coherent when 12 * scs * tau is close to an integer.
    Average,
};

struct Options {
    DmrsRowMode mode = DmrsRowMode::PerPrb;
    /// Peak separation in bins; 0 selects default_guard().
    std::size_t guard = 0;
};

/// One averaged spectrum per DMRS offset m'.
struct CombinedRowSet {
    std::vector<int> offsets;
    std::vector<std::vector<double>> spectra;
};

/// max(2, ceil(N / (4 * comb))): keeps a true peak and its nearest comb alias apart.
std::size_t default_guard(std::size_t n_symbols, int comb_size);

/// Element-wise sum of a PRS row and a DMRS row; the shorter one is zero-padded
/// at the end to the longer length.
std::vector<cplx> combine_rows(std::span<const cplx> prs_row, std::span<const cplx> dmrs_row);

/// Time-domain average of DMRS rows 12p + m' over the PDSCH PRBs.
std::vector<cplx> averaged_dmrs_row(const DivGrid& g_dmrs, const DmrsConfig& dmrs, int m_prime);

/// Averaged magnitude spectrum |DFT(g_prs row m + g_dmrs row)| over the PRS-bearing rows m.
std::vector<double> combined_doppler_spectrum(const DivGrid& g_prs, const DivGrid& g_dmrs, const DmrsConfig& dmrs,
                                              int m_prime, DmrsRowMode mode = DmrsRowMode::PerPrb);

CombinedRowSet combined_spectra(const DivGrid& g_prs, const DivGrid& g_dmrs, const DmrsConfig& dmrs,
                                DmrsRowMode mode = DmrsRowMode::PerPrb);

/// Bin-wise product over all m' spectra (log domain, floor 1e-300; exact zeros stay zero).
std::vector<double> product_spectrum(const CombinedRowSet& rows);

struct Result {
    CombinedRowSet rows;
    std::vector<double> product;
    /// PRS-only Doppler profile of the same capture, for comparison.
    Profile prs_only;
    PeakSet peaks;
    /// Doppler estimates in Hz, strongest first.
    std::vector<double> dopplers_hz;
    double bin_width_hz = 0.0;
};

/// Full pipeline: divide per signal, combine rows per m', multiply, pick peaks,
/// map bins through f = d / (T_0 N).
Result disambiguate_doppler(const ComplexGrid& y, const ResourceGrid& grid, const IsacLayout& layout, std::size_t k,
                            const Options& opts = {});

}  // namespace isac::disambig
