#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>

#include "helpers.hpp"
#include "isac/channel.hpp"
#include "isac/disambig.hpp"
#include "oracle.hpp"

using namespace isac;
using namespace isac::disambig;

namespace {

const Numerology kNum{30e3, 4e9};

std::size_t argmax(const std::vector<double>& v) {
    return static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
}

struct Capture {
    IsacLayout layout;
    ResourceGrid grid;
    ComplexGrid y;
    DivGrid g_prs;
    DivGrid g_dmrs;
};

Capture capture(const IsacLayout& layout, std::vector<Target> targets, std::optional<double> snr = {},
                std::uint64_t seed = 0) {
    auto grid = build_grid(kNum, layout);
    ChannelConfig ch;
    ch.targets = std::move(targets);
    ch.snr_db = snr;
    ch.noise_seed = seed;
    auto y = apply_channel(grid, ch);
    auto gp = pointwise_divide(y, grid, ReKind::Prs);
    auto gd = pointwise_divide(y, grid, ReKind::Dmrs);
    return {layout, std::move(grid), std::move(y), std::move(gp), std::move(gd)};
}

double on_grid_hz(double bin, std::size_t N) { return bin / (static_cast<double>(N) * kNum.total_symbol_s()); }

}  // namespace

TEST_CASE("default guard") {
    CHECK(default_guard(280, 4) == 18);
    CHECK(default_guard(280, 12) == 6);
    CHECK(default_guard(14, 12) == 2);
}

TEST_CASE("combine_rows adds and zero-pads the shorter row") {
    const std::vector<cplx> prs{1.0, 2.0, {0.0, 1.0}, 0.0};
    const std::vector<cplx> zero(4);
    CHECK(combine_rows(prs, zero) == prs);

    std::vector<cplx> prs28(28, 1.0), dmrs14(14, 2.0);
    const auto out = combine_rows(prs28, dmrs14);
    REQUIRE(out.size() == 28);
    for (std::size_t n = 0; n < 14; ++n) CHECK(out[n] == cplx(3.0));
    for (std::size_t n = 14; n < 28; ++n) CHECK(out[n] == cplx(1.0));
    CHECK(combine_rows(dmrs14, prs28) == out);
}

TEST_CASE("combined row of a noiseless single target follows the support indicators") {
    const auto c = capture(testing_helpers::reference_layout(4, 2, 1, 1), {Target{1.0, 0.0, 3000.0}});
    const std::size_t m = 5, mp = 12 + 6;
    const auto row = combine_rows(c.g_prs.g.row(m), c.g_dmrs.g.row(mp));
    for (std::size_t n = 0; n < row.size(); ++n) {
        const cplx ph = std::polar(1.0, 2.0 * std::numbers::pi * double(n) * kNum.total_symbol_s() * 3000.0);
        const double ind = double(c.g_prs.supported(m, n)) + double(c.g_dmrs.supported(mp, n));
        CHECK(std::abs(row[n] - ph * ind) < 1e-12);
    }
}

TEST_CASE("combined spectra match the direct-sum reference") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<std::size_t> prbs(1, 2);
    std::uniform_int_distribution<std::size_t> slots(1, 2);
    std::uniform_int_distribution<int> comb_pick(0, 3);
    std::uniform_real_distribution<double> fd(-9000.0, 9000.0), rng_m(0.0, 900.0);
    const int combs[] = {2, 4, 6, 12};
    for (int trial = 0; trial < 8; ++trial) {
        auto layout = testing_helpers::reference_layout(combs[comb_pick(rng)], slots(rng), prbs(rng), prbs(rng));
        layout.pdsch->config_type = trial % 2 ? 1 : 2;
        const auto c = capture(layout, {Target{1.0, rng_m(rng), fd(rng)}, Target{{0.3, 0.4}, rng_m(rng), fd(rng)}}, 3.0,
                               static_cast<std::uint64_t>(trial));
        for (auto mode : {DmrsRowMode::PerPrb, DmrsRowMode::Average}) {
            for (int mp : refsig::dmrs_offsets(layout.pdsch->config_type)) {
                const auto got = combined_doppler_spectrum(c.g_prs, c.g_dmrs, *layout.pdsch, mp, mode);
                const auto ref = testing_helpers::reference_combined(c.g_prs, c.g_dmrs, *layout.pdsch, mp, mode == DmrsRowMode::Average);
                CHECK(oracle::max_rel_err(got, ref) < 1e-9);
            }
        }
    }
}

TEST_CASE("zero inputs give a zero spectrum") {
    const auto layout = testing_helpers::reference_layout(4, 1, 1, 1);
    const auto c = capture(layout, {});
    for (double v : combined_doppler_spectrum(c.g_prs, c.g_dmrs, *layout.pdsch, 0)) CHECK(v == 0.0);
    CHECK_THROWS_AS(combined_doppler_spectrum(c.g_prs, c.g_dmrs, *layout.pdsch, 2), std::invalid_argument);
}

TEST_CASE("average mode equals per-PRB mode for a single PDSCH PRB") {
    const auto layout = testing_helpers::reference_layout(6, 2, 2, 1);
    const auto c = capture(layout, {Target{1.0, 250.0, 2500.0}}, 5.0, 3);
    for (int mp : refsig::dmrs_offsets(2)) {
        const auto a = combined_doppler_spectrum(c.g_prs, c.g_dmrs, *layout.pdsch, mp, DmrsRowMode::Average);
        const auto b = combined_doppler_spectrum(c.g_prs, c.g_dmrs, *layout.pdsch, mp, DmrsRowMode::PerPrb);
        CHECK(oracle::max_rel_err(a, b) < 1e-12);
    }
}

TEST_CASE("averaging DMRS rows across PRBs cancels when the delay ramp wraps") {
    // 12 * scs * tau = 1/4 cycle per PRB: four PRBs sum to zero.
    const double r = kSpeedOfLight / (4.0 * 12.0 * kNum.scs_hz());
    const auto layout = testing_helpers::reference_layout(4, 2, 2, 4);
    const auto c = capture(layout, {Target{1.0, r, 0.0}});
    const auto avg = averaged_dmrs_row(c.g_dmrs, *layout.pdsch, 0);
    for (const auto& v : avg) CHECK(std::abs(v) < 1e-12);
    // Per-PRB pairing keeps the DMRS evidence.
    const auto per = combined_doppler_spectrum(c.g_prs, c.g_dmrs, *layout.pdsch, 0, DmrsRowMode::PerPrb);
    const auto av = combined_doppler_spectrum(c.g_prs, c.g_dmrs, *layout.pdsch, 0, DmrsRowMode::Average);
    CHECK(per[0] > av[0]);
}

TEST_CASE("product spectrum") {
    CombinedRowSet one{{0}, {{1.0, 2.0, 3.0}}};
    CHECK(product_spectrum(one) == one.spectra[0]);

    CombinedRowSet rows{{0, 1, 6}, {{1.0, 2.0, 0.0}, {3.0, 0.5, 4.0}, {2.0, 2.0, 2.0}}};
    const auto p = product_spectrum(rows);
    CHECK(p[0] == doctest::Approx(6.0).epsilon(1e-14));
    CHECK(p[1] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(p[2] == 0.0);

    CombinedRowSet swapped{{6, 0, 1}, {rows.spectra[2], rows.spectra[0], rows.spectra[1]}};
    const auto q = product_spectrum(swapped);
    for (std::size_t i = 0; i < p.size(); ++i) CHECK(q[i] == doctest::Approx(p[i]).epsilon(1e-14));

    // Tiny values do not underflow to a spurious ordering.
    CombinedRowSet tiny{{0, 1}, {{1e-200, 2e-200}, {1e-200, 1e-200}}};
    const auto t = product_spectrum(tiny);
    CHECK(t[1] >= t[0]);

    CHECK_THROWS_AS(product_spectrum(CombinedRowSet{}), std::invalid_argument);
}

TEST_CASE("suppression: noiseless on-grid target gives a unique true peak") {
    const std::size_t slots = 20, N = slots * 14;
    for (int comb : {2, 4, 6, 12}) {
        for (double bin : {40.0, 90.0, 137.0}) {
            const auto layout = testing_helpers::reference_layout(comb, slots, 4, 4);
            const auto c = capture(layout, {Target{1.0, 420.0, on_grid_hz(bin, N)}});
            const auto set = combined_spectra(c.g_prs, c.g_dmrs, *layout.pdsch);
            const auto prod = product_spectrum(set);
            const auto d0 = static_cast<std::size_t>(bin);
            CHECK(argmax(prod) == d0);
            double far = 0.0;
            for (std::size_t d = 0; d < N; ++d) {
                if (circular_distance(d, d0, N) >= N / static_cast<std::size_t>(comb)) far = std::max(far, prod[d]);
            }
            CHECK(far < prod[d0]);
            // Every per-offset spectrum already ranks the true bin first.
            for (const auto& s : set.spectra) CHECK(argmax(s) == d0);
        }
    }
}

TEST_CASE("PRS-only spectrum of comb 12 is ambiguous at the slot rate") {
    // Each PRS row is sampled once per 14-symbol slot, so its spectrum repeats every N/14 bins.
    const std::size_t slots = 12, N = slots * 14;
    IsacLayout layout = testing_helpers::reference_layout(12, slots, 2, 2);
    const auto c = capture(layout, {Target{1.0, 0.0, on_grid_hz(7.0, N)}});
    const auto v = doppler_profile(c.g_prs).values;
    const double mx = *std::max_element(v.begin(), v.end());
    std::vector<std::size_t> top;
    for (std::size_t d = 0; d < N; ++d) {
        if (v[d] >= mx * (1 - 1e-9)) top.push_back(d);
    }
    REQUIRE(top.size() == 14);
    for (std::size_t i = 0; i < top.size(); ++i) CHECK(top[i] == 7 + i * slots);
}

TEST_CASE("swapping which signal spans more slots keeps the estimate") {
    // Zero range keeps PRS and DMRS rows phase-aligned; the padding rule is what is under test.
    const std::size_t slots = 4, N = slots * 14;
    const double fd = on_grid_hz(11.0, N);
    IsacLayout a = testing_helpers::reference_layout(4, slots, 3, 3);
    a.prs->alloc.num_slots = 4;
    a.pdsch->alloc.num_slots = 2;
    IsacLayout b = a;
    b.prs->alloc.num_slots = 2;
    b.pdsch->alloc.num_slots = 4;
    for (const auto& layout : {a, b}) {
        const auto c = capture(layout, {Target{1.0, 0.0, fd}});
        const auto r = disambiguate_doppler(c.y, c.grid, layout, 1);
        REQUIRE(r.peaks.peaks.size() == 1);
        CHECK(r.peaks.peaks[0].bin == 11);
        CHECK(r.dopplers_hz[0] == doctest::Approx(fd).epsilon(1e-12));
    }
}

TEST_CASE("pipeline recovers two targets on a reduced grid") {
    const std::size_t slots = 20;
    const auto layout = testing_helpers::reference_layout(4, slots, 6, 6);
    const double bw = doppler_resolution(kNum, slots * 14);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const auto c = capture(layout, {Target{1.0, 300.0, 4000.0}, Target{1.0, 600.0, 9000.0}}, 0.0, seed);
        const auto r = disambiguate_doppler(c.y, c.grid, layout, 2);
        REQUIRE(r.dopplers_hz.size() == 2);
        auto est = r.dopplers_hz;
        std::sort(est.begin(), est.end());
        CHECK(std::abs(est[0] - 4000.0) <= bw);
        CHECK(std::abs(est[1] - 9000.0) <= bw);
    }
    IsacLayout no_pdsch = layout;
    no_pdsch.pdsch.reset();
    const auto c = capture(no_pdsch, {});
    CHECK_THROWS_AS(disambiguate_doppler(c.y, c.grid, no_pdsch, 2), std::invalid_argument);
}
