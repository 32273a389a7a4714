#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "helpers.hpp"
#include "isac/channel.hpp"

using namespace isac;

namespace {
const Numerology kNum{30e3, 4e9};
}

TEST_CASE("identity channel reproduces the transmit grid exactly") {
    const auto g = testing_helpers::full_grid(kNum, 24, 28);
    ChannelConfig ch;
    ch.targets = {Target{}};
    const auto y = apply_channel(g, ch);
    CHECK(y == g.values());
}

TEST_CASE("on-grid delay gives a linear phase across subcarriers") {
    const std::size_t M = 48;
    const auto g = testing_helpers::full_grid(kNum, M, 14);
    const double l0 = 5.0;
    ChannelConfig ch;
    ch.targets = {Target{1.0, l0 * kSpeedOfLight / (static_cast<double>(M) * kNum.scs_hz()), 0.0}};
    const auto y = apply_channel(g, ch);
    for (std::size_t m = 0; m < M; ++m) {
        const cplx rot = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(m) * l0 / static_cast<double>(M));
        for (std::size_t n = 0; n < 14; ++n) CHECK(std::abs(y(m, n) - g.value(m, n) * rot) < 1e-12);
    }
}

TEST_CASE("Doppler rotates each symbol by 2 pi n T_0 f_d") {
    const auto g = testing_helpers::full_grid(kNum, 12, 28);
    ChannelConfig ch;
    ch.targets = {Target{{0.5, 0.5}, 0.0, 4000.0}};
    const auto y = apply_channel(g, ch);
    for (std::size_t n = 0; n < 28; ++n) {
        const cplx expect =
            cplx(0.5, 0.5) * std::polar(1.0, 2.0 * std::numbers::pi * double(n) * kNum.total_symbol_s() * 4000.0);
        CHECK(std::abs(y(3, n) / g.value(3, n) - expect) < 1e-12);
    }
}

TEST_CASE("superposition holds exactly without noise") {
    const auto g = build_grid(kNum, testing_helpers::reference_layout(4, 2, 2, 2));
    const Target a{1.0, 300.0, 4000.0};
    const Target b{1.0, 600.0, 9000.0};
    ChannelConfig ca, cb, cab;
    ca.targets = {a};
    cb.targets = {b};
    cab.targets = {a, b};
    const auto ya = apply_channel(g, ca);
    const auto yb = apply_channel(g, cb);
    const auto yab = apply_channel(g, cab);
    for (std::size_t m = 0; m < g.subcarriers(); ++m) {
        for (std::size_t n = 0; n < g.symbols(); ++n) {
            CHECK(yab(m, n) == ya(m, n) + yb(m, n));
            if (g.value(m, n) == cplx{}) CHECK(yab(m, n) == cplx{});
        }
    }
}

TEST_CASE("noise variance on empty REs matches the SNR setting") {
    IsacLayout l;
    l.num_prbs = 80;
    l.num_slots = 10;  // 960 x 140 REs, all empty
    const auto g = build_grid(kNum, l);
    for (double snr : {0.0, 10.0, -3.0}) {
        ChannelConfig ch;
        ch.targets = {Target{2.0, 100.0, 10.0}};
        ch.snr_db = snr;
        ch.noise_seed = 17;
        const auto y = apply_channel(g, ch);
        double acc = 0.0;
        for (const auto& v : y.data()) acc += std::norm(v);
        const double measured = acc / static_cast<double>(y.data().size());
        const double expected = 4.0 / std::pow(10.0, snr / 10.0);
        CHECK(ch.noise_variance() == doctest::Approx(expected));
        CHECK(std::abs(measured / expected - 1.0) < 0.05);
    }
}

TEST_CASE("noise is seeded and per-RE") {
    const auto g = testing_helpers::full_grid(kNum, 24, 28);
    ChannelConfig ch;
    ch.targets = {Target{}};
    ch.snr_db = 0.0;
    ch.noise_seed = 4;
    CHECK(apply_channel(g, ch) == apply_channel(g, ch));
    auto ch2 = ch;
    ch2.noise_seed = 5;
    CHECK_FALSE(apply_channel(g, ch) == apply_channel(g, ch2));
    CHECK(counter_gaussian(4, 100, 1.0) == counter_gaussian(4, 100, 1.0));
    CHECK(counter_gaussian(4, 100, 1.0) != counter_gaussian(4, 101, 1.0));
}

TEST_CASE("target validation") {
    CHECK_THROWS_AS((Target{0.0, 10.0, 0.0}).validate(), std::invalid_argument);
    CHECK_THROWS_AS((Target{1.0, -1.0, 0.0}).validate(), std::invalid_argument);
    ChannelConfig ch;
    ch.snr_db = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(ch.validate(), std::invalid_argument);
}
