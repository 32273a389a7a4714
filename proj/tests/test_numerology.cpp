#include <doctest.h>

#include <random>
#include <stdexcept>

#include "isac/numerology.hpp"

using namespace isac;

namespace {
const Numerology kNr30{30e3, 4e9};
}

TEST_CASE("symbol timing") {
    CHECK(kNr30.symbol_s() == doctest::Approx(33.3333333e-6).epsilon(1e-9));
    CHECK(kNr30.total_symbol_s() == doctest::Approx(35.6770833e-6).epsilon(1e-9));
    CHECK(kNr30.total_symbol_s() == doctest::Approx(kNr30.symbol_s() * (1.0 + kNr30.cp_ratio())).epsilon(1e-15));
    CHECK(kNr30.cp_s() + kNr30.symbol_s() == doctest::Approx(kNr30.total_symbol_s()).epsilon(1e-15));
}

TEST_CASE("constructor rejects invalid parameters") {
    CHECK_THROWS_AS(Numerology(0.0, 4e9), std::invalid_argument);
    CHECK_THROWS_AS(Numerology(-30e3, 4e9), std::invalid_argument);
    CHECK_THROWS_AS(Numerology(30e3, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(Numerology(30e3, 4e9, -0.1), std::invalid_argument);
}

TEST_CASE("range resolution and maximum range") {
    CHECK(range_resolution(kNr30, 576) == doctest::Approx(17.349).epsilon(0.001 / 17.349));
    CHECK(range_resolution(kNr30, 1) == doctest::Approx(9993.08).epsilon(0.01 / 9993.08));
    CHECK(max_range(kNr30) == doctest::Approx(9993.08).epsilon(0.01 / 9993.08));
    CHECK(max_range(Numerology(15e3, 4e9)) == doctest::Approx(19986.16).epsilon(0.01 / 19986.16));
    CHECK(range_resolution(kNr30, 1152) * 2.0 == range_resolution(kNr30, 576));
    CHECK(max_range(kNr30) == range_resolution(kNr30, 1));
    CHECK_THROWS_AS(range_resolution(kNr30, 0), std::invalid_argument);
}

TEST_CASE("Doppler resolution and maximum Doppler") {
    CHECK(doppler_resolution(kNr30, 280) == doctest::Approx(100.10).epsilon(0.05 / 100.10));
    // 1 / T_0 = 30 kHz / (1 + 144/2048)
    CHECK(max_doppler(kNr30) == doctest::Approx(28029.197).epsilon(0.01 / 28029.197));
    CHECK(doppler_resolution(kNr30, 1) == max_doppler(kNr30));
    CHECK(doppler_resolution(kNr30, 560) * 2.0 == doppler_resolution(kNr30, 280));
    CHECK(max_doppler(Numerology(30e3, 4e9, 0.0)) == 30e3);
    CHECK(4000.0 < max_doppler(kNr30));
    CHECK(9000.0 < max_doppler(kNr30));
}

TEST_CASE("resolution times count recovers the maximum") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> scs(1e3, 480e3);
    std::uniform_real_distribution<double> cp(0.0, 0.3);
    std::uniform_int_distribution<std::size_t> cnt(1, 5000);
    for (int i = 0; i < 200; ++i) {
        const Numerology num(scs(rng), 3.5e9, cp(rng));
        const std::size_t m = cnt(rng);
        CHECK(range_resolution(num, m) * static_cast<double>(m) == doctest::Approx(max_range(num)).epsilon(1e-12));
        CHECK(doppler_resolution(num, m) * static_cast<double>(m) ==
              doctest::Approx(max_doppler(num)).epsilon(1e-12));
        CHECK(max_range(num) == range_resolution(num, 1));
        CHECK(max_doppler(num) == doppler_resolution(num, 1));
    }
}
