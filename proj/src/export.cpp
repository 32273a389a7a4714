#include "isac/export.hpp"

#include <charconv>
#include <stdexcept>

namespace isac::io {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    if (res.ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
    return {buf, res.ptr};
}

namespace {

void write_re_rows(std::ostream& os, const ComplexGrid& values, const ResourceGrid& grid) {
    os << "subcarrier,symbol,kind,re,im\n";
    for (std::size_t m = 0; m < grid.subcarriers(); ++m) {
        for (std::size_t n = 0; n < grid.symbols(); ++n) {
            const cplx v = values(m, n);
            os << m << ',' << n << ',' << to_string(grid.kind(m, n)) << ',' << format_double(v.real()) << ','
               << format_double(v.imag()) << '\n';
        }
    }
}

}  // namespace

void write_grid_csv(std::ostream& os, const ResourceGrid& grid) { write_re_rows(os, grid.values(), grid); }

void write_received_csv(std::ostream& os, const ComplexGrid& y, const ResourceGrid& grid) {
    if (y.rows() != grid.subcarriers() || y.cols() != grid.symbols()) {
        throw std::invalid_argument("write_received_csv: shape mismatch");
    }
    write_re_rows(os, y, grid);
}

void write_profile_csv(std::ostream& os, const Profile& p) {
    os << "bin," << (p.axis == Axis::Range ? "range_m" : "doppler_hz") << ",magnitude\n";
    for (std::size_t b = 0; b < p.values.size(); ++b) {
        os << b << ',' << format_double(p.physical(b)) << ',' << format_double(p.values[b]) << '\n';
    }
}

void write_doppler_csv(std::ostream& os, std::span<const double> spectrum, double bin_width_hz) {
    os << "bin,doppler_hz,magnitude\n";
    for (std::size_t b = 0; b < spectrum.size(); ++b) {
        os << b << ',' << format_double(static_cast<double>(b) * bin_width_hz) << ',' << format_double(spectrum[b])
           << '\n';
    }
}

void write_surface_csv(std::ostream& os, std::span<const alloc::SurfacePoint> surface) {
    os << "m1_prbs,n1_slots,F\n";
    for (const auto& pt : surface) os << pt.m1 << ',' << pt.n1 << ',' << format_double(pt.f) << '\n';
}

nlohmann::ordered_json estimates_json(const Estimates* range, const Estimates* doppler) {
    nlohmann::ordered_json j;
    j["ranges_m"] = range ? range->values : std::vector<double>{};
    j["dopplers_hz"] = doppler ? doppler->values : std::vector<double>{};
    auto bins = nlohmann::ordered_json::array();
    auto mags = nlohmann::ordered_json::array();
    auto warnings = nlohmann::ordered_json::array();
    for (const Estimates* e : {range, doppler}) {
        if (!e) continue;
        for (auto b : e->bins) bins.push_back(b);
        for (auto m : e->magnitudes) mags.push_back(m);
        for (const auto& w : e->warnings) warnings.push_back(w);
    }
    j["peak_bins"] = bins;
    j["peak_mags"] = mags;
    j["warnings"] = warnings;
    return j;
}

}  // namespace isac::io
