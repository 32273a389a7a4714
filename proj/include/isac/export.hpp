#pragma once

#include <ostream>
#include <span>
#include <string>

#include "isac/alloc.hpp"
#include "isac/estimator.hpp"
#include "isac/grid.hpp"

#include <json.hpp>

namespace isac::io {

/// subcarrier,symbol,kind,re,im for every RE of the transmitted grid.
void write_grid_csv(std::ostream& os, const ResourceGrid& grid);
/// Same layout with the received symbols; `kind` still comes from the transmit grid.
void write_received_csv(std::ostream& os, const ComplexGrid& y, const ResourceGrid& grid);
/// bin,range_m,magnitude or bin,doppler_hz,magnitude.
void write_profile_csv(std::ostream& os, const Profile& p);
/// bin,doppler_hz,magnitude for a bare Doppler spectrum.
void write_doppler_csv(std::ostream& os, std::span<const double> spectrum, double bin_width_hz);
/// m1_prbs,n1_slots,F
void write_surface_csv(std::ostream& os, std::span<const alloc::SurfacePoint> surface);

/// {"ranges_m", "dopplers_hz", "peak_bins", "peak_mags", "warnings"}.
nlohmann::ordered_json estimates_json(const Estimates* range, const Estimates* doppler);

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

}  // namespace isac::io
