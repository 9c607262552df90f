#pragma once

#include <string>

namespace optchan::units {

// Physical quantities must carry an explicit unit suffix ("1.24um",
// "10ps_nm_km", "1e11W_cm2"); unitless strings are rejected. Each parser
// returns the value in the internal unit noted below.

double parse_length(const std::string& text);      // -> m   (m, mm, um, nm)
double parse_time(const std::string& text);        // -> s   (s, ms, us, ns, ps, fs)
double parse_dispersion(const std::string& text);  // -> ps/(nm*km)  (ps_nm_km, s_m2)
double parse_intensity(const std::string& text);   // -> W/cm^2  (W_cm2, W_m2)
double parse_kerr_coefficient(const std::string& text);  // -> m^2/W  (cm2_W, m2_W)
double parse_dipole(const std::string& text);      // -> C*m  (C_m)
double parse_volume(const std::string& text);      // -> m^3  (m3, um3, cm3)

// Format with the shortest decimal representation that round-trips.
std::string format_double(double value);

}  // namespace optchan::units
