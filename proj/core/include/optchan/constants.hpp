#pragma once

namespace optchan::constants {

// SI
inline constexpr double speed_of_light = 299792458.0;  // m/s

// CGS (Gaussian)
inline constexpr double speed_of_light_cgs = 2.99792458e10;  // cm/s
inline constexpr double hbar_cgs = 1.054571817e-27;          // erg*s

// Unit conversions
inline constexpr double coulomb_meter_to_statC_cm = 2.99792458e11;
inline constexpr double m3_to_cm3 = 1.0e6;
inline constexpr double m_to_cm = 1.0e2;

// 1 ps/(nm*km) = 1e-6 s/m^2
inline constexpr double ps_nm_km_to_s_m2 = 1.0e-6;

}  // namespace optchan::constants
