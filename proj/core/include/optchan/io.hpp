#pragma once

#include <ostream>
#include <vector>

#include "optchan/device.hpp"
#include "optchan/modes.hpp"
#include "optchan/propagation.hpp"

namespace optchan::io {

// CSV emitters: ',' separator, '.' decimal, header row always present,
// shortest round-trip number formatting.

// Header "s,value".
void write_spectrum_csv(std::ostream& out, const std::vector<modes::PlotRow>& rows);

// Header "s0,D_ps_per_nm_km,F".
void write_fidelity_csv(std::ostream& out,
                        const std::vector<propagation::FidelityPoint>& points);

// Header "z_m,re,im,abs2".
void write_snapshot_csv(std::ostream& out, const propagation::FieldState& state);

// Header "lambda_m,R,T".
void write_reflectivity_csv(std::ostream& out,
                            const device::ReflectivitySpectrum& spectrum);

}  // namespace optchan::io
