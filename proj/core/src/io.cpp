#include "optchan/io.hpp"

#include "optchan/units.hpp"

namespace optchan::io {

namespace {
using units::format_double;
}

void write_spectrum_csv(std::ostream& out, const std::vector<modes::PlotRow>& rows) {
  out << "s,value\n";
  for (const auto& row : rows)
    out << row.s << ',' << format_double(row.value) << '\n';
}

void write_fidelity_csv(std::ostream& out,
                        const std::vector<propagation::FidelityPoint>& points) {
  out << "s0,D_ps_per_nm_km,F\n";
  for (const auto& point : points)
    out << point.s0 << ',' << format_double(point.d_ps_nm_km) << ','
        << format_double(point.fidelity) << '\n';
}

void write_snapshot_csv(std::ostream& out, const propagation::FieldState& state) {
  out << "z_m,re,im,abs2\n";
  for (std::size_t j = 0; j < state.grid.size(); ++j) {
    const auto value = state.values[j];
    out << format_double(state.grid[j]) << ',' << format_double(value.real())
        << ',' << format_double(value.imag()) << ','
        << format_double(std::norm(value)) << '\n';
  }
}

void write_reflectivity_csv(std::ostream& out,
                            const device::ReflectivitySpectrum& spectrum) {
  out << "lambda_m,R,T\n";
  for (std::size_t i = 0; i < spectrum.wavelengths.size(); ++i)
    out << format_double(spectrum.wavelengths[i]) << ','
        << format_double(spectrum.reflectivity[i]) << ','
        << format_double(spectrum.transmissivity[i]) << '\n';
}

}  // namespace optchan::io
