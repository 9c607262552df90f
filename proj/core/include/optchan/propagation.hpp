#pragma once

#include <complex>
#include <vector>

#include "optchan/modes.hpp"

namespace optchan::propagation {

// Paper-reproduction defaults: lithium niobate index, 1 eV transition,
// isolated cavity resonant with mode s0 at lambda1.
struct GeometryDefaults {
  double lambda1 = 1.24e-6;  // transition wavelength [m]
  double n = 2.2;            // effective refractive index
  double ratio = 200.0;      // l / l0
};

// l0 = s0 * lambda1 / (2n), l = ratio * l0.
modes::CavityGeometry default_geometry(int s0, const GeometryDefaults& defaults = {});

struct DispersionParams {
  double d_si = 0.0;  // group-velocity dispersion [s/m^2]
  modes::CavityGeometry geometry;

  // D is quoted in ps/(nm*km) at every interface and converted once here.
  static DispersionParams from_ps_nm_km(double d_ps_nm_km,
                                        const modes::CavityGeometry& geometry);
  double d_ps_nm_km() const;
};

// omega_s = (pi*c/n) * (s/l + (c*D/n^2) * (1 - s/s_r)^2). Reduces to the
// dispersion-free pi*s*c/(n*l) when D = 0 or s = s_r.
double dispersive_frequency(const DispersionParams& params, int s);

// Time for a full round trip across the common cavity and back, 2*l*n/c.
double roundtrip_time(const modes::CavityGeometry& geometry);

// Complex field sampled on a uniform grid over [0, l].
struct FieldState {
  std::vector<double> grid;                 // z positions [m]
  std::vector<std::complex<double>> values; // field at grid points
  double t = 0.0;                           // evaluation time [s]
};

// Mode-sum evaluation E(z,t) = sum_s C_s F_s(z,l) exp(-i omega_s t) on an
// n_z-point grid. Requires n_z >= 2*s_max + 1 to resolve the highest mode.
FieldState field_snapshot(const DispersionParams& params,
                          const modes::ModeSpectrum& spectrum, double t, int n_z);

enum class FidelityMethod { spectral, grid };

// F = Re[int_0^{l0} E(z,t_rt)^* E(z,0) dz] at t_rt = 2*l*n/c.
// The spectral route evaluates Re sum_s C_s^2 exp(-i omega_s t_rt); the
// grid route reconstructs the field and integrates with composite Simpson.
double roundtrip_fidelity(const DispersionParams& params,
                          const modes::ModeSpectrum& spectrum,
                          FidelityMethod method = FidelityMethod::spectral);

struct FidelityPoint {
  int s0;
  double d_ps_nm_km;
  double fidelity;
};

// One fidelity per (s0, D) pair, rows ordered by (s0, D).
std::vector<FidelityPoint> fidelity_sweep(const std::vector<int>& s0_values,
                                          const std::vector<double>& d_values_ps_nm_km,
                                          const GeometryDefaults& defaults = {},
                                          double truncation_tail = modes::default_truncation_tail,
                                          FidelityMethod method = FidelityMethod::spectral);

}  // namespace optchan::propagation
