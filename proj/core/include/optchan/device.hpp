#pragma once

#include <vector>

namespace optchan::device {

// Node-cavity coupling inputs, in SI.
struct NodeCoupling {
  double dipole = 0.0;       // transition dipole moment [C*m]
  double mode_volume = 0.0;  // [m^3]
  double lambda1 = 0.0;      // transition wavelength [m]

  void validate() const;
};

enum class RabiUnits { cgs, si };

// Vacuum Rabi frequency Omega0 = d * sqrt(8 pi^2 c / (hbar V lambda1)),
// evaluated in Gaussian-CGS quantities. The result is an angular frequency
// in rad/s either way; the si variant only changes how inputs are read
// (they are SI already), so the two agree identically.
double vacuum_rabi_frequency(const NodeCoupling& coupling,
                             RabiUnits units = RabiUnits::cgs);

struct KerrMedium {
  double n2 = 0.0;  // Kerr coefficient [m^2/W]
  double n0 = 1.0;  // linear index

  static KerrMedium from_cm2_per_watt(double n2_cm2_per_watt, double n0);
};

// Cross-phase index shift dn = n2 * I for intensity in W/cm^2.
double kerr_index_shift(const KerrMedium& medium, double intensity_w_cm2);

// Periodic two-layer index stack. Layer thicknesses are duty*period and
// (1-duty)*period.
struct GratingSpec {
  double n_high = 1.0;
  double n_low = 1.0;
  double period = 0.0;   // [m]
  int n_periods = 0;
  double duty = 0.5;     // high-index layer fraction of the period

  double delta_n() const { return n_high - n_low; }
  double high_thickness() const { return duty * period; }
  double low_thickness() const { return (1.0 - duty) * period; }

  // Quarter-wave layers at the design wavelength: t = lambda0 / (4 n).
  static GratingSpec quarter_wave(double n_high, double n_low, double lambda0,
                                  int n_periods);

  void validate() const;
};

struct ReflectivitySpectrum {
  std::vector<double> wavelengths;     // [m]
  std::vector<double> reflectivity;
  std::vector<double> transmissivity;  // 1 - R, lossless stack
};

// Normal-incidence reflectivity of the stack immersed in a matched ambient
// medium of the given index on both sides, via the 2x2 characteristic-matrix
// cascade. The matrix product is renormalized to unit determinant once per
// period.
double reflectivity_at(const GratingSpec& grating, double wavelength,
                       double ambient_index);

ReflectivitySpectrum reflectivity_spectrum(const GratingSpec& grating,
                                           double lambda_min, double lambda_max,
                                           double step, double ambient_index);

// Width of the contiguous wavelength interval around the reflectivity peak
// where R >= threshold. Throws NoStopBandError if no sample reaches it.
double stopband_width(const ReflectivitySpectrum& spectrum, double threshold = 0.99);

}  // namespace optchan::device
