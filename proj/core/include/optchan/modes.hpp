#pragma once

#include <vector>

namespace optchan::modes {

// Two nested 1-D cavities sharing the origin: the isolated node cavity
// occupies [0, l0] at one end of the common cavity [0, l].
struct CavityGeometry {
  double l0 = 0.0;  // isolated-cavity effective length [m]
  double l = 0.0;   // common-cavity effective length [m]
  double n = 1.0;   // effective refractive index
  int s0 = 1;       // initially populated isolated-cavity mode index

  // Mode number of the resonant common-cavity mode, s0 * l / l0.
  // Not an integer in general.
  double resonant_index() const { return s0 * l / l0; }

  // Throws std::domain_error unless l0 > 0, l >= l0, n >= 1, s0 >= 1.
  void validate() const;
};

// Expansion of the released wavepacket over common-cavity eigenmodes.
struct ModeSpectrum {
  CavityGeometry geometry;
  int s_max = 0;
  std::vector<double> amplitudes;   // C_s for s = 1..s_max
  std::vector<double> populations;  // W_s = C_s^2

  double total_population() const;
};

inline constexpr double default_truncation_tail = 1e-8;
inline constexpr int truncation_mode_cap = 1'000'000;

// Normalized eigenmode of a hard-walled cavity of length L:
// sqrt(2/L) * sin(pi*s*z/L). Zero at both walls.
double eigenmode(int s, double length, double z);

// Projection C_s = <F_s(z,l) | F_{s0}(z,l0)> in closed form, with the
// analytic limit sqrt(l0/l) substituted near the resonant mode where the
// closed form degenerates to 0/0.
double overlap(const CavityGeometry& geometry, int s);

// Spectrum truncated at a fixed s_max.
ModeSpectrum population_spectrum(const CavityGeometry& geometry, int s_max);

// Auto-truncated spectrum: smallest s_max with sum W_s >= 1 - tail.
// Throws TruncationError if the cap is hit first.
ModeSpectrum population_spectrum(const CavityGeometry& geometry,
                                 double truncation_tail = default_truncation_tail,
                                 int mode_cap = truncation_mode_cap);

enum class PlotNormalization { raw, max1 };

struct PlotRow {
  int s;
  double value;
};

std::vector<PlotRow> spectrum_for_plot(const ModeSpectrum& spectrum,
                                       PlotNormalization normalization);

}  // namespace optchan::modes
