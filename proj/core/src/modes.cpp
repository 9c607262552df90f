#include "optchan/modes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "optchan/errors.hpp"

namespace optchan::modes {

namespace {

constexpr double pi = std::numbers::pi;

// Relative distance from the resonant mode below which the closed form
// catastrophically cancels and the analytic limit is used instead.
constexpr double resonance_tolerance = 1e-9;

// Closed-form overlap in terms of the length ratio r = l/l0 only; the
// absolute scale drops out of the normalized projection.
double overlap_closed_form(double ratio, int s0, double s) {
  const double sign = (s0 % 2 == 0) ? 1.0 : -1.0;
  const double num =
      2.0 * sign * s0 * std::sin(pi * s / ratio) * std::pow(ratio, 1.5);
  const double den = pi * (s * s - ratio * ratio * s0 * s0);
  return num / den;
}

}  // namespace

void CavityGeometry::validate() const {
  if (!(l0 > 0.0)) throw std::domain_error("cavity geometry: l0 must be > 0");
  if (!(l >= l0)) throw std::domain_error("cavity geometry: l must be >= l0");
  if (!(n >= 1.0)) throw std::domain_error("cavity geometry: n must be >= 1");
  if (s0 < 1) throw std::domain_error("cavity geometry: s0 must be >= 1");
}

double ModeSpectrum::total_population() const {
  double sum = 0.0;
  for (double w : populations) sum += w;
  return sum;
}

double eigenmode(int s, double length, double z) {
  if (s < 1) throw std::domain_error("eigenmode: s must be >= 1");
  if (!(length > 0.0)) throw std::domain_error("eigenmode: length must be > 0");
  if (z < 0.0 || z > length)
    throw std::domain_error("eigenmode: z outside [0, L]");
  return std::sqrt(2.0 / length) * std::sin(pi * s * z / length);
}

double overlap(const CavityGeometry& geometry, int s) {
  geometry.validate();
  if (s < 1) throw std::domain_error("overlap: s must be >= 1");
  const double ratio = geometry.l / geometry.l0;
  const double detune = 1.0 - static_cast<double>(s) * geometry.l0 /
                                  (static_cast<double>(geometry.s0) * geometry.l);
  if (std::abs(detune) < resonance_tolerance) {
    // 0/0 point of the closed form; the limit has magnitude sqrt(l0/l) and
    // takes its sign from the closed form just above resonance.
    const double magnitude = std::sqrt(geometry.l0 / geometry.l);
    const double probe = overlap_closed_form(ratio, geometry.s0,
                                             geometry.resonant_index() * (1.0 + 1e-6));
    return std::copysign(magnitude, probe == 0.0 ? 1.0 : probe);
  }
  return overlap_closed_form(ratio, geometry.s0, s);
}

ModeSpectrum population_spectrum(const CavityGeometry& geometry, int s_max) {
  geometry.validate();
  if (s_max < 1) throw std::domain_error("population_spectrum: s_max must be >= 1");
  ModeSpectrum spectrum;
  spectrum.geometry = geometry;
  spectrum.s_max = s_max;
  spectrum.amplitudes.resize(s_max);
  spectrum.populations.resize(s_max);
  for (int s = 1; s <= s_max; ++s) {
    const double c = overlap(geometry, s);
    spectrum.amplitudes[s - 1] = c;
    spectrum.populations[s - 1] = c * c;
  }
  return spectrum;
}

ModeSpectrum population_spectrum(const CavityGeometry& geometry,
                                 double truncation_tail, int mode_cap) {
  geometry.validate();
  const double target = 1.0 - truncation_tail;
  // The spectrum concentrates near s_r with algebraic tails, so start at
  // 4*s_r and double until Parseval is met, then trim to the smallest
  // prefix that still meets it.
  int s_max = std::max(1, static_cast<int>(std::ceil(4.0 * geometry.resonant_index())));
  while (true) {
    s_max = std::min(s_max, mode_cap);
    ModeSpectrum spectrum = population_spectrum(geometry, s_max);
    double sum = spectrum.total_population();
    if (sum >= target) {
      double cumulative = 0.0;
      for (int s = 1; s <= s_max; ++s) {
        cumulative += spectrum.populations[s - 1];
        if (cumulative >= target) {
          spectrum.s_max = s;
          spectrum.amplitudes.resize(s);
          spectrum.populations.resize(s);
          return spectrum;
        }
      }
      return spectrum;
    }
    if (s_max >= mode_cap)
      throw TruncationError(
          "population_spectrum: mode cap " + std::to_string(mode_cap) +
          " reached with total population " + std::to_string(sum));
    s_max *= 2;
  }
}

std::vector<PlotRow> spectrum_for_plot(const ModeSpectrum& spectrum,
                                       PlotNormalization normalization) {
  std::vector<PlotRow> rows;
  rows.reserve(spectrum.populations.size());
  double scale = 1.0;
  if (normalization == PlotNormalization::max1 && !spectrum.populations.empty()) {
    const double peak =
        *std::max_element(spectrum.populations.begin(), spectrum.populations.end());
    if (peak > 0.0) scale = 1.0 / peak;
  }
  for (int s = 1; s <= spectrum.s_max; ++s)
    rows.push_back({s, spectrum.populations[s - 1] * scale});
  return rows;
}

}  // namespace optchan::modes
