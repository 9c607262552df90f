#include "optchan/device.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "optchan/constants.hpp"
#include "optchan/errors.hpp"

namespace optchan::device {

namespace {

constexpr double pi = std::numbers::pi;

// Characteristic matrix of a lossless layer at normal incidence has real
// diagonal and purely imaginary off-diagonal entries; track the four real
// numbers directly.
struct StackMatrix {
  double m11 = 1.0, m12i = 0.0, m21i = 0.0, m22 = 1.0;

  void multiply_layer(double index, double thickness, double wavelength) {
    const double delta = 2.0 * pi * index * thickness / wavelength;
    const double cd = std::cos(delta);
    const double sd = std::sin(delta);
    const double a11 = m11 * cd - m12i * index * sd;
    const double a12 = m11 * sd / index + m12i * cd;
    const double a21 = m21i * cd + m22 * index * sd;
    const double a22 = -m21i * sd / index + m22 * cd;
    m11 = a11;
    m12i = a12;
    m21i = a21;
    m22 = a22;
  }

  // Lossless stacks have unimodular matrices; rescaling guards against
  // drift in very long cascades.
  void renormalize() {
    const double det = m11 * m22 + m12i * m21i;
    if (det > 0.0) {
      const double scale = 1.0 / std::sqrt(det);
      m11 *= scale;
      m12i *= scale;
      m21i *= scale;
      m22 *= scale;
    }
  }
};

}  // namespace

void NodeCoupling::validate() const {
  if (!(dipole > 0.0) || !(mode_volume > 0.0) || !(lambda1 > 0.0))
    throw std::domain_error("node coupling: all fields must be > 0");
}

double vacuum_rabi_frequency(const NodeCoupling& coupling, RabiUnits) {
  coupling.validate();
  const double d = coupling.dipole * constants::coulomb_meter_to_statC_cm;
  const double v = coupling.mode_volume * constants::m3_to_cm3;
  const double lambda = coupling.lambda1 * constants::m_to_cm;
  return d * std::sqrt(8.0 * pi * pi * constants::speed_of_light_cgs /
                       (constants::hbar_cgs * v * lambda));
}

KerrMedium KerrMedium::from_cm2_per_watt(double n2_cm2_per_watt, double n0) {
  return KerrMedium{n2_cm2_per_watt * 1.0e-4, n0};
}

double kerr_index_shift(const KerrMedium& medium, double intensity_w_cm2) {
  if (intensity_w_cm2 < 0.0)
    throw std::domain_error("kerr_index_shift: intensity must be >= 0");
  // n2 [m^2/W] * I [W/cm^2 -> W/m^2]
  return medium.n2 * intensity_w_cm2 * 1.0e4;
}

GratingSpec GratingSpec::quarter_wave(double n_high, double n_low, double lambda0,
                                      int n_periods) {
  const double t_high = lambda0 / (4.0 * n_high);
  const double t_low = lambda0 / (4.0 * n_low);
  GratingSpec spec;
  spec.n_high = n_high;
  spec.n_low = n_low;
  spec.period = t_high + t_low;
  spec.duty = t_high / spec.period;
  spec.n_periods = n_periods;
  spec.validate();
  return spec;
}

void GratingSpec::validate() const {
  if (!(n_low >= 1.0) || !(n_high >= n_low))
    throw std::domain_error("grating: requires n_high >= n_low >= 1");
  if (!(period > 0.0)) throw std::domain_error("grating: period must be > 0");
  if (n_periods < 0) throw std::domain_error("grating: n_periods must be >= 0");
  if (duty < 0.0 || duty > 1.0)
    throw std::domain_error("grating: duty must lie in [0, 1]");
}

double reflectivity_at(const GratingSpec& grating, double wavelength,
                       double ambient_index) {
  grating.validate();
  if (!(wavelength > 0.0))
    throw std::domain_error("reflectivity: wavelength must be > 0");
  if (!(ambient_index >= 1.0))
    throw std::domain_error("reflectivity: ambient index must be >= 1");

  StackMatrix m;
  for (int p = 0; p < grating.n_periods; ++p) {
    m.multiply_layer(grating.n_high, grating.high_thickness(), wavelength);
    m.multiply_layer(grating.n_low, grating.low_thickness(), wavelength);
    m.renormalize();
  }
  const double n0 = ambient_index;  // incidence side
  const double ns = ambient_index;  // exit side
  const std::complex<double> b{m.m11, ns * m.m12i};
  const std::complex<double> cc{ns * m.m22, m.m21i};
  const std::complex<double> r = (n0 * b - cc) / (n0 * b + cc);
  return std::norm(r);
}

ReflectivitySpectrum reflectivity_spectrum(const GratingSpec& grating,
                                           double lambda_min, double lambda_max,
                                           double step, double ambient_index) {
  if (!(lambda_min > 0.0) || !(lambda_max >= lambda_min) || !(step > 0.0))
    throw std::domain_error("reflectivity_spectrum: bad wavelength range");
  ReflectivitySpectrum spectrum;
  const int count = static_cast<int>(std::floor((lambda_max - lambda_min) / step + 0.5)) + 1;
  spectrum.wavelengths.reserve(count);
  spectrum.reflectivity.reserve(count);
  spectrum.transmissivity.reserve(count);
  for (int i = 0; i < count; ++i) {
    const double lambda = lambda_min + i * step;
    const double r = reflectivity_at(grating, lambda, ambient_index);
    spectrum.wavelengths.push_back(lambda);
    spectrum.reflectivity.push_back(r);
    spectrum.transmissivity.push_back(1.0 - r);
  }
  return spectrum;
}

double stopband_width(const ReflectivitySpectrum& spectrum, double threshold) {
  const auto& r = spectrum.reflectivity;
  if (r.empty()) throw std::domain_error("stopband_width: empty spectrum");
  const auto peak = std::max_element(r.begin(), r.end());
  if (*peak < threshold)
    throw NoStopBandError("stopband_width: no sample reaches threshold");
  const std::size_t peak_idx = static_cast<std::size_t>(peak - r.begin());
  std::size_t lo = peak_idx;
  while (lo > 0 && r[lo - 1] >= threshold) --lo;
  std::size_t hi = peak_idx;
  while (hi + 1 < r.size() && r[hi + 1] >= threshold) ++hi;
  return spectrum.wavelengths[hi] - spectrum.wavelengths[lo];
}

}  // namespace optchan::device
