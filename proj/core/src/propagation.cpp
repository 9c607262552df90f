#include "optchan/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "optchan/constants.hpp"
#include "optchan/errors.hpp"

namespace optchan::propagation {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double c = constants::speed_of_light;

// Dispersion-induced phase accumulated over t, with the exactly-periodic
// carrier part pi*s*c/(n*l) * 2*l*n/c = 2*pi*s removed. Valid only for
// t = roundtrip_time(geometry).
double roundtrip_dispersive_phase(const DispersionParams& params, double s) {
  const auto& g = params.geometry;
  const double detune = 1.0 - s / g.resonant_index();
  const double t_rt = 2.0 * g.l * g.n / c;
  return (pi * c / g.n) * (c * params.d_si / (g.n * g.n)) * detune * detune * t_rt;
}

// sum_s coeff_s * sin(s * theta_j) for every j, via the Chebyshev
// recurrence sin((s+1)t) = 2 cos(t) sin(st) - sin((s-1)t). Avoids
// n_theta * s_max transcendental calls and vectorizes over j.
void mode_sum(const std::vector<double>& theta,
              const std::vector<double>& coeff_re,
              const std::vector<double>& coeff_im,
              std::vector<double>& out_re, std::vector<double>& out_im) {
  const std::size_t m = theta.size();
  const std::size_t s_max = coeff_re.size();
  out_re.assign(m, 0.0);
  out_im.assign(m, 0.0);
  std::vector<double> two_cos(m), sin_prev(m, 0.0), sin_cur(m);
  for (std::size_t j = 0; j < m; ++j) {
    two_cos[j] = 2.0 * std::cos(theta[j]);
    sin_cur[j] = std::sin(theta[j]);
  }
  for (std::size_t s = 0; s < s_max; ++s) {
    const double re = coeff_re[s];
    const double im = coeff_im[s];
    for (std::size_t j = 0; j < m; ++j) {
      const double sn = sin_cur[j];
      out_re[j] += re * sn;
      out_im[j] += im * sn;
      const double next = two_cos[j] * sn - sin_prev[j];
      sin_prev[j] = sn;
      sin_cur[j] = next;
    }
  }
}

}  // namespace

modes::CavityGeometry default_geometry(int s0, const GeometryDefaults& defaults) {
  modes::CavityGeometry geometry;
  geometry.l0 = s0 * defaults.lambda1 / (2.0 * defaults.n);
  geometry.l = defaults.ratio * geometry.l0;
  geometry.n = defaults.n;
  geometry.s0 = s0;
  geometry.validate();
  return geometry;
}

DispersionParams DispersionParams::from_ps_nm_km(double d_ps_nm_km,
                                                 const modes::CavityGeometry& geometry) {
  geometry.validate();
  return DispersionParams{d_ps_nm_km * constants::ps_nm_km_to_s_m2, geometry};
}

double DispersionParams::d_ps_nm_km() const {
  return d_si / constants::ps_nm_km_to_s_m2;
}

double dispersive_frequency(const DispersionParams& params, int s) {
  if (s < 1) throw std::domain_error("dispersive_frequency: s must be >= 1");
  const auto& g = params.geometry;
  const double detune = 1.0 - static_cast<double>(s) / g.resonant_index();
  return (pi * c / g.n) *
         (static_cast<double>(s) / g.l +
          (c * params.d_si / (g.n * g.n)) * detune * detune);
}

double roundtrip_time(const modes::CavityGeometry& geometry) {
  return 2.0 * geometry.l * geometry.n / c;
}

FieldState field_snapshot(const DispersionParams& params,
                          const modes::ModeSpectrum& spectrum, double t, int n_z) {
  const auto& g = params.geometry;
  g.validate();
  if (n_z < 2 * spectrum.s_max + 1)
    throw GridUndersampledError("field_snapshot: n_z = " + std::to_string(n_z) +
                                " < 2*s_max+1 = " +
                                std::to_string(2 * spectrum.s_max + 1));

  const int s_max = spectrum.s_max;
  std::vector<double> coeff_re(s_max), coeff_im(s_max);
  for (int s = 1; s <= s_max; ++s) {
    const double phase = dispersive_frequency(params, s) * t;
    const double c_s = spectrum.amplitudes[s - 1];
    coeff_re[s - 1] = c_s * std::cos(phase);
    coeff_im[s - 1] = -c_s * std::sin(phase);  // e^{-i omega t} convention
  }

  FieldState state;
  state.t = t;
  state.grid.resize(n_z);
  std::vector<double> theta(n_z);
  for (int j = 0; j < n_z; ++j) {
    state.grid[j] = g.l * j / (n_z - 1);
    theta[j] = pi * j / (n_z - 1);
  }
  std::vector<double> out_re, out_im;
  mode_sum(theta, coeff_re, coeff_im, out_re, out_im);
  const double norm = std::sqrt(2.0 / g.l);
  state.values.resize(n_z);
  for (int j = 0; j < n_z; ++j)
    state.values[j] = {norm * out_re[j], norm * out_im[j]};
  return state;
}

double roundtrip_fidelity(const DispersionParams& params,
                          const modes::ModeSpectrum& spectrum,
                          FidelityMethod method) {
  const auto& g = params.geometry;
  g.validate();

  if (method == FidelityMethod::spectral) {
    double f = 0.0;
    for (int s = 1; s <= spectrum.s_max; ++s)
      f += spectrum.populations[s - 1] *
           std::cos(roundtrip_dispersive_phase(params, s));
    return f;
  }

  // Grid route: reconstruct E(z, t_rt) on Simpson nodes over [0, l0] and
  // integrate against the exact initial mode. Node density matches a
  // full-cavity grid of 4*s_max points restricted to [0, l0].
  const double t_rt = roundtrip_time(g);
  int intervals = static_cast<int>(std::ceil(4.0 * spectrum.s_max * g.l0 / g.l));
  intervals = std::max(intervals, 16);
  if (intervals % 2 != 0) ++intervals;
  const double h = g.l0 / intervals;

  const int s_max = spectrum.s_max;
  std::vector<double> coeff_re(s_max), coeff_im(s_max);
  for (int s = 1; s <= s_max; ++s) {
    const double phase = dispersive_frequency(params, s) * t_rt;
    const double c_s = spectrum.amplitudes[s - 1];
    coeff_re[s - 1] = c_s * std::cos(phase);
    coeff_im[s - 1] = -c_s * std::sin(phase);
  }
  std::vector<double> theta(intervals + 1);
  for (int j = 0; j <= intervals; ++j) theta[j] = pi * j * h / g.l;
  std::vector<double> out_re, out_im;
  mode_sum(theta, coeff_re, coeff_im, out_re, out_im);

  // Re[conj(E) * E0] = Re(E) * E0 for the real initial mode.
  const double norm = std::sqrt(2.0 / g.l);
  double integral = 0.0;
  for (int j = 0; j <= intervals; ++j) {
    const double weight = (j == 0 || j == intervals) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
    const double e0 = modes::eigenmode(g.s0, g.l0, j * h);
    integral += weight * norm * out_re[j] * e0;
  }
  return integral * h / 3.0;
}

std::vector<FidelityPoint> fidelity_sweep(const std::vector<int>& s0_values,
                                          const std::vector<double>& d_values_ps_nm_km,
                                          const GeometryDefaults& defaults,
                                          double truncation_tail,
                                          FidelityMethod method) {
  auto s0_sorted = s0_values;
  auto d_sorted = d_values_ps_nm_km;
  std::sort(s0_sorted.begin(), s0_sorted.end());
  std::sort(d_sorted.begin(), d_sorted.end());
  std::vector<FidelityPoint> points;
  points.reserve(s0_sorted.size() * d_sorted.size());
  for (int s0 : s0_sorted) {
    const auto geometry = default_geometry(s0, defaults);
    const auto spectrum = modes::population_spectrum(geometry, truncation_tail);
    for (double d : d_sorted) {
      const auto params = DispersionParams::from_ps_nm_km(d, geometry);
      points.push_back({s0, d, roundtrip_fidelity(params, spectrum, method)});
    }
  }
  return points;
}

}  // namespace optchan::propagation
