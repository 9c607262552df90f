#include "optchan/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <sstream>

#include "optchan/device.hpp"
#include "optchan/gates.hpp"
#include "optchan/modes.hpp"
#include "optchan/propagation.hpp"

namespace optchan::verify {

namespace {

using modes::CavityGeometry;
using propagation::DispersionParams;
using propagation::FidelityMethod;

std::string fmt(double value) {
  std::ostringstream out;
  out.precision(6);
  out << value;
  return out.str();
}

// --- independent quadrature oracle -----------------------------------------
//
// Panel Gauss-Legendre integration of F_s(z,l) F_{s0}(z,l0) over [0, l0],
// refined until two consecutive panel counts agree. Deliberately does not
// touch the closed-form overlap it is checking.

constexpr std::array<double, 5> gl_abscissae{
    0.1488743389816312, 0.4333953941292472, 0.6794095682990244,
    0.8650633666889845, 0.9739065285171717};
constexpr std::array<double, 5> gl_weights{
    0.2955242247147529, 0.2692667193099963, 0.2190863625159820,
    0.1494513491505806, 0.0666713443086881};

double gl_integrate(const std::function<double(double)>& f, double a, double b,
                    int panels) {
  const double h = (b - a) / panels;
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    const double half = 0.5 * h;
    for (std::size_t i = 0; i < gl_abscissae.size(); ++i) {
      sum += gl_weights[i] * (f(mid + half * gl_abscissae[i]) +
                              f(mid - half * gl_abscissae[i]));
    }
  }
  return sum * 0.5 * (b - a) / panels;
}

double overlap_quadrature(const CavityGeometry& g, int s) {
  const auto integrand = [&](double z) {
    return modes::eigenmode(s, g.l, z) * modes::eigenmode(g.s0, g.l0, z);
  };
  int panels = 4 * (g.s0 + static_cast<int>(std::ceil(s * g.l0 / g.l)) + 1);
  double previous = gl_integrate(integrand, 0.0, g.l0, panels);
  while (true) {
    panels *= 2;
    const double refined = gl_integrate(integrand, 0.0, g.l0, panels);
    if (std::abs(refined - previous) < 1e-12 || panels > (1 << 22))
      return refined;
    previous = refined;
  }
}

constexpr std::array<double, 3> oracle_ratios{2.0, 7.5, 200.0};
constexpr std::array<int, 4> oracle_modes{1, 2, 5, 10};

CavityGeometry unit_geometry(double ratio, int s0) {
  return CavityGeometry{1.0, ratio, 1.0, s0};
}

// --- criteria ---------------------------------------------------------------

CriterionResult criterion_overlap_oracle() {
  double worst = 0.0;
  double worst_resonant = 0.0;
  for (double ratio : oracle_ratios) {
    for (int s0 : oracle_modes) {
      const auto geometry = unit_geometry(ratio, s0);
      const double s_r = geometry.resonant_index();
      const int s_top = static_cast<int>(std::ceil(4.0 * s_r));
      for (int s = 1; s <= s_top; ++s) {
        const double closed = modes::overlap(geometry, s);
        const double oracle = overlap_quadrature(geometry, s);
        worst = std::max(worst, std::abs(closed - oracle));
        if (std::abs(s - s_r) < 1e-9) {
          worst_resonant = std::max(
              worst_resonant, std::abs(std::abs(closed) - std::sqrt(1.0 / ratio)));
        }
      }
    }
  }
  const bool passed = worst <= 1e-9 && worst_resonant <= 1e-9;
  return {1, "overlap closed form vs quadrature oracle", passed,
          "max |closed - quadrature| = " + fmt(worst) +
              ", max resonant magnitude error = " + fmt(worst_resonant)};
}

CriterionResult criterion_parseval() {
  double worst_low = 1.0;
  bool passed = true;
  for (double ratio : oracle_ratios) {
    for (int s0 : oracle_modes) {
      const auto spectrum = modes::population_spectrum(unit_geometry(ratio, s0));
      const double total = spectrum.total_population();
      worst_low = std::min(worst_low, total);
      if (total < 1.0 - 1e-8 || total > 1.0 + 1e-12) passed = false;
    }
  }
  return {2, "Parseval sum of auto-truncated populations", passed,
          "min total population = " + fmt(worst_low)};
}

struct SweepData {
  std::vector<double> d_values;                  // ps/(nm*km)
  std::vector<std::vector<double>> f_spectral;   // per s0 index
  std::vector<std::vector<double>> f_grid;
  std::array<int, 2> s0_values{1, 10};
};

const SweepData& fig4_sweep(bool with_grid) {
  static SweepData data;
  static bool have_spectral = false;
  static bool have_grid = false;
  if (!have_spectral) {
    for (double d = 0.0; d <= 30.0 + 1e-12; d += 0.5) data.d_values.push_back(d);
    data.f_spectral.resize(2);
    data.f_grid.resize(2);
    for (std::size_t i = 0; i < data.s0_values.size(); ++i) {
      const auto geometry = propagation::default_geometry(data.s0_values[i]);
      const auto spectrum = modes::population_spectrum(geometry);
      for (double d : data.d_values) {
        const auto params = DispersionParams::from_ps_nm_km(d, geometry);
        data.f_spectral[i].push_back(
            propagation::roundtrip_fidelity(params, spectrum, FidelityMethod::spectral));
      }
    }
    have_spectral = true;
  }
  if (with_grid && !have_grid) {
    for (std::size_t i = 0; i < data.s0_values.size(); ++i) {
      const auto geometry = propagation::default_geometry(data.s0_values[i]);
      const auto spectrum = modes::population_spectrum(geometry);
      for (double d : data.d_values) {
        const auto params = DispersionParams::from_ps_nm_km(d, geometry);
        data.f_grid[i].push_back(
            propagation::roundtrip_fidelity(params, spectrum, FidelityMethod::grid));
      }
    }
    have_grid = true;
  }
  return data;
}

CriterionResult criterion_revival() {
  double worst = 0.0;
  for (int s0 : {1, 10}) {
    const auto geometry = propagation::default_geometry(s0);
    const auto spectrum = modes::population_spectrum(geometry);
    const auto params = DispersionParams::from_ps_nm_km(0.0, geometry);
    worst = std::max(worst,
                     std::abs(propagation::roundtrip_fidelity(params, spectrum) - 1.0));
  }
  return {3, "exact revival F(D=0) = 1", worst <= 1e-6,
          "max |F - 1| = " + fmt(worst)};
}

CriterionResult criterion_fig4_bands() {
  const auto& sweep = fig4_sweep(false);
  std::ostringstream detail;
  bool passed = true;

  const auto f_at = [&](int s0_index, double d) {
    for (std::size_t k = 0; k < sweep.d_values.size(); ++k)
      if (std::abs(sweep.d_values[k] - d) < 1e-9)
        return sweep.f_spectral[s0_index][k];
    return propagation::roundtrip_fidelity(
        DispersionParams::from_ps_nm_km(d, propagation::default_geometry(sweep.s0_values[s0_index])),
        modes::population_spectrum(propagation::default_geometry(sweep.s0_values[s0_index])));
  };

  const double f_a = f_at(0, 2.0);
  const bool pass_a = f_a >= 0.98;
  detail << "(a) F(s0=1, D=2) = " << fmt(f_a) << (pass_a ? " >= 0.98" : " < 0.98");

  const double f_b = f_at(1, 20.0);
  const bool pass_b = f_b >= 0.97;
  detail << "; (b) F(s0=10, D=20) = " << fmt(f_b) << (pass_b ? " >= 0.97" : " < 0.97");

  const auto largest_d_above = [&](int s0_index) {
    double largest = 0.0;
    for (std::size_t k = 0; k < sweep.d_values.size(); ++k)
      if (sweep.f_spectral[s0_index][k] >= 0.99) largest = sweep.d_values[k];
    return largest;
  };
  const double d99_s0_1 = largest_d_above(0);
  const double d99_s0_10 = largest_d_above(1);
  const bool pass_c = d99_s0_10 >= 5.0 * d99_s0_1 && d99_s0_1 > 0.0;
  detail << "; (c) largest D with F>=0.99: s0=10 -> " << fmt(d99_s0_10)
         << ", s0=1 -> " << fmt(d99_s0_1) << " (need ratio >= 5)";

  bool pass_d = true;
  for (std::size_t i = 0; i < sweep.s0_values.size(); ++i) {
    const auto& f = sweep.f_spectral[i];
    constexpr std::size_t window = 5;
    double previous_mean = 2.0;
    for (std::size_t k = 0; k + window <= f.size(); ++k) {
      double mean = 0.0;
      for (std::size_t j = 0; j < window; ++j) mean += f[k + j];
      mean /= window;
      if (k > 0 && mean >= previous_mean) pass_d = false;
      previous_mean = mean;
    }
  }
  detail << "; (d) 5-sample windowed means " << (pass_d ? "strictly decreasing" : "not monotone");

  passed = pass_a && pass_b && pass_c && pass_d;
  return {4, "Fig. 4 fidelity bands under declared defaults", passed, detail.str()};
}

CriterionResult criterion_spectral_vs_grid() {
  const auto& sweep = fig4_sweep(true);
  double worst = 0.0;
  for (std::size_t i = 0; i < sweep.s0_values.size(); ++i)
    for (std::size_t k = 0; k < sweep.d_values.size(); ++k)
      worst = std::max(worst,
                       std::abs(sweep.f_spectral[i][k] - sweep.f_grid[i][k]));
  return {5, "spectral vs Simpson-grid fidelity agreement", worst <= 1e-6,
          "max |F_spectral - F_grid| = " + fmt(worst)};
}

// Expected intermediate rows, columns ordered by input
// {g1.g1, g1.e0, e0.g1, e0.e0}.
const std::array<const char*, 4> table_inputs{"g1.g1", "g1.e0", "e0.g1", "e0.e0"};

const std::vector<std::array<const char*, 4>> swap_rows{
    {"g1.g1", "g0.e1", "e1.g0", "e0.e0"}, {"e0.e0", "g0.g2", "g2.g0", "g1.g1"},
    {"e0.e0", "g2.g0", "g0.g2", "g1.g1"}, {"g1.g1", "e1.g0", "g0.e1", "e0.e0"},
    {"g1.g1", "e0.g1", "g1.e0", "e0.e0"}};

const std::vector<std::array<const char*, 4>> cnot_rows{
    {"g1.g1", "g0.e1", "e1.g0", "e0.e0"}, {"e0.e0", "g0.g2", "g2.g0", "g1.g1"},
    {"e0.e0", "g2.g0", "g0.g2", "g1.g1"}, {"g1.e0", "e1.g0", "g0.g2", "e0.g1"},
    {"g0.e1", "e0.g1", "g2.g0", "e1.g0"}, {"g0.g2", "e0.e0", "g2.g0", "e1.g0"},
    {"g2.g0", "e0.e0", "g0.g2", "e0.g1"}, {"e1.g0", "g1.e0", "g0.g2", "g1.g1"},
    {"e0.g1", "g0.e1", "g2.g0", "g1.g1"}, {"e0.e0", "g0.g2", "g2.g0", "g1.e0"},
    {"e0.e0", "g2.g0", "g0.g2", "g0.e1"}, {"g1.e0", "e1.g0", "g0.g2", "g0.e1"},
    {"g0.e1", "e0.g1", "g2.g0", "g1.e0"}, {"g0.g2", "e0.e0", "g2.g0", "g1.g1"},
    {"g0.e1", "g1.g1", "e1.g0", "e0.e0"}, {"g1.e0", "g1.g1", "e0.g1", "e0.e0"}};

bool is_pure_basis(const gates::RegisterState& state, const std::string& label) {
  return state.amplitudes().size() == 1 &&
         std::abs(state.amplitude(gates::BasisConfig::from_label(label)) - 1.0) <
             1e-15;
}

CriterionResult criterion_table_traces() {
  const auto protocols = gates::builtin_protocols();
  std::ostringstream detail;
  bool passed = true;

  const auto check_panel = [&](const char* name,
                               const std::vector<std::array<const char*, 4>>& rows) {
    const auto& script = protocols.at(name);
    for (std::size_t column = 0; column < table_inputs.size(); ++column) {
      const auto input = gates::RegisterState::basis(
          gates::BasisConfig::from_label(table_inputs[column]));
      const auto run = gates::run_protocol(script, input, /*trace=*/true);
      if (run.trace.size() != rows.size()) {
        passed = false;
        detail << name << ": unexpected trace length; ";
        return;
      }
      for (std::size_t row = 0; row < rows.size(); ++row) {
        if (!is_pure_basis(run.trace[row], rows[row][column])) {
          passed = false;
          detail << name << " input " << table_inputs[column] << " step "
                 << row + 1 << " != " << rows[row][column] << "; ";
        }
      }
    }
  };
  check_panel("swap", swap_rows);
  check_panel("cnot", cnot_rows);

  // Final truth tables on the computational encoding.
  for (int q1 : {0, 1}) {
    for (int q2 : {0, 1}) {
      const auto swapped = gates::run_protocol(protocols.at("swap"),
                                               gates::computational_encode(q1, q2));
      if (gates::computational_decode(swapped.final_state) !=
          std::make_optional(std::make_pair(q2, q1))) {
        passed = false;
        detail << "swap(" << q1 << q2 << ") wrong; ";
      }
      const auto controlled = gates::run_protocol(protocols.at("cnot"),
                                                  gates::computational_encode(q1, q2));
      if (gates::computational_decode(controlled.final_state) !=
          std::make_optional(std::make_pair(q1, q2 ^ q1))) {
        passed = false;
        detail << "cnot(" << q1 << q2 << ") wrong; ";
      }
    }
  }
  if (passed)
    detail << "all " << swap_rows.size() + cnot_rows.size()
           << " rows x 4 columns reproduced; truth tables match";
  return {6, "Table SWAP/CNOT intermediate traces and truth tables", passed,
          detail.str()};
}

CriterionResult criterion_operator_properties() {
  using gates::Atom;
  using gates::BasisConfig;
  using gates::NodeState;
  using gates::RegisterState;
  std::ostringstream detail;
  bool passed = true;

  // Involutions and conservation on every basis configuration within cap.
  for (int a1 = 0; a1 < 2; ++a1)
    for (int n1 = 0; n1 <= 3; ++n1)
      for (int a2 = 0; a2 < 2; ++a2)
        for (int n2 = 0; n2 <= 3; ++n2) {
          const BasisConfig config{{a1 ? Atom::e : Atom::g, n1},
                                   {a2 ? Atom::e : Atom::g, n2}};
          const auto state = RegisterState::basis(config);
          if (gates::exchange(gates::exchange(state)) != state) {
            passed = false;
            detail << "exchange^2 != id at " << config.label() << "; ";
          }
          const auto once = gates::exchange(state);
          const auto& swapped = once.amplitudes().begin()->first;
          if (swapped.node1.photons + swapped.node2.photons != n1 + n2 ||
              swapped.node1.atom != config.node1.atom ||
              swapped.node2.atom != config.node2.atom) {
            passed = false;
            detail << "exchange conservation broken at " << config.label() << "; ";
          }
          const bool pi_safe = !(config.node1 == NodeState{Atom::e, 3}) &&
                               !(config.node2 == NodeState{Atom::e, 3});
          if (pi_safe) {
            if (gates::pi_op(gates::pi_op(state)) != state) {
              passed = false;
              detail << "pi^2 != id at " << config.label() << "; ";
            }
            const auto inverted = gates::pi_op(state);
            const auto& next = inverted.amplitudes().begin()->first;
            if (next.node1.excitation() != config.node1.excitation() ||
                next.node2.excitation() != config.node2.excitation()) {
              passed = false;
              detail << "pi excitation conservation broken at " << config.label()
                     << "; ";
            }
          }
        }

  // Linearity and norm preservation on random computational superpositions.
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  const auto protocols = gates::builtin_protocols();
  double worst_linearity = 0.0;
  double worst_norm = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    std::array<std::complex<double>, 4> coefficients;
    double norm2 = 0.0;
    for (auto& coefficient : coefficients) {
      coefficient = {uniform(rng), uniform(rng)};
      norm2 += std::norm(coefficient);
    }
    const double scale = 1.0 / std::sqrt(norm2);
    RegisterState::Map map;
    std::array<RegisterState, 4> basis_states;
    int index = 0;
    for (int q1 : {0, 1})
      for (int q2 : {0, 1}) {
        basis_states[index] = gates::computational_encode(q1, q2);
        map[basis_states[index].amplitudes().begin()->first] =
            coefficients[index] * scale;
        ++index;
      }
    const RegisterState superposition(std::move(map));
    const auto& script = protocols.at(trial % 2 == 0 ? "swap" : "cnot");
    const auto output = gates::run_protocol(script, superposition).final_state;
    worst_norm = std::max(worst_norm, std::abs(output.norm_squared() - 1.0));
    for (int k = 0; k < 4; ++k) {
      const auto basis_out = gates::run_protocol(script, basis_states[k]).final_state;
      const auto& target = basis_out.amplitudes().begin()->first;
      const auto expected = coefficients[k] * scale;
      worst_linearity = std::max(worst_linearity,
                                 std::abs(output.amplitude(target) - expected));
    }
  }
  if (worst_linearity > 1e-12 || worst_norm > 1e-12) passed = false;
  if (passed)
    detail << "involutions/conservation exact; max linearity deviation = "
           << fmt(worst_linearity) << ", max norm deviation = " << fmt(worst_norm);
  return {7, "gate operator properties", passed, detail.str()};
}

CriterionResult criterion_rabi_magnitude() {
  const double lambda1 = 1.24e-6;
  const device::NodeCoupling coupling{1e-28, std::pow(lambda1 / 2.2, 3.0), lambda1};
  const double omega = device::vacuum_rabi_frequency(coupling);
  const bool passed = omega >= 1e8 && omega <= 1e9;
  return {8, "vacuum Rabi frequency in stated range", passed,
          "Omega0 = " + fmt(omega) + " rad/s (required [1e8, 1e9])"};
}

CriterionResult criterion_kerr_shift() {
  const auto medium = device::KerrMedium::from_cm2_per_watt(83.3e-16, 2.2);
  const double shift = device::kerr_index_shift(medium, 1e11);
  const bool passed = std::abs(shift - 8.33e-4) <= 1e-12 * 8.33e-4;
  return {9, "Kerr index shift", passed, "dn = " + fmt(shift)};
}

CriterionResult criterion_bragg_bands() {
  constexpr double lambda0 = 1.24e-6;
  std::ostringstream detail;
  bool passed = true;

  // (a) high-contrast stop band width
  const auto high_contrast = device::GratingSpec::quarter_wave(2.22, 2.18, lambda0, 200);
  const auto high_spectrum = device::reflectivity_spectrum(
      high_contrast, lambda0 - 20e-9, lambda0 + 20e-9, 0.05e-9, 2.2);
  const double width = device::stopband_width(high_spectrum, 0.99);
  const bool pass_a = width >= 5e-9 && width <= 20e-9;
  detail << "(a) width(dn=0.04, N=200) = " << fmt(width * 1e9) << " nm";

  // (b) low-contrast transparency trend
  bool decreasing = true;
  double previous = 2.0;
  double t_3000 = 1.0;
  for (int periods : {500, 1000, 1500, 2000, 2500, 3000}) {
    const auto stack = device::GratingSpec::quarter_wave(2.2005, 2.1995, lambda0, periods);
    const double t_center = 1.0 - device::reflectivity_at(stack, lambda0, 2.2);
    if (t_center >= previous) decreasing = false;
    previous = t_center;
    if (periods == 3000) t_3000 = t_center;
  }
  const bool pass_b = decreasing && t_3000 < 1e-4;
  detail << "; (b) T strictly decreasing: " << (decreasing ? "yes" : "no")
         << ", T(N=3000) = " << fmt(t_3000) << " (required < 1e-4)";

  // (c) quarter-wave closed form
  double worst_qw = 0.0;
  for (int periods : {1, 10, 100}) {
    const auto stack = device::GratingSpec::quarter_wave(2.22, 2.18, lambda0, periods);
    const double rho = std::pow(2.18 / 2.22, 2.0 * periods);
    const double closed = std::pow((1.0 - rho) / (1.0 + rho), 2.0);
    worst_qw = std::max(worst_qw,
                        std::abs(device::reflectivity_at(stack, lambda0, 2.2) - closed));
  }
  const bool pass_c = worst_qw <= 1e-9;
  detail << "; (c) max QW closed-form deviation = " << fmt(worst_qw);

  // (d) losslessness across sampled spectra
  double worst_lossless = 0.0;
  for (std::size_t i = 0; i < high_spectrum.wavelengths.size(); ++i)
    worst_lossless = std::max(worst_lossless,
                              std::abs(high_spectrum.reflectivity[i] +
                                       high_spectrum.transmissivity[i] - 1.0));
  const bool pass_d = worst_lossless <= 1e-12;
  detail << "; (d) max |R+T-1| = " << fmt(worst_lossless);

  passed = pass_a && pass_b && pass_c && pass_d;
  return {10, "Bragg mirror feasibility bands", passed, detail.str()};
}

CriterionResult criterion_kerr_erasure() {
  constexpr double lambda0 = 1.24e-6;
  const auto medium = device::KerrMedium::from_cm2_per_watt(83.3e-16, 2.2);
  const double shift = device::kerr_index_shift(medium, 1e11);

  auto stack = device::GratingSpec::quarter_wave(2.2 + shift, 2.2, lambda0, 3000);
  const double before = device::reflectivity_at(stack, lambda0, 2.2);
  stack.n_high = std::max(stack.n_high - shift, stack.n_low);  // control on, geometry unchanged
  const double after = device::reflectivity_at(stack, lambda0, 2.2);
  const bool passed = after < 1e-3;
  return {11, "Kerr erasure removes the stop band", passed,
          "center R " + fmt(before) + " -> " + fmt(after)};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(int only_id) {
  using Check = CriterionResult (*)();
  static constexpr std::array<Check, criterion_count> checks{
      criterion_overlap_oracle,  criterion_parseval,
      criterion_revival,         criterion_fig4_bands,
      criterion_spectral_vs_grid, criterion_table_traces,
      criterion_operator_properties, criterion_rabi_magnitude,
      criterion_kerr_shift,      criterion_bragg_bands,
      criterion_kerr_erasure};
  std::vector<CriterionResult> results;
  for (int id = 1; id <= criterion_count; ++id) {
    if (only_id != 0 && only_id != id) continue;
    results.push_back(checks[id - 1]());
  }
  return results;
}

}  // namespace optchan::verify
