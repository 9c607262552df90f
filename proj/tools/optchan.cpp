#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "optchan/device.hpp"
#include "optchan/errors.hpp"
#include "optchan/gates.hpp"
#include "optchan/gates_json.hpp"
#include "optchan/io.hpp"
#include "optchan/modes.hpp"
#include "optchan/propagation.hpp"
#include "optchan/units.hpp"
#include "optchan/verify.hpp"

namespace {

using optchan::units::format_double;

// --- output plumbing --------------------------------------------------------

class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) {
    if (path != "-") {
      file_.open(path);
      if (!file_) throw CLI::ValidationError("--output", "cannot open " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

// --- flag value parsing -------------------------------------------------------

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream stream(text);
  std::string part;
  while (std::getline(stream, part, ',')) parts.push_back(part);
  return parts;
}

// "3", "1,5,10" or "1..10".
std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const int first = std::stoi(text.substr(0, dots));
    const int last = std::stoi(text.substr(dots + 2));
    if (last < first) throw CLI::ValidationError("range", text + " is reversed");
    for (int v = first; v <= last; ++v) values.push_back(v);
    return values;
  }
  for (const auto& part : split_list(text)) values.push_back(std::stoi(part));
  return values;
}

// Dispersion flags accept either a suffixed quantity ("10ps_nm_km") or a
// bare number read as ps/(nm*km).
double parse_dispersion_flag(const std::string& text) {
  double bare = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), bare);
  if (ec == std::errc{} && ptr == text.data() + text.size()) return bare;
  return optchan::units::parse_dispersion(text);
}

// --- shared geometry flags ----------------------------------------------------

struct GeometryFlags {
  std::string lambda1 = "1.24um";
  double n = 2.2;
  double ratio = 200.0;
  std::string l0;  // explicit isolated-cavity length, overrides lambda1

  void attach(CLI::App* cmd) {
    cmd->add_option("--lambda1", lambda1, "transition wavelength (unit suffix required)");
    cmd->add_option("--n", n, "effective refractive index");
    cmd->add_option("--ratio", ratio, "common-to-isolated cavity length ratio l/l0");
    cmd->add_option("--l0", l0, "isolated cavity length (overrides --lambda1)");
  }

  optchan::modes::CavityGeometry geometry(int s0) const {
    if (!l0.empty()) {
      const double length0 = optchan::units::parse_length(l0);
      return {length0, ratio * length0, n, s0};
    }
    return optchan::propagation::default_geometry(
        s0, {optchan::units::parse_length(lambda1), n, ratio});
  }
};

// --- config file expansion ------------------------------------------------------
//
// A config file is a flat JSON object mirroring the flags of one subcommand.
// Its entries are injected as synthetic flags ahead of the ones typed on the
// command line, and every option takes the last occurrence, so explicit flags
// win.

std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::vector<std::string> user;
  std::string config_path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size())
        throw CLI::ValidationError("--config", "expects a file path");
      config_path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      config_path = args[i].substr(9);
    } else {
      user.push_back(args[i]);
    }
  }
  if (config_path.empty()) return user;

  std::ifstream file(config_path);
  if (!file) throw CLI::ValidationError("--config", "cannot read " + config_path);
  nlohmann::json parsed;
  file >> parsed;
  if (!parsed.is_object())
    throw CLI::ValidationError("--config", "expected a flat JSON object");

  std::vector<std::string> expanded;
  if (!user.empty() && user.front()[0] != '-') {
    expanded.push_back(user.front());  // subcommand name stays first
    user.erase(user.begin());
  }
  for (const auto& [key, value] : parsed.items()) {
    if (value.is_boolean()) {
      if (value.get<bool>()) expanded.push_back("--" + key);
      continue;
    }
    expanded.push_back("--" + key);
    expanded.push_back(value.is_string() ? value.get<std::string>() : value.dump());
  }
  expanded.insert(expanded.end(), user.begin(), user.end());
  return expanded;
}

// --- subcommands ----------------------------------------------------------------

struct SpectrumArgs {
  std::string s0 = "1";
  std::string norm = "max1";
  int s_max = 0;  // 0 selects auto truncation
  GeometryFlags geometry;
  std::string output = "-";
};

int cmd_spectrum(const SpectrumArgs& args) {
  using optchan::modes::PlotNormalization;
  const auto normalization =
      args.norm == "raw" ? PlotNormalization::raw : PlotNormalization::max1;
  OutputTarget target(args.output);
  bool first = true;
  for (int s0 : parse_int_list(args.s0)) {
    const auto geometry = args.geometry.geometry(s0);
    const auto spectrum = args.s_max > 0
                              ? optchan::modes::population_spectrum(geometry, args.s_max)
                              : optchan::modes::population_spectrum(geometry);
    if (!first) target.stream() << "\n";
    first = false;
    optchan::io::write_spectrum_csv(
        target.stream(), optchan::modes::spectrum_for_plot(spectrum, normalization));
  }
  return 0;
}

struct PropagateArgs {
  int s0 = 1;
  std::string dispersion = "0ps_nm_km";
  std::string t = "roundtrip";
  int n_z = 0;  // 0 selects 2*s_max + 1
  GeometryFlags geometry;
  std::string output = "-";
};

int cmd_propagate(const PropagateArgs& args) {
  const auto geometry = args.geometry.geometry(args.s0);
  const auto spectrum = optchan::modes::population_spectrum(geometry);
  const auto params = optchan::propagation::DispersionParams::from_ps_nm_km(
      parse_dispersion_flag(args.dispersion), geometry);
  const double t = args.t == "roundtrip" ? optchan::propagation::roundtrip_time(geometry)
                                         : optchan::units::parse_time(args.t);
  const int n_z = args.n_z > 0 ? args.n_z : 2 * spectrum.s_max + 1;
  const auto state = optchan::propagation::field_snapshot(params, spectrum, t, n_z);
  OutputTarget target(args.output);
  optchan::io::write_snapshot_csv(target.stream(), state);
  return 0;
}

struct FidelityArgs {
  std::string s0 = "1,10";
  std::string dispersion = "0";
  std::string method = "spectral";
  GeometryFlags geometry;
  std::string output = "-";
};

int cmd_fidelity(const FidelityArgs& args) {
  std::vector<double> d_values;
  for (const auto& part : split_list(args.dispersion))
    d_values.push_back(parse_dispersion_flag(part));
  const auto method = args.method == "grid"
                          ? optchan::propagation::FidelityMethod::grid
                          : optchan::propagation::FidelityMethod::spectral;
  optchan::propagation::GeometryDefaults defaults{
      optchan::units::parse_length(args.geometry.lambda1), args.geometry.n,
      args.geometry.ratio};
  const auto points = optchan::propagation::fidelity_sweep(
      parse_int_list(args.s0), d_values, defaults,
      optchan::modes::default_truncation_tail, method);
  OutputTarget target(args.output);
  optchan::io::write_fidelity_csv(target.stream(), points);
  return 0;
}

struct ReflectivityArgs {
  double n_low = 2.2;
  double delta_n = 0.04;
  double n_high = 0.0;  // set explicitly to override n_low + delta_n
  int periods = 200;
  std::string lambda0 = "1.24um";
  std::string lambda_min, lambda_max;
  std::string step = "0.05nm";
  double ambient = 0.0;  // defaults to n_low
  std::string output = "-";
};

int cmd_reflectivity(const ReflectivityArgs& args) {
  const double lambda0 = optchan::units::parse_length(args.lambda0);
  const double n_high = args.n_high > 0.0 ? args.n_high : args.n_low + args.delta_n;
  const auto grating =
      optchan::device::GratingSpec::quarter_wave(n_high, args.n_low, lambda0, args.periods);
  const double lo = args.lambda_min.empty() ? lambda0 - 20e-9
                                            : optchan::units::parse_length(args.lambda_min);
  const double hi = args.lambda_max.empty() ? lambda0 + 20e-9
                                            : optchan::units::parse_length(args.lambda_max);
  const double ambient = args.ambient > 0.0 ? args.ambient : args.n_low;
  const auto spectrum = optchan::device::reflectivity_spectrum(
      grating, lo, hi, optchan::units::parse_length(args.step), ambient);
  OutputTarget target(args.output);
  optchan::io::write_reflectivity_csv(target.stream(), spectrum);
  return 0;
}

struct RabiArgs {
  std::string dipole = "1e-28C_m";
  std::string volume;  // defaults to (lambda1 / n)^3
  std::string lambda1 = "1.24um";
  double n = 2.2;
  std::string units = "cgs";
  std::string output = "-";
};

int cmd_rabi(const RabiArgs& args) {
  const double lambda1 = optchan::units::parse_length(args.lambda1);
  const double volume = args.volume.empty() ? std::pow(lambda1 / args.n, 3.0)
                                            : optchan::units::parse_volume(args.volume);
  const optchan::device::NodeCoupling coupling{
      optchan::units::parse_dipole(args.dipole), volume, lambda1};
  const auto units = args.units == "si" ? optchan::device::RabiUnits::si
                                        : optchan::device::RabiUnits::cgs;
  const double omega = optchan::device::vacuum_rabi_frequency(coupling, units);
  OutputTarget target(args.output);
  target.stream() << "Omega0 = " << format_double(omega) << " rad/s\n";
  return 0;
}

struct KerrArgs {
  std::string material = "linbo3";
  std::string n2;  // overrides the material preset
  double n0 = 0.0;
  std::string intensity = "1e11W_cm2";
  std::string output = "-";
};

int cmd_kerr(const KerrArgs& args) {
  optchan::device::KerrMedium medium;
  if (args.material == "linbo3") {
    medium = optchan::device::KerrMedium::from_cm2_per_watt(83.3e-16, 2.2);
  } else if (args.material != "custom") {
    throw CLI::ValidationError("--material", "unknown material " + args.material);
  }
  if (!args.n2.empty()) medium.n2 = optchan::units::parse_kerr_coefficient(args.n2);
  if (args.n0 > 0.0) medium.n0 = args.n0;
  if (medium.n2 <= 0.0)
    throw CLI::ValidationError("--n2", "custom material requires --n2");
  const double shift = optchan::device::kerr_index_shift(
      medium, optchan::units::parse_intensity(args.intensity));
  OutputTarget target(args.output);
  target.stream() << "dn = " << format_double(shift) << "\n";
  return 0;
}

struct GateArgs {
  std::string protocol = "swap";
  std::string input = "00";
  bool trace = false;
  int photon_cap = optchan::gates::default_photon_cap;
  std::string output = "-";
};

int cmd_gate(const GateArgs& args) {
  using namespace optchan::gates;
  ProtocolScript script;
  if (args.protocol.rfind("file:", 0) == 0) {
    std::ifstream file(args.protocol.substr(5));
    if (!file)
      throw CLI::ValidationError("--protocol", "cannot read " + args.protocol.substr(5));
    std::stringstream buffer;
    buffer << file.rdbuf();
    script = script_from_json(buffer.str());
  } else {
    const auto protocols = builtin_protocols();
    const auto found = protocols.find(args.protocol);
    if (found == protocols.end())
      throw CLI::ValidationError("--protocol",
                                 "expected swap, cnot or file:<path>, got " + args.protocol);
    script = found->second;
  }

  RegisterState input;
  if (args.input.size() == 2 && (args.input[0] == '0' || args.input[0] == '1') &&
      (args.input[1] == '0' || args.input[1] == '1')) {
    input = computational_encode(args.input[0] - '0', args.input[1] - '0');
    if (args.photon_cap != default_photon_cap)
      input = RegisterState(RegisterState::Map(input.amplitudes()), args.photon_cap);
  } else {
    std::ifstream file(args.input);
    if (!file)
      throw CLI::ValidationError("--input",
                                 "expected two bits or a state file, got " + args.input);
    std::stringstream buffer;
    buffer << file.rdbuf();
    input = state_from_json(buffer.str(), args.photon_cap);
  }

  const auto run = run_protocol(script, input, args.trace);
  OutputTarget target(args.output);
  if (args.trace) {
    ProtocolRun with_input;
    with_input.trace.push_back(input);
    with_input.trace.insert(with_input.trace.end(), run.trace.begin(), run.trace.end());
    target.stream() << trace_to_json(with_input) << "\n";
  } else {
    target.stream() << state_to_json(run.final_state) << "\n";
  }
  return 0;
}

struct VerifyArgs {
  int criterion = 0;  // 0 runs all
  std::string output = "-";
};

int cmd_verify(const VerifyArgs& args) {
  const auto results = optchan::verify::run_acceptance(args.criterion);
  OutputTarget target(args.output);
  bool all_passed = true;
  for (const auto& result : results) {
    all_passed = all_passed && result.passed;
    target.stream() << (result.passed ? "PASS" : "FAIL") << " criterion "
                    << result.id << ": " << result.name << " [" << result.detail
                    << "]\n";
  }
  target.stream() << (all_passed ? "all criteria passed" : "some criteria failed")
                  << "\n";
  return all_passed ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optically controlled cavity-network toolkit"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  SpectrumArgs spectrum_args;
  auto* spectrum = app.add_subcommand("spectrum", "eigenmode population spectrum CSV");
  spectrum->add_option("--s0", spectrum_args.s0, "mode index, list (1,5) or range (1..10)");
  spectrum->add_option("--norm", spectrum_args.norm, "raw or max1")
      ->check(CLI::IsMember({"raw", "max1"}));
  spectrum->add_option("--smax", spectrum_args.s_max, "fixed truncation (0 = auto)");
  spectrum_args.geometry.attach(spectrum);
  spectrum->add_option("--output", spectrum_args.output, "output path or -");

  PropagateArgs propagate_args;
  auto* propagate = app.add_subcommand("propagate", "field snapshot CSV");
  propagate->add_option("--s0", propagate_args.s0, "mode index");
  propagate->add_option("--D", propagate_args.dispersion, "group velocity dispersion");
  propagate->add_option("--t", propagate_args.t, "evaluation time or 'roundtrip'");
  propagate->add_option("--nz", propagate_args.n_z, "grid points (0 = auto)");
  propagate_args.geometry.attach(propagate);
  propagate->add_option("--output", propagate_args.output, "output path or -");

  FidelityArgs fidelity_args;
  auto* fidelity = app.add_subcommand("fidelity", "round-trip fidelity sweep CSV");
  fidelity->add_option("--s0", fidelity_args.s0, "mode indices, list or range");
  fidelity->add_option("--D", fidelity_args.dispersion, "dispersion values, comma list");
  fidelity->add_option("--method", fidelity_args.method, "spectral or grid")
      ->check(CLI::IsMember({"spectral", "grid"}));
  fidelity_args.geometry.attach(fidelity);
  fidelity->add_option("--output", fidelity_args.output, "output path or -");

  ReflectivityArgs reflectivity_args;
  auto* reflectivity = app.add_subcommand("reflectivity", "Bragg mirror spectrum CSV");
  reflectivity->add_option("--n-low", reflectivity_args.n_low, "low layer index");
  reflectivity->add_option("--delta-n", reflectivity_args.delta_n, "index contrast");
  reflectivity->add_option("--n-high", reflectivity_args.n_high, "high layer index");
  reflectivity->add_option("--periods", reflectivity_args.periods, "number of periods");
  reflectivity->add_option("--lambda0", reflectivity_args.lambda0, "design wavelength");
  reflectivity->add_option("--lambda-min", reflectivity_args.lambda_min, "scan start");
  reflectivity->add_option("--lambda-max", reflectivity_args.lambda_max, "scan end");
  reflectivity->add_option("--step", reflectivity_args.step, "scan step");
  reflectivity->add_option("--ambient", reflectivity_args.ambient, "ambient index");
  reflectivity->add_option("--output", reflectivity_args.output, "output path or -");

  RabiArgs rabi_args;
  auto* rabi = app.add_subcommand("rabi", "vacuum Rabi frequency report");
  rabi->add_option("--dipole", rabi_args.dipole, "transition dipole moment");
  rabi->add_option("--volume", rabi_args.volume, "mode volume (default (lambda1/n)^3)");
  rabi->add_option("--lambda1", rabi_args.lambda1, "transition wavelength");
  rabi->add_option("--n", rabi_args.n, "refractive index");
  rabi->add_option("--units", rabi_args.units, "cgs or si")
      ->check(CLI::IsMember({"cgs", "si"}));
  rabi->add_option("--output", rabi_args.output, "output path or -");

  KerrArgs kerr_args;
  auto* kerr = app.add_subcommand("kerr", "cross-phase index shift report");
  kerr->add_option("--material", kerr_args.material, "linbo3 or custom");
  kerr->add_option("--n2", kerr_args.n2, "Kerr coefficient");
  kerr->add_option("--n0", kerr_args.n0, "linear index");
  kerr->add_option("--intensity", kerr_args.intensity, "control intensity");
  kerr->add_option("--output", kerr_args.output, "output path or -");

  GateArgs gate_args;
  auto* gate = app.add_subcommand("gate", "run a gate protocol, JSON output");
  gate->add_option("--protocol", gate_args.protocol, "swap, cnot or file:<path>");
  gate->add_option("--input", gate_args.input, "two bits (e.g. 10) or a state file");
  gate->add_flag("--trace", gate_args.trace, "emit the state after every step");
  gate->add_option("--photon-cap", gate_args.photon_cap, "per-node photon cap");
  gate->add_option("--output", gate_args.output, "output path or -");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  verify->add_option("--criterion", verify_args.criterion, "single criterion id (0 = all)");
  verify->add_option("--output", verify_args.output, "output path or -");

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    args = expand_config(args);
    // CLI11 consumes arguments in reverse order.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& error) {
    const int code = app.exit(error);
    return code == 0 ? 0 : 1;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(spectrum_args);
    if (propagate->parsed()) return cmd_propagate(propagate_args);
    if (fidelity->parsed()) return cmd_fidelity(fidelity_args);
    if (reflectivity->parsed()) return cmd_reflectivity(reflectivity_args);
    if (rabi->parsed()) return cmd_rabi(rabi_args);
    if (kerr->parsed()) return cmd_kerr(kerr_args);
    if (gate->parsed()) return cmd_gate(gate_args);
    if (verify->parsed()) return cmd_verify(verify_args);
  } catch (const optchan::PhysicsError& error) {
    std::cerr << "physics error: " << error.what() << "\n";
    return 2;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  }
  return 1;
}
