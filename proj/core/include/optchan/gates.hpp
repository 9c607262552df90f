#pragma once

#include <compare>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace optchan::gates {

enum class Atom { g, e };

// One bipartite "atom+field" node: atomic level plus cavity photon number.
struct NodeState {
  Atom atom = Atom::g;
  int photons = 0;

  // [atom == e] + photons, conserved by the inversion operator.
  int excitation() const { return (atom == Atom::e ? 1 : 0) + photons; }

  auto operator<=>(const NodeState&) const = default;
};

struct BasisConfig {
  NodeState node1;
  NodeState node2;

  auto operator<=>(const BasisConfig&) const = default;

  // "g1.e0" style: atom letter + photon count per node, dot-separated.
  std::string label() const;
  static BasisConfig from_label(const std::string& label);
};

inline constexpr int default_photon_cap = 3;

// Normalized superposition over two-node product basis states. Amplitudes
// below the pruning tolerance are dropped.
class RegisterState {
 public:
  using Amplitude = std::complex<double>;
  using Map = std::map<BasisConfig, Amplitude>;

  RegisterState() = default;
  explicit RegisterState(Map amplitudes, int photon_cap = default_photon_cap);

  // Single basis configuration with unit amplitude.
  static RegisterState basis(const BasisConfig& config,
                             int photon_cap = default_photon_cap);

  const Map& amplitudes() const { return amplitudes_; }
  int photon_cap() const { return photon_cap_; }
  double norm_squared() const;

  Amplitude amplitude(const BasisConfig& config) const;

  bool operator==(const RegisterState& other) const = default;

 private:
  Map amplitudes_;
  int photon_cap_ = default_photon_cap;
};

enum class Step { Exchange, PiBoth, Pi1, Pi2 };

std::string step_name(Step step);
Step step_from_name(const std::string& name);

using ProtocolScript = std::vector<Step>;

enum class PiTarget { both, node1, node2 };

// Photon exchange: swaps the photonic parts of the two nodes in every
// basis configuration; atomic parts and amplitudes are untouched.
RegisterState exchange(const RegisterState& state);

// Inversion on the selected node(s): (g,n>=1) -> (e,n-1), (e,n) -> (g,n+1),
// (g,0) fixed. Throws PhotonCapError if a result exceeds the photon cap.
RegisterState pi_op(const RegisterState& state, PiTarget target = PiTarget::both);

struct ProtocolRun {
  RegisterState final_state;
  std::vector<RegisterState> trace;  // state after every step, if requested
};

ProtocolRun run_protocol(const ProtocolScript& script, const RegisterState& input,
                         bool trace = false);

// SWAP and CNOT scripts exactly as tabulated.
std::map<std::string, ProtocolScript> builtin_protocols();

// Computational encoding: |0> = |e>|0>, |1> = |g>|1>.
RegisterState computational_encode(int q1, int q2);

// Inverse of the encoding; nullopt when any amplitude leaves the
// 4-dimensional computational subspace (tolerance 1e-10).
std::optional<std::pair<int, int>> computational_decode(const RegisterState& state);

}  // namespace optchan::gates
