#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "etapair/dicke.hpp"

namespace etapair::gauge {

/// Loop phase picked up by one pair exchange. The phase is the primitive
/// here; no vector potential is integrated.
struct PhaseSpec {
  double phi = 0.0;  // radians
};

enum class Topology { SimplyConnected, Annulus };
enum class UnitSystem { SI, Natural };

/// Which two-site coherence the exchanged phase lands on. The condensate
/// coherence sits on |01>,|10>; the |00>,|11> channel is the
/// counter-example whose kets trade equal and opposite phases.
enum class CoherenceChannel { OffDiagonal, Diagonal };

struct PhysicalConstants {
  double e = 1.0;        // pair-forming unit of charge is 2e
  double h = 1.0;        // Planck constant
  double c_light = 1.0;  // enters the loop phase only in Gaussian-style units
  UnitSystem units = UnitSystem::Natural;

  /// CODATA 2018 exact values.
  static PhysicalConstants si();
  /// hbar = c = e = 1.
  static PhysicalConstants natural();
};

/// One unit of trapped flux: h/(2e) in SI, h c/(2e) otherwise. The factor
/// two in the denominator is the pair charge.
double flux_quantum(const PhysicalConstants& constants);

/// Exchange transformation on a two-site density matrix: the |01><10|
/// coherence gains e^{i phi}, its conjugate e^{-i phi}, diagonal untouched.
Eigen::Matrix4cd apply_pair_exchange_phase(const Eigen::Matrix4cd& rho, PhaseSpec phase);

struct DefectReport {
  /// False when the state has no inter-site coherence (k = 0 or k = n):
  /// no ODLRO, so the exchanged phase is unconstrained.
  bool phase_constrained = true;
  std::optional<double> defect;  // 1 - fidelity with the symmetric coherence
};

/// Measures how far the phase-transformed coherence has moved from the
/// fully symmetric one: D = 1 - |<psi+|psi(phi)>|^2, computed from the
/// actual state vectors. Zero exactly when e^{i phi} = 1. On the Diagonal
/// channel the exchange cancels and the defect vanishes for every phi.
DefectReport symmetry_defect(const dicke::DickeSpec& spec, PhaseSpec phase,
                             CoherenceChannel channel = CoherenceChannel::OffDiagonal);

struct FluxReport {
  Topology topology = Topology::SimplyConnected;
  double bulk_b_field = 0.0;       // field inside the material
  std::vector<int> flux_indices;   // n with flux = n * flux_quantum
  std::vector<double> flux_values;
  double symmetry_defect = 0.0;    // defect at the allowed fluxes
};

/// Fluxes compatible with a single-valued exchange phase. Simply connected:
/// every loop must carry zero phase, so B = 0 and only the zero flux
/// survives. Annulus: the hole flux is quantized to integer multiples of
/// the flux quantum; being discrete, it cannot decay continuously, so the
/// screening current persists.
FluxReport allowed_flux_set(Topology topology, int max_n, const PhysicalConstants& constants);

}  // namespace etapair::gauge
