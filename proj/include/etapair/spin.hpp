#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <vector>

#include "etapair/fock.hpp"

namespace etapair::spin {

enum class Geometry { OpenChain, Ring };

/// H = -t sum_{<ij>,s} (c^dag_{i,s} c_{j,s} + h.c.) + U sum_i n_{i,up} n_{i,down}
/// on a small chain or ring; dense dimension 4^n caps n at 6.
struct HubbardSpec {
  int n_sites = 2;
  double t = 1.0;
  double u = 0.0;
  Geometry geometry = Geometry::OpenChain;
};

struct SpinCorrelatorReport {
  int i = 0;
  int j = 0;
  double czz = 0.0;  // <S^z_i S^z_j>
  double cxx = 0.0;
  double cyy = 0.0;
  double total = 0.0;  // <S_i . S_j>
};

struct GroundState {
  double energy = 0.0;
  fock::FockVector state;
};

struct HeisenbergPoint {
  double u_over_t = 0.0;
  double spin_corr = 0.0;  // ground-state <S_0 . S_1>
  double pair_corr = 0.0;  // ground-state pair-hopping correlator 0 -> 1
};

struct ResidualReport {
  double residual = 0.0;  // ||H psi - E psi||
  double energy = 0.0;    // E = <psi|H|psi>
};

/// Componentwise spin-spin correlator between two distinct sites, built
/// from ladder-operator expectation values.
SpinCorrelatorReport spin_correlator(const fock::FockVector& state, int i, int j);

/// Expectation of the on-site total spin squared S_i^2; zero on sites
/// that are empty or doubly occupied.
double onsite_spin_squared(const fock::FockVector& state, int i);

/// Dense Hamiltonian over all 4^n occupation strings (basis index equals
/// the bitstring). Real symmetric; commutes with N and total S^z.
Eigen::MatrixXd hubbard_hamiltonian(const HubbardSpec& spec);

/// Basis strings with n_electrons particles and n_up - n_down = sz_twice.
std::vector<std::uint64_t> sector_basis(int n_sites, int n_electrons, int sz_twice);

/// Ground state in the half-filled (N = n, S^z = 0) sector.
GroundState half_filling_ground_state(const HubbardSpec& spec);

/// Two-site half-filled ground state as U/t grows: the spin correlator
/// approaches the singlet value -3/4 while the pair correlator dies off.
std::vector<HeisenbergPoint> heisenberg_limit_check(double t, std::span<const double> u_list);

/// Eigenstate residual of the normalized k-pair condensate with phase q
/// per site. On a ring, q must wind to a multiple of 2*pi over n sites.
ResidualReport eta_eigenstate_residual(const HubbardSpec& spec, int k, double q);

/// Dense 4^n amplitude vector of a sparse state (index = bitstring).
Eigen::VectorXcd dense_state(const fock::FockVector& state);

}  // namespace etapair::spin
