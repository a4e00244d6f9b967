#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <utility>

namespace etapair::fock {

using amplitude_t = std::complex<double>;

enum class Spin : int { Up = 0, Down = 1 };
enum class Ladder : int { Create, Annihilate };

/// One spin-orbital mode: lattice site plus spin projection.
struct ModeIndex {
  int site = 0;
  Spin spin = Spin::Up;
};

/// Linear mode index 2*site + (0 up, 1 down); throws std::domain_error
/// if the site is outside [0, n_sites).
int linear_mode(ModeIndex mode, int n_sites);

/// Sparse fermionic state over 2*n_sites modes.
///
/// Basis strings are 64-bit occupation patterns, bit b = occupancy of
/// linear mode b. Amplitudes with |amp| < prune_threshold are dropped,
/// so the zero vector has an empty map. All fermionic signs follow the
/// canonical linear-mode ordering.
class FockVector {
 public:
  static constexpr double prune_threshold = 1e-14;
  static constexpr int max_sites = 32;  // 2n bits must fit a 64-bit string

  explicit FockVector(int n_sites);

  static FockVector vacuum(int n_sites);

  int n_sites() const { return n_sites_; }
  int n_modes() const { return 2 * n_sites_; }

  const std::map<std::uint64_t, amplitude_t>& amplitudes() const { return amps_; }
  std::size_t size() const { return amps_.size(); }

  amplitude_t amplitude(std::uint64_t bits) const;

  /// Accumulates amp onto a basis string, pruning near-zero results.
  void add(std::uint64_t bits, amplitude_t amp);

  double norm_squared() const;
  double norm() const;
  bool is_normalized(double tol = 1e-12) const;

  FockVector normalized() const;  // throws std::domain_error on the zero vector
  FockVector scaled(amplitude_t factor) const;

 private:
  int n_sites_;
  std::map<std::uint64_t, amplitude_t> amps_;
};

/// One creation/annihilation factor of an operator string.
using LadderTerm = std::pair<ModeIndex, Ladder>;

/// Applies a single ladder operator. Creation on an occupied mode and
/// annihilation on an empty mode kill the basis string; surviving terms
/// pick up (-1)^(occupied modes strictly below the target).
FockVector apply_ladder(const FockVector& state, ModeIndex mode, Ladder kind);

/// Applies an operator string right-to-left: ops = {A, B, C} gives A B C |state>.
FockVector apply_string(const FockVector& state, std::span<const LadderTerm> ops);

/// <a|b>, conjugate-linear in the first argument. Sizes must match.
amplitude_t inner_product(const FockVector& a, const FockVector& b);

/// <state| ops |state> with ops applied right-to-left. The state must be
/// normalized within 1e-9.
amplitude_t expectation(const FockVector& state, std::span<const LadderTerm> ops);

}  // namespace etapair::fock
