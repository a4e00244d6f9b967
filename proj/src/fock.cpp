#include "etapair/fock.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace etapair::fock {

int linear_mode(ModeIndex mode, int n_sites) {
  if (mode.site < 0 || mode.site >= n_sites) {
    throw std::domain_error("mode site " + std::to_string(mode.site) +
                            " out of range for " + std::to_string(n_sites) + " sites");
  }
  return 2 * mode.site + (mode.spin == Spin::Down ? 1 : 0);
}

FockVector::FockVector(int n_sites) : n_sites_(n_sites) {
  if (n_sites < 1) throw std::domain_error("FockVector needs at least one site");
  if (n_sites > max_sites) {
    throw std::length_error("FockVector supports at most " +
                            std::to_string(max_sites) + " sites");
  }
}

FockVector FockVector::vacuum(int n_sites) {
  FockVector v(n_sites);
  v.amps_[0] = 1.0;
  return v;
}

amplitude_t FockVector::amplitude(std::uint64_t bits) const {
  auto it = amps_.find(bits);
  return it == amps_.end() ? amplitude_t{0.0} : it->second;
}

void FockVector::add(std::uint64_t bits, amplitude_t amp) {
  auto [it, inserted] = amps_.try_emplace(bits, amp);
  if (!inserted) it->second += amp;
  if (std::abs(it->second) < prune_threshold) amps_.erase(it);
}

double FockVector::norm_squared() const {
  double s = 0.0;
  for (const auto& [bits, amp] : amps_) s += std::norm(amp);
  return s;
}

double FockVector::norm() const { return std::sqrt(norm_squared()); }

bool FockVector::is_normalized(double tol) const {
  return std::abs(norm_squared() - 1.0) <= tol;
}

FockVector FockVector::normalized() const {
  const double n = norm();
  if (n < prune_threshold) throw std::domain_error("cannot normalize the zero vector");
  return scaled(1.0 / n);
}

FockVector FockVector::scaled(amplitude_t factor) const {
  FockVector out(n_sites_);
  for (const auto& [bits, amp] : amps_) out.add(bits, factor * amp);
  return out;
}

FockVector apply_ladder(const FockVector& state, ModeIndex mode, Ladder kind) {
  const int b = linear_mode(mode, state.n_sites());
  const std::uint64_t target = std::uint64_t{1} << b;
  const std::uint64_t below_mask = target - 1;

  FockVector out(state.n_sites());
  for (const auto& [bits, amp] : state.amplitudes()) {
    const bool occupied = (bits & target) != 0;
    if (kind == Ladder::Create ? occupied : !occupied) continue;
    const int parity = std::popcount(bits & below_mask) & 1;
    const double sign = parity ? -1.0 : 1.0;
    out.add(bits ^ target, sign * amp);
  }
  return out;
}

FockVector apply_string(const FockVector& state, std::span<const LadderTerm> ops) {
  FockVector out = state;
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    out = apply_ladder(out, it->first, it->second);
  }
  return out;
}

amplitude_t inner_product(const FockVector& a, const FockVector& b) {
  if (a.n_sites() != b.n_sites()) {
    throw std::domain_error("inner product of states with different site counts");
  }
  amplitude_t s = 0.0;
  for (const auto& [bits, amp] : a.amplitudes()) {
    s += std::conj(amp) * b.amplitude(bits);
  }
  return s;
}

amplitude_t expectation(const FockVector& state, std::span<const LadderTerm> ops) {
  if (!state.is_normalized(1e-9)) {
    throw std::domain_error("expectation requires a normalized state");
  }
  return inner_product(state, apply_string(state, ops));
}

}  // namespace etapair::fock
