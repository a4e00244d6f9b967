#include "etapair/eta.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace etapair::eta {

namespace {

void validate(const EtaSpec& spec) {
  if (spec.k_pairs < 0 || spec.k_pairs > spec.n_sites) {
    throw std::domain_error("pair count " + std::to_string(spec.k_pairs) +
                            " must lie in [0, " + std::to_string(spec.n_sites) + "]");
  }
}

// Number of doubly occupied sites in a basis string.
int pair_count(std::uint64_t bits) {
  constexpr std::uint64_t up_mask = 0x5555555555555555ULL;
  return std::popcount(bits & (bits >> 1) & up_mask);
}

}  // namespace

fock::FockVector eta_dagger_power(const EtaSpec& spec) {
  validate(spec);
  fock::FockVector state = fock::FockVector::vacuum(spec.n_sites);
  for (int pass = 0; pass < spec.k_pairs; ++pass) {
    fock::FockVector next(spec.n_sites);
    for (int site = 0; site < spec.n_sites; ++site) {
      const std::array<fock::LadderTerm, 2> pair_create{{
          {{site, fock::Spin::Up}, fock::Ladder::Create},
          {{site, fock::Spin::Down}, fock::Ladder::Create},
      }};
      const fock::FockVector term = fock::apply_string(state, pair_create);
      const auto phase = std::polar(1.0, spec.momentum_phase * site);
      for (const auto& [bits, amp] : term.amplitudes()) next.add(bits, phase * amp);
    }
    state = std::move(next);
  }
  return state;
}

fock::FockVector build_eta_state(const EtaSpec& spec) {
  return eta_dagger_power(spec).normalized();
}

OdlroReport odlro_correlator(const fock::FockVector& state, int i, int j) {
  if (i == j) {
    throw std::domain_error("odlro correlator needs two distinct sites; "
                            "the on-site term is a pair density");
  }
  const std::array<fock::LadderTerm, 4> ops{{
      {{j, fock::Spin::Up}, fock::Ladder::Create},
      {{j, fock::Spin::Down}, fock::Ladder::Create},
      {{i, fock::Spin::Down}, fock::Ladder::Annihilate},
      {{i, fock::Spin::Up}, fock::Ladder::Annihilate},
  }};

  OdlroReport report;
  report.site_i = i;
  report.site_j = j;
  report.correlator = fock::expectation(state, ops);

  double mean_pairs = 0.0;
  for (const auto& [bits, amp] : state.amplitudes()) {
    mean_pairs += std::norm(amp) * pair_count(bits);
  }
  const double n = state.n_sites();
  const double k = std::round(mean_pairs);
  report.closed_form = n > 1 ? k * (n - k) / (n * (n - 1)) : 0.0;
  const double x = k / n;
  report.alpha_limit = x * (1.0 - x);
  return report;
}

double asymptotic_alpha(double x) {
  if (!(x > 0.0 && x < 1.0)) {
    throw std::domain_error("filling fraction must lie strictly inside (0,1)");
  }
  return x * (1.0 - x);
}

}  // namespace etapair::eta
