#include "etapair/spin.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "etapair/eta.hpp"

namespace etapair::spin {

namespace {

using fock::Ladder;
using fock::LadderTerm;
using fock::ModeIndex;
using fock::Spin;

constexpr std::complex<double> kImag{0.0, 1.0};

// <S^a_i S^b_j> building blocks: S^+ = c^dag_up c_down, S^- = c^dag_down c_up.
std::complex<double> ladder_pair(const fock::FockVector& state, int i, bool i_plus, int j,
                                 bool j_plus) {
  const Spin i_create = i_plus ? Spin::Up : Spin::Down;
  const Spin i_destroy = i_plus ? Spin::Down : Spin::Up;
  const Spin j_create = j_plus ? Spin::Up : Spin::Down;
  const Spin j_destroy = j_plus ? Spin::Down : Spin::Up;
  const std::array<LadderTerm, 4> ops{{
      {{i, i_create}, Ladder::Create},
      {{i, i_destroy}, Ladder::Annihilate},
      {{j, j_create}, Ladder::Create},
      {{j, j_destroy}, Ladder::Annihilate},
  }};
  return fock::expectation(state, ops);
}

// <n_{i,si} n_{j,sj}>
std::complex<double> density_pair(const fock::FockVector& state, int i, Spin si, int j, Spin sj) {
  const std::array<LadderTerm, 4> ops{{
      {{i, si}, Ladder::Create},
      {{i, si}, Ladder::Annihilate},
      {{j, sj}, Ladder::Create},
      {{j, sj}, Ladder::Annihilate},
  }};
  return fock::expectation(state, ops);
}

int site_of_ring_neighbor(int i, int n) { return (i + 1) % n; }

std::vector<std::pair<int, int>> bonds_for(const HubbardSpec& spec) {
  std::vector<std::pair<int, int>> bonds;
  for (int i = 0; i + 1 < spec.n_sites; ++i) bonds.emplace_back(i, i + 1);
  // A two-site ring would duplicate the single bond.
  if (spec.geometry == Geometry::Ring && spec.n_sites > 2) {
    bonds.emplace_back(spec.n_sites - 1, site_of_ring_neighbor(spec.n_sites - 1, spec.n_sites));
  }
  return bonds;
}

void validate(const HubbardSpec& spec) {
  if (spec.n_sites < 2) throw std::domain_error("Hubbard model needs at least two sites");
  if (spec.n_sites > 6) {
    throw std::length_error("dense diagonalization limited to 6 sites (4^6 states)");
  }
}

int pair_count(std::uint64_t bits) {
  constexpr std::uint64_t up_mask = 0x5555555555555555ULL;
  return std::popcount(bits & (bits >> 1) & up_mask);
}

// Applies c^dag_a c_b (linear mode indices) to a basis string; returns
// the resulting string and sign, or nullopt-like flag via sign = 0.
struct Hop {
  std::uint64_t bits = 0;
  double sign = 0.0;
};

Hop hop_string(std::uint64_t bits, int mode_create, int mode_destroy) {
  const std::uint64_t destroy_bit = std::uint64_t{1} << mode_destroy;
  if (!(bits & destroy_bit)) return {};
  double sign = std::popcount(bits & (destroy_bit - 1)) % 2 ? -1.0 : 1.0;
  bits ^= destroy_bit;
  const std::uint64_t create_bit = std::uint64_t{1} << mode_create;
  if (bits & create_bit) return {};
  if (std::popcount(bits & (create_bit - 1)) % 2) sign = -sign;
  return {bits | create_bit, sign};
}

}  // namespace

SpinCorrelatorReport spin_correlator(const fock::FockVector& state, int i, int j) {
  if (i == j) {
    throw std::domain_error("spin correlator needs two distinct sites; "
                            "use onsite_spin_squared for one site");
  }
  SpinCorrelatorReport report;
  report.i = i;
  report.j = j;

  double zz = 0.0;
  for (Spin si : {Spin::Up, Spin::Down}) {
    for (Spin sj : {Spin::Up, Spin::Down}) {
      const double sign = (si == sj) ? 1.0 : -1.0;
      zz += 0.25 * sign * density_pair(state, i, si, j, sj).real();
    }
  }
  report.czz = zz;

  const auto pp = ladder_pair(state, i, true, j, true);
  const auto pm = ladder_pair(state, i, true, j, false);
  const auto mp = ladder_pair(state, i, false, j, true);
  const auto mm = ladder_pair(state, i, false, j, false);
  // S^x = (S^+ + S^-)/2, S^y = (S^+ - S^-)/(2i)
  report.cxx = 0.25 * (pp + pm + mp + mm).real();
  report.cyy = (-0.25 * (pp - pm - mp + mm)).real();
  report.total = report.czz + report.cxx + report.cyy;
  return report;
}

double onsite_spin_squared(const fock::FockVector& state, int i) {
  // S^2 = S^z S^z + (S^+ S^- + S^- S^+)/2 on one site.
  double zz = 0.0;
  for (Spin si : {Spin::Up, Spin::Down}) {
    for (Spin sj : {Spin::Up, Spin::Down}) {
      const double sign = (si == sj) ? 1.0 : -1.0;
      zz += 0.25 * sign * density_pair(state, i, si, i, sj).real();
    }
  }
  const std::array<LadderTerm, 4> pm{{
      {{i, Spin::Up}, Ladder::Create},
      {{i, Spin::Down}, Ladder::Annihilate},
      {{i, Spin::Down}, Ladder::Create},
      {{i, Spin::Up}, Ladder::Annihilate},
  }};
  const std::array<LadderTerm, 4> mp{{
      {{i, Spin::Down}, Ladder::Create},
      {{i, Spin::Up}, Ladder::Annihilate},
      {{i, Spin::Up}, Ladder::Create},
      {{i, Spin::Down}, Ladder::Annihilate},
  }};
  return zz + 0.5 * (fock::expectation(state, pm) + fock::expectation(state, mp)).real();
}

Eigen::MatrixXd hubbard_hamiltonian(const HubbardSpec& spec) {
  validate(spec);
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << (2 * spec.n_sites));
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  const auto bonds = bonds_for(spec);

  for (std::uint64_t s = 0; s < static_cast<std::uint64_t>(dim); ++s) {
    h(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(s)) = spec.u * pair_count(s);
    for (const auto& [a, b] : bonds) {
      for (int sp = 0; sp < 2; ++sp) {
        for (const auto& [to, from] : {std::pair{a, b}, std::pair{b, a}}) {
          const Hop hop = hop_string(s, 2 * to + sp, 2 * from + sp);
          if (hop.sign != 0.0) {
            h(static_cast<Eigen::Index>(hop.bits), static_cast<Eigen::Index>(s)) +=
                -spec.t * hop.sign;
          }
        }
      }
    }
  }
  return h;
}

std::vector<std::uint64_t> sector_basis(int n_sites, int n_electrons, int sz_twice) {
  std::vector<std::uint64_t> basis;
  const std::uint64_t dim = std::uint64_t{1} << (2 * n_sites);
  constexpr std::uint64_t up_mask = 0x5555555555555555ULL;
  for (std::uint64_t s = 0; s < dim; ++s) {
    const int n_up = std::popcount(s & up_mask);
    const int n_down = std::popcount(s & ~up_mask);
    if (n_up + n_down == n_electrons && n_up - n_down == sz_twice) basis.push_back(s);
  }
  return basis;
}

GroundState half_filling_ground_state(const HubbardSpec& spec) {
  const Eigen::MatrixXd h = hubbard_hamiltonian(spec);
  const auto basis = sector_basis(spec.n_sites, spec.n_sites, 0);
  const auto dim = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXd hs(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      hs(r, c) = h(static_cast<Eigen::Index>(basis[static_cast<std::size_t>(r)]),
                   static_cast<Eigen::Index>(basis[static_cast<std::size_t>(c)]));
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hs);
  GroundState gs{solver.eigenvalues()(0), fock::FockVector(spec.n_sites)};
  for (Eigen::Index r = 0; r < dim; ++r) {
    gs.state.add(basis[static_cast<std::size_t>(r)], solver.eigenvectors()(r, 0));
  }
  return gs;
}

std::vector<HeisenbergPoint> heisenberg_limit_check(double t, std::span<const double> u_list) {
  if (t == 0.0) throw std::domain_error("U/t undefined at t = 0");
  std::vector<HeisenbergPoint> points;
  points.reserve(u_list.size());
  for (double u : u_list) {
    const HubbardSpec spec{.n_sites = 2, .t = t, .u = u, .geometry = Geometry::OpenChain};
    const GroundState gs = half_filling_ground_state(spec);
    HeisenbergPoint point;
    point.u_over_t = u / t;
    point.spin_corr = spin_correlator(gs.state, 0, 1).total;
    point.pair_corr = eta::odlro_correlator(gs.state, 0, 1).correlator.real();
    points.push_back(point);
  }
  return points;
}

ResidualReport eta_eigenstate_residual(const HubbardSpec& spec, int k, double q) {
  validate(spec);
  if (spec.geometry == Geometry::Ring) {
    const double winding = q * spec.n_sites / (2.0 * std::numbers::pi);
    if (std::abs(winding - std::round(winding)) > 1e-12) {
      throw std::domain_error("phase q must wind to a multiple of 2*pi around the ring");
    }
  }
  const fock::FockVector psi =
      eta::build_eta_state({.n_sites = spec.n_sites, .k_pairs = k, .momentum_phase = q});
  const Eigen::VectorXcd v = dense_state(psi);
  const Eigen::MatrixXd h = hubbard_hamiltonian(spec);
  const Eigen::VectorXcd hv =
      (h * v.real()).cast<std::complex<double>>() + kImag * (h * v.imag()).cast<std::complex<double>>();
  const double energy = v.dot(hv).real();
  return {.residual = (hv - energy * v).norm(), .energy = energy};
}

Eigen::VectorXcd dense_state(const fock::FockVector& state) {
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << (2 * state.n_sites()));
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
  for (const auto& [bits, amp] : state.amplitudes()) {
    v(static_cast<Eigen::Index>(bits)) = amp;
  }
  return v;
}

}  // namespace etapair::spin
