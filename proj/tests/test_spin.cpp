#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <bit>
#include <cmath>
#include <numbers>
#include <vector>

#include "etapair/eta.hpp"
#include "etapair/fock.hpp"
#include "etapair/spin.hpp"

using namespace etapair;
using fock::FockVector;
using fock::Ladder;
using fock::Spin;
using spin::Geometry;
using spin::HubbardSpec;

constexpr double pi = std::numbers::pi;

namespace {

FockVector two_site_singlet() {
  const auto vac = FockVector::vacuum(2);
  const std::array<fock::LadderTerm, 2> up0_down1{{
      {{0, Spin::Up}, Ladder::Create},
      {{1, Spin::Down}, Ladder::Create},
  }};
  const std::array<fock::LadderTerm, 2> down0_up1{{
      {{0, Spin::Down}, Ladder::Create},
      {{1, Spin::Up}, Ladder::Create},
  }};
  FockVector singlet(2);
  for (const auto& [bits, amp] : fock::apply_string(vac, up0_down1).amplitudes()) {
    singlet.add(bits, amp / std::sqrt(2.0));
  }
  for (const auto& [bits, amp] : fock::apply_string(vac, down0_up1).amplitudes()) {
    singlet.add(bits, -amp / std::sqrt(2.0));
  }
  return singlet;
}

double sz_expectation(const FockVector& state, int site) {
  const std::array<fock::LadderTerm, 2> n_up{{
      {{site, Spin::Up}, Ladder::Create},
      {{site, Spin::Up}, Ladder::Annihilate},
  }};
  const std::array<fock::LadderTerm, 2> n_down{{
      {{site, Spin::Down}, Ladder::Create},
      {{site, Spin::Down}, Ladder::Annihilate},
  }};
  return 0.5 * (fock::expectation(state, n_up) - fock::expectation(state, n_down)).real();
}

// diagonal observables in the occupation basis, for commutator checks
Eigen::MatrixXd number_matrix(int n_sites) {
  const auto dim = static_cast<Eigen::Index>(1) << (2 * n_sites);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index s = 0; s < dim; ++s) {
    m(s, s) = std::popcount(static_cast<std::uint64_t>(s));
  }
  return m;
}

Eigen::MatrixXd sz_total_matrix(int n_sites) {
  const auto dim = static_cast<Eigen::Index>(1) << (2 * n_sites);
  constexpr std::uint64_t up_mask = 0x5555555555555555ULL;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index s = 0; s < dim; ++s) {
    const auto bits = static_cast<std::uint64_t>(s);
    m(s, s) = 0.5 * (std::popcount(bits & up_mask) - std::popcount(bits & ~up_mask));
  }
  return m;
}

}  // namespace

TEST_CASE("spin correlators") {
  SUBCASE("pair condensates carry no inter-site spin correlation") {
    const auto state = eta::build_eta_state({.n_sites = 4, .k_pairs = 2});
    const auto rep = spin::spin_correlator(state, 0, 1);
    CHECK(std::abs(rep.czz) < 1e-12);
    CHECK(std::abs(rep.cxx) < 1e-12);
    CHECK(std::abs(rep.cyy) < 1e-12);
    CHECK(std::abs(rep.total) < 1e-12);
  }
  SUBCASE("the singlet reaches -3/4") {
    const auto rep = spin::spin_correlator(two_site_singlet(), 0, 1);
    CHECK(rep.total == doctest::Approx(-0.75).epsilon(1e-12));
    CHECK(rep.czz == doctest::Approx(-0.25).epsilon(1e-12));
    CHECK(rep.cxx == doctest::Approx(-0.25).epsilon(1e-12));
    CHECK(rep.cyy == doctest::Approx(-0.25).epsilon(1e-12));
  }
  SUBCASE("vacuum is featureless") {
    const auto rep = spin::spin_correlator(FockVector::vacuum(3), 0, 2);
    CHECK(rep.total == 0.0);
  }
  SUBCASE("components are bounded") {
    const auto rep = spin::spin_correlator(two_site_singlet(), 0, 1);
    for (double c : {rep.czz, rep.cxx, rep.cyy, rep.total}) {
      CHECK(std::abs(c) <= 0.75 + 1e-12);
    }
  }
  SUBCASE("same-site request is rejected") {
    CHECK_THROWS_AS(spin::spin_correlator(FockVector::vacuum(2), 1, 1), std::domain_error);
  }
}

TEST_CASE("pair sites are spin-silent") {
  for (int k = 0; k <= 3; ++k) {
    const auto state = eta::build_eta_state({.n_sites = 3, .k_pairs = k});
    for (int site = 0; site < 3; ++site) {
      CHECK(std::abs(sz_expectation(state, site)) < 1e-12);
      CHECK(std::abs(spin::onsite_spin_squared(state, site)) < 1e-12);
    }
  }
  // a lone up spin carries s(s+1) = 3/4
  const auto lone =
      fock::apply_ladder(FockVector::vacuum(2), {0, Spin::Up}, Ladder::Create);
  CHECK(spin::onsite_spin_squared(lone, 0) == doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("Hubbard Hamiltonian structure") {
  SUBCASE("no hopping: diagonal counts pair energies") {
    const auto h = spin::hubbard_hamiltonian({.n_sites = 2, .t = 0.0, .u = 4.0});
    for (Eigen::Index s = 0; s < h.rows(); ++s) {
      for (Eigen::Index r = 0; r < h.rows(); ++r) {
        if (r != s) CHECK(h(r, s) == 0.0);
      }
      const bool pair0 = (s & 0b0011) == 0b0011;
      const bool pair1 = (s & 0b1100) == 0b1100;
      CHECK(h(s, s) == doctest::Approx(4.0 * (int(pair0) + int(pair1))));
    }
  }
  SUBCASE("hermitian and sector-preserving") {
    for (int n : {2, 3}) {
      const auto h = spin::hubbard_hamiltonian(
          {.n_sites = n, .t = 1.3, .u = 2.7, .geometry = Geometry::Ring});
      CHECK((h - h.transpose()).cwiseAbs().maxCoeff() < 1e-12);
      const auto n_op = number_matrix(n);
      const auto sz_op = sz_total_matrix(n);
      CHECK((h * n_op - n_op * h).cwiseAbs().maxCoeff() < 1e-12);
      CHECK((h * sz_op - sz_op * h).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
  SUBCASE("capacity") {
    CHECK_THROWS_AS(spin::hubbard_hamiltonian({.n_sites = 7, .t = 1.0, .u = 0.0}),
                    std::length_error);
  }
}

TEST_CASE("two-site ground states against analytic values") {
  SUBCASE("interacting: (U - sqrt(U^2 + 16 t^2))/2") {
    const auto gs = spin::half_filling_ground_state({.n_sites = 2, .t = 1.0, .u = 8.0});
    const double expected = (8.0 - std::sqrt(64.0 + 16.0)) / 2.0;
    CHECK(gs.energy == doctest::Approx(expected).epsilon(1e-10));
    CHECK(expected == doctest::Approx(-0.47213595499958).epsilon(1e-10));
  }
  SUBCASE("free electrons fill the bonding orbital") {
    // open 2-site chain has one-particle levels -t, +t; two electrons give -2t
    const auto gs = spin::half_filling_ground_state({.n_sites = 2, .t = 1.0, .u = 0.0});
    CHECK(gs.energy == doctest::Approx(-2.0).epsilon(1e-12));
  }
}

TEST_CASE("strong repulsion drives the ground state to the Heisenberg singlet") {
  const std::vector<double> u_list{0.0, 4.0, 16.0, 64.0, 100.0};
  const auto points = spin::heisenberg_limit_check(1.0, u_list);
  REQUIRE(points.size() == u_list.size());

  CHECK(points.front().spin_corr > -0.75);
  CHECK(std::abs(points.back().spin_corr - (-0.75)) < 1e-2);
  CHECK(std::abs(points.back().pair_corr) < 1e-2);
  for (std::size_t i = 1; i < points.size(); ++i) {
    CHECK(points[i].spin_corr < points[i - 1].spin_corr);
  }
  CHECK_THROWS_AS(spin::heisenberg_limit_check(0.0, u_list), std::domain_error);
}

TEST_CASE("condensate eigenstate residuals") {
  const HubbardSpec ring{.n_sites = 4, .t = 1.0, .u = 3.0, .geometry = Geometry::Ring};

  SUBCASE("staggered phase: exact eigenstate at energy k U") {
    for (int k : {1, 2, 3}) {
      const auto rep = spin::eta_eigenstate_residual(ring, k, pi);
      CHECK(rep.residual <= 1e-10);
      CHECK(rep.energy == doctest::Approx(k * 3.0).epsilon(1e-10));
    }
  }
  SUBCASE("vacuum is trivially stationary") {
    const auto rep = spin::eta_eigenstate_residual(ring, 0, 0.0);
    CHECK(rep.residual <= 1e-12);
    CHECK(rep.energy == doctest::Approx(0.0));
  }
  SUBCASE("uniform phase on the ring is not an eigenstate") {
    const auto rep = spin::eta_eigenstate_residual(ring, 1, 0.0);
    CHECK(rep.residual > 0.1);
    CHECK(rep.energy == doctest::Approx(3.0).epsilon(1e-10));
  }
  SUBCASE("phase must be single-valued on the ring") {
    const HubbardSpec odd_ring{.n_sites = 3, .t = 1.0, .u = 3.0, .geometry = Geometry::Ring};
    CHECK_THROWS_AS(spin::eta_eigenstate_residual(odd_ring, 1, pi), std::domain_error);
    // the open chain accepts any phase
    const HubbardSpec chain{.n_sites = 3, .t = 1.0, .u = 3.0, .geometry = Geometry::OpenChain};
    CHECK_NOTHROW(spin::eta_eigenstate_residual(chain, 1, 0.4));
  }
}

TEST_CASE("sector bookkeeping") {
  const auto half = spin::sector_basis(2, 2, 0);
  CHECK(half.size() == 4);
  for (std::uint64_t s : half) {
    CHECK(std::popcount(s) == 2);
  }
  CHECK(spin::sector_basis(2, 0, 0).size() == 1);
  CHECK(spin::sector_basis(2, 4, 0).size() == 1);
}
